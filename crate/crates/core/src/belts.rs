//! Belts, the belt criterion for translative tiles, and the five-way
//! classification of 3D parallelohedra.
//!
//! On a polytope whose facets are centrally symmetric, every edge `G` has a
//! translate on the opposite side of each facet containing it. Walking from
//! facet to facet through these opposite edges closes up into a cycle of
//! facets, the belt of `G`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{det3, Mat3, Vec2, Vec3, VecN};
use crate::planar::Polygon2m;
use crate::polytope::Polytope3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Belt {
    /// Vector from the first to the second endpoint of every edge translate.
    pub direction: Vec3,
    /// `F_1 .. F_2m`.
    pub facets: Vec<usize>,
    /// `G_1 .. G_2m` as `(start, end)` vertex indices; `G_i` and `G_{i+1}` lie in `F_i`.
    pub edge_translates: Vec<(usize, usize)>,
    /// `g_i = G_{i+1} − G_i`, cyclically.
    pub steps: Vec<Vec3>,
    /// `m`, half the number of facets.
    pub half_length: usize,
}

impl Belt {
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

fn require_admissible(p: &Polytope3) -> Result<()> {
    if let Some(v) = p.central_symmetry_witness() {
        return Err(GeomError::NotBeltAdmissible(format!(
            "polytope is not centrally symmetric (vertex {})",
            p.vertices()[v]
        )));
    }
    if let Some(f) = p.asymmetric_facet() {
        return Err(GeomError::NotBeltAdmissible(format!(
            "facet {f} is not centrally symmetric"
        )));
    }
    Ok(())
}

/// The edge of facet `f` opposite to `(s, t)`, returned as `(start, end)`
/// so that it points the same way as `t − s`.
fn opposite_edge(p: &Polytope3, f: usize, s: usize, t: usize) -> Result<(usize, usize)> {
    let cyc = &p.facets()[f].cycle;
    let n = cyc.len();
    let pos = |v| cyc.iter().position(|&c| c == v).expect("edge vertex in facet");
    let s_opp = cyc[(pos(s) + n / 2) % n];
    let t_opp = cyc[(pos(t) + n / 2) % n];
    let d = &p.vertices()[t] - &p.vertices()[s];
    if &p.vertices()[s_opp] - &p.vertices()[t_opp] != d {
        return Err(GeomError::NotBeltAdmissible(format!(
            "facet {f} has no translate of its edge opposite"
        )));
    }
    Ok((t_opp, s_opp))
}

/// The belt of edge `edge` (an index into [`Polytope3::edges`]), with that
/// edge as `G_1`. `F_1` is whichever of the two facets through the edge has
/// the lexicographically smaller outward normal.
pub fn belt_of_edge(p: &Polytope3, edge: usize) -> Result<Belt> {
    require_admissible(p)?;
    let &(a, b) = p.edges().get(edge).ok_or(GeomError::NoSuchEdge(edge))?;
    let mut first_facets = p.facets_of_edge(edge);
    first_facets.sort_by(|&x, &y| p.facets()[x].halfspace.normal.cmp(&p.facets()[y].halfspace.normal));
    let direction = &p.vertices()[b] - &p.vertices()[a];

    let mut facets = Vec::new();
    let mut edge_translates = vec![(a, b)];
    let mut steps = Vec::new();
    let mut facet = first_facets[0];
    let (mut s, mut t) = (a, b);
    for _ in 0..=p.facets().len() {
        facets.push(facet);
        let (s2, t2) = opposite_edge(p, facet, s, t)?;
        steps.push(&p.vertices()[s2] - &p.vertices()[s]);
        if (s2, t2) == (a, b) {
            let half_length = facets.len() / 2;
            return Ok(Belt {
                direction,
                facets,
                edge_translates,
                steps,
                half_length,
            });
        }
        edge_translates.push((s2, t2));
        let e2 = p.edge_index(s2, t2).expect("facet edge is an edge");
        facet = *p
            .facets_of_edge(e2)
            .iter()
            .find(|&&f| f != facet)
            .expect("every edge lies in two facets");
        s = s2;
        t = t2;
    }
    Err(GeomError::NotBeltAdmissible("belt does not close".into()))
}

/// One belt per parallel class of edges, ordered by edge class direction.
pub fn all_belts(p: &Polytope3) -> Result<Vec<Belt>> {
    require_admissible(p)?;
    let mut keyed: Vec<([BigInt; 3], usize)> = p
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let d = &p.vertices()[b] - &p.vertices()[a];
            (d.line_key().expect("nondegenerate edge"), i)
        })
        .collect();
    keyed.sort();
    let mut covered = BTreeSet::new();
    let mut belts = Vec::new();
    for (_, e) in keyed {
        if covered.contains(&e) {
            continue;
        }
        let belt = belt_of_edge(p, e)?;
        for &(s, t) in &belt.edge_translates {
            covered.insert(p.edge_index(s, t).expect("edge"));
        }
        belts.push(belt);
    }
    Ok(belts)
}

/// Why a polytope fails the belt criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum VmFailure {
    NotCentrallySymmetric { vertex: Vec3 },
    FacetNotCentrallySymmetric { facet: usize, size: usize },
    BeltLength { length: usize, direction: Vec3, facets: Vec<usize> },
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VmVerdict {
    Pass,
    Fail { witness: VmFailure },
}

impl VmVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, VmVerdict::Pass)
    }
}

/// Central symmetry, centrally symmetric facets, and every belt of 4 or 6
/// facets.
pub fn venkov_mcmullen(p: &Polytope3) -> VmVerdict {
    if let Some(v) = p.central_symmetry_witness() {
        return VmVerdict::Fail {
            witness: VmFailure::NotCentrallySymmetric {
                vertex: p.vertices()[v].clone(),
            },
        };
    }
    if let Some(f) = p.asymmetric_facet() {
        return VmVerdict::Fail {
            witness: VmFailure::FacetNotCentrallySymmetric {
                facet: f,
                size: p.facets()[f].cycle.len(),
            },
        };
    }
    match all_belts(p) {
        Ok(belts) => {
            for b in belts {
                if b.len() != 4 && b.len() != 6 {
                    return VmVerdict::Fail {
                        witness: VmFailure::BeltLength {
                            length: b.len(),
                            direction: b.direction,
                            facets: b.facets,
                        },
                    };
                }
            }
            VmVerdict::Pass
        }
        Err(_) => VmVerdict::Fail {
            witness: VmFailure::FacetNotCentrallySymmetric { facet: 0, size: 0 },
        },
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FedorovType {
    Parallelotope,
    HexagonalPrism,
    RhombicDodecahedron,
    ElongatedDodecahedron,
    TruncatedOctahedron,
    NotParallelohedron(VmFailure),
}

impl FedorovType {
    pub fn label(&self) -> &'static str {
        match self {
            FedorovType::Parallelotope => "Parallelotope",
            FedorovType::HexagonalPrism => "HexagonalPrism",
            FedorovType::RhombicDodecahedron => "RhombicDodecahedron",
            FedorovType::ElongatedDodecahedron => "ElongatedDodecahedron",
            FedorovType::TruncatedOctahedron => "TruncatedOctahedron",
            FedorovType::NotParallelohedron(_) => "NotParallelohedron",
        }
    }
}

pub fn classify_fedorov(p: &Polytope3) -> Result<FedorovType> {
    if let VmVerdict::Fail { witness } = venkov_mcmullen(p) {
        return Ok(FedorovType::NotParallelohedron(witness));
    }
    let (count, sizes) = p.facet_signature();
    let hexagons = sizes.iter().filter(|&&s| s == 6).count();
    let quads = sizes.iter().filter(|&&s| s == 4).count();
    let t = match (count, hexagons, quads) {
        (6, 0, 6) => FedorovType::Parallelotope,
        (8, 2, 6) => FedorovType::HexagonalPrism,
        (12, 0, 12) => FedorovType::RhombicDodecahedron,
        (12, 4, 8) => FedorovType::ElongatedDodecahedron,
        (14, 8, 6) => FedorovType::TruncatedOctahedron,
        _ => return Err(GeomError::Unclassifiable(format!("({count}, {sizes:?})"))),
    };
    Ok(t)
}

/// A determinant-one rational map sending `d` to `(0, 0, 1)`.
///
/// Extends `d` by two standard basis vectors `e_i, e_j` with
/// `δ = det(e_i, e_j, d) != 0`, scales `e_i` by `1/δ`, and inverts the
/// resulting column matrix.
pub fn vertical_frame(d: &Vec3) -> Mat3 {
    let e = |i: usize| {
        let mut v = Vec3::zero();
        v.0[i] = crate::exact::int(1);
        v
    };
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let delta = det3(&e(i), &e(j), d);
        if !delta.is_zero() {
            let u = e(i).scale(&delta.recip());
            let m = Mat3::from_columns(&u, &e(j), d);
            return m.inverse().expect("det 1");
        }
    }
    panic!("zero direction");
}

/// Shadow of `p` along the direction of edge `edge`, after mapping that
/// direction to the vertical axis.
pub fn project_along_edge(p: &Polytope3, edge: usize) -> Result<Polygon2m> {
    let &(a, b) = p.edges().get(edge).ok_or(GeomError::NoSuchEdge(edge))?;
    let d = &p.vertices()[b] - &p.vertices()[a];
    let frame = vertical_frame(&d);
    let shadow: Vec<Vec2> = p
        .vertices()
        .iter()
        .map(|v| {
            let w = frame.apply(v);
            VecN([w[0].clone(), w[1].clone()])
        })
        .collect();
    Polygon2m::hull_of(&shadow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::zonotope::zonotope_from_generators;

    fn zono(g: &[[i64; 3]]) -> Polytope3 {
        let v: Vec<Vec3> = g.iter().map(|&c| Vec3::from_ints(c)).collect();
        zonotope_from_generators(&v).unwrap()
    }

    fn octagonal_prism() -> Polytope3 {
        zono(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0], [0, 0, 1]])
    }

    fn edge_along(p: &Polytope3, d: [i64; 3]) -> usize {
        let d = Vec3::from_ints(d);
        p.edges()
            .iter()
            .position(|&(a, b)| (&p.vertices()[b] - &p.vertices()[a]).is_parallel_to(&d))
            .unwrap()
    }

    /// Facets having an edge equal to `±(b − a)` of edge `e`.
    fn scan_oracle(p: &Polytope3, e: usize) -> usize {
        let (a, b) = p.edges()[e];
        let d = &p.vertices()[b] - &p.vertices()[a];
        p.facets()
            .iter()
            .filter(|f| {
                let n = f.cycle.len();
                (0..n).any(|j| {
                    let w = &p.vertices()[f.cycle[(j + 1) % n]] - &p.vertices()[f.cycle[j]];
                    w == d || w == -&d
                })
            })
            .count()
    }

    #[test]
    fn cube_belts() {
        let p = zono(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        for e in 0..p.edges().len() {
            assert_eq!(belt_of_edge(&p, e).unwrap().len(), 4);
            assert_eq!(scan_oracle(&p, e), 4);
        }
        assert_eq!(all_belts(&p).unwrap().len(), 3);
    }

    #[test]
    fn hexagonal_prism_belts() {
        let p = zono(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]);
        let h = edge_along(&p, [1, 0, 0]);
        assert_eq!(belt_of_edge(&p, h).unwrap().len(), 4);
        assert_eq!(scan_oracle(&p, h), 4);
        let v = edge_along(&p, [0, 0, 1]);
        assert_eq!(belt_of_edge(&p, v).unwrap().len(), 6);
        assert_eq!(scan_oracle(&p, v), 6);
    }

    #[test]
    fn octagonal_prism_belt_and_rejection() {
        let p = octagonal_prism();
        let v = edge_along(&p, [0, 0, 1]);
        let belt = belt_of_edge(&p, v).unwrap();
        assert_eq!((belt.len(), scan_oracle(&p, v)), (8, 8));
        assert_eq!(belt.half_length, 4);
        match venkov_mcmullen(&p) {
            VmVerdict::Fail {
                witness: VmFailure::BeltLength { length, .. },
            } => assert_eq!(length, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            classify_fedorov(&p).unwrap(),
            FedorovType::NotParallelohedron(VmFailure::BeltLength { length: 8, .. })
        ));
    }

    #[test]
    fn belt_invariants() {
        let p = zono(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0], [2, 1, 3], [0, 0, 1]]);
        for belt in all_belts(&p).unwrap() {
            assert_eq!(belt.len() % 2, 0);
            let sum = belt.steps.iter().fold(Vec3::zero(), |acc, s| &acc + s);
            assert!(sum.is_zero());
            let m = belt.half_length;
            for i in 0..m {
                let f = &p.facets()[belt.facets[i]].halfspace;
                let g = &p.facets()[belt.facets[i + m]].halfspace;
                assert_eq!(f.normal, -&g.normal);
            }
            for (i, &f) in belt.facets.iter().enumerate() {
                let (s0, t0) = belt.edge_translates[i];
                let (s1, t1) = belt.edge_translates[(i + 1) % belt.len()];
                let cyc = &p.facets()[f].cycle;
                for v in [s0, t0, s1, t1] {
                    assert!(cyc.contains(&v));
                }
            }
        }
    }

    #[test]
    fn belt_starts_at_requested_edge() {
        let p = zono(&[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]);
        for e in 0..p.edges().len() {
            let belt = belt_of_edge(&p, e).unwrap();
            assert_eq!(belt.edge_translates[0], p.edges()[e]);
            let [f0, f1] = <[usize; 2]>::try_from(p.facets_of_edge(e)).unwrap();
            let first = if p.facets()[f0].halfspace.normal < p.facets()[f1].halfspace.normal { f0 } else { f1 };
            assert_eq!(belt.facets[0], first);
        }
    }

    #[test]
    fn belt_counts_for_fedorov_solids() {
        let to = zono(&[[1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]]);
        let b = all_belts(&to).unwrap();
        assert_eq!(b.len(), 6);
        assert!(b.iter().all(|b| b.len() == 6));
        let rd = zono(&[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]);
        let b = all_belts(&rd).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|b| b.len() == 6));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_fedorov(&zono(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap(),
            FedorovType::Parallelotope
        );
        assert_eq!(
            classify_fedorov(&zono(&[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1], [0, 0, 1]])).unwrap(),
            FedorovType::ElongatedDodecahedron
        );
    }

    #[test]
    fn tetrahedron_fails_symmetry() {
        let v = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].map(Vec3::from_ints);
        let t = Polytope3::from_raw(&v, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap();
        assert!(matches!(
            venkov_mcmullen(&t),
            VmVerdict::Fail { witness: VmFailure::NotCentrallySymmetric { .. } }
        ));
        assert!(matches!(belt_of_edge(&t, 0), Err(GeomError::NotBeltAdmissible(_))));
    }

    #[test]
    fn projections() {
        let cube = zono(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let sq = project_along_edge(&cube, edge_along(&cube, [0, 0, 1])).unwrap();
        assert_eq!(sq.half_count(), 2);
        assert_eq!(sq.area(), int(1));

        let p = octagonal_prism();
        let oct = project_along_edge(&p, edge_along(&p, [0, 0, 1])).unwrap();
        assert_eq!(oct.len(), 8);
        let mut expected = BTreeSet::new();
        let gens = [[1, 0], [0, 1], [1, 1], [1, -1]].map(Vec2::from_ints);
        for mask in 0..16 {
            let mut s = Vec2::zero();
            for (k, g) in gens.iter().enumerate() {
                let sign = if mask & (1 << k) != 0 { rat(1, 2) } else { rat(-1, 2) };
                s = &s + &g.scale(&sign);
            }
            expected.insert(s);
        }
        for v in oct.vertices() {
            assert!(expected.contains(v));
        }

        let to = zono(&[[1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]]);
        let e = edge_along(&to, [1, 1, 0]);
        assert_eq!(project_along_edge(&to, e).unwrap().len(), 6);
    }

    #[test]
    fn vertical_frame_has_unit_determinant() {
        for d in [[0, 0, 1], [1, 1, 0], [2, -3, 5], [0, 4, 0]] {
            let d = Vec3::from_ints(d);
            let m = vertical_frame(&d);
            assert_eq!(m.det(), int(1));
            assert_eq!(m.apply(&d), Vec3::from_ints([0, 0, 1]));
        }
    }
}
