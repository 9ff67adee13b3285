//! Zonotopes: Minkowski sums of segments centered at the origin.
//!
//! A generator `g` stands for the segment from `-g/2` to `g/2`. Facets are
//! indexed by the lines orthogonal to pairs of generators; the facet with
//! outward normal `n` is the planar zonotope of the generators orthogonal to
//! `n`, translated by `½ Σ sign(n·g) g` over all remaining generators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{ccw_angle_cmp, det3, rat, HalfSpace, Rat, Sign, Vec3, VecN};
use crate::polytope::Polytope3;

/// Pairwise non-parallel, nonzero generators in canonical sign and order,
/// spanning 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSet {
    generators: Vec<Vec3>,
}

impl GeneratorSet {
    pub fn generators(&self) -> &[Vec3] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `Σ |det(g_i, g_j, g_k)|` over all generator triples: the volume of the
    /// zonotope by the classical zonotope volume formula.
    pub fn triple_det_volume(&self) -> Rat {
        use num_traits::Signed;
        let g = &self.generators;
        let mut acc = Rat::zero();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                for k in j + 1..g.len() {
                    acc += det3(&g[i], &g[j], &g[k]).abs();
                }
            }
        }
        acc
    }
}

/// A pair of antipodal facets and the generators parallel to them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetClass {
    /// Canonical (sign-normalized, primitive) normal.
    pub normal: Vec3,
    /// Facet indices with outward normal `+normal` and `-normal`.
    pub facets: [usize; 2],
    /// Indices into the generator set of the generators orthogonal to `normal`.
    pub generators: Vec<usize>,
}

pub fn normalize_generators(raw: &[Vec3]) -> Result<GeneratorSet> {
    let mut lines: BTreeMap<[BigInt; 3], Vec3> = BTreeMap::new();
    for (i, g) in raw.iter().enumerate() {
        let key = g.line_key().ok_or(GeomError::ZeroGenerator(i))?;
        let unit = VecN(key.clone().map(Rat::from_integer));
        // g = t * unit, t != 0; both orientations describe the same segment
        let idx = (0..3).find(|&c| !unit[c].is_zero()).unwrap();
        let t = &g[idx] / &unit[idx];
        let t = if t < Rat::zero() { -t } else { t };
        let acc = lines.entry(key).or_insert_with(Vec3::zero);
        *acc = &*acc + &unit.scale(&t);
    }
    let generators: Vec<Vec3> = lines.into_values().collect();
    let spans = (0..generators.len()).any(|i| {
        (i + 1..generators.len()).any(|j| {
            (j + 1..generators.len())
                .any(|k| !det3(&generators[i], &generators[j], &generators[k]).is_zero())
        })
    });
    if !spans {
        return Err(GeomError::NotFullDimensional);
    }
    Ok(GeneratorSet { generators })
}

/// Canonical facet normals, each with the generators orthogonal to it.
pub fn zones(g: &GeneratorSet) -> BTreeMap<[BigInt; 3], Vec<usize>> {
    let gens = &g.generators;
    let mut out: BTreeMap<[BigInt; 3], Vec<usize>> = BTreeMap::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let key = gens[i].cross(&gens[j]).line_key().expect("non-parallel");
            out.entry(key).or_default();
        }
    }
    for (key, members) in out.iter_mut() {
        let n = VecN(key.clone().map(Rat::from_integer));
        *members = (0..gens.len()).filter(|&k| n.dot(&gens[k]).is_zero()).collect();
    }
    out
}

/// Vertices of the planar zonotope of `gens` (all orthogonal to `normal`),
/// centered at `center`, counter-clockwise around `normal`.
fn zonogon(gens: &[&Vec3], normal: &Vec3, center: &Vec3) -> Vec<Vec3> {
    let mut steps: Vec<Vec3> = gens.iter().flat_map(|g| [(*g).clone(), -*g]).collect();
    let reference = steps[0].clone();
    steps.sort_by(|a, b| ccw_angle_cmp(normal, &reference, a, b));
    let mut walk = Vec::with_capacity(steps.len());
    let mut p = Vec3::zero();
    for s in &steps {
        walk.push(p.clone());
        p = &p + s;
    }
    let m = steps.len() / 2;
    let own_center = walk[0].midpoint(&walk[m]);
    let shift = center - &own_center;
    walk.iter().map(|w| w + &shift).collect()
}

pub fn build_zonotope(g: &GeneratorSet) -> Result<Polytope3> {
    let gens = &g.generators;
    let half = rat(1, 2);
    let mut polys = Vec::new();
    for (key, members) in zones(g) {
        let n = VecN(key.map(Rat::from_integer));
        let mut center = Vec3::zero();
        for (k, gk) in gens.iter().enumerate() {
            if members.contains(&k) {
                continue;
            }
            match Sign::of(&n.dot(gk)) {
                Sign::Positive => center = &center + gk,
                Sign::Negative => center = &center - gk,
                Sign::Zero => unreachable!("non-member generator orthogonal to zone normal"),
            }
        }
        let center = center.scale(&half);
        let zone_gens: Vec<&Vec3> = members.iter().map(|&k| &gens[k]).collect();
        for (normal, c) in [(n.clone(), center.clone()), (-&n, -&center)] {
            let pts = zonogon(&zone_gens, &normal, &c);
            let h = HalfSpace::new(&normal, &normal.dot(&c))?;
            polys.push((h, pts));
        }
    }
    Ok(Polytope3::from_facet_polygons(polys)?.with_generators(g.clone()))
}

/// Antipodal facet pairs of a zonotope with their contributing generators.
/// Requires `p` to carry its generator set.
pub fn facet_classes(p: &Polytope3) -> Result<Vec<FacetClass>> {
    let g = p
        .generators()
        .ok_or_else(|| GeomError::InvalidPolytope("polytope has no generator set".into()))?;
    let mut out = Vec::new();
    for (key, members) in zones(g) {
        let n = VecN(key.map(Rat::from_integer));
        let find = |target: &Vec3| {
            p.facets()
                .iter()
                .position(|f| &f.halfspace.normal == target)
                .ok_or_else(|| GeomError::InvalidPolytope(format!("missing facet with normal {target}")))
        };
        let plus = find(&n)?;
        let minus = find(&-&n)?;
        out.push(FacetClass {
            normal: n,
            facets: [plus, minus],
            generators: members,
        });
    }
    Ok(out)
}

/// Convenience: normalize and build in one step.
pub fn zonotope_from_generators(raw: &[Vec3]) -> Result<Polytope3> {
    build_zonotope(&normalize_generators(raw)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn v(c: [i64; 3]) -> Vec3 {
        Vec3::from_ints(c)
    }

    #[test]
    fn normalize_keeps_basis() {
        let g = normalize_generators(&[v([1, 0, 0]), v([0, 1, 0]), v([0, 0, 1])]).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.generators(), &[v([0, 0, 1]), v([0, 1, 0]), v([1, 0, 0])]);
    }

    #[test]
    fn normalize_merges_parallel() {
        let g = normalize_generators(&[v([1, 0, 0]), v([2, 0, 0]), v([0, 1, 0]), v([0, 0, 1])])
            .unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.generators().contains(&v([3, 0, 0])));
        // opposite orientations describe the same centered segment
        let h = normalize_generators(&[v([-1, 0, 0]), v([2, 0, 0]), v([0, 1, 0]), v([0, 0, 1])])
            .unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn normalize_rejects_flat_and_zero() {
        assert_eq!(
            normalize_generators(&[v([1, 0, 0]), v([0, 1, 0])]),
            Err(GeomError::NotFullDimensional)
        );
        assert_eq!(
            normalize_generators(&[v([1, 0, 0]), v([0, 0, 0])]),
            Err(GeomError::ZeroGenerator(1))
        );
    }

    #[test]
    fn cube_counts() {
        let p = zonotope_from_generators(&[v([1, 0, 0]), v([0, 1, 0]), v([0, 0, 1])]).unwrap();
        assert_eq!((p.vertices().len(), p.edges().len(), p.facets().len()), (8, 12, 6));
        assert!(p.facets().iter().all(|f| f.cycle.len() == 4));
        assert!(p.is_centrally_symmetric() && p.facets_centrally_symmetric());
    }

    #[test]
    fn rhombic_dodecahedron_counts() {
        let p = zonotope_from_generators(&[v([1, 1, 1]), v([1, -1, 1]), v([-1, 1, 1]), v([-1, -1, 1])])
            .unwrap();
        assert_eq!((p.vertices().len(), p.edges().len(), p.facets().len()), (14, 24, 12));
        assert_eq!(p.volume().unwrap(), p.generators().unwrap().triple_det_volume());
        assert_eq!(p.volume().unwrap(), int(16));
    }

    #[test]
    fn truncated_octahedron_counts() {
        let p = zonotope_from_generators(&[
            v([1, 1, 0]),
            v([1, -1, 0]),
            v([1, 0, 1]),
            v([1, 0, -1]),
            v([0, 1, 1]),
            v([0, 1, -1]),
        ])
        .unwrap();
        assert_eq!((p.vertices().len(), p.edges().len(), p.facets().len()), (24, 36, 14));
        assert_eq!(p.facet_signature().1, vec![6, 6, 6, 6, 6, 6, 6, 6, 4, 4, 4, 4, 4, 4]);
        assert_eq!(p.volume().unwrap(), p.generators().unwrap().triple_det_volume());
    }

    #[test]
    fn facet_classes_pair_antipodes() {
        let p = zonotope_from_generators(&[v([1, 0, 0]), v([0, 1, 0]), v([1, 1, 0]), v([0, 0, 1])])
            .unwrap();
        let classes = facet_classes(&p).unwrap();
        assert_eq!(classes.len(), 4);
        for c in &classes {
            let [a, b] = c.facets;
            let (ha, hb) = (&p.facets()[a].halfspace, &p.facets()[b].halfspace);
            assert_eq!(ha.normal, -&hb.normal);
            assert_eq!(ha.offset, hb.offset);
            let g = p.generators().unwrap().generators();
            assert!(c.generators.iter().all(|&k| c.normal.dot(&g[k]).is_zero()));
        }
        let hex = classes.iter().find(|c| c.generators.len() == 3).unwrap();
        assert_eq!(hex.normal, v([0, 0, 1]));
    }

    #[test]
    fn cycles_are_ccw_from_outside() {
        let p = zonotope_from_generators(&[v([1, 2, 0]), v([0, 1, 3]), v([2, 0, 1]), v([1, 1, 1])])
            .unwrap();
        for f in p.facets() {
            let pts: Vec<&Vec3> = f.cycle.iter().map(|&i| &p.vertices()[i]).collect();
            let n = pts.len();
            for j in 0..n {
                let t = (pts[(j + 1) % n] - pts[j]).cross(&(pts[(j + 2) % n] - pts[(j + 1) % n]));
                assert!(t.dot(&f.halfspace.normal) > Rat::zero());
            }
            assert_eq!(f.cycle[0], *f.cycle.iter().min().unwrap());
        }
    }
}
