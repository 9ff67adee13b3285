//! Planar multiple tilings by a centrally symmetric convex polygon.
//!
//! At a point `v` on the boundary of some translates, each such translate
//! contributes an angular sector: the inner angle of the polygon at `v`
//! (a corner, or a straight angle when `v` is inside an edge). Sectors are
//! chained clockwise, each sector's closing ray opening the next one; the
//! cycles of this chaining are the adjacent wheels. A wheel's winding number
//! is found by counting how often its chained sweep passes a fixed reference
//! ray, so the total angle `2π·w` is never represented numerically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{ceil, floor, int, rat, serialize_rat, Rat, Sign, Vec2, VecN};
use crate::tiling::{sample_coefficients, MultiplicityReport, SampleSpec, VolumeCheck};

/// Centrally symmetric convex polygon centered at the origin, vertices
/// clockwise. Edge `i` runs from vertex `i` to vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon2m {
    vertices: Vec<Vec2>,
}

/// Where a point sits relative to a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonLocation {
    Interior,
    Vertex(usize),
    /// In the relative interior of edge `i`.
    Edge(usize),
    Outside,
}

impl PolygonLocation {
    pub fn on_boundary(self) -> bool {
        matches!(self, PolygonLocation::Vertex(_) | PolygonLocation::Edge(_))
    }
}

fn signed_area2(pts: &[Vec2]) -> Rat {
    let n = pts.len();
    (0..n).fold(Rat::zero(), |acc, i| acc + pts[i].cross(&pts[(i + 1) % n]))
}

impl Polygon2m {
    /// Validates convexity and central symmetry about the origin. A
    /// counter-clockwise listing is reversed.
    pub fn new(mut vertices: Vec<Vec2>) -> Result<Self> {
        let bad = |m: &str| GeomError::InvalidPolygon(m.to_string());
        let n = vertices.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(bad("need an even number of at least 4 vertices"));
        }
        if signed_area2(&vertices) > Rat::zero() {
            vertices.reverse();
        }
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let c = &vertices[(i + 2) % n];
            if (b - a).cross(&(c - b)) >= Rat::zero() {
                return Err(bad("not strictly convex"));
            }
        }
        // turning once: edge directions wrap around exactly one time
        let e0 = &vertices[1] - &vertices[0];
        let wraps = (0..n)
            .filter(|&i| {
                let e = &vertices[(i + 1) % n] - &vertices[i];
                let f = &vertices[(i + 2) % n] - &vertices[(i + 1) % n];
                cw_cmp(&e0, &e, &f) != Ordering::Less
            })
            .count();
        if wraps != 1 {
            return Err(bad("self-intersecting"));
        }
        let m = n / 2;
        if (0..m).any(|i| vertices[i + m] != -&vertices[i]) {
            return Err(bad("not centrally symmetric about the origin"));
        }
        Ok(Polygon2m { vertices })
    }

    /// Strict convex hull of `points`, recentered at its center of symmetry.
    pub fn hull_of(points: &[Vec2]) -> Result<Self> {
        let mut hull = convex_hull_2d(points);
        if hull.len() < 3 {
            return Err(GeomError::InvalidPolygon("degenerate hull".into()));
        }
        let n = hull.len();
        if n.is_multiple_of(2) {
            let c = hull[0].midpoint(&hull[n / 2]);
            hull = hull.iter().map(|p| p - &c).collect();
        }
        Polygon2m::new(hull)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn half_count(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Vec2 {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn area(&self) -> Rat {
        signed_area2(&self.vertices).abs() / int(2)
    }

    pub fn locate(&self, q: &Vec2) -> PolygonLocation {
        let n = self.vertices.len();
        let mut zero_edge = None;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            match Sign::of(&(b - a).cross(&(q - a))) {
                Sign::Positive => return PolygonLocation::Outside,
                Sign::Zero => {
                    if zero_edge.is_none() {
                        zero_edge = Some(i);
                    }
                }
                Sign::Negative => {}
            }
        }
        match zero_edge {
            None => PolygonLocation::Interior,
            Some(i) => {
                if let Some(j) = self.vertices.iter().position(|v| v == q) {
                    PolygonLocation::Vertex(j)
                } else {
                    PolygonLocation::Edge(i)
                }
            }
        }
    }

    /// Clockwise rays `(L1, L2)` bounding the inner angle at boundary point
    /// `q`; the polygon lies clockwise from `L1` up to `L2`.
    fn sector_at(&self, q: &Vec2) -> Option<(Vec2, Vec2)> {
        match self.locate(q) {
            PolygonLocation::Vertex(i) => {
                let n = self.len();
                let here = &self.vertices[i];
                Some((
                    &self.vertices[(i + 1) % n] - here,
                    &self.vertices[(i + n - 1) % n] - here,
                ))
            }
            PolygonLocation::Edge(i) => {
                let d = self.vertex(i + 1) - self.vertex(i);
                Some((d.clone(), -d))
            }
            _ => None,
        }
    }
}

/// Counter-clockwise strict convex hull (collinear points dropped).
pub fn convex_hull_2d(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Vec2, a: &Vec2, b: &Vec2| (a - o).cross(&(b - o));
    let mut lower: Vec<Vec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rat::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rat::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Orders `x` and `y` by clockwise angle from `a`, in `[0, 2π)`.
pub fn cw_cmp(a: &Vec2, x: &Vec2, y: &Vec2) -> Ordering {
    fn class(a: &Vec2, x: &Vec2) -> u8 {
        match Sign::of(&a.cross(x)) {
            Sign::Zero if a.dot(x) > Rat::zero() => 0,
            Sign::Negative => 1,
            Sign::Zero => 2,
            Sign::Positive => 3,
        }
    }
    class(a, x).cmp(&class(a, y)).then_with(|| match Sign::of(&x.cross(y)) {
        Sign::Negative => Ordering::Less,
        Sign::Positive => Ordering::Greater,
        Sign::Zero => Ordering::Equal,
    })
}

/// Whether ray `r` lies in the clockwise half-open sweep `(a, b]`.
fn sweep_contains(a: &Vec2, b: &Vec2, r: &Vec2) -> bool {
    let past_start = cw_cmp(a, a, r) == Ordering::Less;
    past_start && cw_cmp(a, r, b) != Ordering::Greater
}

/// A 2D lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lattice2 {
    basis: [Vec2; 2],
    #[serde(serialize_with = "serialize_rat")]
    det: Rat,
}

impl Lattice2 {
    pub fn new(basis: [Vec2; 2]) -> Result<Self> {
        let det = basis[0].cross(&basis[1]);
        if det.is_zero() {
            return Err(GeomError::SingularBasis);
        }
        Ok(Lattice2 { basis, det })
    }

    pub fn basis(&self) -> &[Vec2; 2] {
        &self.basis
    }

    pub fn abs_det(&self) -> Rat {
        self.det.abs()
    }

    /// Coefficients `c` with `x = c0·b0 + c1·b1`.
    pub fn coefficients(&self, x: &Vec2) -> [Rat; 2] {
        [
            x.cross(&self.basis[1]) / &self.det,
            self.basis[0].cross(x) / &self.det,
        ]
    }

    pub fn point(&self, c: &[Rat; 2]) -> Vec2 {
        &self.basis[0].scale(&c[0]) + &self.basis[1].scale(&c[1])
    }

    /// Representative of `x` in the half-open cell `[0,1)²` of the basis.
    pub fn reduce(&self, x: &Vec2) -> Vec2 {
        let c = self.coefficients(x).map(|ci| &ci - ci.floor());
        self.point(&c)
    }
}

/// A multiset of translates, optionally repeated over a period lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarMultiset {
    base_translates: Vec<Vec2>,
    period: Option<Lattice2>,
}

impl PlanarMultiset {
    pub fn new(base: Vec<Vec2>, period: Option<Lattice2>) -> Self {
        let mut base_translates: Vec<Vec2> = match &period {
            Some(l) => base.iter().map(|b| l.reduce(b)).collect(),
            None => base,
        };
        base_translates.sort();
        PlanarMultiset {
            base_translates,
            period,
        }
    }

    pub fn base_translates(&self) -> &[Vec2] {
        &self.base_translates
    }

    pub fn period(&self) -> Option<&Lattice2> {
        self.period.as_ref()
    }

    /// Translates `x` (with multiplicity, sorted) such that `v ∈ P + x`.
    pub fn translates_containing(&self, p: &Polygon2m, v: &Vec2) -> Vec<Vec2> {
        let mut out = Vec::new();
        match &self.period {
            None => {
                for b in &self.base_translates {
                    if p.locate(&(v - b)) != PolygonLocation::Outside {
                        out.push(b.clone());
                    }
                }
            }
            Some(l) => {
                let images: Vec<[Rat; 2]> = p.vertices().iter().map(|q| l.coefficients(q)).collect();
                for b in &self.base_translates {
                    let y = l.coefficients(&(v - b));
                    let ranges: [(BigInt, BigInt); 2] = std::array::from_fn(|i| {
                        let hi = images.iter().map(|c| &c[i]).max().unwrap();
                        let lo = images.iter().map(|c| &c[i]).min().unwrap();
                        (ceil(&(&y[i] - hi)), floor(&(&y[i] - lo)))
                    });
                    let mut c0 = ranges[0].0.clone();
                    while c0 <= ranges[0].1 {
                        let mut c1 = ranges[1].0.clone();
                        while c1 <= ranges[1].1 {
                            let x = b + &l.point(&[Rat::from_integer(c0.clone()), Rat::from_integer(c1.clone())]);
                            if p.locate(&(v - &x)) != PolygonLocation::Outside {
                                out.push(x);
                            }
                            c1 += 1;
                        }
                        c0 += 1;
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// `X^v`: translates whose boundary passes through `v`, with multiplicity.
pub fn vertex_star(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> Vec<Vec2> {
    x.translates_containing(p, v)
        .into_iter()
        .filter(|t| p.locate(&(v - t)).on_boundary())
        .collect()
}

/// Number of translates whose interior contains `v`.
pub fn varphi(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> u64 {
    x.translates_containing(p, v)
        .iter()
        .filter(|t| p.locate(&(v - *t)) == PolygonLocation::Interior)
        .count() as u64
}

/// Number of translated edges having `v` in their relative interior,
/// counted with multiplicity of the translates.
pub fn edge_interior_count(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> u64 {
    x.translates_containing(p, v)
        .iter()
        .filter(|t| matches!(p.locate(&(v - *t)), PolygonLocation::Edge(_)))
        .count() as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wheel {
    /// The translates in chaining order.
    pub translates: Vec<Vec2>,
    pub winding: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelDecomposition {
    pub vertex: Vec2,
    pub wheels: Vec<Wheel>,
    #[serde(serialize_with = "serialize_rat")]
    pub varpi: Rat,
}

/// One translate's angular sector at `v`.
#[derive(Clone, Debug)]
pub struct Sector {
    pub translate: Vec2,
    pub start: Vec2,
    pub end: Vec2,
}

/// Sectors at `v` of all translates in the vertex star, in translate order.
pub fn sectors_at(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> Vec<Sector> {
    vertex_star(p, x, v)
        .into_iter()
        .map(|t| {
            let (start, end) = p.sector_at(&(v - &t)).expect("boundary point");
            Sector {
                translate: t,
                start,
                end,
            }
        })
        .collect()
}

fn ray_key(d: &Vec2) -> [BigInt; 2] {
    d.primitive().expect("nonzero ray")
}

pub fn adjacent_wheels(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> Result<WheelDecomposition> {
    let sectors = sectors_at(p, x, v);
    let mut starts: BTreeMap<[BigInt; 2], Vec<usize>> = BTreeMap::new();
    let mut ends: BTreeMap<[BigInt; 2], Vec<usize>> = BTreeMap::new();
    for (i, s) in sectors.iter().enumerate() {
        starts.entry(ray_key(&s.start)).or_default().push(i);
        ends.entry(ray_key(&s.end)).or_default().push(i);
    }
    let mut next = vec![usize::MAX; sectors.len()];
    for (key, enders) in &ends {
        let openers = starts.get(key).map(Vec::as_slice).unwrap_or(&[]);
        if openers.len() != enders.len() {
            return Err(GeomError::NotLocallyTiling(format!(
                "at {v}: {} sectors close on ray {:?} but {} open there",
                enders.len(),
                key.iter().map(ToString::to_string).collect::<Vec<_>>(),
                openers.len()
            )));
        }
        for (&e, &o) in enders.iter().zip(openers) {
            next[e] = o;
        }
    }
    if let Some((key, _)) = starts.iter().find(|(k, _)| !ends.contains_key(*k)) {
        return Err(GeomError::NotLocallyTiling(format!(
            "at {v}: ray {:?} opens a sector but closes none",
            key.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }

    let reference = Vec2::from_ints([1, 0]);
    let mut seen = vec![false; sectors.len()];
    let mut wheels = Vec::new();
    for first in 0..sectors.len() {
        if seen[first] {
            continue;
        }
        let mut translates = Vec::new();
        let mut passes = 0u64;
        let mut i = first;
        while !seen[i] {
            seen[i] = true;
            let s = &sectors[i];
            translates.push(s.translate.clone());
            if sweep_contains(&s.start, &s.end, &reference) {
                passes += 1;
            }
            i = next[i];
        }
        wheels.push(Wheel {
            translates,
            winding: passes,
        });
    }
    let varpi = int(wheels.iter().map(|w| w.winding as i64).sum());
    Ok(WheelDecomposition {
        vertex: v.clone(),
        wheels,
        varpi,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Check {
    #[serde(serialize_with = "serialize_rat")]
    pub varpi: Rat,
    pub ell: u64,
    #[serde(serialize_with = "serialize_rat")]
    pub kappa: Rat,
    pub consistent: bool,
}

/// Solves `ϖ = κ(m−1)/2 + ℓ/2` for `κ`; consistent iff `κ` is a positive integer.
pub fn lemma5_check(p: &Polygon2m, x: &PlanarMultiset, v: &Vec2) -> Result<Lemma5Check> {
    let varpi = adjacent_wheels(p, x, v)?.varpi;
    let ell = edge_interior_count(p, x, v);
    let m = p.half_count() as i64;
    let kappa = (&varpi * int(2) - int(ell as i64)) / int(m - 1);
    let consistent = kappa.is_integer() && kappa > Rat::zero();
    Ok(Lemma5Check {
        varpi,
        ell,
        kappa,
        consistent,
    })
}

/// `φ(v) + ϖ(v) = k`.
pub fn verify_vertex_identity(p: &Polygon2m, x: &PlanarMultiset, k: u64, v: &Vec2) -> Result<bool> {
    let w = adjacent_wheels(p, x, v)?;
    Ok(int(varphi(p, x, v) as i64) + w.varpi == int(k as i64))
}

/// The translated vertices `V + X`, one representative per lattice class
/// when periodic, sorted.
pub fn translated_vertices(p: &Polygon2m, x: &PlanarMultiset) -> Vec<Vec2> {
    let mut out = BTreeSet::new();
    for b in x.base_translates() {
        for q in p.vertices() {
            let v = q + b;
            out.insert(match x.period() {
                Some(l) => l.reduce(&v),
                None => v,
            });
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub vertex: Vec2,
    #[serde(serialize_with = "serialize_rat")]
    pub varpi: Rat,
    pub varphi: u64,
    pub ell: u64,
    #[serde(serialize_with = "serialize_rat")]
    pub kappa: Rat,
    pub wheels: usize,
    pub windings: Vec<u64>,
    pub lemma5_consistent: bool,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelTable {
    pub m: usize,
    pub k: u64,
    pub rows: Vec<VertexRow>,
    pub all_consistent: bool,
}

/// ϖ, φ, ℓ, κ and the two identities at every translated vertex.
pub fn wheel_table(p: &Polygon2m, x: &PlanarMultiset, k: u64) -> Result<WheelTable> {
    let rows: Result<Vec<VertexRow>> = translated_vertices(p, x)
        .par_iter()
        .map(|v| {
            let w = adjacent_wheels(p, x, v)?;
            let phi = varphi(p, x, v);
            let l5 = lemma5_check(p, x, v)?;
            Ok(VertexRow {
                vertex: v.clone(),
                identity_holds: int(phi as i64) + &w.varpi == int(k as i64),
                varpi: w.varpi,
                varphi: phi,
                ell: l5.ell,
                kappa: l5.kappa,
                wheels: w.wheels.len(),
                windings: w.wheels.iter().map(|w| w.winding).collect(),
                lemma5_consistent: l5.consistent,
            })
        })
        .collect();
    let rows = rows?;
    let all_consistent = rows.iter().all(|r| r.lemma5_consistent && r.identity_holds);
    Ok(WheelTable {
        m: p.half_count(),
        k,
        rows,
        all_consistent,
    })
}

/// Planar analogue of [`crate::tiling::verify_k_fold`].
pub fn verify_k_fold_2d(
    p: &Polygon2m,
    x: &PlanarMultiset,
    k: u64,
    spec: &SampleSpec,
) -> Result<MultiplicityReport<2>> {
    let l = x.period().ok_or(GeomError::UnboundedMultiset)?;
    let lhs = int(k as i64) * l.abs_det();
    let rhs = int(x.base_translates().len() as i64) * p.area();
    let coeffs = sample_coefficients::<2>(spec.resolution);
    let counts: Vec<(VecN<2>, u64, u64)> = coeffs
        .par_iter()
        .map(|c| {
            let pt = l.point(c);
            let (i, cl) = multiplicity_at_2d(p, x, &pt);
            (pt, i, cl)
        })
        .collect();
    Ok(MultiplicityReport::assemble(
        k,
        VolumeCheck::new(lhs, rhs),
        spec.resolution,
        counts,
    ))
}

/// `(interior_count, closure_count)` at `pt`.
pub fn multiplicity_at_2d(p: &Polygon2m, x: &PlanarMultiset, pt: &Vec2) -> (u64, u64) {
    let ts = x.translates_containing(p, pt);
    let interior = ts
        .iter()
        .filter(|t| p.locate(&(pt - *t)) == PolygonLocation::Interior)
        .count() as u64;
    (interior, ts.len() as u64)
}

/// Rational hexagon `(1,0),(1,1),(0,1),(−1,0),(−1,−1),(0,−1)`; tiles
/// the plane under the lattice spanned by `(2,1)` and `(1,2)`.
pub fn rational_hexagon() -> (Polygon2m, Lattice2) {
    let v = [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]
        .map(Vec2::from_ints)
        .to_vec();
    let poly = Polygon2m::new(v).expect("valid hexagon");
    let lat = Lattice2::new([Vec2::from_ints([2, 1]), Vec2::from_ints([1, 2])]).expect("basis");
    (poly, lat)
}

/// Square `[−½, ½]²`.
pub fn unit_square() -> Polygon2m {
    let h = rat(1, 2);
    let v = vec![
        Vec2::new(-&h, h.clone()),
        Vec2::new(h.clone(), h.clone()),
        Vec2::new(h.clone(), -&h),
        Vec2::new(-&h, -&h),
    ];
    Polygon2m::new(v).expect("valid square")
}

pub fn integer_lattice_2d() -> Lattice2 {
    Lattice2::new([Vec2::from_ints([1, 0]), Vec2::from_ints([0, 1])]).expect("basis")
}

/// Winding counts as plain integers, for reports.
pub fn windings(w: &WheelDecomposition) -> Vec<u64> {
    w.wheels.iter().map(|w| w.winding).collect()
}
