//! Convex 3-polytopes with exact vertices and oriented facet cycles.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{ccw_angle_cmp, det3, int, rat, HalfSpace, Rat, Sign, Vec3};
use crate::zonotope::GeneratorSet;

/// A facet: its outward half-space and its vertex cycle, counter-clockwise
/// seen from outside, starting at the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub halfspace: HalfSpace,
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope3 {
    vertices: Vec<Vec3>,
    facets: Vec<Facet>,
    edges: Vec<(usize, usize)>,
    generators: Option<GeneratorSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

impl Polytope3 {
    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Vertex index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn generators(&self) -> Option<&GeneratorSet> {
        self.generators.as_ref()
    }

    pub(crate) fn with_generators(mut self, g: GeneratorSet) -> Self {
        self.generators = Some(g);
        self
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.facets.len() as i64
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    /// Facets containing edge `e`, with the position of the edge's first
    /// vertex in each cycle.
    pub fn facets_of_edge(&self, e: usize) -> Vec<usize> {
        let (a, b) = self.edges[e];
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| cycle_has_edge(&f.cycle, a, b))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn facet_points(&self, f: usize) -> Vec<Vec3> {
        self.facets[f]
            .cycle
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect()
    }

    /// `(facet count, facet sizes sorted descending)`.
    pub fn facet_signature(&self) -> (usize, Vec<usize>) {
        let mut sizes: Vec<usize> = self.facets.iter().map(|f| f.cycle.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        (self.facets.len(), sizes)
    }

    /// Assemble a polytope from facet polygons. Each polygon must be listed
    /// counter-clockwise seen from outside, i.e. around its outward normal.
    pub fn from_facet_polygons(polys: Vec<(HalfSpace, Vec<Vec3>)>) -> Result<Self> {
        let invalid = |m: String| GeomError::InvalidPolytope(m);
        let all: BTreeSet<Vec3> = polys.iter().flat_map(|(_, p)| p.iter().cloned()).collect();
        let vertices: Vec<Vec3> = all.into_iter().collect();
        let index: BTreeMap<&Vec3, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();

        let mut facets = Vec::with_capacity(polys.len());
        for (h, pts) in &polys {
            if pts.len() < 3 {
                return Err(invalid(format!("facet with {} vertices", pts.len())));
            }
            for p in pts {
                if h.side(p) != Sign::Zero {
                    return Err(invalid(format!("facet vertex {p} off its plane")));
                }
            }
            if !is_strictly_convex_ccw(pts, &h.normal) {
                return Err(invalid("facet cycle is not convex and counter-clockwise".into()));
            }
            let mut cycle: Vec<usize> = pts.iter().map(|p| index[p]).collect();
            let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
            cycle.rotate_left(start);
            facets.push(Facet {
                halfspace: h.clone(),
                cycle,
            });
        }
        facets.sort_by(|a, b| a.halfspace.cmp(&b.halfspace));
        for w in facets.windows(2) {
            if w[0].halfspace.plane() == w[1].halfspace.plane()
                && w[0].halfspace.normal == w[1].halfspace.normal
            {
                return Err(invalid("two facets share a plane".into()));
            }
        }

        let mut directed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in &facets {
            let n = f.cycle.len();
            for j in 0..n {
                *directed.entry((f.cycle[j], f.cycle[(j + 1) % n])).or_default() += 1;
            }
        }
        let mut edges = BTreeSet::new();
        for (&(a, b), &c) in &directed {
            if c != 1 || directed.get(&(b, a)) != Some(&1) {
                return Err(invalid(format!(
                    "edge ({}, {}) is not shared by exactly two consistently oriented facets",
                    vertices[a], vertices[b]
                )));
            }
            edges.insert((a.min(b), a.max(b)));
        }

        let p = Polytope3 {
            vertices,
            facets,
            edges: edges.into_iter().collect(),
            generators: None,
        };
        if p.euler_characteristic() != 2 {
            return Err(invalid(format!(
                "Euler characteristic {} != 2",
                p.euler_characteristic()
            )));
        }
        Ok(p)
    }

    /// Builds a polytope from explicit vertices and facet index cycles in
    /// either orientation. Facet planes and orientation are recomputed, and
    /// convexity is checked exactly.
    pub fn from_raw(vertices: &[Vec3], facets: &[Vec<usize>]) -> Result<Self> {
        let invalid = |m: String| GeomError::InvalidPolytope(m);
        let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        if let Some(&bad) = used.iter().find(|&&i| i >= vertices.len()) {
            return Err(invalid(format!("vertex index {bad} out of range")));
        }
        if used.len() != vertices.len() {
            return Err(invalid("some vertex lies on no facet".into()));
        }
        let distinct: BTreeSet<&Vec3> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(invalid("duplicate vertices".into()));
        }
        let mut polys = Vec::with_capacity(facets.len());
        for (fi, cyc) in facets.iter().enumerate() {
            if cyc.len() < 3 {
                return Err(invalid(format!("facet {fi} has fewer than 3 vertices")));
            }
            let pts: Vec<Vec3> = cyc.iter().map(|&i| vertices[i].clone()).collect();
            let normal = newell_normal(&pts);
            if normal.is_zero() {
                return Err(invalid(format!("facet {fi} is degenerate")));
            }
            let mut h = HalfSpace::new(&normal, &normal.dot(&pts[0]))?;
            if pts.iter().any(|p| h.side(p) != Sign::Zero) {
                return Err(invalid(format!("facet {fi} is not planar")));
            }
            let above = vertices.iter().any(|v| h.side(v) == Sign::Positive);
            let below = vertices.iter().any(|v| h.side(v) == Sign::Negative);
            let mut pts = pts;
            match (above, below) {
                (true, true) => {
                    return Err(invalid(format!("polytope is not convex at facet {fi}")))
                }
                (false, false) => return Err(GeomError::ZeroVolume),
                (true, false) => {
                    h = h.flipped();
                    pts.reverse();
                }
                (false, true) => {}
            }
            if !is_strictly_convex_ccw(&pts, &h.normal) {
                // opposite orientation was supplied relative to the cycle order
                pts.reverse();
                if !is_strictly_convex_ccw(&pts, &h.normal) {
                    return Err(invalid(format!("facet {fi} is not a convex polygon")));
                }
            }
            polys.push((h, pts));
        }
        let p = Self::from_facet_polygons(polys)?;
        p.volume()?;
        Ok(p)
    }

    /// Intersection of `halfspaces` inside the box `[-bound, bound]^3`.
    /// Returns the polytope together with, for each facet, the index of the
    /// half-space it came from (`None` for a box face).
    pub fn from_halfspaces(
        bound: &Rat,
        halfspaces: &[HalfSpace],
    ) -> Result<(Self, Vec<Option<usize>>)> {
        let mut clip = Clipper::bounding_box(bound);
        for (i, h) in halfspaces.iter().enumerate() {
            clip.cut(h, Some(i))?;
        }
        let sources: BTreeMap<HalfSpace, Option<usize>> = clip
            .facets
            .iter()
            .map(|(h, s, _)| (h.clone(), *s))
            .collect();
        let polys = clip.facets.into_iter().map(|(h, _, p)| (h, p)).collect();
        let p = Self::from_facet_polygons(polys)?;
        let src = p.facets.iter().map(|f| sources[&f.halfspace]).collect();
        Ok((p, src))
    }

    pub fn translated(&self, t: &Vec3) -> Result<Self> {
        let polys = self
            .facets
            .iter()
            .map(|f| {
                let pts = f.cycle.iter().map(|&i| &self.vertices[i] + t).collect();
                (f.halfspace.translated(t), pts)
            })
            .collect();
        Self::from_facet_polygons(polys)
    }

    /// Average of the vertices. For a centrally symmetric polytope this is
    /// the center of symmetry.
    pub fn vertex_centroid(&self) -> Vec3 {
        centroid(&self.vertices)
    }

    pub fn locate_point(&self, p: &Vec3) -> Location {
        let mut on_boundary = false;
        for f in &self.facets {
            match f.halfspace.side(p) {
                Sign::Positive => return Location::Outside,
                Sign::Zero => on_boundary = true,
                Sign::Negative => {}
            }
        }
        if on_boundary {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    /// Exact volume: tetrahedra from the vertex centroid over a fan
    /// triangulation of every facet.
    pub fn volume(&self) -> Result<Rat> {
        let c = self.vertex_centroid();
        let mut six_vol = Rat::zero();
        for f in &self.facets {
            let a = &self.vertices[f.cycle[0]] - &c;
            for w in f.cycle[1..].windows(2) {
                let b = &self.vertices[w[0]] - &c;
                let d = &self.vertices[w[1]] - &c;
                six_vol += det3(&a, &b, &d).abs();
            }
        }
        if six_vol.is_zero() {
            return Err(GeomError::ZeroVolume);
        }
        Ok(six_vol / int(6))
    }

    /// Index of a vertex whose mirror image through the vertex centroid is
    /// not a vertex, if any.
    pub fn central_symmetry_witness(&self) -> Option<usize> {
        let c2 = self.vertex_centroid().scale(&int(2));
        let set: BTreeSet<&Vec3> = self.vertices.iter().collect();
        (0..self.vertices.len()).find(|&i| !set.contains(&(&c2 - &self.vertices[i])))
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.central_symmetry_witness().is_none()
    }

    /// Index of the first facet that is not centrally symmetric.
    pub fn asymmetric_facet(&self) -> Option<usize> {
        (0..self.facets.len()).find(|&f| !polygon_is_centrally_symmetric(&self.facet_points(f)))
    }

    pub fn facets_centrally_symmetric(&self) -> bool {
        self.asymmetric_facet().is_none()
    }
}

pub fn cycle_has_edge(cycle: &[usize], a: usize, b: usize) -> bool {
    let n = cycle.len();
    (0..n).any(|j| {
        let (p, q) = (cycle[j], cycle[(j + 1) % n]);
        (p == a && q == b) || (p == b && q == a)
    })
}

pub fn centroid(pts: &[Vec3]) -> Vec3 {
    let mut s = Vec3::zero();
    for p in pts {
        s = &s + p;
    }
    s.scale(&rat(1, pts.len() as i64))
}

/// A cyclic polygon maps onto itself under reflection through its centroid,
/// with vertex `j` sent to vertex `j + n/2`.
pub fn polygon_is_centrally_symmetric(pts: &[Vec3]) -> bool {
    let n = pts.len();
    if !n.is_multiple_of(2) {
        return false;
    }
    let c2 = centroid(pts).scale(&int(2));
    (0..n).all(|j| &pts[j] + &pts[(j + n / 2) % n] == c2)
}

fn newell_normal(pts: &[Vec3]) -> Vec3 {
    let n = pts.len();
    let mut acc = Vec3::zero();
    for j in 0..n {
        acc = &acc + &pts[j].cross(&pts[(j + 1) % n]);
    }
    acc
}

fn is_strictly_convex_ccw(pts: &[Vec3], normal: &Vec3) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    let turns_left = (0..n).all(|j| {
        let a = &pts[j];
        let b = &pts[(j + 1) % n];
        let c = &pts[(j + 2) % n];
        Sign::of(&(b - a).cross(&(c - b)).dot(normal)) == Sign::Positive
    });
    if !turns_left {
        return false;
    }
    // a star polygon turns left everywhere too; the total turn must be one revolution
    let e0 = &pts[1] - &pts[0];
    let mut crossings = 0;
    for j in 0..n {
        let e = &pts[(j + 1) % n] - &pts[j];
        let f = &pts[(j + 2) % n] - &pts[(j + 1) % n];
        let before = ccw_angle_cmp(normal, &e0, &e, &f);
        if before != std::cmp::Ordering::Less {
            crossings += 1;
        }
    }
    crossings == 1
}

/// Incremental half-space intersection on explicit facet polygons.
struct Clipper {
    facets: Vec<(HalfSpace, Option<usize>, Vec<Vec3>)>,
}

impl Clipper {
    fn bounding_box(r: &Rat) -> Self {
        let mut facets = Vec::new();
        for axis in 0..3 {
            let (j, k) = ((axis + 1) % 3, (axis + 2) % 3);
            for sgn in [1i64, -1] {
                let mut normal = Vec3::zero();
                normal.0[axis] = int(sgn);
                let corner = |u: i64, v: i64| {
                    let mut p = Vec3::zero();
                    p.0[axis] = r * int(sgn);
                    p.0[j] = r * int(u);
                    p.0[k] = r * int(v);
                    p
                };
                let mut pts = vec![corner(-1, -1), corner(1, -1), corner(1, 1), corner(-1, 1)];
                if sgn < 0 {
                    pts.reverse();
                }
                let h = HalfSpace::new(&normal, r).expect("unit normal");
                facets.push((h, None, pts));
            }
        }
        Clipper { facets }
    }

    /// Returns whether `h` removed anything.
    fn cut(&mut self, h: &HalfSpace, source: Option<usize>) -> Result<bool> {
        let any_out = self
            .facets
            .iter()
            .any(|(_, _, pts)| pts.iter().any(|p| h.side(p) == Sign::Positive));
        if !any_out {
            return Ok(false);
        }
        let any_in = self
            .facets
            .iter()
            .any(|(_, _, pts)| pts.iter().any(|p| h.side(p) == Sign::Negative));
        if !any_in {
            return Err(GeomError::InvalidPolytope("half-space intersection is empty".into()));
        }

        let mut cap: BTreeSet<Vec3> = BTreeSet::new();
        let mut kept = Vec::with_capacity(self.facets.len() + 1);
        for (fh, src, pts) in self.facets.drain(..) {
            let vals: Vec<Rat> = pts.iter().map(|p| h.value(p)).collect();
            let n = pts.len();
            let mut out = Vec::with_capacity(n + 1);
            for j in 0..n {
                let (p, q) = (&pts[j], &pts[(j + 1) % n]);
                let (sp, sq) = (Sign::of(&vals[j]), Sign::of(&vals[(j + 1) % n]));
                if sp != Sign::Positive {
                    out.push(p.clone());
                }
                if sp == Sign::Zero {
                    cap.insert(p.clone());
                }
                if (sp == Sign::Negative && sq == Sign::Positive)
                    || (sp == Sign::Positive && sq == Sign::Negative)
                {
                    let t = &vals[j] / (&vals[j] - &vals[(j + 1) % n]);
                    let x = p + &(q - p).scale(&t);
                    cap.insert(x.clone());
                    out.push(x);
                }
            }
            if out.len() >= 3 {
                kept.push((fh, src, out));
            }
        }
        if cap.len() >= 3 {
            let pts: Vec<Vec3> = cap.into_iter().collect();
            kept.push((h.clone(), source, convex_cycle(&pts, &h.normal)));
        }
        self.facets = kept;
        Ok(true)
    }
}

/// Coplanar points in convex position, ordered counter-clockwise around
/// `normal`; points that are not corners are dropped.
pub(crate) fn convex_cycle(pts: &[Vec3], normal: &Vec3) -> Vec<Vec3> {
    let c = centroid(pts);
    let reference = &pts[0] - &c;
    let mut sorted: Vec<Vec3> = pts.to_vec();
    sorted.sort_by(|a, b| ccw_angle_cmp(normal, &reference, &(a - &c), &(b - &c)));
    loop {
        let n = sorted.len();
        let drop = (0..n).find(|&j| {
            let a = &sorted[(j + n - 1) % n];
            let b = &sorted[j];
            let d = &sorted[(j + 1) % n];
            Sign::of(&(b - a).cross(&(d - b)).dot(normal)) != Sign::Positive
        });
        match drop {
            Some(j) if n > 3 => {
                sorted.remove(j);
            }
            _ => break,
        }
    }
    sorted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zonotope::{build_zonotope, normalize_generators};

    fn unit_cube() -> Polytope3 {
        let g = normalize_generators(&[
            Vec3::from_ints([1, 0, 0]),
            Vec3::from_ints([0, 1, 0]),
            Vec3::from_ints([0, 0, 1]),
        ])
        .unwrap();
        build_zonotope(&g).unwrap()
    }

    fn tetrahedron() -> Polytope3 {
        let v = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].map(Vec3::from_ints);
        Polytope3::from_raw(&v, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap()
    }

    #[test]
    fn locate_point_examples() {
        let c = unit_cube();
        assert_eq!(c.locate_point(&Vec3::zero()), Location::Interior);
        let corner = Vec3::new(rat(1, 2), rat(1, 2), rat(-1, 2));
        assert_eq!(c.locate_point(&corner), Location::Boundary);
        assert_eq!(c.locate_point(&Vec3::from_ints([2, 0, 0])), Location::Outside);
    }

    #[test]
    fn unit_cube_volume() {
        assert_eq!(unit_cube().volume().unwrap(), int(1));
    }

    #[test]
    fn raw_tetrahedron_is_accepted_and_asymmetric() {
        let t = tetrahedron();
        assert_eq!(t.vertices().len(), 4);
        assert_eq!(t.edges().len(), 6);
        assert_eq!(t.volume().unwrap(), rat(1, 6));
        assert!(!t.is_centrally_symmetric());
        assert!(!t.facets_centrally_symmetric());
    }

    #[test]
    fn raw_rejects_nonconvex_and_flat_input() {
        let v = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]].map(Vec3::from_ints);
        let err = Polytope3::from_raw(&v, &[vec![0, 1, 3, 2], vec![0, 1, 3, 2]]).unwrap_err();
        assert!(matches!(err, GeomError::ZeroVolume | GeomError::InvalidPolytope(_)));
        let v = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]].map(Vec3::from_ints);
        assert!(Polytope3::from_raw(&v, &[vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn halfspace_intersection_recovers_cube() {
        let mut hs = Vec::new();
        for axis in 0..3 {
            for s in [1, -1] {
                let mut n = Vec3::zero();
                n.0[axis] = int(s);
                hs.push(HalfSpace::new(&n, &rat(1, 2)).unwrap());
            }
        }
        // a redundant one and a corner-touching one
        hs.push(HalfSpace::new(&Vec3::from_ints([1, 1, 1]), &rat(3, 2)).unwrap());
        hs.push(HalfSpace::new(&Vec3::from_ints([1, 0, 0]), &int(5)).unwrap());
        let (p, src) = Polytope3::from_halfspaces(&int(4), &hs).unwrap();
        assert_eq!(p.vertices(), unit_cube().vertices());
        assert_eq!(p.facets().len(), 6);
        let mut used: Vec<usize> = src.into_iter().map(Option::unwrap).collect();
        used.sort();
        assert_eq!(used, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn corner_truncation_adds_triangle() {
        let mut hs = Vec::new();
        for axis in 0..3 {
            for s in [1, -1] {
                let mut n = Vec3::zero();
                n.0[axis] = int(s);
                hs.push(HalfSpace::new(&n, &int(1)).unwrap());
            }
        }
        hs.push(HalfSpace::new(&Vec3::from_ints([1, 1, 1]), &int(2)).unwrap());
        let (p, _) = Polytope3::from_halfspaces(&int(3), &hs).unwrap();
        assert_eq!(p.facets().len(), 7);
        assert_eq!(p.vertices().len(), 10);
        assert_eq!(p.volume().unwrap(), int(8) - rat(1, 6));
    }

    #[test]
    fn volume_is_translation_invariant() {
        let c = unit_cube();
        let t = Vec3::new(rat(3, 7), rat(-5, 2), int(11));
        assert_eq!(c.translated(&t).unwrap().volume().unwrap(), int(1));
    }
}
