//! Rational lattices in 3-space and their Dirichlet–Voronoi cells.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{int, rat, serialize_rat, HalfSpace, Mat3, Rat, Vec3};
use crate::polytope::Polytope3;

/// Default half-width of the coefficient box searched for relevant vectors.
pub const DEFAULT_CANDIDATE_RADIUS: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lattice3 {
    basis: [Vec3; 3],
    #[serde(serialize_with = "serialize_rat")]
    det: Rat,
    #[serde(skip)]
    to_coeffs: Mat3,
}

impl Lattice3 {
    /// Reduces `rows` and caches the determinant.
    pub fn new(rows: [Vec3; 3]) -> Result<Self> {
        reduce_basis(rows)
    }

    pub fn basis(&self) -> &[Vec3; 3] {
        &self.basis
    }

    pub fn det(&self) -> &Rat {
        &self.det
    }

    pub fn abs_det(&self) -> Rat {
        self.det.abs()
    }

    /// `c` with `x = Σ c_i b_i`.
    pub fn coefficients(&self, x: &Vec3) -> [Rat; 3] {
        self.to_coeffs.apply(x).0
    }

    pub fn point(&self, c: &[Rat; 3]) -> Vec3 {
        let mut p = Vec3::zero();
        for (ci, b) in c.iter().zip(&self.basis) {
            p = &p + &b.scale(ci);
        }
        p
    }

    pub fn integer_point(&self, c: &[BigInt; 3]) -> Vec3 {
        self.point(&std::array::from_fn(|i| Rat::from_integer(c[i].clone())))
    }

    /// Representative of `x` modulo the lattice in the half-open cell
    /// `{Σ t_i b_i : 0 <= t_i < 1}`.
    pub fn reduce(&self, x: &Vec3) -> Vec3 {
        let c = self.coefficients(x).map(|ci| &ci - ci.floor());
        self.point(&c)
    }
}

/// Greedy pairwise reduction: while some `|b_i·b_j / b_j·b_j| > 1/2`,
/// subtract the rounded multiple of `b_j` from `b_i`. Every step strictly
/// shortens a basis vector, so this terminates.
pub fn reduce_basis(rows: [Vec3; 3]) -> Result<Lattice3> {
    let m = Mat3(rows);
    let det = m.det();
    if det.is_zero() {
        return Err(GeomError::SingularBasis);
    }
    let mut b = m.0;
    let half = rat(1, 2);
    loop {
        let mut changed = false;
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let mu = b[i].dot(&b[j]) / b[j].norm2();
                if mu.abs() > half {
                    let r = mu.round();
                    b[i] = &b[i] - &b[j].scale(&r);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let to_coeffs = Mat3::from_columns(&b[0], &b[1], &b[2])
        .inverse()
        .ok_or(GeomError::SingularBasis)?;
    let det = Mat3(b.clone()).det();
    Ok(Lattice3 {
        basis: b,
        det,
        to_coeffs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DVCell {
    pub cell: Polytope3,
    /// Lattice vectors whose bisector half-spaces carry a facet, sorted.
    pub relevant_vectors: Vec<Vec3>,
}

/// Nonzero lattice vectors with reduced-basis coefficients in
/// `[-radius, radius]`, sorted by squared norm then lexicographically.
pub fn candidate_vectors(l: &Lattice3, radius: i64) -> Vec<Vec3> {
    let mut out = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            for c in -radius..=radius {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                out.push(l.point(&[int(a), int(b), int(c)]));
            }
        }
    }
    out.sort_by(|x, y| x.norm2().cmp(&y.norm2()).then_with(|| x.cmp(y)));
    out
}

/// `{x : ‖x‖ <= ‖x − v‖}` written as `2 x·v <= v·v`.
pub fn bisector(v: &Vec3) -> HalfSpace {
    HalfSpace::new(&v.scale(&int(2)), &v.norm2()).expect("nonzero lattice vector")
}

pub fn dv_cell(l: &Lattice3) -> Result<DVCell> {
    dv_cell_with_radius(l, DEFAULT_CANDIDATE_RADIUS)
}

pub fn dv_cell_with_radius(l: &Lattice3, radius: i64) -> Result<DVCell> {
    let candidates = candidate_vectors(l, radius);
    let halfspaces: Vec<HalfSpace> = candidates.iter().map(bisector).collect();
    // The cell lies within the covering radius, at most half the sum of
    // basis lengths; the L1 sum bounds that with room to spare.
    let bound: Rat = l
        .basis()
        .iter()
        .flat_map(|b| b.0.iter().map(|c| c.abs()))
        .fold(int(1), |acc, c| acc + c);
    let (cell, sources) = Polytope3::from_halfspaces(&bound, &halfspaces)?;
    let mut relevant = Vec::with_capacity(sources.len());
    for s in sources {
        match s {
            Some(i) => relevant.push(candidates[i].clone()),
            None => return Err(GeomError::CandidateBoxTooSmall(radius)),
        }
    }
    relevant.sort();
    Ok(DVCell {
        cell,
        relevant_vectors: relevant,
    })
}
