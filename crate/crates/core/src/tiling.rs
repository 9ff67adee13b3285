//! k-fold translative tilings: multiplicity counting and sampled verification.
//!
//! A family `P + X` is a k-fold tiling when every point lies in at least `k`
//! closed translates and in at most `k` open ones. Sampling can refute that
//! but never prove it, so a passing report only means "verified at
//! resolution N".

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::exact::{ceil, floor, int, rat, serialize_rat, Rat, Vec3, VecN};
use crate::lattice::Lattice3;
use crate::polytope::{Location, Polytope3};

/// Sampling density: `resolution^d` points per fundamental cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSpec {
    pub resolution: u32,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { resolution: 10 }
    }
}

/// Grid coefficients `(i_j + δ_j) / N` in `[0,1)^D`, with offsets
/// `δ = (1/(2N+1), 1/(2N+3), 1/(2N+5))` so no coordinate is a simple fraction.
pub fn sample_coefficients<const D: usize>(n: u32) -> Vec<[Rat; D]> {
    let n = n.max(1) as i64;
    let offsets: [Rat; D] = std::array::from_fn(|j| rat(1, 2 * n + 1 + 2 * j as i64));
    let total = (n as usize).pow(D as u32);
    (0..total)
        .map(|mut idx| {
            let mut c: [Rat; D] = std::array::from_fn(|_| int(0));
            for j in (0..D).rev() {
                let i = (idx % n as usize) as i64;
                idx /= n as usize;
                c[j] = (int(i) + &offsets[j]) / int(n);
            }
            c
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeCheck {
    pub passed: bool,
    /// `k · |det Λ|`
    #[serde(serialize_with = "serialize_rat")]
    pub lhs: Rat,
    /// `|base translates| · vol(P)`
    #[serde(serialize_with = "serialize_rat")]
    pub rhs: Rat,
}

impl VolumeCheck {
    pub fn new(lhs: Rat, rhs: Rat) -> Self {
        VolumeCheck {
            passed: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCount<const N: usize> {
    pub point: VecN<N>,
    pub interior: u64,
    pub closure: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport<const N: usize> {
    pub claimed_k: u64,
    pub volume_check: VolumeCheck,
    pub resolution: u32,
    pub samples_tested: usize,
    /// Samples lying on the boundary of some translate.
    pub boundary_samples: Vec<SampleCount<N>>,
    /// Samples with `interior > k` or `closure < k`.
    pub violations: Vec<SampleCount<N>>,
    pub verdict: String,
}

impl<const N: usize> MultiplicityReport<N> {
    pub(crate) fn assemble(
        k: u64,
        volume_check: VolumeCheck,
        resolution: u32,
        counts: Vec<(VecN<N>, u64, u64)>,
    ) -> Self {
        let samples_tested = counts.len();
        let mut boundary_samples = Vec::new();
        let mut violations = Vec::new();
        for (point, interior, closure) in counts {
            let s = SampleCount {
                point,
                interior,
                closure,
            };
            if interior > k || closure < k {
                violations.push(s.clone());
            }
            if interior != closure {
                boundary_samples.push(s);
            }
        }
        let ok = volume_check.passed && violations.is_empty();
        let verdict = if ok {
            format!("pass: verified at resolution {resolution}")
        } else {
            "fail".to_string()
        };
        MultiplicityReport {
            claimed_k: k,
            volume_check,
            resolution,
            samples_tested,
            boundary_samples,
            violations,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.volume_check.passed && self.violations.is_empty()
    }
}

/// The multiset `X`: base translates, repeated over a period lattice if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslateMultiset {
    base_translates: Vec<Vec3>,
    period: Option<Lattice3>,
}

impl TranslateMultiset {
    /// Canonicalizes when periodic; see [`canonicalize_multiset`].
    pub fn new(base: Vec<Vec3>, period: Option<Lattice3>) -> Self {
        canonicalize_multiset(TranslateMultiset {
            base_translates: base,
            period,
        })
    }

    pub fn base_translates(&self) -> &[Vec3] {
        &self.base_translates
    }

    pub fn period(&self) -> Option<&Lattice3> {
        self.period.as_ref()
    }

    /// `X + t`.
    pub fn translated(&self, t: &Vec3) -> Self {
        TranslateMultiset::new(
            self.base_translates.iter().map(|b| b + t).collect(),
            self.period.clone(),
        )
    }

    /// Translates `x` (with multiplicity, sorted) for which `pt ∈ P + x`.
    pub fn translates_containing(&self, p: &Polytope3, pt: &Vec3) -> Vec<Vec3> {
        let mut out = Vec::new();
        match &self.period {
            None => {
                for b in &self.base_translates {
                    if p.locate_point(&(pt - b)) != Location::Outside {
                        out.push(b.clone());
                    }
                }
            }
            Some(l) => {
                let bounds = coefficient_bounds(p, l);
                for b in &self.base_translates {
                    let y = l.coefficients(&(pt - b));
                    let ranges: [(BigInt, BigInt); 3] = std::array::from_fn(|i| {
                        (ceil(&(&y[i] - &bounds[i].1)), floor(&(&y[i] - &bounds[i].0)))
                    });
                    for_each_in_box(&ranges, |c| {
                        let x = b + &l.integer_point(c);
                        if p.locate_point(&(pt - &x)) != Location::Outside {
                            out.push(x);
                        }
                    });
                }
            }
        }
        out.sort();
        out
    }
}

/// Per basis coordinate, the `(min, max)` coefficient over the vertices of `p`.
fn coefficient_bounds(p: &Polytope3, l: &Lattice3) -> [(Rat, Rat); 3] {
    let images: Vec<[Rat; 3]> = p.vertices().iter().map(|v| l.coefficients(v)).collect();
    std::array::from_fn(|i| {
        let lo = images.iter().map(|c| &c[i]).min().unwrap().clone();
        let hi = images.iter().map(|c| &c[i]).max().unwrap().clone();
        (lo, hi)
    })
}

fn for_each_in_box(ranges: &[(BigInt, BigInt); 3], mut f: impl FnMut(&[BigInt; 3])) {
    let mut a = ranges[0].0.clone();
    while a <= ranges[0].1 {
        let mut b = ranges[1].0.clone();
        while b <= ranges[1].1 {
            let mut c = ranges[2].0.clone();
            while c <= ranges[2].1 {
                f(&[a.clone(), b.clone(), c.clone()]);
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
}

/// Reduces base translates into the half-open fundamental cell of the
/// period (a no-op without one) and sorts them. Duplicates are kept.
pub fn canonicalize_multiset(x: TranslateMultiset) -> TranslateMultiset {
    let mut base: Vec<Vec3> = match &x.period {
        Some(l) => x.base_translates.iter().map(|b| l.reduce(b)).collect(),
        None => x.base_translates,
    };
    base.sort();
    TranslateMultiset {
        base_translates: base,
        period: x.period,
    }
}

/// `(interior_count, closure_count)`: translates whose interior, resp.
/// closure, contains `pt`.
pub fn multiplicity_at(p: &Polytope3, x: &TranslateMultiset, pt: &Vec3) -> (u64, u64) {
    let ts = x.translates_containing(p, pt);
    let interior = ts
        .iter()
        .filter(|t| p.locate_point(&(pt - *t)) == Location::Interior)
        .count() as u64;
    (interior, ts.len() as u64)
}

pub fn verify_k_fold(
    p: &Polytope3,
    x: &TranslateMultiset,
    k: u64,
    spec: &SampleSpec,
) -> Result<MultiplicityReport<3>> {
    let l = x.period().ok_or(GeomError::UnboundedMultiset)?;
    let lhs = int(k as i64) * l.abs_det();
    let rhs = int(x.base_translates().len() as i64) * p.volume()?;
    let counts: Vec<(Vec3, u64, u64)> = sample_coefficients::<3>(spec.resolution)
        .par_iter()
        .map(|c| {
            let pt = l.point(c);
            let (i, cl) = multiplicity_at(p, x, &pt);
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
