//! Brute-force oracles in plain `i128` arithmetic. None of them shares code
//! with the library's constructions.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::ToPrimitive;
use tilecheck::exact::{Rat, VecN};

pub type P3 = [i128; 3];

fn sub(a: &P3, b: &P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: &P3, b: &P3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn primitive(n: P3) -> P3 {
    let g = n.iter().fold(0i128, |g, c| g.gcd(c));
    n.map(|c| c / g)
}

/// `Σ ε_i g_i` over all sign vectors: twice the signed half-sums.
pub fn doubled_signed_sums(gens: &[[i64; 3]]) -> Vec<P3> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut s = [0i128; 3];
        for (i, g) in gens.iter().enumerate() {
            let e = if mask & (1 << i) != 0 { 1 } else { -1 };
            for c in 0..3 {
                s[c] += e * g[c] as i128;
            }
        }
        out.insert(s);
    }
    out.into_iter().collect()
}

pub struct HullSummary {
    pub vertices: BTreeSet<P3>,
    /// Vertex count of each facet, sorted descending.
    pub facet_sizes: Vec<usize>,
}

/// Convex hull of a full-dimensional point set by scanning every plane
/// through three points for a supporting one. A point is a vertex iff the
/// supporting planes through it have normals of rank 3.
pub fn brute_hull(points: &[P3]) -> HullSummary {
    let n = points.len();
    let mut planes: BTreeMap<(P3, i128), ()> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross(&sub(&points[j], &points[i]), &sub(&points[k], &points[i]));
                if nrm == [0, 0, 0] {
                    continue;
                }
                let (mut pos, mut neg) = (false, false);
                for q in points {
                    let s = dot(&nrm, &sub(q, &points[i]));
                    pos |= s > 0;
                    neg |= s < 0;
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                let outward = primitive(if pos { nrm.map(|c| -c) } else { nrm });
                planes.insert((outward, dot(&outward, &points[i])), ());
            }
        }
    }
    let planes: Vec<(P3, i128)> = planes.into_keys().collect();
    let mut vertices = BTreeSet::new();
    for p in points {
        let through: Vec<&P3> = planes
            .iter()
            .filter(|(nrm, off)| dot(nrm, p) == *off)
            .map(|(nrm, _)| nrm)
            .collect();
        let rank3 = through.iter().enumerate().any(|(a, x)| {
            through.iter().enumerate().any(|(b, y)| {
                b > a && through[b + 1..].iter().any(|z| dot(&cross(x, y), z) != 0)
            })
        });
        if rank3 {
            vertices.insert(*p);
        }
    }
    let mut facet_sizes: Vec<usize> = planes
        .iter()
        .map(|(nrm, off)| vertices.iter().filter(|v| dot(nrm, v) == *off).count())
        .collect();
    facet_sizes.sort_unstable_by(|a, b| b.cmp(a));
    HullSummary { vertices, facet_sizes }
}

/// `scale · v` as integers; panics if that is not integral.
pub fn scaled<const N: usize>(v: &VecN<N>, scale: i64) -> [i128; N] {
    std::array::from_fn(|i| {
        let x = &v.0[i] * Rat::from_integer(scale.into());
        assert!(x.is_integer(), "{x} not integral");
        x.to_integer().to_i128().unwrap()
    })
}

/// A rational point `num / den` in lowest terms with `den > 0`.
pub type RatPoint = (P3, i128);

fn normalize(num: P3, den: i128) -> RatPoint {
    let (num, den) = if den < 0 { (num.map(|c| -c), -den) } else { (num, den) };
    let g = num.iter().fold(den, |g, c| g.gcd(c));
    (num.map(|c| c / g), den / g)
}

/// Vertices of `{x : 2 x·v ≤ v·v}` over all lattice vectors with
/// coefficients in `[-radius, radius]`, found by solving every triple of
/// bisector planes and keeping feasible solutions.
pub fn dv_vertices_oracle(basis: [[i64; 3]; 3], radius: i64) -> BTreeSet<RatPoint> {
    let mut vs: Vec<P3> = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            for c in -radius..=radius {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                vs.push(std::array::from_fn(|i| {
                    (a * basis[0][i] + b * basis[1][i] + c * basis[2][i]) as i128
                }));
            }
        }
    }
    vs.sort_by_key(|v| dot(v, v));
    let planes: Vec<(P3, i128)> = vs.iter().map(|v| (v.map(|c| 2 * c), dot(v, v))).collect();
    let mut out = BTreeSet::new();
    let n = planes.len();
    for i in 0..n {
        for j in i + 1..n {
            let c12 = cross(&planes[i].0, &planes[j].0);
            if c12 == [0, 0, 0] {
                continue;
            }
            for k in j + 1..n {
                let (a1, b1) = &planes[i];
                let (a2, b2) = &planes[j];
                let (a3, b3) = &planes[k];
                let det = dot(&c12, a3);
                if det == 0 {
                    continue;
                }
                let c23 = cross(a2, a3);
                let c31 = cross(a3, a1);
                let num: P3 = std::array::from_fn(|t| b1 * c23[t] + b2 * c31[t] + b3 * c12[t]);
                let (num, den) = normalize(num, det);
                if planes.iter().all(|(a, b)| dot(a, &num) <= b * den) {
                    out.insert((num, den));
                }
            }
        }
    }
    out
}

pub fn rat_point(v: &VecN<3>) -> RatPoint {
    let den = v.0.iter().fold(1i128, |d, c| d.lcm(&c.denom().to_i128().unwrap()));
    let num = std::array::from_fn(|i| {
        (&v.0[i] * Rat::from_integer(den.into())).to_integer().to_i128().unwrap()
    });
    normalize(num, den)
}

/// Strict convex hull vertices of a planar point set by gift wrapping.
pub fn hull_2d(points: &[[i128; 2]]) -> BTreeSet<[i128; 2]> {
    let pts: Vec<[i128; 2]> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = BTreeSet::new();
    if pts.len() < 3 {
        out.extend(pts);
        return out;
    }
    let start = pts[0];
    let mut cur = start;
    loop {
        out.insert(cur);
        let mut cand = if pts[0] == cur { pts[1] } else { pts[0] };
        for &q in &pts {
            if q == cur {
                continue;
            }
            let c = (cand[0] - cur[0]) * (q[1] - cur[1]) - (cand[1] - cur[1]) * (q[0] - cur[0]);
            let farther = {
                let d = |p: [i128; 2]| (p[0] - cur[0]).pow(2) + (p[1] - cur[1]).pow(2);
                d(q) > d(cand)
            };
            // keep the most clockwise candidate, farthest on ties
            if c < 0 || (c == 0 && farther) {
                cand = q;
            }
        }
        cur = cand;
        if cur == start {
            break;
        }
    }
    out
}
