//! Exact rational scalars, small fixed-size vectors and matrices, planes and
//! half-spaces.
//!
//! Nothing in this crate uses floating point. Every comparison that decides
//! "on the boundary" versus "strictly inside" is an exact sign computation on
//! [`Rat`] values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::GeomError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/2"` and the like.
pub fn parse_rat(s: &str) -> Result<Rat, GeomError> {
    let t = s.trim();
    let bad = || GeomError::BadNumber(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: `"3/2"`, `"-1"`, `"0"`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Serde helper so `Rat` fields render as `"p/q"` strings.
pub fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(r))
}

/// Exact sign of a quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        match r.cmp(&Rat::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A point or direction with exact rational coordinates.
///
/// Ordering is lexicographic, which is what every canonical ordering in the
/// crate relies on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecN<const N: usize>(pub [Rat; N]);

pub type Vec2 = VecN<2>;
pub type Vec3 = VecN<3>;

impl<const N: usize> VecN<N> {
    pub fn zero() -> Self {
        VecN(std::array::from_fn(|_| Rat::zero()))
    }

    pub fn from_ints(c: [i64; N]) -> Self {
        VecN(c.map(int))
    }

    pub fn coords(&self) -> &[Rat; N] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..N {
            acc += &self.0[i] * &other.0[i];
        }
        acc
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        VecN(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        let half = rat(1, 2);
        (self + other).scale(&half)
    }

    /// Coprime integer vector that is a positive multiple of `self`.
    /// Returns `None` for the zero vector.
    pub fn primitive(&self) -> Option<[BigInt; N]> {
        if self.is_zero() {
            return None;
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: [BigInt; N] =
            std::array::from_fn(|i| (&self.0[i] * Rat::from_integer(lcm.clone())).to_integer());
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Some(ints.map(|c| c / &g))
    }

    /// Primitive integer vector of the line through `self`: sign chosen so the
    /// first nonzero component is positive. Parallel vectors share a key.
    pub fn line_key(&self) -> Option<[BigInt; N]> {
        let mut p = self.primitive()?;
        if first_nonzero_is_negative(&p) {
            p = p.map(|c| -c);
        }
        Some(p)
    }

    /// Same direction, scaled to a primitive integer vector.
    pub fn primitive_vec(&self) -> Option<Self> {
        self.primitive()
            .map(|p| VecN(p.map(Rat::from_integer)))
    }

    pub fn is_parallel_to(&self, other: &Self) -> bool {
        match (self.line_key(), other.line_key()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

fn first_nonzero_is_negative(c: &[BigInt]) -> bool {
    c.iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false)
}

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        VecN([x, y, z])
    }

    pub fn cross(&self, o: &Self) -> Self {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        VecN([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    pub fn x(&self) -> &Rat {
        &self.0[0]
    }
    pub fn y(&self) -> &Rat {
        &self.0[1]
    }
    pub fn z(&self) -> &Rat {
        &self.0[2]
    }
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        VecN([x, y])
    }

    /// z-component of the 3D cross product; positive when `o` is
    /// counter-clockwise from `self`.
    pub fn cross(&self, o: &Self) -> Rat {
        &self.0[0] * &o.0[1] - &self.0[1] * &o.0[0]
    }
}

/// Determinant of the 3x3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rat {
    a.dot(&b.cross(c))
}

impl<const N: usize> Index<usize> for VecN<N> {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl<const N: usize> Add for &VecN<N> {
    type Output = VecN<N>;
    fn add(self, o: &VecN<N>) -> VecN<N> {
        VecN(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl<const N: usize> Sub for &VecN<N> {
    type Output = VecN<N>;
    fn sub(self, o: &VecN<N>) -> VecN<N> {
        VecN(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl<const N: usize> Neg for &VecN<N> {
    type Output = VecN<N>;
    fn neg(self) -> VecN<N> {
        VecN(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl<const N: usize> Add for VecN<N> {
    type Output = VecN<N>;
    fn add(self, o: VecN<N>) -> VecN<N> {
        &self + &o
    }
}

impl<const N: usize> Sub for VecN<N> {
    type Output = VecN<N>;
    fn sub(self, o: VecN<N>) -> VecN<N> {
        &self - &o
    }
}

impl<const N: usize> Neg for VecN<N> {
    type Output = VecN<N>;
    fn neg(self) -> VecN<N> {
        -&self
    }
}

impl<const N: usize> Mul<&Rat> for &VecN<N> {
    type Output = VecN<N>;
    fn mul(self, s: &Rat) -> VecN<N> {
        self.scale(s)
    }
}

impl<const N: usize> fmt::Debug for VecN<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const N: usize> fmt::Display for VecN<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<const N: usize> Serialize for VecN<N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(format_rat).collect();
        strs.serialize(s)
    }
}

/// Row-major 3x3 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [Vec3; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3([
            Vec3::from_ints([1, 0, 0]),
            Vec3::from_ints([0, 1, 0]),
            Vec3::from_ints([0, 0, 1]),
        ])
    }

    pub fn from_columns(c0: &Vec3, c1: &Vec3, c2: &Vec3) -> Self {
        Mat3(std::array::from_fn(|r| {
            Vec3::new(c0[r].clone(), c1[r].clone(), c2[r].clone())
        }))
    }

    pub fn det(&self) -> Rat {
        det3(&self.0[0], &self.0[1], &self.0[2])
    }

    pub fn transpose(&self) -> Self {
        Mat3::from_columns(&self.0[0], &self.0[1], &self.0[2])
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        VecN(std::array::from_fn(|r| self.0[r].dot(v)))
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let [r0, r1, r2] = &self.0;
        // Columns of the inverse are the cross products of row pairs.
        let inv_cols = [r1.cross(r2), r2.cross(r0), r0.cross(r1)];
        let inv_d = d.recip();
        let m = Mat3::from_columns(&inv_cols[0], &inv_cols[1], &inv_cols[2]);
        Some(Mat3(m.0.map(|row| row.scale(&inv_d))))
    }
}

/// A plane `{x : normal·x = offset}` in canonical form: the normal is a
/// coprime integer vector whose first nonzero component is positive.
/// Two planes are the same set iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Plane {
    pub normal: Vec3,
    #[serde(serialize_with = "serialize_rat")]
    pub offset: Rat,
}

impl Plane {
    pub fn new(normal: &Vec3, offset: &Rat) -> Result<Self, GeomError> {
        let h = HalfSpace::new(normal, offset)?;
        let p = h.normal.primitive().expect("nonzero");
        if first_nonzero_is_negative(&p) {
            Ok(Plane {
                normal: -&h.normal,
                offset: -h.offset,
            })
        } else {
            Ok(Plane {
                normal: h.normal,
                offset: h.offset,
            })
        }
    }

    pub fn value(&self, p: &Vec3) -> Rat {
        self.normal.dot(p) - &self.offset
    }
}

/// Sign of `normal·p − offset`.
pub fn side_of_plane(p: &Vec3, h: &Plane) -> Sign {
    Sign::of(&h.value(p))
}

/// Closed half-space `{x : normal·x <= offset}`. The normal is scaled to a
/// coprime integer vector but keeps its orientation; it points outward.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfSpace {
    pub normal: Vec3,
    #[serde(serialize_with = "serialize_rat")]
    pub offset: Rat,
}

impl HalfSpace {
    pub fn new(normal: &Vec3, offset: &Rat) -> Result<Self, GeomError> {
        let prim = normal.primitive().ok_or(GeomError::ZeroNormal)?;
        // normal = factor * prim for a positive rational factor
        let idx = prim.iter().position(|c| !c.is_zero()).expect("nonzero");
        let factor = &normal[idx] / Rat::from_integer(prim[idx].clone());
        Ok(HalfSpace {
            normal: VecN(prim.map(Rat::from_integer)),
            offset: offset / factor,
        })
    }

    /// Positive means outside, zero on the bounding plane.
    pub fn side(&self, p: &Vec3) -> Sign {
        Sign::of(&self.value(p))
    }

    pub fn value(&self, p: &Vec3) -> Rat {
        self.normal.dot(p) - &self.offset
    }

    pub fn flipped(&self) -> HalfSpace {
        HalfSpace {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }

    pub fn plane(&self) -> Plane {
        Plane::new(&self.normal, &self.offset).expect("nonzero normal")
    }

    pub fn translated(&self, t: &Vec3) -> HalfSpace {
        HalfSpace {
            normal: self.normal.clone(),
            offset: &self.offset + self.normal.dot(t),
        }
    }
}

/// Orders directions in a plane with normal `axis` by counter-clockwise angle
/// from `reference`, seen from the side `axis` points to. Exact; no angles.
pub fn ccw_angle_cmp(axis: &Vec3, reference: &Vec3, a: &Vec3, b: &Vec3) -> Ordering {
    let perp = axis.cross(reference);
    let half = |d: &Vec3| -> u8 {
        let s = Sign::of(&d.dot(&perp));
        let c = Sign::of(&d.dot(reference));
        if s == Sign::Positive || (s == Sign::Zero && c == Sign::Positive) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        // within one half-turn, a precedes b iff b is ccw of a
        match Sign::of(&a.cross(b).dot(axis)) {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => Ordering::Equal,
        }
    })
}

pub fn floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}
