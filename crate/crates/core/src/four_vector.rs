//! Real four-vectors with the Minkowski metric, signature (+, -, -, -).

use serde::{Deserialize, Serialize};
use std::ops::{Add, Index, Mul, Neg, Sub};

/// A real four-vector `(p0, p1, p2, p3)`; `p0` is the time component.
///
/// Serializes as a bare JSON array `[p0, p1, p2, p3]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", from = "[f64; 4]")]
pub struct FourVector {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl FourVector {
    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        Self { p0, p1, p2, p3 }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);

    /// Minkowski square `(p, p)`.
    pub fn norm_sq(&self) -> f64 {
        minkowski_dot(self, self)
    }

    /// Euclidean magnitude of the components; used only for scale estimates.
    pub fn euclid_norm(&self) -> f64 {
        (self.p0 * self.p0 + self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.p0.is_finite() && self.p1.is_finite() && self.p2.is_finite() && self.p3.is_finite()
    }
}

/// `(u, v) = u0 v0 - u1 v1 - u2 v2 - u3 v3`.
pub fn minkowski_dot(u: &FourVector, v: &FourVector) -> f64 {
    u.p0 * v.p0 - u.p1 * v.p1 - u.p2 * v.p2 - u.p3 * v.p3
}

impl From<FourVector> for [f64; 4] {
    fn from(p: FourVector) -> Self {
        [p.p0, p.p1, p.p2, p.p3]
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.p0,
            1 => &self.p1,
            2 => &self.p2,
            3 => &self.p3,
            _ => panic!("four-vector index {i} out of range"),
        }
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.p0 + rhs.p0,
            self.p1 + rhs.p1,
            self.p2 + rhs.p2,
            self.p3 + rhs.p3,
        )
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.p0 - rhs.p0,
            self.p1 - rhs.p1,
            self.p2 - rhs.p2,
            self.p3 - rhs.p3,
        )
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p0, -self.p1, -self.p2, -self.p3)
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.p0 * s, self.p1 * s, self.p2 * s, self.p3 * s)
    }
}
