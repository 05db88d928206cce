//! The quantion number system: 2x2 complex matrices under ordinary matrix
//! multiplication, carrying a Minkowski structure on their hermitian part.
//!
//! A quantion `q = {a, b, c, d}` is the matrix
//!
//! ```text
//!     | a  c |
//!     | b  d |
//! ```
//!
//! i.e. `(a, b)` is the first column and `(c, d)` the second. All component
//! formulas in this crate are written against that layout; changing it
//! silently breaks the product tables, so it is asserted by the table tests.

use crate::four_vector::FourVector;
use crate::tolerances::{HERMITICITY_TOL, NULL_DIVISOR_EPS};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Errors from quantion operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantionError {
    /// The metric norm is numerically on the null cone; no inverse exists.
    #[error("null divisor: |M(q)| = {met_norm_abs:.3e} is at or below the cutoff {threshold:.3e}")]
    NullDivisor { met_norm_abs: f64, threshold: f64 },
    /// The quantion is not hermitian, so it has no four-vector reading.
    #[error("not a real quantion: hermiticity residual {residual:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { residual: f64, tolerance: f64 },
    /// A component was NaN or infinite.
    #[error("non-finite quantion component")]
    NonFinite,
}

/// An element of the quantion algebra. See the module docs for the
/// matrix layout.
///
/// Serializes as a bare JSON array of eight numbers
/// `[Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 8]", try_from = "[f64; 8]")]
pub struct Quantion {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

const fn cpx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Quantion {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    pub const ZERO: Self = Self::new(cpx(0., 0.), cpx(0., 0.), cpx(0., 0.), cpx(0., 0.));

    /// The unit, `Omega` (the identity matrix).
    pub const OMEGA: Self = Self::new(cpx(1., 0.), cpx(0., 0.), cpx(0., 0.), cpx(1., 0.));

    /// First tetrad element `e1` (off-diagonal ones).
    pub const E1: Self = Self::new(cpx(0., 0.), cpx(1., 0.), cpx(1., 0.), cpx(0., 0.));

    /// Second tetrad element `e2` (off-diagonal +-i).
    pub const E2: Self = Self::new(cpx(0., 0.), cpx(0., 1.), cpx(0., -1.), cpx(0., 0.));

    /// Third tetrad element `e3` (diagonal 1, -1).
    pub const E3: Self = Self::new(cpx(1., 0.), cpx(0., 0.), cpx(0., 0.), cpx(-1., 0.));

    /// The product of the algebra: 2x2 matrix multiplication.
    pub fn beta_mul(&self, q: &Quantion) -> Quantion {
        Quantion::new(
            self.a * q.a + self.c * q.b,
            self.b * q.a + self.d * q.b,
            self.a * q.c + self.c * q.d,
            self.b * q.c + self.d * q.d,
        )
    }

    /// Conjugate transpose `q*`: swaps `b` and `c` and conjugates everything.
    pub fn star(&self) -> Quantion {
        Quantion::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Adjugate `q#`: satisfies `q beta q# = M(q) Omega` identically.
    pub fn sharp(&self) -> Quantion {
        Quantion::new(self.d, -self.b, -self.c, self.a)
    }

    /// Metric norm `M(q) = ad - bc` (the determinant). Multiplicative:
    /// `M(p beta q) = M(p) M(q)`.
    pub fn met_norm(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Algebraic norm `A(q) = q* beta q`, read as a four-vector.
    ///
    /// The product is hermitian by construction (exactly, even in floating
    /// point), its time component is non-negative, and
    /// `(A(q), A(q)) = |M(q)|^2`.
    pub fn alg_norm(&self) -> FourVector {
        self.star()
            .beta_mul(self)
            .to_four_vector()
            .expect("q* beta q is hermitian by construction")
    }

    /// Multiplicative inverse `q# / M(q)`.
    ///
    /// Quantions form a non-division algebra: anything on the null cone
    /// (`M(q) = 0`) has no inverse. The cutoff is relative,
    /// `|M(q)| <= NULL_DIVISOR_EPS * ||q||_F^2`.
    pub fn inverse(&self) -> Result<Quantion, QuantionError> {
        let m = self.met_norm();
        let scale = self.frobenius_norm();
        let threshold = NULL_DIVISOR_EPS * scale * scale;
        if m.norm() <= threshold {
            return Err(QuantionError::NullDivisor {
                met_norm_abs: m.norm(),
                threshold,
            });
        }
        Ok(self.sharp() / m)
    }

    /// Reads a hermitian quantion as a real four-vector:
    /// `p0 = Re(a + d)/2`, `p3 = Re(a - d)/2`, `p1 = Re b`, `p2 = Im b`
    /// (symmetrized over `b` and `conj(c)`).
    pub fn to_four_vector(&self) -> Result<FourVector, QuantionError> {
        let scale = self.frobenius_norm();
        let residual = self
            .a
            .im
            .abs()
            .max(self.d.im.abs())
            .max((self.b - self.c.conj()).norm());
        let tolerance = HERMITICITY_TOL * scale;
        if residual > tolerance {
            return Err(QuantionError::NotHermitian {
                residual,
                tolerance,
            });
        }
        Ok(FourVector::new(
            (self.a.re + self.d.re) / 2.0,
            (self.b.re + self.c.re) / 2.0,
            (self.b.im - self.c.im) / 2.0,
            (self.a.re - self.d.re) / 2.0,
        ))
    }

    /// Embeds a real four-vector as a hermitian quantion:
    /// `a = p0 + p3`, `d = p0 - p3`, `b = p1 + i p2`, `c = conj(b)`.
    /// The metric norm of the result is the Minkowski square of `p`.
    pub fn from_four_vector(p: &FourVector) -> Quantion {
        Quantion::new(
            cpx(p.p0 + p.p3, 0.0),
            cpx(p.p1, p.p2),
            cpx(p.p1, -p.p2),
            cpx(p.p0 - p.p3, 0.0),
        )
    }

    /// Frobenius norm of the matrix.
    pub fn frobenius_norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn components(&self) -> [f64; 8] {
        (*self).into()
    }
}

impl fmt::Display for Quantion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}, {}}}", self.a, self.b, self.c, self.d)
    }
}

impl From<Quantion> for [f64; 8] {
    fn from(q: Quantion) -> Self {
        [
            q.a.re, q.a.im, q.b.re, q.b.im, q.c.re, q.c.im, q.d.re, q.d.im,
        ]
    }
}

impl TryFrom<[f64; 8]> for Quantion {
    type Error = QuantionError;
    fn try_from(v: [f64; 8]) -> Result<Self, QuantionError> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(QuantionError::NonFinite);
        }
        Ok(Quantion::new(
            cpx(v[0], v[1]),
            cpx(v[2], v[3]),
            cpx(v[4], v[5]),
            cpx(v[6], v[7]),
        ))
    }
}

impl Add for Quantion {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for Quantion {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for Quantion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// `*` is the beta product.
impl Mul for Quantion {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        self.beta_mul(&r)
    }
}

impl Mul<Complex64> for Quantion {
    type Output = Self;
    fn mul(self, s: Complex64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl Mul<f64> for Quantion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl Div<Complex64> for Quantion {
    type Output = Self;
    fn div(self, s: Complex64) -> Self {
        Self::new(self.a / s, self.b / s, self.c / s, self.d / s)
    }
}
