//! Quantions as complex four-vectors over the tetrad `(Omega, e1, e2, e3)`,
//! and the geometric form of the product written purely in Minkowski terms.
//!
//! This module is the second, independent route to the beta product. It
//! never multiplies matrices; everything is scalar products and a
//! Levi-Civita contraction. Agreement with [`Quantion::beta_mul`] is what
//! the oracle-equivalence tests pin down.

use crate::quantion::Quantion;
use num_complex::Complex64;

/// Tetrad components of the unit: `Omega = (1, 0, 0, 0)`.
pub const OMEGA_COMPONENTS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 0.0),
    Complex64::new(0.0, 0.0),
    Complex64::new(0.0, 0.0),
];

/// Decomposes `q = q0 Omega + q1 e1 + q2 e2 + q3 e3`.
///
/// From the matrix layout: `q0 = (a + d)/2`, `q3 = (a - d)/2`,
/// `q1 = (b + c)/2`, `q2 = i (c - b)/2`. Reconstruction through
/// [`from_tetrad_components`] is exact.
pub fn pauli_decompose(q: &Quantion) -> [Complex64; 4] {
    let i = Complex64::new(0.0, 1.0);
    [
        (q.a + q.d) / 2.0,
        (q.b + q.c) / 2.0,
        i * (q.c - q.b) / 2.0,
        (q.a - q.d) / 2.0,
    ]
}

/// Rebuilds the quantion `u0 Omega + u1 e1 + u2 e2 + u3 e3`.
pub fn from_tetrad_components(u: &[Complex64; 4]) -> Quantion {
    let i = Complex64::new(0.0, 1.0);
    Quantion::new(u[0] + u[3], u[1] + i * u[2], u[1] - i * u[2], u[0] - u[3])
}

/// Complex-bilinear Minkowski product, signature (+, -, -, -).
pub fn minkowski_dot_c(u: &[Complex64; 4], v: &[Complex64; 4]) -> Complex64 {
    u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]
}

/// Levi-Civita symbol on four indices; `eps(0,1,2,3) = +1`.
fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if idx[i] == idx[j] {
                return 0.0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Hodge dual of the trivector `a ^ b ^ c`, as a contravariant vector:
/// `w^d = eps^{d a b g} a_a b_b c_g` with indices lowered by the metric and
/// the orientation `eps^{0123} = +1`. With `a = Omega` this reduces to minus
/// the spatial cross product; that orientation is what makes the geometric
/// product reproduce the tetrad table.
#[allow(clippy::needless_range_loop)] // p, q, r are tensor indices
pub fn hodge_dual(a: &[Complex64; 4], b: &[Complex64; 4], c: &[Complex64; 4]) -> [Complex64; 4] {
    let lower = |x: &[Complex64; 4]| [x[0], -x[1], -x[2], -x[3]];
    let (al, bl, cl) = (lower(a), lower(b), lower(c));
    let mut w = [Complex64::new(0.0, 0.0); 4];
    for (d, slot) in w.iter_mut().enumerate() {
        for p in 0..4 {
            for q in 0..4 {
                for r in 0..4 {
                    let s = levi_civita([d, p, q, r]);
                    if s != 0.0 {
                        *slot += al[p] * bl[q] * cl[r] * s;
                    }
                }
            }
        }
    }
    w
}

/// The beta product in geometric form, on tetrad components:
///
/// `u beta v = (Omega, u) v + (Omega, v) u - (u, v) Omega - i *(Omega ^ u ^ v)`
///
/// with the complex-bilinear Minkowski product throughout.
pub fn beta_geometric(u: &[Complex64; 4], v: &[Complex64; 4]) -> [Complex64; 4] {
    let i = Complex64::new(0.0, 1.0);
    let ou = minkowski_dot_c(&OMEGA_COMPONENTS, u);
    let ov = minkowski_dot_c(&OMEGA_COMPONENTS, v);
    let uv = minkowski_dot_c(u, v);
    let w = hodge_dual(&OMEGA_COMPONENTS, u, v);
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for k in 0..4 {
        out[k] = ou * v[k] + ov * u[k] - uv * OMEGA_COMPONENTS[k] - i * w[k];
    }
    out
}
