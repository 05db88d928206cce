//! Quantal algebras: a commutative product `sigma`, an antisymmetric
//! product `alpha`, and a parameter `a` in {-1, 0, +1} coupling them.
//!
//! A realization is admissible when three identities hold:
//!
//! * Jacobi: `(f a g) a h + (g a h) a f + (h a f) a g = 0`
//! * Leibniz: `g a (f s h) = (g a f) s h + f s (g a h)`
//! * Petersen: `(f s g) s h - f s (g s h) = a * g a (h a f)`
//!
//! (`s` = sigma, `a` between elements = alpha.) The three values of the
//! parameter give the elliptic (+1, hermitian matrices), parabolic
//! (0, classical Poisson), and hyperbolic (-1, real symmetric matrices)
//! families. For a = +1 the complex combination `beta = sigma + i alpha`
//! is associative; that is the bridge back to the quantions.

pub mod compose;
pub mod matrix;
pub mod poisson;
pub mod suite;

pub use compose::{compose, ComposedAlgebra, ComposedElement};
pub use matrix::{centralizer, jj_check, CMat, MatrixAlgebra, MatrixFlavor};
pub use poisson::{PoissonAlgebra, PolyObservable};
pub use suite::{run_suite, Verdict, VerificationReport};

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from constructing or combining quantal algebras.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantalError {
    #[error("matrix dimension {0} out of range (supported: 2..=8)")]
    DimensionOutOfRange(usize),
    #[error("polynomial degree cap {0} out of range (supported: 2..=8)")]
    DegreeOutOfRange(usize),
    #[error("parameter a must be -1, 0, or +1 (got {0})")]
    InvalidParameterA(i8),
    #[error("beta = sigma + i alpha requires a = +1; this algebra has a = {0}")]
    NotElliptic(i8),
    #[error("compose requires matching parameters (a = {0} vs a = {1})")]
    MismatchedA(i8, i8),
    #[error("compose requires the same realization flavor on both sides")]
    MismatchedFlavor,
    #[error("centralizer requires a non-empty basis of matching dimension")]
    BadBasis,
    #[error("state dimension mismatch ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("hbar must be positive (got {0})")]
    NonPositiveHbar(f64),
}

/// The identities a verification suite can score.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Jacobi,
    Leibniz,
    Petersen,
    AssocBeta,
    Closure,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::Jacobi => "jacobi",
            Identity::Leibniz => "leibniz",
            Identity::Petersen => "petersen",
            Identity::AssocBeta => "assoc_beta",
            Identity::Closure => "closure",
        };
        f.write_str(s)
    }
}

/// A concrete (sigma, alpha, a) realization.
///
/// Element arithmetic goes through the algebra rather than operator bounds
/// so that realizations with very different element types (dense complex
/// matrices, polynomial observables, Kronecker sums) share one suite.
/// Sampling takes a caller-seeded ChaCha stream; the suite derives stream
/// `k` from `seed + k`, which keeps parallel runs reproducible.
pub trait QuantalAlgebra {
    type Element: Clone + Send + Sync;

    /// Stable identifier, e.g. `hermitian:2`.
    fn id(&self) -> String;
    /// The structure parameter `a`.
    fn a(&self) -> i8;
    fn unit(&self) -> Self::Element;
    fn sigma(&self, f: &Self::Element, g: &Self::Element) -> Self::Element;
    fn alpha(&self, f: &Self::Element, g: &Self::Element) -> Self::Element;
    fn add(&self, f: &Self::Element, g: &Self::Element) -> Self::Element;
    fn sub(&self, f: &Self::Element, g: &Self::Element) -> Self::Element;
    fn scale(&self, f: &Self::Element, s: f64) -> Self::Element;
    fn norm(&self, f: &Self::Element) -> f64;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Element;

    /// Extra identities this realization's suite should score beyond the
    /// three quantal ones (e.g. beta associativity for elliptic matrices).
    fn extra_identities(&self) -> Vec<Identity> {
        Vec::new()
    }
    fn check_extra(
        &self,
        _identity: Identity,
        _f: &Self::Element,
        _g: &Self::Element,
        _h: &Self::Element,
    ) -> f64 {
        0.0
    }
}

/// Residual norm divided by the product of the operand norms. A zero scale
/// (all-zero operands) falls back to the absolute residual.
pub(crate) fn relative<A: QuantalAlgebra>(
    alg: &A,
    residual: &A::Element,
    f: &A::Element,
    g: &A::Element,
    h: &A::Element,
) -> f64 {
    let scale = alg.norm(f) * alg.norm(g) * alg.norm(h);
    let r = alg.norm(residual);
    if scale > 0.0 {
        r / scale
    } else {
        r
    }
}

/// Relative residual of the Jacobi identity for alpha.
pub fn check_jacobi<A: QuantalAlgebra>(
    alg: &A,
    f: &A::Element,
    g: &A::Element,
    h: &A::Element,
) -> f64 {
    let t1 = alg.alpha(&alg.alpha(f, g), h);
    let t2 = alg.alpha(&alg.alpha(g, h), f);
    let t3 = alg.alpha(&alg.alpha(h, f), g);
    let res = alg.add(&alg.add(&t1, &t2), &t3);
    relative(alg, &res, f, g, h)
}

/// Relative residual of the Leibniz rule: alpha acts by derivations on
/// sigma, `g a (f s h) = (g a f) s h + f s (g a h)`.
pub fn check_leibniz<A: QuantalAlgebra>(
    alg: &A,
    f: &A::Element,
    g: &A::Element,
    h: &A::Element,
) -> f64 {
    let lhs = alg.alpha(g, &alg.sigma(f, h));
    let rhs = alg.add(
        &alg.sigma(&alg.alpha(g, f), h),
        &alg.sigma(f, &alg.alpha(g, h)),
    );
    let res = alg.sub(&lhs, &rhs);
    relative(alg, &res, f, g, h)
}

/// Relative residual of the Petersen identity: the sigma associator equals
/// `a * g a (h a f)`. This is the only check sensitive to `a`.
pub fn check_petersen<A: QuantalAlgebra>(
    alg: &A,
    f: &A::Element,
    g: &A::Element,
    h: &A::Element,
) -> f64 {
    let assoc = alg.sub(
        &alg.sigma(&alg.sigma(f, g), h),
        &alg.sigma(f, &alg.sigma(g, h)),
    );
    let rhs = alg.scale(&alg.alpha(g, &alg.alpha(h, f)), alg.a() as f64);
    let res = alg.sub(&assoc, &rhs);
    relative(alg, &res, f, g, h)
}

/// Splits the hermitian inner product of two state vectors into its Kahler
/// pair: `G = 2 hbar Re<phi, psi>` (metric part) and
/// `W = 2 hbar Im<phi, psi>` (symplectic part). The product is
/// conjugate-linear in `phi`. The complex structure `J psi = i psi`
/// interlocks them: `G(phi, psi) = W(phi, J psi)` and `J^2 = -1`.
pub fn kahler_decompose(
    phi: &[Complex64],
    psi: &[Complex64],
    hbar: f64,
) -> Result<(f64, f64), QuantalError> {
    if phi.len() != psi.len() {
        return Err(QuantalError::DimensionMismatch(phi.len(), psi.len()));
    }
    if !hbar.is_finite() || hbar <= 0.0 {
        return Err(QuantalError::NonPositiveHbar(hbar));
    }
    let inner: Complex64 = phi.iter().zip(psi).map(|(a, b)| a.conj() * b).sum();
    Ok((2.0 * hbar * inner.re, 2.0 * hbar * inner.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    const fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kahler_of_parallel_and_of_quarter_turned_states() {
        let phi = [z(1., 0.), z(0., 0.)];
        assert_eq!(kahler_decompose(&phi, &phi, 1.0).unwrap(), (2.0, 0.0));
        let psi = [z(0., 1.), z(0., 0.)];
        assert_eq!(kahler_decompose(&phi, &psi, 1.0).unwrap(), (0.0, 2.0));
        assert_eq!(kahler_decompose(&phi, &phi, 0.5).unwrap(), (1.0, 0.0));
    }

    #[test]
    fn kahler_rejects_bad_input() {
        let phi = [z(1., 0.)];
        let psi = [z(1., 0.), z(0., 0.)];
        assert!(matches!(
            kahler_decompose(&phi, &psi, 1.0),
            Err(QuantalError::DimensionMismatch(1, 2))
        ));
        assert!(matches!(
            kahler_decompose(&phi, &phi, 0.0),
            Err(QuantalError::NonPositiveHbar(_))
        ));
    }

    #[test]
    fn metric_part_is_symplectic_part_of_rotated_state() {
        // G(phi, psi) = W(phi, i psi), exactly: Re z = Im(i z) in floating
        // point. And J^2 = -1.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let dim = rng.gen_range(1..5);
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Complex64> {
                (0..dim)
                    .map(|_| z(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))
                    .collect()
            };
            let phi = mk(&mut rng);
            let psi = mk(&mut rng);
            let i = z(0., 1.);
            let rotated: Vec<Complex64> = psi.iter().map(|v| i * v).collect();
            let (g, _) = kahler_decompose(&phi, &psi, 1.0).unwrap();
            let (_, w_rot) = kahler_decompose(&phi, &rotated, 1.0).unwrap();
            assert_eq!(g, w_rot);
            let twice: Vec<Complex64> = rotated.iter().map(|v| i * v).collect();
            let back: Vec<Complex64> = psi.iter().map(|v| -v).collect();
            assert_eq!(twice, back);
        }
    }
}
