//! Numeric thresholds used across the crate.
//!
//! Residuals are relative: a raw residual norm is divided by the product of
//! the Frobenius norms of the operands before comparison. The constants here
//! are therefore dimensionless and independent of operand scale.

/// Default relative tolerance for identity residuals (Jacobi, Leibniz,
/// Petersen, associativity). Leaves ~5 orders of magnitude of headroom over
/// f64 rounding for the matrix sizes this crate works at (n <= 8).
pub const REL_TOL: f64 = 1e-10;

/// Null-cone cutoff: `inverse` refuses a quantion when
/// `|M(q)| <= NULL_DIVISOR_EPS * ||q||_F^2`. The metric norm is quadratic in
/// the components, hence the squared Frobenius scale.
pub const NULL_DIVISOR_EPS: f64 = 1e-12;

/// Hermiticity test for `to_four_vector`: component-wise deviation from
/// `q* == q` may not exceed this times `||q||_F`.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Agreement demanded between the two product routes (matrix multiplication
/// vs. the Minkowski/Hodge form). Tighter than REL_TOL because both routes
/// are short closed-form expressions.
pub const ORACLE_EQUIV_TOL: f64 = 1e-12;

/// Representation laws (homomorphism, left/right commutation) are plain
/// matrix arithmetic and get the tight tolerance.
pub const REP_TOL: f64 = 1e-12;

/// `q beta q#` cancels to `M(q) Omega` exactly up to rounding.
pub const ADJUGATE_TOL: f64 = 1e-12;

/// Singular values at or below this fraction of the largest one count as
/// zero when extracting a centralizer kernel.
pub const KERNEL_SVD_RTOL: f64 = 1e-10;

/// A deliberately broken algebra (mis-scaled alpha, wrong `a`) must produce
/// at least this relative Petersen residual to count as detected.
pub const MUTATION_MIN_RESIDUAL: f64 = 1e-3;
