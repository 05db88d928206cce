//! C ABI for the quantion crate.
//!
//! Quantion values cross the boundary as `double[8]` buffers holding the
//! four complex components re/im interleaved, in the same order as the
//! JSON serialization: a, b, c, d. Four-vectors are `double[4]` in
//! (p0, p1, p2, p3) order. Every function returns one of the `QTN_*`
//! status codes; output buffers are written only on `QTN_OK` unless noted.
//!
//! Quantal algebras live behind the opaque `QtnAlgebra` handle. Handles
//! come from the `qtn_algebra_new_*` constructors (or `qtn_algebra_compose`)
//! and must be released with `qtn_algebra_free`. Strings returned through
//! out-parameters must be released with `qtn_string_free`.

use std::ffi::{c_char, CString};

use quantion::basis::{basis_table, diff_against_golden, BasisName};
use quantion::quantal::{compose, run_suite, ComposedAlgebra, MatrixAlgebra, PoissonAlgebra};
use quantion::representations::{zovko_current, CausalClass};
use quantion::{FourVector, Quantion, QuantionError};

/// Success.
pub const QTN_OK: i32 = 0;
/// The operand lies on the null cone; the requested inverse does not exist.
pub const QTN_NULL_DIVISOR: i32 = 1;
/// The operand is not a real (hermitian) quantion.
pub const QTN_NOT_HERMITIAN: i32 = 2;
/// A scalar argument or buffer content is out of range or non-finite.
pub const QTN_INVALID_ARGUMENT: i32 = 3;
/// A required pointer argument was NULL.
pub const QTN_NULL_POINTER: i32 = 4;

/// Causal class codes written by `qtn_zovko_current`.
pub const QTN_CLASS_ZERO: i32 = 0;
pub const QTN_CLASS_NULL_FUTURE: i32 = 1;
pub const QTN_CLASS_TIMELIKE_FUTURE: i32 = 2;

/// Basis selectors for `qtn_table_check`.
pub const QTN_BASIS_TETRAD: i32 = 0;
pub const QTN_BASIS_QUATERNION: i32 = 1;
pub const QTN_BASIS_NULL: i32 = 2;

enum ReadError {
    Null,
    Invalid,
}

impl ReadError {
    fn code(&self) -> i32 {
        match self {
            ReadError::Null => QTN_NULL_POINTER,
            ReadError::Invalid => QTN_INVALID_ARGUMENT,
        }
    }
}

fn error_code(e: &QuantionError) -> i32 {
    match e {
        QuantionError::NullDivisor { .. } => QTN_NULL_DIVISOR,
        QuantionError::NotHermitian { .. } => QTN_NOT_HERMITIAN,
        QuantionError::NonFinite => QTN_INVALID_ARGUMENT,
    }
}

unsafe fn read_quantion(p: *const f64) -> Result<Quantion, ReadError> {
    if p.is_null() {
        return Err(ReadError::Null);
    }
    let mut buf = [0.0f64; 8];
    buf.copy_from_slice(std::slice::from_raw_parts(p, 8));
    Quantion::try_from(buf).map_err(|_| ReadError::Invalid)
}

unsafe fn write_quantion(out: *mut f64, q: Quantion) {
    let buf: [f64; 8] = q.into();
    std::ptr::copy_nonoverlapping(buf.as_ptr(), out, 8);
}

unsafe fn write_four(out: *mut f64, p: FourVector) {
    let buf: [f64; 4] = p.into();
    std::ptr::copy_nonoverlapping(buf.as_ptr(), out, 4);
}

/// Computes `p beta q` into `out`.
///
/// # Safety
/// `p` and `q` must point to 8 readable doubles each; `out` must point to
/// 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_beta_mul(p: *const f64, q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match (read_quantion(p), read_quantion(q)) {
        (Ok(a), Ok(b)) => {
            write_quantion(out, a * b);
            QTN_OK
        }
        (Err(e), _) | (_, Err(e)) => e.code(),
    }
}

/// Writes the conjugate `q*` into `out`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_star(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => {
            write_quantion(out, a.star());
            QTN_OK
        }
        Err(e) => e.code(),
    }
}

/// Writes the adjugate `q#` into `out`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_sharp(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => {
            write_quantion(out, a.sharp());
            QTN_OK
        }
        Err(e) => e.code(),
    }
}

/// Writes the metric norm M(q) as (re, im) into `out`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 2 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_met_norm(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => {
            let m = a.met_norm();
            *out = m.re;
            *out.add(1) = m.im;
            QTN_OK
        }
        Err(e) => e.code(),
    }
}

/// Writes the algebraic norm A(q) = q* beta q as a four-vector into `out`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 4 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_alg_norm(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => {
            write_four(out, a.alg_norm());
            QTN_OK
        }
        Err(e) => e.code(),
    }
}

/// Writes `q^-1` into `out`, or reports `QTN_NULL_DIVISOR` when `q` lies
/// on the null cone.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_inverse(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => match a.inverse() {
            Ok(inv) => {
                write_quantion(out, inv);
                QTN_OK
            }
            Err(e) => error_code(&e),
        },
        Err(e) => e.code(),
    }
}

/// Projects a hermitian quantion onto its four-vector, or reports
/// `QTN_NOT_HERMITIAN`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out` to 4 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_to_four_vector(q: *const f64, out: *mut f64) -> i32 {
    if out.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => match a.to_four_vector() {
            Ok(p) => {
                write_four(out, p);
                QTN_OK
            }
            Err(e) => error_code(&e),
        },
        Err(e) => e.code(),
    }
}

/// Embeds a four-vector as a hermitian quantion.
///
/// # Safety
/// `p` must point to 4 readable doubles; `out` to 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qtn_from_four_vector(p: *const f64, out: *mut f64) -> i32 {
    if p.is_null() || out.is_null() {
        return QTN_NULL_POINTER;
    }
    let mut buf = [0.0f64; 4];
    buf.copy_from_slice(std::slice::from_raw_parts(p, 4));
    if !buf.iter().all(|x| x.is_finite()) {
        return QTN_INVALID_ARGUMENT;
    }
    write_quantion(out, Quantion::from_four_vector(&FourVector::from(buf)));
    QTN_OK
}

/// Computes the current j(q) into `out_j` and its causal class
/// (`QTN_CLASS_*`) into `out_class`.
///
/// # Safety
/// `q` must point to 8 readable doubles; `out_j` to 4 writable doubles;
/// `out_class` to a writable int.
#[no_mangle]
pub unsafe extern "C" fn qtn_zovko_current(
    q: *const f64,
    out_j: *mut f64,
    out_class: *mut i32,
) -> i32 {
    if out_j.is_null() || out_class.is_null() {
        return QTN_NULL_POINTER;
    }
    match read_quantion(q) {
        Ok(a) => {
            let (j, class) = zovko_current(&a);
            write_four(out_j, j);
            *out_class = match class {
                CausalClass::Zero => QTN_CLASS_ZERO,
                CausalClass::NullFuture => QTN_CLASS_NULL_FUTURE,
                CausalClass::TimelikeFuture => QTN_CLASS_TIMELIKE_FUTURE,
            };
            QTN_OK
        }
        Err(e) => e.code(),
    }
}

/// Recomputes the multiplication table for one basis (`QTN_BASIS_*`) and
/// writes the number of cells disagreeing with the embedded golden copy.
///
/// # Safety
/// `out_mismatches` must point to a writable unsigned int.
#[no_mangle]
pub unsafe extern "C" fn qtn_table_check(basis: i32, out_mismatches: *mut u32) -> i32 {
    if out_mismatches.is_null() {
        return QTN_NULL_POINTER;
    }
    let name = match basis {
        QTN_BASIS_TETRAD => BasisName::Tetrad,
        QTN_BASIS_QUATERNION => BasisName::Quaternion,
        QTN_BASIS_NULL => BasisName::NullTetrad,
        _ => return QTN_INVALID_ARGUMENT,
    };
    let table = basis_table(name);
    *out_mismatches = diff_against_golden(&table).len() as u32;
    QTN_OK
}

enum AnyAlgebra {
    Matrix(MatrixAlgebra),
    Poisson(PoissonAlgebra),
    Composed(ComposedAlgebra),
}

/// Opaque quantal-algebra handle.
pub struct QtnAlgebra {
    inner: AnyAlgebra,
}

fn into_handle(inner: AnyAlgebra) -> *mut QtnAlgebra {
    Box::into_raw(Box::new(QtnAlgebra { inner }))
}

/// Creates a hermitian matrix realization (a = +1). Returns NULL when the
/// dimension is out of range.
#[no_mangle]
pub extern "C" fn qtn_algebra_new_hermitian(n: u32) -> *mut QtnAlgebra {
    match MatrixAlgebra::hermitian(n as usize) {
        Ok(alg) => into_handle(AnyAlgebra::Matrix(alg)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Creates a real-symmetric matrix realization (a = -1). Returns NULL when
/// the dimension is out of range.
#[no_mangle]
pub extern "C" fn qtn_algebra_new_real_symmetric(n: u32) -> *mut QtnAlgebra {
    match MatrixAlgebra::real_symmetric(n as usize) {
        Ok(alg) => into_handle(AnyAlgebra::Matrix(alg)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Creates the polynomial Poisson realization (a = 0). Returns NULL when
/// the degree cap is out of range.
#[no_mangle]
pub extern "C" fn qtn_algebra_new_poisson(degree: u32) -> *mut QtnAlgebra {
    match PoissonAlgebra::new(degree as usize) {
        Ok(alg) => into_handle(AnyAlgebra::Poisson(alg)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Tensor-composes two matrix realizations. Returns NULL when either
/// handle is NULL, not a matrix realization, or the two disagree on the
/// structure parameter.
///
/// # Safety
/// `left` and `right` must be live handles from this library (or NULL).
#[no_mangle]
pub unsafe extern "C" fn qtn_algebra_compose(
    left: *const QtnAlgebra,
    right: *const QtnAlgebra,
) -> *mut QtnAlgebra {
    if left.is_null() || right.is_null() {
        return std::ptr::null_mut();
    }
    let (AnyAlgebra::Matrix(l), AnyAlgebra::Matrix(r)) = (&(*left).inner, &(*right).inner) else {
        return std::ptr::null_mut();
    };
    match compose(l, r) {
        Ok(c) => into_handle(AnyAlgebra::Composed(c)),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Runs the seeded identity suite and hands back the reports as a JSON
/// array (the same shape the CLI emits). On `QTN_OK` the caller owns the
/// string and must release it with `qtn_string_free`. `out_all_pass`
/// receives 1 when every identity passed, 0 otherwise.
///
/// # Safety
/// `alg` must be a live handle from this library; `out_json` must point
/// to a writable pointer; `out_all_pass` to a writable int.
#[no_mangle]
pub unsafe extern "C" fn qtn_algebra_run_suite(
    alg: *const QtnAlgebra,
    samples: u64,
    seed: u64,
    tol: f64,
    out_json: *mut *mut c_char,
    out_all_pass: *mut i32,
) -> i32 {
    if alg.is_null() || out_json.is_null() || out_all_pass.is_null() {
        return QTN_NULL_POINTER;
    }
    if samples < 1 || !tol.is_finite() || tol <= 0.0 {
        return QTN_INVALID_ARGUMENT;
    }
    let reports = match &(*alg).inner {
        AnyAlgebra::Matrix(m) => run_suite(m, samples, seed, tol),
        AnyAlgebra::Poisson(p) => run_suite(p, samples, seed, tol),
        AnyAlgebra::Composed(c) => run_suite(c, samples, seed, tol),
    };
    let all_pass = reports.iter().all(|r| r.passed());
    let json = serde_json::to_string(&reports).expect("reports serialize");
    let c = CString::new(json).expect("JSON has no interior NUL");
    *out_json = c.into_raw();
    *out_all_pass = all_pass as i32;
    QTN_OK
}

/// Releases a handle. NULL is a no-op.
///
/// # Safety
/// `alg` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtn_algebra_free(alg: *mut QtnAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
