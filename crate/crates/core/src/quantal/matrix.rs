//! Matrix realizations: hermitian matrices (a = +1, elliptic) and real
//! symmetric matrices (a = -1, hyperbolic/split), plus the complex
//! structure and centralizer machinery that lives naturally here.

use super::{Identity, QuantalAlgebra, QuantalError};
use crate::tolerances::KERNEL_SVD_RTOL;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type CMat = DMatrix<Complex64>;

const fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Which element space and alpha normalization a matrix algebra uses.
///
/// * `Hermitian`: complex hermitian elements, `alpha = [f, g] / 2i`,
///   natural parameter +1.
/// * `RealSymmetric`: real symmetric elements inside the real matrix
///   algebra, `alpha = [f, g] / 2` (no `i` available), natural parameter -1.
///
/// Both share `sigma = (fg + gf) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFlavor {
    Hermitian,
    RealSymmetric,
}

impl MatrixFlavor {
    pub fn natural_a(&self) -> i8 {
        match self {
            MatrixFlavor::Hermitian => 1,
            MatrixFlavor::RealSymmetric => -1,
        }
    }

    fn prefix(&self) -> &'static str {
        match self {
            MatrixFlavor::Hermitian => "hermitian",
            MatrixFlavor::RealSymmetric => "realsym",
        }
    }
}

pub(crate) fn sigma_of(f: &CMat, g: &CMat) -> CMat {
    (f * g + g * f) * z(0.5, 0.)
}

pub(crate) fn alpha_of(flavor: MatrixFlavor, alpha_scale: f64, f: &CMat, g: &CMat) -> CMat {
    let comm = f * g - g * f;
    let factor = match flavor {
        // 1 / 2i = -i/2
        MatrixFlavor::Hermitian => z(0., -0.5),
        MatrixFlavor::RealSymmetric => z(0.5, 0.),
    };
    if alpha_scale == 1.0 {
        comm * factor
    } else {
        comm * (factor * alpha_scale)
    }
}

/// A quantal algebra of n-by-n matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    n: usize,
    flavor: MatrixFlavor,
    a: i8,
    alpha_scale: f64,
}

impl MatrixAlgebra {
    /// Hermitian n-by-n matrices with a = +1. Supported n: 2..=8.
    pub fn hermitian(n: usize) -> Result<Self, QuantalError> {
        Self::check_dim(n)?;
        Ok(Self {
            n,
            flavor: MatrixFlavor::Hermitian,
            a: 1,
            alpha_scale: 1.0,
        })
    }

    /// Real symmetric n-by-n matrices with a = -1. Supported n: 2..=8.
    pub fn real_symmetric(n: usize) -> Result<Self, QuantalError> {
        Self::check_dim(n)?;
        Ok(Self {
            n,
            flavor: MatrixFlavor::RealSymmetric,
            a: -1,
            alpha_scale: 1.0,
        })
    }

    /// The one-dimensional algebra (real scalars). Composing with it is the
    /// identity up to isomorphism, which makes it useful in tests.
    pub fn trivial(a: i8) -> Result<Self, QuantalError> {
        let flavor = match a {
            1 => MatrixFlavor::Hermitian,
            -1 => MatrixFlavor::RealSymmetric,
            other => return Err(QuantalError::InvalidParameterA(other)),
        };
        Ok(Self {
            n: 1,
            flavor,
            a,
            alpha_scale: 1.0,
        })
    }

    fn check_dim(n: usize) -> Result<(), QuantalError> {
        if !(2..=8).contains(&n) {
            return Err(QuantalError::DimensionOutOfRange(n));
        }
        Ok(())
    }

    /// Overrides the Petersen parameter without touching the products.
    /// Running a realization against the wrong `a` is the canonical
    /// mutation check: the suite must fail loudly.
    pub fn with_parameter_a(mut self, a: i8) -> Result<Self, QuantalError> {
        if !(-1..=1).contains(&a) {
            return Err(QuantalError::InvalidParameterA(a));
        }
        self.a = a;
        Ok(self)
    }

    /// Mis-scales alpha by the given factor; another mutation hook.
    pub fn with_alpha_scaled(mut self, factor: f64) -> Self {
        self.alpha_scale = factor;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> MatrixFlavor {
        self.flavor
    }

    pub(crate) fn alpha_scale(&self) -> f64 {
        self.alpha_scale
    }

    /// The recovered associative product `beta = sigma + i alpha`. Only the
    /// elliptic family admits it; on hermitian elements it coincides with
    /// the plain matrix product.
    pub fn beta_from(&self, f: &CMat, g: &CMat) -> Result<CMat, QuantalError> {
        if self.a != 1 {
            return Err(QuantalError::NotElliptic(self.a));
        }
        Ok(self.sigma(f, g) + self.alpha(f, g) * z(0., 1.))
    }
}

impl QuantalAlgebra for MatrixAlgebra {
    type Element = CMat;

    fn id(&self) -> String {
        format!("{}:{}", self.flavor.prefix(), self.n)
    }

    fn a(&self) -> i8 {
        self.a
    }

    fn unit(&self) -> CMat {
        CMat::identity(self.n, self.n)
    }

    fn sigma(&self, f: &CMat, g: &CMat) -> CMat {
        sigma_of(f, g)
    }

    fn alpha(&self, f: &CMat, g: &CMat) -> CMat {
        alpha_of(self.flavor, self.alpha_scale, f, g)
    }

    fn add(&self, f: &CMat, g: &CMat) -> CMat {
        f + g
    }

    fn sub(&self, f: &CMat, g: &CMat) -> CMat {
        f - g
    }

    fn scale(&self, f: &CMat, s: f64) -> CMat {
        f * z(s, 0.)
    }

    fn norm(&self, f: &CMat) -> f64 {
        f.norm()
    }

    /// Standard-normal raw matrix, then the symmetrizing projection for the
    /// flavor. Draw order is row-major and fixed; reproducibility of the
    /// suite depends on it.
    fn sample(&self, rng: &mut ChaCha8Rng) -> CMat {
        let n = self.n;
        let raw = match self.flavor {
            MatrixFlavor::Hermitian => CMat::from_fn(n, n, |_, _| {
                z(rng.sample(StandardNormal), rng.sample(StandardNormal))
            }),
            MatrixFlavor::RealSymmetric => {
                CMat::from_fn(n, n, |_, _| z(rng.sample(StandardNormal), 0.0))
            }
        };
        let mirrored = match self.flavor {
            MatrixFlavor::Hermitian => raw.adjoint(),
            MatrixFlavor::RealSymmetric => raw.transpose(),
        };
        (raw + mirrored) * z(0.5, 0.)
    }

    fn extra_identities(&self) -> Vec<Identity> {
        if self.a == 1 {
            vec![Identity::AssocBeta]
        } else {
            Vec::new()
        }
    }

    fn check_extra(&self, identity: Identity, f: &CMat, g: &CMat, h: &CMat) -> f64 {
        match identity {
            Identity::AssocBeta => {
                let fg = self
                    .beta_from(f, g)
                    .expect("a = +1 checked by extra_identities");
                let gh = self
                    .beta_from(g, h)
                    .expect("a = +1 checked by extra_identities");
                let res = self.beta_from(&fg, h).unwrap() - self.beta_from(f, &gh).unwrap();
                super::relative(self, &res, f, g, h)
            }
            _ => 0.0,
        }
    }
}

/// Residual of `J beta J = -e` for a complex-structure candidate `J` in the
/// ambient matrix algebra (beta is the plain matrix product there).
/// Returns the absolute Frobenius norm of `J J + I`.
pub fn jj_check(alg: &MatrixAlgebra, j: &CMat) -> f64 {
    (j * j + CMat::identity(alg.n(), alg.n())).norm()
}

/// Elements of `span(basis)` that alpha-commute with `J`: the kernel of
/// `f -> alpha(J, f)` restricted to the span.
///
/// The kernel is cut out by SVD: the coefficient matrix has one column per
/// basis element, and singular values at or below
/// `KERNEL_SVD_RTOL * sigma_max` count as zero. An all-zero map (J central)
/// returns the whole span.
pub fn centralizer(
    alg: &MatrixAlgebra,
    j: &CMat,
    basis: &[CMat],
) -> Result<Vec<CMat>, QuantalError> {
    let n = alg.n();
    if basis.is_empty() || basis.iter().any(|b| b.nrows() != n || b.ncols() != n) {
        return Err(QuantalError::BadBasis);
    }
    let k = basis.len();
    let rows = (n * n).max(k); // pad so the thin SVD still carries all of V
    let mut m = CMat::zeros(rows, k);
    for (col, b) in basis.iter().enumerate() {
        let image = alg.alpha(j, b);
        for (row, value) in image.iter().enumerate() {
            m[(row, col)] = *value;
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("v requested");
    let sigma_max = svd.singular_values.max();
    let mut kernel = Vec::new();
    for (i, s) in svd.singular_values.iter().enumerate() {
        if *s <= KERNEL_SVD_RTOL * sigma_max {
            // Row i of V^H, conjugated back, is the i-th right singular
            // vector: a coefficient vector over the basis.
            let mut combo = CMat::zeros(n, n);
            for (j_col, b) in basis.iter().enumerate() {
                combo += b * v_t[(i, j_col)].conj();
            }
            kernel.push(combo);
        }
    }
    Ok(kernel)
}
