//! The parabolic realization (a = 0): real polynomial observables on a
//! one-degree-of-freedom phase space, sigma = pointwise product, alpha =
//! canonical Poisson bracket.
//!
//! Sampled coefficients are small integers and every operation (product,
//! derivative, bracket) keeps coefficients integral, so identity residuals
//! here are exactly 0.0, not merely small.

use super::{Identity, QuantalAlgebra, QuantalError};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A real-coefficient polynomial in the canonical pair `(x, p)`.
/// `coeffs[i][j]` multiplies `x^i p^j`. The grid is kept trimmed, so
/// structural equality is semantic equality.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyObservable {
    coeffs: Vec<Vec<f64>>,
}

impl PolyObservable {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_grid(vec![vec![c]])
    }

    /// The coordinate observable `x`.
    pub fn x() -> Self {
        Self::monomial(1, 0, 1.0)
    }

    /// The momentum observable `p`.
    pub fn p() -> Self {
        Self::monomial(0, 1, 1.0)
    }

    /// `c * x^i p^j`.
    pub fn monomial(i: usize, j: usize, c: f64) -> Self {
        let mut grid = vec![vec![0.0; j + 1]; i + 1];
        grid[i][j] = c;
        Self::from_grid(grid)
    }

    pub fn from_grid(coeffs: Vec<Vec<f64>>) -> Self {
        let mut s = Self { coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last() == Some(&0.0) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(|r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.is_empty())
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let mut best = None;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c != 0.0 {
                    best = Some(best.map_or(i + j, |b: usize| b.max(i + j)));
                }
            }
        }
        best
    }

    fn coeff(&self, i: usize, j: usize) -> f64 {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .copied()
            .unwrap_or(0.0)
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = (0..rows)
            .map(|i| {
                self.coeffs
                    .get(i)
                    .map_or(0, |r| r.len())
                    .max(other.coeffs.get(i).map_or(0, |r| r.len()))
            })
            .collect::<Vec<_>>();
        let grid = (0..rows)
            .map(|i| {
                (0..cols[i])
                    .map(|j| self.coeff(i, j) + sign * other.coeff(i, j))
                    .collect()
            })
            .collect();
        Self::from_grid(grid)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_grid(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|c| c * s).collect())
                .collect(),
        )
    }

    /// Polynomial product; degrees add, nothing is truncated.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let rows = self.coeffs.len() + other.coeffs.len() - 1;
        let cols = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(0)
            + other.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut grid = vec![vec![0.0; cols]; rows];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if *c1 == 0.0 {
                    continue;
                }
                for (i2, r2) in other.coeffs.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        grid[i1 + i2][j1 + j2] += c1 * c2;
                    }
                }
            }
        }
        Self::from_grid(grid)
    }

    pub fn d_dx(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_grid(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, row)| row.iter().map(|c| c * (i + 1) as f64).collect())
                .collect(),
        )
    }

    pub fn d_dp(&self) -> Self {
        Self::from_grid(
            self.coeffs
                .iter()
                .map(|row| {
                    if row.len() <= 1 {
                        Vec::new()
                    } else {
                        row[1..]
                            .iter()
                            .enumerate()
                            .map(|(j, c)| c * (j + 1) as f64)
                            .collect()
                    }
                })
                .collect(),
        )
    }

    /// Canonical bracket `{f, g} = df/dx dg/dp - df/dp dg/dx`.
    pub fn poisson_bracket(&self, other: &Self) -> Self {
        self.d_dx()
            .mul(&other.d_dp())
            .sub(&self.d_dp().mul(&other.d_dx()))
    }

    /// l2 norm of the coefficient grid. Folds from +0.0 rather than
    /// `sum()`: the empty f64 sum is -0.0, whose sqrt is -0.0, and the
    /// zero polynomial's trimmed grid is empty.
    pub fn norm(&self) -> f64 {
        self.coeffs
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0, |acc, c| acc + c * c)
            .sqrt()
    }
}

/// Polynomial observables of total degree at most `degree`, with the
/// canonical bracket. `a = 0`: the sigma product is associative outright.
#[derive(Clone, Debug)]
pub struct PoissonAlgebra {
    degree: usize,
    a: i8,
}

impl PoissonAlgebra {
    /// Supported degree caps: 2..=8. The cap applies to sampled elements;
    /// products formed during identity checks may exceed it freely.
    pub fn new(degree: usize) -> Result<Self, QuantalError> {
        if !(2..=8).contains(&degree) {
            return Err(QuantalError::DegreeOutOfRange(degree));
        }
        Ok(Self { degree, a: 0 })
    }

    /// Mutation hook: score the Petersen identity against a foreign `a`.
    pub fn with_parameter_a(mut self, a: i8) -> Result<Self, QuantalError> {
        if !(-1..=1).contains(&a) {
            return Err(QuantalError::InvalidParameterA(a));
        }
        self.a = a;
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl QuantalAlgebra for PoissonAlgebra {
    type Element = PolyObservable;

    fn id(&self) -> String {
        format!("poisson:{}", self.degree)
    }

    fn a(&self) -> i8 {
        self.a
    }

    fn unit(&self) -> PolyObservable {
        PolyObservable::constant(1.0)
    }

    fn sigma(&self, f: &PolyObservable, g: &PolyObservable) -> PolyObservable {
        f.mul(g)
    }

    fn alpha(&self, f: &PolyObservable, g: &PolyObservable) -> PolyObservable {
        f.poisson_bracket(g)
    }

    fn add(&self, f: &PolyObservable, g: &PolyObservable) -> PolyObservable {
        f.add(g)
    }

    fn sub(&self, f: &PolyObservable, g: &PolyObservable) -> PolyObservable {
        f.sub(g)
    }

    fn scale(&self, f: &PolyObservable, s: f64) -> PolyObservable {
        f.scale(s)
    }

    fn norm(&self, f: &PolyObservable) -> f64 {
        f.norm()
    }

    /// Integer coefficients in [-3, 3] on all monomials up to the degree
    /// cap, drawn in a fixed (row-major) order. Integer coefficients keep
    /// every downstream operation exact in f64.
    fn sample(&self, rng: &mut ChaCha8Rng) -> PolyObservable {
        let d = self.degree;
        let grid = (0..=d)
            .map(|i| {
                (0..=(d - i))
                    .map(|_| rng.gen_range(-3..=3) as f64)
                    .collect()
            })
            .collect();
        PolyObservable::from_grid(grid)
    }

    fn extra_identities(&self) -> Vec<Identity> {
        Vec::new()
    }
}
