//! Tensor composition of matrix realizations.
//!
//! On product elements the composed products are defined by
//!
//! ```text
//! sigma_T(f1 (x) f2, g1 (x) g2) = sigma1 (x) sigma2 - a * alpha1 (x) alpha2
//! alpha_T(f1 (x) f2, g1 (x) g2) = alpha1 (x) sigma2 + sigma1 (x) alpha2
//! ```
//!
//! extended bilinearly over sums. For matrix realizations this extension
//! coincides with the flat sigma/alpha of the Kronecker matrix algebra,
//! which is exactly why composition closes with the same parameter `a`:
//! two systems with matching `a` assemble into one system of the same kind.
//! Elements here carry both the explicit Kronecker matrix (on which the
//! flat products act) and, when known, the list of factor pairs, so the
//! suite can score the two routes against each other (`closure`).

use super::matrix::{alpha_of, sigma_of, CMat, MatrixAlgebra};
use super::{Identity, QuantalAlgebra, QuantalError};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// An element of a composed algebra: an explicit (n1 n2)-square matrix,
/// plus its decomposition into Kronecker products when one is known.
/// Sampled elements and units always carry factors; elements produced by
/// sigma/alpha do not (`factors` empty means "decomposition not tracked").
#[derive(Clone, Debug)]
pub struct ComposedElement {
    pub matrix: CMat,
    pub factors: Vec<(CMat, CMat)>,
}

impl ComposedElement {
    pub fn from_factors(factors: Vec<(CMat, CMat)>) -> Self {
        let matrix = factors
            .iter()
            .map(|(l, r)| l.kronecker(r))
            .reduce(|acc, m| acc + m)
            .expect("at least one factor pair");
        Self { matrix, factors }
    }

    fn opaque(matrix: CMat) -> Self {
        Self {
            matrix,
            factors: Vec::new(),
        }
    }
}

/// The tensor composition of two matrix algebras.
#[derive(Clone, Debug)]
pub struct ComposedAlgebra {
    left: MatrixAlgebra,
    right: MatrixAlgebra,
}

/// Composes two matrix realizations. They must agree on the parameter `a`
/// (and hence on flavor): the tensor rule mixes alpha1 with alpha2 through
/// `a`, and there is no consistent choice across families.
pub fn compose(
    left: &MatrixAlgebra,
    right: &MatrixAlgebra,
) -> Result<ComposedAlgebra, QuantalError> {
    if left.a() != right.a() {
        return Err(QuantalError::MismatchedA(left.a(), right.a()));
    }
    if left.flavor() != right.flavor() {
        return Err(QuantalError::MismatchedFlavor);
    }
    Ok(ComposedAlgebra {
        left: left.clone(),
        right: right.clone(),
    })
}

impl ComposedAlgebra {
    pub fn left(&self) -> &MatrixAlgebra {
        &self.left
    }

    pub fn right(&self) -> &MatrixAlgebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.left.n() * self.right.n()
    }

    /// Builds `f1 (x) f2` with its factorization attached.
    pub fn product_element(&self, f1: &CMat, f2: &CMat) -> ComposedElement {
        ComposedElement::from_factors(vec![(f1.clone(), f2.clone())])
    }

    /// The composed products computed by the tensor rule over tracked
    /// factorizations. Returns None when either decomposition is unknown.
    pub fn tensor_rule(&self, f: &ComposedElement, g: &ComposedElement) -> Option<(CMat, CMat)> {
        if f.factors.is_empty() || g.factors.is_empty() {
            return None;
        }
        let d = self.dim();
        let a = z(self.left.a() as f64, 0.);
        let mut sigma_t = CMat::zeros(d, d);
        let mut alpha_t = CMat::zeros(d, d);
        for (f1, f2) in &f.factors {
            for (g1, g2) in &g.factors {
                let s1 = self.left.sigma(f1, g1);
                let s2 = self.right.sigma(f2, g2);
                let a1 = self.left.alpha(f1, g1);
                let a2 = self.right.alpha(f2, g2);
                sigma_t += s1.kronecker(&s2) - a1.kronecker(&a2) * a;
                alpha_t += a1.kronecker(&s2) + s1.kronecker(&a2);
            }
        }
        Some((sigma_t, alpha_t))
    }
}

impl QuantalAlgebra for ComposedAlgebra {
    type Element = ComposedElement;

    fn id(&self) -> String {
        format!("{}(x){}", self.left.id(), self.right.id())
    }

    fn a(&self) -> i8 {
        self.left.a()
    }

    fn unit(&self) -> ComposedElement {
        ComposedElement::from_factors(vec![(self.left.unit(), self.right.unit())])
    }

    fn sigma(&self, f: &ComposedElement, g: &ComposedElement) -> ComposedElement {
        ComposedElement::opaque(sigma_of(&f.matrix, &g.matrix))
    }

    fn alpha(&self, f: &ComposedElement, g: &ComposedElement) -> ComposedElement {
        ComposedElement::opaque(alpha_of(
            self.left.flavor(),
            self.left.alpha_scale(),
            &f.matrix,
            &g.matrix,
        ))
    }

    fn add(&self, f: &ComposedElement, g: &ComposedElement) -> ComposedElement {
        // A sum of Kronecker sums is again one; keep the decomposition.
        if !f.factors.is_empty() && !g.factors.is_empty() {
            let mut factors = f.factors.clone();
            factors.extend(g.factors.iter().cloned());
            ComposedElement {
                matrix: &f.matrix + &g.matrix,
                factors,
            }
        } else {
            ComposedElement::opaque(&f.matrix + &g.matrix)
        }
    }

    fn sub(&self, f: &ComposedElement, g: &ComposedElement) -> ComposedElement {
        self.add(f, &self.scale(g, -1.0))
    }

    fn scale(&self, f: &ComposedElement, s: f64) -> ComposedElement {
        ComposedElement {
            matrix: &f.matrix * z(s, 0.),
            factors: f
                .factors
                .iter()
                .map(|(l, r)| (l * z(s, 0.), r.clone()))
                .collect(),
        }
    }

    fn norm(&self, f: &ComposedElement) -> f64 {
        f.matrix.norm()
    }

    /// A sum of 1..=3 product elements, factors sampled from the two sides.
    fn sample(&self, rng: &mut ChaCha8Rng) -> ComposedElement {
        let terms = rng.gen_range(1..=3);
        let factors = (0..terms)
            .map(|_| (self.left.sample(rng), self.right.sample(rng)))
            .collect();
        ComposedElement::from_factors(factors)
    }

    fn extra_identities(&self) -> Vec<Identity> {
        let mut ids = vec![Identity::Closure];
        if self.a() == 1 {
            ids.push(Identity::AssocBeta);
        }
        ids
    }

    fn check_extra(
        &self,
        identity: Identity,
        f: &ComposedElement,
        g: &ComposedElement,
        h: &ComposedElement,
    ) -> f64 {
        match identity {
            // The composability statement itself: tensor-rule products on
            // the tracked factorizations agree with the flat products of
            // the Kronecker matrix algebra.
            Identity::Closure => {
                let Some((sigma_t, alpha_t)) = self.tensor_rule(f, g) else {
                    return 0.0;
                };
                let flat_sigma = self.sigma(f, g);
                let flat_alpha = self.alpha(f, g);
                let scale = self.norm(f) * self.norm(g);
                let res = (sigma_t - flat_sigma.matrix)
                    .norm()
                    .max((alpha_t - flat_alpha.matrix).norm());
                if scale > 0.0 {
                    res / scale
                } else {
                    res
                }
            }
            Identity::AssocBeta => {
                let beta = |x: &ComposedElement, y: &ComposedElement| {
                    ComposedElement::opaque(
                        self.sigma(x, y).matrix + self.alpha(x, y).matrix * z(0., 1.),
                    )
                };
                let res = ComposedElement::opaque(
                    beta(&beta(f, g), h).matrix - beta(f, &beta(g, h)).matrix,
                );
                super::relative(self, &res, f, g, h)
            }
            _ => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantal::{check_jacobi, check_leibniz, check_petersen};
    use rand::SeedableRng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn mismatched_operands_are_rejected() {
        let h = MatrixAlgebra::hermitian(2).unwrap();
        let s = MatrixAlgebra::real_symmetric(2).unwrap();
        assert!(matches!(
            compose(&h, &s),
            Err(QuantalError::MismatchedA(1, -1))
        ));
        let h_mut = MatrixAlgebra::hermitian(2)
            .unwrap()
            .with_parameter_a(-1)
            .unwrap();
        assert!(matches!(
            compose(&h_mut, &s),
            Err(QuantalError::MismatchedFlavor)
        ));
    }

    #[test]
    fn tensor_rule_agrees_with_flat_products_on_product_pairs() {
        for (l, r) in [
            (
                MatrixAlgebra::hermitian(2).unwrap(),
                MatrixAlgebra::hermitian(2).unwrap(),
            ),
            (
                MatrixAlgebra::real_symmetric(2).unwrap(),
                MatrixAlgebra::real_symmetric(3).unwrap(),
            ),
        ] {
            let t = compose(&l, &r).unwrap();
            let mut rg = rng(23);
            for _ in 0..100 {
                let f = t.product_element(&l.sample(&mut rg), &r.sample(&mut rg));
                let g = t.product_element(&l.sample(&mut rg), &r.sample(&mut rg));
                let (sigma_t, alpha_t) = t.tensor_rule(&f, &g).unwrap();
                let scale = t.norm(&f) * t.norm(&g);
                assert!((sigma_t - t.sigma(&f, &g).matrix).norm() <= 1e-12 * scale);
                assert!((alpha_t - t.alpha(&f, &g).matrix).norm() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn identities_close_on_sums_of_products() {
        let h = MatrixAlgebra::hermitian(2).unwrap();
        let t = compose(&h, &h).unwrap();
        let mut rg = rng(29);
        for _ in 0..50 {
            let f = t.sample(&mut rg);
            let g = t.sample(&mut rg);
            let k = t.sample(&mut rg);
            assert!(check_jacobi(&t, &f, &g, &k) <= 1e-10);
            assert!(check_leibniz(&t, &f, &g, &k) <= 1e-10);
            assert!(check_petersen(&t, &f, &g, &k) <= 1e-10);
            assert!(t.check_extra(Identity::Closure, &f, &g, &k) <= 1e-12);
        }
    }

    #[test]
    fn composing_with_the_trivial_algebra_is_the_identity() {
        let h = MatrixAlgebra::hermitian(2).unwrap();
        let one = MatrixAlgebra::trivial(1).unwrap();
        let t = compose(&h, &one).unwrap();
        let mut rg = rng(31);
        let f = h.sample(&mut rg);
        let g = h.sample(&mut rg);
        let unit_r = one.unit();
        let fe = t.product_element(&f, &unit_r);
        let ge = t.product_element(&g, &unit_r);
        // sigma_T(f (x) 1, g (x) 1) = sigma(f, g) (x) 1, both routes.
        let (sigma_t, _) = t.tensor_rule(&fe, &ge).unwrap();
        let expected = h.sigma(&f, &g); // 1x1 right factor: kron is a no-op
        assert!((&sigma_t - &expected).norm() <= 1e-14 * expected.norm());
        assert!((t.sigma(&fe, &ge).matrix - expected).norm() <= 1e-14);
    }

    #[test]
    fn sampled_elements_have_consistent_factorizations() {
        let h = MatrixAlgebra::hermitian(2).unwrap();
        let t = compose(&h, &h).unwrap();
        let mut rg = rng(37);
        for _ in 0..20 {
            let f = t.sample(&mut rg);
            assert!(!f.factors.is_empty() && f.factors.len() <= 3);
            let rebuilt = f
                .factors
                .iter()
                .map(|(l, r)| l.kronecker(r))
                .reduce(|a, b| a + b)
                .unwrap();
            assert_eq!(rebuilt, f.matrix);
        }
    }
}
