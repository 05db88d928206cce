//! The left regular action of quantions on two-component state doublets,
//! and the conserved current attached to a quantionic wavefunction value.
//!
//! A quantion `q` acts on a 4-component column (a stacked pair of 2-spinors)
//! through the block-diagonal matrix `diag(A, A)` with `A` the 2x2 matrix of
//! `q`. Left action on kets commutes with right action on bras because
//! matrix multiplication is associative; that commutation is the
//! representation-theoretic face of the associativity of beta.

use crate::four_vector::FourVector;
use crate::quantion::{Quantion, QuantionError};
use crate::tolerances::NULL_DIVISOR_EPS;
use nalgebra::{Matrix4, RowVector4, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type Mat4 = Matrix4<Complex64>;

const fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A quantionic state: four complex components, column layout.
///
/// Serializes as eight numbers, the real and imaginary parts of the
/// components in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 8]", try_from = "[f64; 8]")]
pub struct QuantionicState(pub Vector4<Complex64>);

impl From<QuantionicState> for [f64; 8] {
    fn from(s: QuantionicState) -> Self {
        let v = &s.0;
        [
            v[0].re, v[0].im, v[1].re, v[1].im, v[2].re, v[2].im, v[3].re, v[3].im,
        ]
    }
}

impl TryFrom<[f64; 8]> for QuantionicState {
    type Error = QuantionError;
    fn try_from(c: [f64; 8]) -> Result<Self, QuantionError> {
        if !c.iter().all(|x| x.is_finite()) {
            return Err(QuantionError::NonFinite);
        }
        Ok(QuantionicState(Vector4::new(
            z(c[0], c[1]),
            z(c[2], c[3]),
            z(c[4], c[5]),
            z(c[6], c[7]),
        )))
    }
}

/// A bra (row) state acted on from the right.
#[derive(Clone, Debug, PartialEq)]
pub struct BraState(pub RowVector4<Complex64>);

/// The left regular representation of a quantion: `diag(A, A)` acting on
/// stacked doublets. Faithful (`||L(q)|| = sqrt(2) ||q||`) and a
/// homomorphism: `L(p beta q) = L(p) L(q)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LeftQuantion {
    block: Quantion,
}

/// Builds the left action of `q`.
pub fn left_rep(q: &Quantion) -> LeftQuantion {
    LeftQuantion { block: *q }
}

impl LeftQuantion {
    pub fn quantion(&self) -> &Quantion {
        &self.block
    }

    /// Materializes the 4x4 matrix. The off-diagonal blocks are exact
    /// zeros; both diagonal blocks are the matrix of the quantion.
    pub fn matrix(&self) -> Mat4 {
        let q = &self.block;
        let o = z(0., 0.);
        Mat4::new(
            q.a, q.c, o, o, //
            q.b, q.d, o, o, //
            o, o, q.a, q.c, //
            o, o, q.b, q.d,
        )
    }
}

/// Ket action: `psi -> L(q) psi`.
pub fn act_left(q: &LeftQuantion, psi: &QuantionicState) -> QuantionicState {
    QuantionicState(q.matrix() * psi.0)
}

/// Bra action: `phi -> phi L(q)`. Composing right actions follows the
/// product: `act_right(act_right(phi, p), q) = act_right(phi, p beta q)`.
pub fn act_right(phi: &BraState, q: &Quantion) -> BraState {
    BraState(phi.0 * left_rep(q).matrix())
}

/// Causal class of a Zovko current. Spacelike or past-pointing currents
/// cannot occur; the type has no variants for them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CausalClass {
    TimelikeFuture,
    NullFuture,
    Zero,
}

impl CausalClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CausalClass::TimelikeFuture => "timelike_future",
            CausalClass::NullFuture => "null_future",
            CausalClass::Zero => "zero",
        }
    }
}

/// The current carried by a quantionic wavefunction value:
/// `j = q* beta q` read as a four-vector.
///
/// `j` is always future-pointing or zero, with `(j, j) = |M(q)|^2 >= 0`;
/// the classification reuses the relative null cutoff of `inverse`, so `q`
/// is invertible exactly when its current is timelike.
pub fn zovko_current(q: &Quantion) -> (FourVector, CausalClass) {
    let j = q.alg_norm();
    let scale = q.frobenius_norm();
    let class = if scale == 0.0 {
        CausalClass::Zero
    } else if q.met_norm().norm() <= NULL_DIVISOR_EPS * scale * scale {
        CausalClass::NullFuture
    } else {
        CausalClass::TimelikeFuture
    };
    debug_assert!(j.p0 >= 0.0, "Zovko current points backward: {j:?}");
    (j, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::null_tetrad;
    use crate::tolerances::REP_TOL;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_quantion(rng: &mut ChaCha8Rng) -> Quantion {
        let v: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        Quantion::try_from(v).unwrap()
    }

    #[test]
    fn unit_maps_to_the_identity() {
        assert_eq!(left_rep(&Quantion::OMEGA).matrix(), Mat4::identity());
    }

    #[test]
    fn representation_is_a_homomorphism() {
        let t = null_tetrad();
        let lhs = left_rep(&t.l).matrix() * left_rep(&t.m).matrix();
        assert_eq!(lhs, left_rep(&t.m).matrix()); // l beta m = m
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let p = random_quantion(&mut rng);
            let q = random_quantion(&mut rng);
            let prod = left_rep(&p.beta_mul(&q)).matrix();
            let composed = left_rep(&p).matrix() * left_rep(&q).matrix();
            let scale = p.frobenius_norm() * q.frobenius_norm();
            assert!((prod - composed).norm() <= REP_TOL * scale.max(1.0));
        }
    }

    #[test]
    fn representation_is_faithful() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..100 {
            let q = random_quantion(&mut rng);
            let m = left_rep(&q).matrix();
            assert!((m.norm() - 2f64.sqrt() * q.frobenius_norm()).abs() <= 1e-12);
        }
    }

    #[test]
    fn left_action_respects_the_block_structure() {
        let t = null_tetrad();
        let psi = QuantionicState::try_from([0., 0., 0., 0., 1., 0., 0., 0.]).unwrap();
        let out = act_left(&left_rep(&t.l), &psi);
        assert_eq!(out, psi); // l fixes the upper component of each doublet
    }

    #[test]
    fn right_action_composes_along_the_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..200 {
            let p = random_quantion(&mut rng);
            let q = random_quantion(&mut rng);
            let phi = BraState(RowVector4::from_fn(|_, _| {
                z(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
            }));
            let stepwise = act_right(&act_right(&phi, &p), &q);
            let direct = act_right(&phi, &p.beta_mul(&q));
            let scale = phi.0.norm() * p.frobenius_norm() * q.frobenius_norm();
            assert!((stepwise.0 - direct.0).norm() <= REP_TOL * scale.max(1.0));
        }
    }

    #[test]
    fn left_and_right_actions_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..200 {
            let p = random_quantion(&mut rng);
            let q = random_quantion(&mut rng);
            let x = Mat4::from_fn(|_, _| z(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)));
            let lhs = (left_rep(&p).matrix() * x) * left_rep(&q).matrix();
            let rhs = left_rep(&p).matrix() * (x * left_rep(&q).matrix());
            let scale = p.frobenius_norm() * x.norm() * q.frobenius_norm();
            assert!((lhs - rhs).norm() <= REP_TOL * scale.max(1.0));
        }
    }

    #[test]
    fn current_of_named_elements() {
        let (j, class) = zovko_current(&Quantion::OMEGA);
        assert_eq!(j, FourVector::new(1., 0., 0., 0.));
        assert_eq!(class, CausalClass::TimelikeFuture);

        let m = null_tetrad().m;
        let (j, class) = zovko_current(&m);
        assert_eq!(j, FourVector::new(0.5, 0., 0., -0.5));
        assert_eq!(class, CausalClass::NullFuture);

        let (j, class) = zovko_current(&Quantion::ZERO);
        assert_eq!(j, FourVector::ZERO);
        assert_eq!(class, CausalClass::Zero);
    }

    #[test]
    fn current_is_never_spacelike_or_past() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for _ in 0..2000 {
            let q = random_quantion(&mut rng);
            let (j, _) = zovko_current(&q);
            assert!(j.p0 >= 0.0);
            let scale = q.frobenius_norm().powi(4).max(1.0);
            assert!(j.norm_sq() >= -1e-10 * scale);
        }
    }

    #[test]
    fn state_serialization_interleaves_re_im() {
        let psi = QuantionicState::try_from([1., 2., 3., 4., 5., 6., 7., 8.]).unwrap();
        assert_eq!(
            serde_json::to_string(&psi).unwrap(),
            "[1.0,2.0,3.0,4.0,5.0,6.0,7.0,8.0]"
        );
        assert!(QuantionicState::try_from([f64::INFINITY, 0., 0., 0., 0., 0., 0., 0.]).is_err());
    }
}
