//! Seeded, parallel, reproducible identity verification.

use super::{check_jacobi, check_leibniz, check_petersen, Identity, QuantalAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of scoring one identity over a sample batch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub algebra: String,
    pub identity: Identity,
    pub samples: u64,
    pub seed: u64,
    pub tol: f64,
    pub max_residual: f64,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Scores every identity applicable to `alg` over `samples` seeded random
/// triples and reports the worst relative residual per identity.
///
/// Sample `k` draws its triple from a ChaCha stream seeded with `seed + k`,
/// so the result is a deterministic function of `(alg, samples, seed, tol)`
/// no matter how rayon schedules the batch; the per-identity fold is a max,
/// which is order-independent.
pub fn run_suite<A>(alg: &A, samples: u64, seed: u64, tol: f64) -> Vec<VerificationReport>
where
    A: QuantalAlgebra + Sync,
{
    let mut identities = vec![Identity::Jacobi, Identity::Leibniz, Identity::Petersen];
    identities.extend(alg.extra_identities());

    let maxima = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
            let f = alg.sample(&mut rng);
            let g = alg.sample(&mut rng);
            let h = alg.sample(&mut rng);
            identities
                .iter()
                .map(|identity| match identity {
                    Identity::Jacobi => check_jacobi(alg, &f, &g, &h),
                    Identity::Leibniz => check_leibniz(alg, &f, &g, &h),
                    Identity::Petersen => check_petersen(alg, &f, &g, &h),
                    extra => alg.check_extra(*extra, &f, &g, &h),
                })
                .collect::<Vec<f64>>()
        })
        .reduce(
            || vec![0.0; identities.len()],
            |a, b| a.iter().zip(&b).map(|(x, y)| x.max(*y)).collect(),
        );

    identities
        .into_iter()
        .zip(maxima)
        .map(|(identity, max_residual)| VerificationReport {
            algebra: alg.id(),
            identity,
            samples,
            seed,
            tol,
            max_residual,
            verdict: if max_residual <= tol {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        })
        .collect()
}
