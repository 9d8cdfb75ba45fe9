//! One-sided Monte Carlo test: the splitting field of `g` cannot embed in
//! `Q(3^inf)` if some reduction of `g` has an irreducible factor whose degree
//! does not divide 6.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::ntheory::{primes_in, reduce_mod};
use crate::arith::{ArithError, PolyQ};

pub const FILTER_PRIME_RANGE: (u64, u64) = (1_000, 100_000);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum FilterVerdict {
    /// Certain: the factorization mod `prime` has a factor of this degree.
    RuledOut { prime: u64, degree: usize },
    /// No obstruction at the sampled primes; not a proof.
    Plausible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    #[serde(flatten)]
    pub verdict: FilterVerdict,
    pub trials: usize,
    pub seed: u64,
    pub primes: Vec<u64>,
}

fn prime_pool() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| primes_in(FILTER_PRIME_RANGE.0, FILTER_PRIME_RANGE.1))
}

/// Samples `trials` primes uniformly from the pool, skipping primes dividing
/// the leading coefficient or where the squarefree part of `g` stops being
/// squarefree.
pub fn mc_s3_filter(g: &PolyQ, trials: usize, seed: u64) -> Result<FilterReport, ArithError> {
    if g.is_zero() {
        return Err(ArithError::ZeroInput("polynomial"));
    }
    let f = g.squarefree()?.primitive_z();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = prime_pool();
    let mut primes = Vec::new();
    let mut verdict = FilterVerdict::Plausible;
    if f.deg() == 0 {
        return Ok(FilterReport { verdict, trials: 0, seed, primes });
    }
    while primes.len() < trials {
        let p = pool[rng.gen_range(0..pool.len())];
        if reduce_mod(&f.lc(), p) == 0 {
            continue;
        }
        let fp = f.reduce_mod_p(p);
        if !fp.is_squarefree() {
            continue;
        }
        primes.push(p);
        if let Some((d, _)) = fp.ddf_degrees().into_iter().find(|(d, _)| 6 % d != 0) {
            verdict = FilterVerdict::RuledOut { prime: p, degree: d };
            break;
        }
    }
    Ok(FilterReport { verdict, trials: primes.len(), seed, primes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let r = mc_s3_filter(&PolyQ::from_ints(&[-2, 0, 0, 0, 0, 0, 0, 1]), 30, 1).unwrap();
        assert!(matches!(r.verdict, FilterVerdict::RuledOut { degree: 7, .. }));
        for g in [PolyQ::from_ints(&[-2, 0, 1]), PolyQ::from_ints(&[-2, 0, 0, 1])] {
            let r = mc_s3_filter(&g, 30, 1).unwrap();
            assert_eq!((r.verdict, r.trials), (FilterVerdict::Plausible, 30));
        }
        assert!(mc_s3_filter(&PolyQ::zero(), 3, 1).is_err());
    }

    #[test]
    fn deterministic_for_seed() {
        let g = PolyQ::from_ints(&[1, 1, 0, 0, 1]);
        assert_eq!(mc_s3_filter(&g, 10, 7).unwrap(), mc_s3_filter(&g, 10, 7).unwrap());
    }
}
