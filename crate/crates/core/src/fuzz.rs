//! Round-trip fuzzing: random word -> matrix -> decomposition -> verify.
//!
//! Words are drawn sequentially from one seeded stream, so a run is fully
//! determined by `(seed, iterations, max_len)`. Decompositions run in
//! parallel; the statistics are merged with an order-independent reduce.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::decomposer::{decompose, random_word, step_bound, verify};
use crate::error::{Error, Result};
use crate::hermitian::Matrix4;
use crate::words::Word;

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub iterations: usize,
    pub seed: u64,
    pub max_len: usize,
}

#[derive(Clone, Debug)]
pub struct FuzzFailure {
    pub index: usize,
    pub word: Word,
    pub matrix: Matrix4,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct FuzzStats {
    pub iterations: u64,
    pub verified: u64,
    pub reduction_steps: u64,
    pub max_steps: u64,
    /// Largest `steps - step_bound(n0)`; must stay `<= 0`.
    pub worst_bound_slack: i64,
    pub max_word_len: usize,
    /// Largest `|g41|^2` met at the start of any reduction step.
    pub max_norm: BigInt,
    /// Counts of `floor(10 * n_after / n_before)` over all steps.
    pub ratio_histogram: [u64; 10],
    pub max_i1: BigRational,
    pub max_abs_e_plus_k: BigRational,
    /// Number of steps with `36 n_after > 31 n_before`.
    pub contraction_violations: u64,
    /// The failure with the smallest index, if any.
    pub first_failure: Option<FuzzFailure>,
}

impl FuzzStats {
    pub fn all_verified(&self) -> bool {
        self.verified == self.iterations && self.first_failure.is_none()
    }

    fn merge(mut self, other: FuzzStats) -> FuzzStats {
        self.iterations += other.iterations;
        self.verified += other.verified;
        self.reduction_steps += other.reduction_steps;
        self.max_steps = self.max_steps.max(other.max_steps);
        self.worst_bound_slack = self.worst_bound_slack.max(other.worst_bound_slack);
        self.max_word_len = self.max_word_len.max(other.max_word_len);
        self.max_norm = self.max_norm.max(other.max_norm);
        for (a, b) in self.ratio_histogram.iter_mut().zip(other.ratio_histogram) {
            *a += b;
        }
        self.max_i1 = self.max_i1.max(other.max_i1);
        self.max_abs_e_plus_k = self.max_abs_e_plus_k.max(other.max_abs_e_plus_k);
        self.contraction_violations += other.contraction_violations;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if a.index <= b.index { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

fn run_case(index: usize, word: Word) -> FuzzStats {
    let mut stats = FuzzStats {
        iterations: 1,
        worst_bound_slack: i64::MIN,
        ..FuzzStats::default()
    };
    let g = word.evaluate();
    let fail = |stats: &mut FuzzStats, reason: String| {
        stats.first_failure = Some(FuzzFailure {
            index,
            word: word.clone(),
            matrix: g.matrix().clone(),
            reason,
        });
    };
    let d = match decompose(&g) {
        Ok(d) => d,
        Err(e) => {
            fail(&mut stats, e.to_string());
            return stats;
        }
    };
    let steps = &d.trace.steps;
    let bound = step_bound(&g.g41().norm());
    stats.reduction_steps = steps.len() as u64;
    stats.max_steps = steps.len() as u64;
    stats.worst_bound_slack = steps.len() as i64 - bound as i64;
    stats.max_word_len = d.result.word.len();
    for s in steps {
        stats.max_norm = stats.max_norm.clone().max(s.n_before.clone());
        if !s.contracts() {
            stats.contraction_violations += 1;
        }
        let bucket = (BigInt::from(10) * &s.n_after / &s.n_before)
            .try_into()
            .unwrap_or(9usize)
            .min(9);
        stats.ratio_histogram[bucket] += 1;
        stats.max_i1 = stats.max_i1.clone().max(s.i1.clone());
        stats.max_abs_e_plus_k = stats.max_abs_e_plus_k.clone().max(s.e_plus_k.abs());
    }
    if steps.len() as u64 > bound {
        fail(&mut stats, format!("{} steps exceed the bound {bound}", steps.len()));
    } else if !verify(&g, &d.result) {
        fail(&mut stats, "decomposition does not re-evaluate to the input".into());
    } else {
        stats.verified = 1;
    }
    stats
}

pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzStats> {
    if config.iterations == 0 {
        return Err(Error::Domain("iterations must be at least 1".into()));
    }
    if config.max_len == 0 {
        return Err(Error::Domain("max_len must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let words: Vec<Word> = (0..config.iterations)
        .map(|_| random_word(&mut rng, config.max_len))
        .collect();
    let stats = words
        .into_par_iter()
        .enumerate()
        .map(|(i, w)| run_case(i, w))
        .reduce(
            || FuzzStats {
                worst_bound_slack: i64::MIN,
                ..FuzzStats::default()
            },
            FuzzStats::merge,
        );
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_verifies() {
        let cfg = FuzzConfig {
            iterations: 30,
            seed: 3,
            max_len: 12,
        };
        let stats = run_fuzz(&cfg).unwrap();
        assert_eq!(stats.iterations, 30);
        assert!(stats.all_verified(), "{:?}", stats.first_failure);
        assert!(stats.worst_bound_slack <= 0);
        assert_eq!(stats.contraction_violations, 0);
        assert_eq!(stats.ratio_histogram.iter().sum::<u64>(), stats.reduction_steps);
        assert_eq!(stats.ratio_histogram[9], 0);
    }

    #[test]
    fn deterministic_in_seed() {
        let cfg = FuzzConfig {
            iterations: 10,
            seed: 11,
            max_len: 8,
        };
        let a = run_fuzz(&cfg).unwrap();
        let b = run_fuzz(&cfg).unwrap();
        assert_eq!(a.reduction_steps, b.reduction_steps);
        assert_eq!(a.max_norm, b.max_norm);
        assert_eq!(a.ratio_histogram, b.ratio_histogram);
    }

    #[test]
    fn rejects_empty_runs() {
        let cfg = FuzzConfig {
            iterations: 0,
            seed: 0,
            max_len: 5,
        };
        assert!(run_fuzz(&cfg).is_err());
    }
}
