//! Randomized faithfulness probe: sample braid words, keep those certified
//! nontrivial by permutation image or exponent sum, and evaluate them at an
//! exact rational point. A numeric identity hit is escalated to the full
//! symbolic evaluation before it may count as a true collision.

use braidrep::braid::{self, BraidWord};
use braidrep::lk::{self, LkError};
use braidrep::ring::RationalPoint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub struct ProbeConfig {
    pub n: usize,
    pub trials: usize,
    pub max_len: usize,
    pub seed: u64,
    pub q_text: String,
    pub t_text: String,
    pub point: RationalPoint,
}

#[derive(Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub trials: usize,
    pub max_len: usize,
    pub seed: u64,
    pub q: String,
    pub t: String,
    pub filtered: usize,
    pub numeric_hits: usize,
    pub true_collisions: usize,
}

/// Words with identity permutation image and zero exponent sum are
/// discarded rather than asserted nontrivial.
pub fn is_nontrivial(word: &BraidWord) -> bool {
    !word.permutation_image().is_identity() || word.exponent_sum() != 0
}

pub fn run(config: &ProbeConfig) -> Result<ProbeReport, LkError> {
    if config.n < 2 {
        return Err(LkError::StrandCount(config.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut filtered = 0usize;
    let mut numeric_hits = 0usize;
    let mut true_collisions = 0usize;
    for _ in 0..config.trials {
        if config.max_len == 0 {
            break;
        }
        let length = rng.gen_range(1..=config.max_len);
        let word = braid::random_word(&mut rng, config.n, length);
        if !is_nontrivial(&word) {
            continue;
        }
        filtered += 1;
        if lk::evaluate_numeric(&word, &config.point)?.is_identity() {
            numeric_hits += 1;
            if lk::evaluate(&word)?.is_identity() {
                true_collisions += 1;
                eprintln!("true collision: {word}");
            } else {
                eprintln!("numeric collision dismissed symbolically: {word}");
            }
        }
    }
    Ok(ProbeReport {
        n: config.n,
        trials: config.trials,
        max_len: config.max_len,
        seed: config.seed,
        q: config.q_text.clone(),
        t: config.t_text.clone(),
        filtered,
        numeric_hits,
        true_collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;

    #[test]
    fn balanced_trivial_word_is_filtered_out() {
        let word = BraidWord::new(3, vec![1, -1]).unwrap();
        assert!(!is_nontrivial(&word));
    }

    #[test]
    fn permutation_or_exponent_sum_certifies() {
        let swap = BraidWord::new(3, vec![1]).unwrap();
        assert!(is_nontrivial(&swap));
        // Full twist generator square: identity permutation, exponent sum 2.
        let square = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(square.permutation_image().is_identity());
        assert!(is_nontrivial(&square));
    }

    #[test]
    fn zero_trials_gives_empty_report() {
        let point = RationalPoint::new([
            ("q", BigRational::new(3.into(), 5.into())),
            ("t", BigRational::new(7.into(), 11.into())),
        ])
        .unwrap();
        let config = ProbeConfig {
            n: 3,
            trials: 0,
            max_len: 12,
            seed: 1,
            q_text: "3/5".into(),
            t_text: "7/11".into(),
            point,
        };
        let report = run(&config).unwrap();
        assert_eq!(report.filtered, 0);
        assert_eq!(report.numeric_hits, 0);
        assert_eq!(report.true_collisions, 0);
    }

    #[test]
    fn small_probe_finds_no_collisions() {
        let point = RationalPoint::new([
            ("q", BigRational::new(3.into(), 5.into())),
            ("t", BigRational::new(7.into(), 11.into())),
        ])
        .unwrap();
        let config = ProbeConfig {
            n: 4,
            trials: 100,
            max_len: 8,
            seed: 42,
            q_text: "3/5".into(),
            t_text: "7/11".into(),
            point,
        };
        let report = run(&config).unwrap();
        assert!(report.filtered > 80);
        assert_eq!(report.true_collisions, 0);
    }
}
