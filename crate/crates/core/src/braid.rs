//! Braid words on Artin generators: parsing, free reduction, permutation
//! image, exponent sum, and seeded random sampling.
//!
//! A word is a sequence of nonzero signed integers; letter `g` stands for
//! the generator with index `|g|`, inverted when `g < 0`. Words act on
//! representations by the left-to-right product of generator matrices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    InvalidStrandCount,
    #[error("letter at position {0} is zero")]
    ZeroLetter(usize),
    #[error("letter {letter} out of range for {n} strands (expected |letter| <= {})", n - 1)]
    OutOfRange { letter: i32, n: usize },
    #[error("malformed token `{0}`")]
    MalformedToken(String),
}

/// A word in the Artin generators of the braid group on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if n < 1 {
            return Err(BraidError::InvalidStrandCount);
        }
        for (pos, &g) in letters.iter().enumerate() {
            if g == 0 {
                return Err(BraidError::ZeroLetter(pos));
            }
            if g.unsigned_abs() as usize > n.saturating_sub(1) {
                return Err(BraidError::OutOfRange { letter: g, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Parse whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
    pub fn parse(text: &str, n: usize) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let g: i32 = token
                .parse()
                .map_err(|_| BraidError::MalformedToken(token.to_string()))?;
            letters.push(g);
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Delete adjacent inverse pairs until none remain. Free reduction is
    /// confluent, so the result does not depend on deletion order.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if stack.last() == Some(&-g) {
                stack.pop();
            } else {
                stack.push(g);
            }
        }
        BraidWord {
            n: self.n,
            letters: stack,
        }
    }

    /// Image under the quotient map to the symmetric group: the composition
    /// of the transpositions `(|g|, |g|+1)` in word order.
    pub fn permutation_image(&self) -> Permutation {
        let mut image: Vec<usize> = (1..=self.n).collect();
        for &g in &self.letters {
            let k = g.unsigned_abs() as usize;
            for v in image.iter_mut() {
                if *v == k {
                    *v = k + 1;
                } else if *v == k + 1 {
                    *v = k;
                }
            }
        }
        Permutation(image)
    }

    /// Sum of letter signs (the abelianization of the braid group).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A permutation of `{1..n}`; entry `k-1` is the image of strand `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Image of strand `s` (1-based).
    pub fn image(&self, s: usize) -> usize {
        self.0[s - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Sample `length` uniform letters and freely reduce. Generator state is
/// caller-owned, so seed splitting stays deterministic.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, length: usize) -> BraidWord {
    if n < 2 {
        return BraidWord {
            n: n.max(1),
            letters: Vec::new(),
        };
    }
    let mut letters = Vec::with_capacity(length);
    for _ in 0..length {
        let k = rng.gen_range(1..n) as i32;
        let g = if rng.gen_bool(0.5) { k } else { -k };
        letters.push(g);
    }
    BraidWord { n, letters }.free_reduce()
}

/// Deterministic random word for a fixed seed.
pub fn random_word_seeded(n: usize, length: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word(&mut rng, n, length)
}
