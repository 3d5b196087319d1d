//! Dense square matrices over a Laurent polynomial ring, plus exact rational
//! matrices for numeric specialization.
//!
//! Column `c` of a `RingMatrix` holds the coefficients of the image of basis
//! vector `c`. Inversion runs Gauss-Jordan elimination over the fraction
//! field of the ring and then clears every entry back to a Laurent
//! polynomial by exact division; a matrix is invertible over the ring iff
//! that clearing succeeds.

use crate::ring::{LaurentPoly, RationalPoint, RingError, Vars};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is singular over the fraction field")]
    Singular,
    #[error("inverse entry at ({row},{col}) does not clear to a Laurent polynomial")]
    NotClearable { row: usize, col: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Square matrix over a Laurent polynomial ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    dim: usize,
    vars: Vars,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn zero(dim: usize, vars: &Vars) -> Self {
        RingMatrix {
            dim,
            vars: vars.clone(),
            entries: vec![LaurentPoly::zero(vars); dim * dim],
        }
    }

    pub fn identity(dim: usize, vars: &Vars) -> Self {
        let mut m = Self::zero(dim, vars);
        for i in 0..dim {
            m.set(i, i, LaurentPoly::one(vars));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        assert_eq!(value.vars(), &self.vars, "entry from a different ring");
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.vars, other.vars, "ring mismatch");
        let mut out = Self::zero(self.dim, &self.vars);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).try_add(&a.try_mul(b).expect("same ring"));
                    out.set(i, j, cur.expect("same ring"));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.entries[i] = out.entries[i]
                .try_add(&other.entries[i])
                .expect("same ring");
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for i in 0..self.dim * self.dim {
            out.entries[i] = out.entries[i]
                .try_sub(&other.entries[i])
                .expect("same ring");
        }
        out
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.try_mul(factor).expect("same ring");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.dim, &self.vars)
    }

    /// First entry where the two matrices differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        for r in 0..self.dim {
            for c in 0..self.dim {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Entrywise evaluation at an exact rational point.
    pub fn eval(&self, pt: &RationalPoint) -> Result<RationalMatrix, RingError> {
        let mut out = RationalMatrix::zero(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, self.get(r, c).eval(pt)?);
            }
        }
        Ok(out)
    }

    /// Exact inverse over the ring.
    ///
    /// Gauss-Jordan elimination over the fraction field, pivots chosen by
    /// fewest numerator terms; afterwards every entry must clear to a
    /// Laurent polynomial (exact division), otherwise the matrix is not
    /// invertible over the ring and `NotClearable` is returned.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.dim;
        let mut left: Vec<Frac> = self
            .entries
            .iter()
            .map(|p| Frac::from_poly(p.clone()))
            .collect();
        let mut right: Vec<Frac> = Self::identity(n, &self.vars)
            .entries
            .iter()
            .map(|p| Frac::from_poly(p.clone()))
            .collect();
        let idx = |r: usize, c: usize| r * n + c;

        for col in 0..n {
            let pivot_row = (col..n)
                .filter(|&r| !left[idx(r, col)].is_zero())
                .min_by_key(|&r| left[idx(r, col)].num.num_terms())
                .ok_or(MatrixError::Singular)?;
            if pivot_row != col {
                for c in 0..n {
                    left.swap(idx(pivot_row, c), idx(col, c));
                    right.swap(idx(pivot_row, c), idx(col, c));
                }
            }
            let pivot_inv = left[idx(col, col)].inverse().ok_or(MatrixError::Singular)?;
            for c in 0..n {
                left[idx(col, c)] = left[idx(col, c)].mul(&pivot_inv);
                right[idx(col, c)] = right[idx(col, c)].mul(&pivot_inv);
            }
            for r in 0..n {
                if r == col || left[idx(r, col)].is_zero() {
                    continue;
                }
                let factor = left[idx(r, col)].clone();
                for c in 0..n {
                    let l = left[idx(col, c)].mul(&factor);
                    left[idx(r, c)] = left[idx(r, c)].sub(&l);
                    let rr = right[idx(col, c)].mul(&factor);
                    right[idx(r, c)] = right[idx(r, c)].sub(&rr);
                }
            }
        }

        let mut out = Self::zero(n, &self.vars);
        for r in 0..n {
            for c in 0..n {
                let entry = right[idx(r, c)]
                    .to_poly()
                    .ok_or(MatrixError::NotClearable { row: r, col: c })?;
                out.set(r, c, entry);
            }
        }
        Ok(out)
    }
}

/// Fraction of Laurent polynomials, normalized so the denominator has
/// minimum exponent zero in every variable, no common integer content with
/// the numerator, and positive leading sign.
#[derive(Debug, Clone)]
struct Frac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Frac {
    fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.vars());
        Frac { num: p, den: one }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(mut self) -> Self {
        let vars = self.num.vars().clone();
        if self.num.is_zero() {
            self.den = LaurentPoly::one(&vars);
            return self;
        }
        // Shift the denominator to minimum exponent 0 per variable.
        let nv = vars.len();
        let mut min_e = vec![i64::MAX; nv];
        for (e, _) in self.den.terms() {
            for (k, &x) in e.iter().enumerate() {
                min_e[k] = min_e[k].min(x);
            }
        }
        if min_e.iter().any(|&x| x != 0) {
            let shift: Vec<i64> = min_e.iter().map(|&x| -x).collect();
            let mono = LaurentPoly::monomial(&vars, 1, shift).expect("shift monomial");
            self.num = self.num.try_mul(&mono).expect("same ring");
            self.den = self.den.try_mul(&mono).expect("same ring");
        }
        // Remove shared integer content.
        let content = |p: &LaurentPoly| -> BigInt {
            p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c))
        };
        let g = content(&self.num).gcd(&content(&self.den));
        if !g.is_one() {
            self.num = div_coeffs(&self.num, &g);
            self.den = div_coeffs(&self.den, &g);
        }
        // Positive sign on the denominator's first coefficient.
        if self
            .den
            .terms()
            .next()
            .is_some_and(|(_, c)| c.is_negative())
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        self
    }

    fn sub(&self, other: &Self) -> Self {
        let num = self.num.try_mul(&other.den).expect("same ring")
            - other.num.try_mul(&self.den).expect("same ring");
        let den = self.den.try_mul(&other.den).expect("same ring");
        Frac { num, den }.normalize()
    }

    fn mul(&self, other: &Self) -> Self {
        let num = self.num.try_mul(&other.num).expect("same ring");
        let den = self.den.try_mul(&other.den).expect("same ring");
        Frac { num, den }.normalize()
    }

    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(
            Frac {
                num: self.den.clone(),
                den: self.num.clone(),
            }
            .normalize(),
        )
    }

    /// Clears the fraction to a Laurent polynomial when the division is exact.
    fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        exact_div(&self.num, &self.den)
    }
}

fn div_coeffs(p: &LaurentPoly, g: &BigInt) -> LaurentPoly {
    let vars = p.vars().clone();
    let mut out = LaurentPoly::zero(&vars);
    for (e, c) in p.terms() {
        out = out + LaurentPoly::monomial(&vars, c / g, e.clone()).expect("same exponent length");
    }
    out
}

fn leading_term(p: &LaurentPoly) -> (Vec<i64>, BigInt) {
    let (e, c) = p.terms().next_back().expect("nonzero polynomial");
    (e.clone(), c.clone())
}

/// Exact division of Laurent polynomials over the integers. Returns the
/// quotient when `den` divides `num` exactly, `None` otherwise.
///
/// Leading-term reduction in lexicographic exponent order; a division that
/// is exact finishes in one step per quotient term. The iteration cap bounds
/// runaway reduction on inexact inputs, and the final product check makes
/// the result sound regardless.
pub(crate) fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!den.is_zero(), "division by zero polynomial");
    let vars = num.vars().clone();
    if num.is_zero() {
        return Some(LaurentPoly::zero(&vars));
    }
    let (de, dc) = leading_term(den);
    let mut remainder = num.clone();
    let mut quotient = LaurentPoly::zero(&vars);
    let mut steps = 0usize;
    while !remainder.is_zero() {
        steps += 1;
        if steps > 10_000 {
            return None;
        }
        let (re, rc) = leading_term(&remainder);
        let (qc, rem) = rc.div_rem(&dc);
        if !rem.is_zero() {
            return None;
        }
        let qe: Vec<i64> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
        let term =
            LaurentPoly::monomial(&vars, qc.clone(), qe.clone()).expect("same exponent length");
        remainder = remainder - term.try_mul(den).expect("same ring");
        quotient.add_term(qe, qc);
    }
    if quotient.try_mul(den).expect("same ring") == *num {
        Some(quotient)
    } else {
        None
    }
}

/// Dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        RationalMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.dim)
    }

    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut b = Self::identity(n).entries;
        let idx = |r: usize, c: usize| r * n + c;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[idx(r, col)].is_zero())
                .ok_or(MatrixError::Singular)?;
            if pivot != col {
                for c in 0..n {
                    a.swap(idx(pivot, c), idx(col, c));
                    b.swap(idx(pivot, c), idx(col, c));
                }
            }
            let inv = a[idx(col, col)].recip();
            for c in 0..n {
                a[idx(col, c)] *= &inv;
                b[idx(col, c)] *= &inv;
            }
            for r in 0..n {
                if r == col || a[idx(r, col)].is_zero() {
                    continue;
                }
                let factor = a[idx(r, col)].clone();
                for c in 0..n {
                    let l = &a[idx(col, c)] * &factor;
                    a[idx(r, c)] -= l;
                    let rr = &b[idx(col, c)] * &factor;
                    b[idx(r, c)] -= rr;
                }
            }
        }
        Ok(RationalMatrix { dim: n, entries: b })
    }
}
