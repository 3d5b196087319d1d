//! The Lawrence-Krammer representation of the braid group.
//!
//! The module acts on the free module over `Z[q^{+-1}, t^{+-1}]` with basis
//! `v_{ij}`, `1 <= i < j <= n`, ordered lexicographically. Each Artin
//! generator maps a basis vector through exactly one of five rules:
//!
//! * `v_{i,i+1}        -> t q^2 v_{i,i+1}`
//! * `v_{jk}           -> v_{jk}`                      (indices disjoint from `{i,i+1}`)
//! * `v_{i+1,j}        -> v_{ij}` and `v_{j,i+1} -> v_{j,i}`
//! * `v_{ij} (i+1 < j) -> t q(q-1) v_{i,i+1} + (1-q) v_{ij} + q v_{i+1,j}`
//! * `v_{ji} (j < i)   -> (1-q) v_{ji} + q v_{j,i+1} + q(q-1) v_{i,i+1}`

use crate::braid::BraidWord;
use crate::matrix::{MatrixError, RationalMatrix};
use crate::ring::{LaurentPoly, RationalPoint, RingError, Vars};
use crate::RelationCheck;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

pub use crate::matrix::RingMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LkError {
    #[error("need at least 2 strands, got {0}")]
    StrandCount(usize),
    #[error("generator index {i} out of range for {n} strands")]
    GeneratorIndex { i: usize, n: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Ordered pair of strand labels `1 <= i < j <= n` labeling a basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j, "pair index must satisfy 1 <= i < j");
        PairIndex { i, j }
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// All pairs `(i,j)` with `1 <= i < j <= n`, lexicographic; the position in
/// this list is the basis row/column index.
pub fn basis(n: usize) -> Vec<PairIndex> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(PairIndex::new(i, j));
        }
    }
    out
}

/// Position of `(i,j)` in the lexicographic basis order.
pub fn basis_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

/// The coefficient ring `Z[q^{+-1}, t^{+-1}]`.
pub fn lk_vars() -> Vars {
    Vars::new(["q", "t"])
}

fn check_range(n: usize, i: usize) -> Result<(), LkError> {
    if n < 2 {
        return Err(LkError::StrandCount(n));
    }
    if i < 1 || i > n - 1 {
        return Err(LkError::GeneratorIndex { i, n });
    }
    Ok(())
}

/// Matrix of the generator with index `i` acting on the `v` basis.
pub fn generator(n: usize, i: usize) -> Result<RingMatrix, LkError> {
    check_range(n, i)?;
    let vars = lk_vars();
    let one = LaurentPoly::one(&vars);
    let q = LaurentPoly::var(&vars, "q")?;
    let t = LaurentPoly::var(&vars, "t")?;
    let bas = basis(n);
    let mut m = RingMatrix::zero(bas.len(), &vars);
    let idx = |r: usize, s: usize| basis_index(n, r, s);
    for (col, p) in bas.iter().enumerate() {
        let (a, b) = (p.i, p.j);
        if a == i && b == i + 1 {
            m.set(idx(i, i + 1), col, &t * &q.pow(2));
        } else if a != i && a != i + 1 && b != i && b != i + 1 {
            m.set(col, col, one.clone());
        } else if a == i + 1 {
            m.set(idx(i, b), col, one.clone());
        } else if b == i + 1 {
            m.set(idx(a, i), col, one.clone());
        } else if a == i {
            m.set(idx(i, i + 1), col, &(&t * &q) * &(&q - &one));
            m.set(idx(i, b), col, &one - &q);
            m.set(idx(i + 1, b), col, q.clone());
        } else {
            debug_assert_eq!(b, i);
            m.set(idx(a, i), col, &one - &q);
            m.set(idx(a, i + 1), col, q.clone());
            m.set(idx(i, i + 1), col, &q * &(&q - &one));
        }
    }
    Ok(m)
}

/// Exact inverse of a generator matrix.
///
/// Primary path is fraction-field elimination; if an entry fails to clear,
/// falls back to the annihilating-cubic formula (the generators satisfy
/// `(M - I)(M + qI)(M - tq^2 I) = 0`, whose constant term is a unit).
pub fn generator_inverse(n: usize, i: usize) -> Result<RingMatrix, LkError> {
    let m = generator(n, i)?;
    match m.inverse() {
        Ok(inv) => Ok(inv),
        Err(MatrixError::NotClearable { .. }) => Ok(inverse_by_cubic(&m)),
        Err(e) => Err(e.into()),
    }
}

/// `M^{-1} = e3^{-1} (M^2 - e1 M + e2 I)` from the annihilating cubic with
/// eigenvalues `1`, `-q`, `tq^2`.
pub fn inverse_by_cubic(m: &RingMatrix) -> RingMatrix {
    let vars = m.vars().clone();
    let one = LaurentPoly::one(&vars);
    let q = LaurentPoly::var(&vars, "q").expect("ring has q");
    let t = LaurentPoly::var(&vars, "t").expect("ring has t");
    let tq2 = &t * &q.pow(2);
    // Elementary symmetric functions of the eigenvalues.
    let e1 = &(&one - &q) + &tq2;
    let e2 = &(&q.neg() + &tq2) - &(&t * &q.pow(3));
    let e3 = (&t * &q.pow(3)).neg();
    let e3_inv = e3.unit_inverse().expect("tq^3 is a unit");
    let id = RingMatrix::identity(m.dim(), &vars);
    m.mul(m)
        .sub(&m.scale(&e1))
        .add(&id.scale(&e2))
        .scale(&e3_inv)
}

/// Left-to-right product of generator matrices over a braid word; the empty
/// word gives the identity.
pub fn evaluate(w: &BraidWord) -> Result<RingMatrix, LkError> {
    let n = w.n();
    if n < 2 {
        return Err(LkError::StrandCount(n));
    }
    let dim = n * (n - 1) / 2;
    let vars = lk_vars();
    let mut gens: Vec<Option<RingMatrix>> = vec![None; n];
    let mut invs: Vec<Option<RingMatrix>> = vec![None; n];
    let mut acc = RingMatrix::identity(dim, &vars);
    for &g in w.letters() {
        let k = g.unsigned_abs() as usize;
        let m = if g > 0 {
            if gens[k].is_none() {
                gens[k] = Some(generator(n, k)?);
            }
            gens[k].as_ref().unwrap()
        } else {
            if invs[k].is_none() {
                invs[k] = Some(generator_inverse(n, k)?);
            }
            invs[k].as_ref().unwrap()
        };
        acc = acc.mul(m);
    }
    Ok(acc)
}

/// Numeric evaluation at an exact rational point; equals the entrywise
/// evaluation of the symbolic product.
pub fn evaluate_numeric(w: &BraidWord, pt: &RationalPoint) -> Result<RationalMatrix, LkError> {
    let n = w.n();
    if n < 2 {
        return Err(LkError::StrandCount(n));
    }
    let dim = n * (n - 1) / 2;
    let mut gens: Vec<Option<RationalMatrix>> = vec![None; n];
    let mut invs: Vec<Option<RationalMatrix>> = vec![None; n];
    let mut acc = RationalMatrix::identity(dim);
    for &g in w.letters() {
        let k = g.unsigned_abs() as usize;
        let m = if g > 0 {
            if gens[k].is_none() {
                gens[k] = Some(generator(n, k)?.eval(pt)?);
            }
            gens[k].as_ref().unwrap()
        } else {
            if invs[k].is_none() {
                let num = match &gens[k] {
                    Some(m) => m.clone(),
                    None => generator(n, k)?.eval(pt)?,
                };
                invs[k] = Some(num.inverse()?);
            }
            invs[k].as_ref().unwrap()
        };
        acc = acc.mul(m);
    }
    Ok(acc)
}

/// Far-commutation and adjacent braid relations as exact matrix identities.
pub fn braid_relation_suite(n: usize) -> Result<Vec<RelationCheck>, LkError> {
    if n < 2 {
        return Err(LkError::StrandCount(n));
    }
    let gens: Vec<RingMatrix> = (1..n).map(|i| generator(n, i)).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    for i in 1..n {
        for j in (i + 2)..n {
            let lhs = gens[i - 1].mul(&gens[j - 1]);
            let rhs = gens[j - 1].mul(&gens[i - 1]);
            checks.push(RelationCheck::from_matrices(
                format!("far_commutation[i={i},j={j}]"),
                &lhs,
                &rhs,
            ));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let a = &gens[i - 1];
        let b = &gens[i];
        let lhs = a.mul(b).mul(a);
        let rhs = b.mul(a).mul(b);
        checks.push(RelationCheck::from_matrices(
            format!("adjacent_braid[i={i}]"),
            &lhs,
            &rhs,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;
    use num::BigInt;
    use proptest::prelude::*;

    fn poly(src: &[(i64, (i64, i64))]) -> LaurentPoly {
        // Terms as (coefficient, (q exponent, t exponent)).
        let vars = lk_vars();
        let mut p = LaurentPoly::zero(&vars);
        for &(c, (eq, et)) in src {
            p = p + LaurentPoly::monomial(&vars, c, vec![eq, et]).unwrap();
        }
        p
    }

    #[test]
    fn basis_order_and_index_agree() {
        for n in 2..=7 {
            let bas = basis(n);
            assert_eq!(bas.len(), n * (n - 1) / 2);
            for (pos, p) in bas.iter().enumerate() {
                assert_eq!(basis_index(n, p.i, p.j), pos);
            }
        }
    }

    #[test]
    fn two_strand_generator_is_scalar() {
        let m = generator(2, 1).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &poly(&[(1, (2, 1))]));
    }

    #[test]
    fn three_strand_generator_columns() {
        // Basis v12, v13, v23; images under the first generator.
        let m = generator(3, 1).unwrap();
        let tq2 = poly(&[(1, (2, 1))]);
        let tq_qm1 = poly(&[(1, (2, 1)), (-1, (1, 1))]); // t q (q - 1)
        let one_mq = poly(&[(1, (0, 0)), (-1, (1, 0))]); // 1 - q
        let q = poly(&[(1, (1, 0))]);
        let zero = LaurentPoly::zero(&lk_vars());
        let one = LaurentPoly::one(&lk_vars());

        // v12 -> t q^2 v12.
        assert_eq!(m.get(0, 0), &tq2);
        assert_eq!(m.get(1, 0), &zero);
        assert_eq!(m.get(2, 0), &zero);
        // v13 -> t q(q-1) v12 + (1-q) v13 + q v23.
        assert_eq!(m.get(0, 1), &tq_qm1);
        assert_eq!(m.get(1, 1), &one_mq);
        assert_eq!(m.get(2, 1), &q);
        // v23 -> v13.
        assert_eq!(m.get(0, 2), &zero);
        assert_eq!(m.get(1, 2), &one);
        assert_eq!(m.get(2, 2), &zero);
    }

    #[test]
    fn disjoint_indices_fixed() {
        let m = generator(4, 2).unwrap();
        let col = basis_index(4, 1, 4);
        for row in 0..m.dim() {
            let expected = if row == col {
                LaurentPoly::one(&lk_vars())
            } else {
                LaurentPoly::zero(&lk_vars())
            };
            assert_eq!(m.get(row, col), &expected);
        }
    }

    #[test]
    fn column_sparsity_at_most_three() {
        for n in 2..=6 {
            for i in 1..n {
                let m = generator(n, i).unwrap();
                for col in 0..m.dim() {
                    let nonzero = (0..m.dim()).filter(|&r| !m.get(r, col).is_zero()).count();
                    assert!(nonzero <= 3, "n={n} i={i} col={col}: {nonzero} entries");
                }
            }
        }
    }

    #[test]
    fn two_strand_inverse_is_scalar() {
        let inv = generator_inverse(2, 1).unwrap();
        assert_eq!(inv.get(0, 0), &poly(&[(1, (-2, -1))]));
    }

    #[test]
    fn inverse_contract_small() {
        for n in 2..=4 {
            for i in 1..n {
                let m = generator(n, i).unwrap();
                let inv = generator_inverse(n, i).unwrap();
                assert!(m.mul(&inv).is_identity(), "n={n} i={i}");
                assert!(inv.mul(&m).is_identity(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn cubic_formula_matches_elimination() {
        for n in 2..=4 {
            for i in 1..n {
                let m = generator(n, i).unwrap();
                assert_eq!(inverse_by_cubic(&m), m.inverse().unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn inverse_satisfies_inverted_cubic() {
        // Brute-force: the inverse has eigenvalue set {1, -q^-1, t^-1 q^-2},
        // so (W - I)(W + q^-1 I)(W - t^-1 q^-2 I) = 0 for W = M^{-1}.
        let vars = lk_vars();
        let w = generator_inverse(4, 3).unwrap();
        let id = RingMatrix::identity(w.dim(), &vars);
        let q_inv = LaurentPoly::monomial(&vars, 1, vec![-1, 0]).unwrap();
        let tq2_inv = LaurentPoly::monomial(&vars, 1, vec![-2, -1]).unwrap();
        let f1 = w.sub(&id);
        let f2 = w.add(&id.scale(&q_inv));
        let f3 = w.sub(&id.scale(&tq2_inv));
        assert!(f1.mul(&f2).mul(&f3).is_zero());
    }

    #[test]
    fn empty_word_evaluates_to_identity() {
        let w = BraidWord::new(3, vec![]).unwrap();
        assert!(evaluate(&w).unwrap().is_identity());
    }

    #[test]
    fn adjacent_braid_relation_words_agree() {
        let a = evaluate(&BraidWord::new(3, vec![1, 2, 1]).unwrap()).unwrap();
        let b = evaluate(&BraidWord::new(3, vec![2, 1, 2]).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn far_commutation_words_agree() {
        let a = evaluate(&BraidWord::new(4, vec![1, 3]).unwrap()).unwrap();
        let b = evaluate(&BraidWord::new(4, vec![3, 1]).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn relation_suite_passes() {
        for n in 3..=4 {
            for check in braid_relation_suite(n).unwrap() {
                assert!(check.pass, "n={n}: {}", check.name);
            }
        }
    }

    #[test]
    fn numeric_two_strand_example() {
        let w = BraidWord::new(2, vec![1]).unwrap();
        let pt = RationalPoint::new([
            ("q", BigRational::from_integer(BigInt::from(2))),
            ("t", BigRational::from_integer(BigInt::from(3))),
        ])
        .unwrap();
        let m = evaluate_numeric(&w, &pt).unwrap();
        assert_eq!(m.get(0, 0), &BigRational::from_integer(BigInt::from(12)));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(generator(1, 1), Err(LkError::StrandCount(1))));
        assert!(matches!(
            generator(3, 0),
            Err(LkError::GeneratorIndex { i: 0, n: 3 })
        ));
        assert!(matches!(
            generator(3, 3),
            Err(LkError::GeneratorIndex { i: 3, n: 3 })
        ));
    }

    fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(k, neg)| if neg { -k } else { k });
        proptest::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn numeric_evaluation_matches_symbolic(w in arb_word(4, 6)) {
            let pt = RationalPoint::new([
                ("q", BigRational::new(BigInt::from(3), BigInt::from(5))),
                ("t", BigRational::new(BigInt::from(7), BigInt::from(11))),
            ]).unwrap();
            let symbolic = evaluate(&w).unwrap().eval(&pt).unwrap();
            let numeric = evaluate_numeric(&w, &pt).unwrap();
            prop_assert_eq!(symbolic, numeric);
        }

        #[test]
        fn evaluation_respects_free_reduction(w in arb_word(4, 6)) {
            let reduced = w.free_reduce();
            prop_assert_eq!(evaluate(&w).unwrap(), evaluate(&reduced).unwrap());
        }
    }
}
