//! Exact Laurent polynomial arithmetic in named variables.
//!
//! `LaurentPoly` is a sparse multivariate Laurent polynomial with
//! arbitrary-precision integer coefficients: a map from exponent vectors
//! (one signed integer per variable) to nonzero `BigInt` coefficients.
//! The representation is canonical: no stored coefficient is zero, and two
//! polynomials over the same variable list are equal iff their term maps are
//! identical. Terms iterate in lexicographic exponent order, so formatting
//! is reproducible.
//!
//! `RationalPoint` assigns exact nonzero rationals to variables for fast
//! numeric specialization; evaluation at a point is a ring homomorphism.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Pow;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("variable lists differ: [{0}] vs [{1}]")]
    VarMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("target ring is missing variable `{0}`")]
    MissingTargetVariable(String),
    #[error("cannot raise a non-unit to the negative power {0}")]
    NonUnitPower(i64),
    #[error("no value assigned to variable `{0}`")]
    UnassignedVariable(String),
    #[error("zero value assigned to variable `{0}`")]
    ZeroAssignment(String),
    #[error("exponent vector has length {0}, expected {1}")]
    ExponentLength(usize, usize),
    #[error("malformed polynomial encoding: {0}")]
    Parse(String),
}

/// Ordered list of variable names defining a Laurent polynomial ring.
///
/// Cheap to clone; equality compares the name lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// One serialized term: exponent vector plus decimal coefficient string.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

/// Sparse multivariate Laurent polynomial with `BigInt` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant<C: Into<BigInt>>(vars: &Vars, c: C) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    /// The variable `name` as a polynomial (exponent 1).
    pub fn var(vars: &Vars, name: &str) -> Result<Self, RingError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, BigInt::one(), exps).expect("exponent length matches"))
    }

    /// A single term `c * x^exps`. Returns the zero polynomial when `c` is zero.
    pub fn monomial<C: Into<BigInt>>(vars: &Vars, c: C, exps: Vec<i64>) -> Result<Self, RingError> {
        if exps.len() != vars.len() {
            return Err(RingError::ExponentLength(exps.len(), vars.len()));
        }
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(vec![0i64; self.vars.len()].as_slice())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Self) -> Result<(), RingError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(RingError::VarMismatch(
                self.vars.to_string(),
                other.vars.to_string(),
            ))
        }
    }

    /// Canonical-form sum. Errors when the variable lists differ.
    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Canonical-form product. Errors when the variable lists differ.
    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.try_mul(self).expect("same ring");
        }
        out
    }

    /// `true` iff this is a single term with coefficient ±1, i.e. a unit of
    /// the integer Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    /// Exact inverse of a unit (single signed monomial); `None` otherwise.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv_e: Vec<i64> = e.iter().map(|x| -x).collect();
        Some(Self::monomial(&self.vars, c.clone(), inv_e).expect("exponent length matches"))
    }

    /// Integer power, negative exponents allowed for units only.
    pub fn pow_i64(&self, e: i64) -> Result<Self, RingError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            let inv = self.unit_inverse().ok_or(RingError::NonUnitPower(e))?;
            Ok(inv.pow((-e) as u32))
        }
    }

    /// Ring-homomorphic substitution of `value` for `var`; the result lives
    /// in `value`'s ring. Every other variable of `self` must exist there.
    /// When `var` occurs with a negative exponent, `value` must be a unit.
    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self, RingError> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| RingError::UnknownVariable(var.to_string()))?;
        let target = value.vars.clone();
        let mut var_map: Vec<Option<usize>> = Vec::with_capacity(self.vars.len());
        for (k, name) in self.vars.names().iter().enumerate() {
            if k == idx {
                var_map.push(None);
            } else {
                let t = target
                    .index_of(name)
                    .ok_or_else(|| RingError::MissingTargetVariable(name.clone()))?;
                var_map.push(Some(t));
            }
        }
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut mono = vec![0i64; target.len()];
            for (k, &exp) in e.iter().enumerate() {
                if let Some(t) = var_map[k] {
                    mono[t] += exp;
                }
            }
            let base = Self::monomial(&target, c.clone(), mono)?;
            let factor = value.pow_i64(e[idx])?;
            out = out.try_add(&base.try_mul(&factor)?)?;
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point. Every variable must be assigned.
    pub fn eval(&self, pt: &RationalPoint) -> Result<BigRational, RingError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let v = pt
                .get(name)
                .ok_or_else(|| RingError::UnassignedVariable(name.clone()))?;
            if v.is_zero() {
                return Err(RingError::ZeroAssignment(name.clone()));
            }
            values.push(v.clone());
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (k, &exp) in e.iter().enumerate() {
                if exp != 0 {
                    term *= Pow::pow(&values[k], exp as i32);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Terms as JSON-ready records, in canonical order.
    pub fn terms_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                e: e.clone(),
                c: c.to_string(),
            })
            .collect()
    }

    /// Order-stable JSON encoding: `{"vars":[...],"terms":[{"e":[...],"c":"..."}]}`.
    pub fn to_json(&self) -> String {
        let doc = PolyJson {
            vars: self.vars.names().to_vec(),
            terms: self.terms_json(),
        };
        serde_json::to_string(&doc).expect("polynomial serialization")
    }

    pub fn from_json(text: &str) -> Result<Self, RingError> {
        let doc: PolyJson =
            serde_json::from_str(text).map_err(|e| RingError::Parse(e.to_string()))?;
        let vars = Vars::new(doc.vars);
        let mut p = Self::zero(&vars);
        for t in doc.terms {
            if t.e.len() != vars.len() {
                return Err(RingError::ExponentLength(t.e.len(), vars.len()));
            }
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| RingError::Parse(format!("bad coefficient `{}`", t.c)))?;
            p.add_term(t.e, c);
        }
        Ok(p)
    }

    /// LaTeX rendering; `kappa` prints as `\kappa`.
    pub fn latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                let sym = if latex && name == "kappa" {
                    "\\kappa".to_string()
                } else {
                    name.clone()
                };
                if exp == 1 {
                    factors.push(sym);
                } else if latex {
                    factors.push(format!("{sym}^{{{exp}}}"));
                } else {
                    factors.push(format!("{sym}^{exp}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    if !latex {
                        out.push('*');
                    }
                }
                out.push_str(&factors.join(if latex { " " } else { "*" }));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("operands from the same ring")
            }
        }
        impl std::ops::$trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

/// Exact rational assignment to variables; every value is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoint {
    assignment: BTreeMap<String, BigRational>,
}

impl RationalPoint {
    pub fn new<S: Into<String>, I: IntoIterator<Item = (S, BigRational)>>(
        pairs: I,
    ) -> Result<Self, RingError> {
        let mut assignment = BTreeMap::new();
        for (name, value) in pairs {
            let name = name.into();
            if value.is_zero() {
                return Err(RingError::ZeroAssignment(name));
            }
            assignment.insert(name, value);
        }
        Ok(RationalPoint { assignment })
    }

    pub fn get(&self, name: &str) -> Option<&BigRational> {
        self.assignment.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BigRational)> {
        self.assignment.iter()
    }
}

/// Parse an exact rational from `p` or `p/q` notation.
pub fn parse_rational(text: &str) -> Result<BigRational, RingError> {
    text.trim()
        .parse::<BigRational>()
        .map_err(|e| RingError::Parse(format!("bad rational `{text}`: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qt() -> Vars {
        Vars::new(["q", "t"])
    }

    fn kt() -> Vars {
        Vars::new(["kappa", "t"])
    }

    fn q() -> LaurentPoly {
        LaurentPoly::var(&qt(), "q").unwrap()
    }

    fn t() -> LaurentPoly {
        LaurentPoly::var(&qt(), "t").unwrap()
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one(&qt())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_cancels_to_one() {
        let lhs = (one() - q()) + q();
        assert_eq!(lhs, one());
    }

    #[test]
    fn add_zero_identity() {
        assert_eq!(q() + LaurentPoly::zero(&qt()), q());
    }

    #[test]
    fn add_laurent_terms() {
        // (q^-1 + t) + (q^-1 - t) = 2 q^-1; cross-checked at q=2, t=3.
        let q_inv = q().unit_inverse().unwrap();
        let lhs = (&q_inv + &t()) + (&q_inv - &t());
        let expected = LaurentPoly::monomial(&qt(), 2, vec![-1, 0]).unwrap();
        assert_eq!(lhs, expected);
        let pt = RationalPoint::new([("q", rat(2, 1)), ("t", rat(3, 1))]).unwrap();
        assert_eq!(lhs.eval(&pt).unwrap(), rat(1, 1));
        assert_eq!(expected.eval(&pt).unwrap(), rat(1, 1));
    }

    #[test]
    fn mul_unit_inverse() {
        let lhs = q() * q().unit_inverse().unwrap();
        assert_eq!(lhs, one());
    }

    #[test]
    fn mul_difference_of_squares() {
        let lhs = (one() - q()) * (one() + q());
        let expected = one() - q().pow(2);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn substitute_into_product() {
        // kappa*(1-q) with q -> -kappa^-2 gives kappa + kappa^-1.
        let kq = Vars::new(["kappa", "q"]);
        let kappa = LaurentPoly::var(&kq, "kappa").unwrap();
        let qv = LaurentPoly::var(&kq, "q").unwrap();
        let p = &kappa * &(LaurentPoly::one(&kq) - qv);
        let kvars = Vars::new(["kappa"]);
        let value = LaurentPoly::monomial(&kvars, -1, vec![-2]).unwrap();
        let image = p.substitute("q", &value).unwrap();
        let expected = LaurentPoly::monomial(&kvars, 1, vec![1]).unwrap()
            + LaurentPoly::monomial(&kvars, 1, vec![-1]).unwrap();
        assert_eq!(image, expected);
        let pt = RationalPoint::new([("kappa", rat(2, 1))]).unwrap();
        assert_eq!(image.eval(&pt).unwrap(), rat(5, 2));
    }

    #[test]
    fn substitute_monomial_power() {
        // t q^2 with q -> -kappa^-2 gives t kappa^-4; checked at kappa=3, t=5.
        let p = t() * q().pow(2);
        let value = LaurentPoly::monomial(&kt(), -1, vec![-2, 0]).unwrap();
        let image = p.substitute("q", &value).unwrap();
        let expected = LaurentPoly::monomial(&kt(), 1, vec![-4, 1]).unwrap();
        assert_eq!(image, expected);
        let pt = RationalPoint::new([("kappa", rat(3, 1)), ("t", rat(5, 1))]).unwrap();
        assert_eq!(image.eval(&pt).unwrap(), rat(5, 81));
    }

    #[test]
    fn substitute_sign_flip() {
        let p = one() - q();
        let value = LaurentPoly::monomial(&kt(), -1, vec![-2, 0]).unwrap();
        let image = p.substitute("q", &value).unwrap();
        let expected =
            LaurentPoly::one(&kt()) + LaurentPoly::monomial(&kt(), 1, vec![-2, 0]).unwrap();
        assert_eq!(image, expected);
    }

    #[test]
    fn substitute_identity() {
        let p = t() * q().pow(2) - q() + one();
        assert_eq!(p.substitute("q", &q()).unwrap(), p);
    }

    #[test]
    fn substitute_non_unit_into_negative_power_fails() {
        let p = q().unit_inverse().unwrap();
        let value = LaurentPoly::one(&kt()) + LaurentPoly::var(&kt(), "kappa").unwrap();
        assert!(matches!(
            p.substitute("q", &value),
            Err(RingError::NonUnitPower(-1))
        ));
    }

    #[test]
    fn eval_unit_cancellation() {
        let p = q() * q().unit_inverse().unwrap();
        let pt = RationalPoint::new([("q", rat(7, 3)), ("t", rat(1, 2))]).unwrap();
        assert_eq!(p.eval(&pt).unwrap(), rat(1, 1));
    }

    #[test]
    fn eval_direct() {
        let p = t() * q().pow(2);
        let pt = RationalPoint::new([("q", rat(2, 1)), ("t", rat(3, 1))]).unwrap();
        assert_eq!(p.eval(&pt).unwrap(), rat(12, 1));
    }

    #[test]
    fn eval_kappa_plus_inverse() {
        let kvars = Vars::new(["kappa"]);
        let p = LaurentPoly::monomial(&kvars, 1, vec![1]).unwrap()
            + LaurentPoly::monomial(&kvars, 1, vec![-1]).unwrap();
        let pt = RationalPoint::new([("kappa", rat(2, 1))]).unwrap();
        assert_eq!(p.eval(&pt).unwrap(), rat(5, 2));
    }

    #[test]
    fn eval_unassigned_variable_fails() {
        let p = q();
        let pt = RationalPoint::new([("t", rat(2, 1))]).unwrap();
        assert!(matches!(
            p.eval(&pt),
            Err(RingError::UnassignedVariable(v)) if v == "q"
        ));
    }

    #[test]
    fn rational_point_rejects_zero() {
        assert!(matches!(
            RationalPoint::new([("q", rat(0, 1))]),
            Err(RingError::ZeroAssignment(v)) if v == "q"
        ));
    }

    #[test]
    fn var_mismatch_rejected() {
        let a = q();
        let b = LaurentPoly::var(&kt(), "t").unwrap();
        assert!(matches!(a.try_add(&b), Err(RingError::VarMismatch(_, _))));
        assert!(matches!(a.try_mul(&b), Err(RingError::VarMismatch(_, _))));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/5").unwrap(), rat(3, 5));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert!(parse_rational("x/y").is_err());
    }

    fn arb_poly(vars: Vars) -> impl Strategy<Value = LaurentPoly> {
        let nv = vars.len();
        proptest::collection::vec((proptest::collection::vec(-3i64..=3, nv), -9i64..=9), 0..6)
            .prop_map(move |terms| {
                let mut p = LaurentPoly::zero(&vars);
                for (e, c) in terms {
                    p.add_term(e, BigInt::from(c));
                }
                p
            })
    }

    fn arb_point() -> impl Strategy<Value = RationalPoint> {
        let nz = (1i64..=9, 1i64..=9, proptest::bool::ANY)
            .prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d));
        (nz.clone(), nz).prop_map(|(qv, tv)| RationalPoint::new([("q", qv), ("t", tv)]).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(qt()), b in arb_poly(qt()), c in arb_poly(qt())) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(qt()), b in arb_poly(qt()), pt in arb_point()) {
            let ab = (&a * &b).eval(&pt).unwrap();
            prop_assert_eq!(ab, a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
            let sum = (&a + &b).eval(&pt).unwrap();
            prop_assert_eq!(sum, a.eval(&pt).unwrap() + b.eval(&pt).unwrap());
        }

        #[test]
        fn eval_commutes_with_substitution(
            p in arb_poly(qt()),
            exp in -3i64..=3,
            neg in proptest::bool::ANY,
            kv in 1i64..=7,
            tv in 1i64..=7,
        ) {
            // Substitute q -> (+/-) kappa^exp, then evaluate; versus evaluating
            // with the composed assignment directly.
            let value = LaurentPoly::monomial(&kt(), if neg { -1 } else { 1 }, vec![exp, 0]).unwrap();
            let image = p.substitute("q", &value).unwrap();
            let pt = RationalPoint::new([("kappa", rat(kv, 1)), ("t", rat(tv, 2))]).unwrap();
            let q_val = value.eval(&pt).unwrap();
            let composed = RationalPoint::new([
                ("q".to_string(), q_val),
                ("t".to_string(), rat(tv, 2)),
            ]).unwrap();
            prop_assert_eq!(image.eval(&pt).unwrap(), p.eval(&composed).unwrap());
        }

        #[test]
        fn json_round_trip(p in arb_poly(qt())) {
            let back = LaurentPoly::from_json(&p.to_json()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
