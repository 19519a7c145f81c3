//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! Variables are the coordinate functions `x*_{i,j}` (keyed by [`Pos`]) and
//! the auxiliary parameter `a`, kept as a separate exponent.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::Pos;
use crate::Error;

/// `a^a_pow · Π vars` with `vars` sorted (repetition allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub vars: Vec<Pos>,
    pub a_pow: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new(), a_pow: 0 }
    }

    pub fn var(p: Pos) -> Self {
        Monomial { vars: vec![p], a_pow: 0 }
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        vars.extend_from_slice(&self.vars);
        vars.extend_from_slice(&other.vars);
        vars.sort_unstable();
        Monomial { vars, a_pow: self.a_pow + other.a_pow }
    }

    pub fn is_multilinear(&self) -> bool {
        self.vars.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = SparsePolynomial::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(p: Pos) -> Self {
        let mut out = SparsePolynomial::zero();
        out.add_term(Monomial::var(p), BigInt::one());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = SparsePolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> BTreeSet<Vec<Pos>> {
        self.terms.keys().map(|m| m.vars.clone()).collect()
    }

    pub fn variables(&self) -> BTreeSet<Pos> {
        self.terms.keys().flat_map(|m| m.vars.iter().copied()).collect()
    }

    pub fn min_a_pow(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.a_pow).min()
    }

    pub fn max_a_pow(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.a_pow).max()
    }

    /// Total degree in the `x*` variables, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Coefficient of `a^k`, a polynomial without `a`.
    pub fn a_coefficient(&self, k: u32) -> SparsePolynomial {
        SparsePolynomial::from_terms(self.terms.iter().filter(|(m, _)| m.a_pow == k).map(|(m, c)| {
            (Monomial { vars: m.vars.clone(), a_pow: 0 }, c.clone())
        }))
    }

    pub fn neg(&self) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Renames every variable `(i, j)` to `(i + off, j + off)`.
    pub fn shift(&self, off: usize) -> SparsePolynomial {
        SparsePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let vars = m.vars.iter().map(|&(i, j)| (i + off, j + off)).collect();
                    (Monomial { vars, a_pow: m.a_pow }, c.clone())
                })
                .collect(),
        }
    }

    /// Sign so that the lexicographically least monomial is positive.
    pub fn normalize_sign(&self) -> SparsePolynomial {
        match self.terms.values().next() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Drops every monomial containing a variable of `zeroed`.
    pub fn set_zero(&self, zeroed: &BTreeSet<Pos>) -> SparsePolynomial {
        SparsePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.vars.iter().any(|v| zeroed.contains(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Partial evaluation; unassigned variables (and `a`) stay symbolic.
    pub fn substitute(&self, assignment: &HashMap<Pos, BigInt>) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for v in &m.vars {
                match assignment.get(v) {
                    Some(x) => coeff *= x,
                    None => rest.push(*v),
                }
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term(Monomial { vars: rest, a_pow: m.a_pow }, coeff);
        }
        out
    }

    /// Full evaluation at `a = a_value`; every variable must be assigned.
    pub fn evaluate(&self, assignment: &HashMap<Pos, BigInt>, a_value: &BigInt) -> Result<BigInt, Error> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c * a_value.pow(m.a_pow);
            for v in &m.vars {
                let x = assignment
                    .get(v)
                    .ok_or_else(|| Error::InvalidInput(format!("no value for variable x{:?}", v)))?;
                t *= x;
            }
            total += t;
        }
        Ok(total)
    }

    /// `Some((sign, var))` if the polynomial is `±x_var`.
    pub fn as_signed_variable(&self) -> Option<(i8, Pos)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.a_pow != 0 || m.vars.len() != 1 || c.abs() != BigInt::one() {
            return None;
        }
        Some((if c.is_positive() { 1 } else { -1 }, m.vars[0]))
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
                vars: m.vars.iter().map(|&(i, j)| [i, j]).collect(),
                a_pow: m.a_pow,
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson]) -> Result<Self, Error> {
        let mut p = SparsePolynomial::zero();
        for t in terms {
            let c: BigInt = match &t.coeff {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::InvalidInput(format!("bad coefficient {n}")))?,
                serde_json::Value::String(s) => {
                    s.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient {s:?}")))?
                }
                v => return Err(Error::InvalidInput(format!("bad coefficient {v}"))),
            };
            let mut vars: Vec<Pos> = t.vars.iter().map(|v| (v[0], v[1])).collect();
            vars.sort_unstable();
            p.add_term(Monomial { vars, a_pow: t.a_pow }, c);
        }
        Ok(p)
    }
}

/// Serialized term `{coeff, vars: [[i, j], …], aPow}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TermJson {
    pub coeff: serde_json::Value,
    pub vars: Vec<[usize; 2]>,
    pub a_pow: u32,
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (m.vars.is_empty() && m.a_pow == 0) {
                factors.push(mag.to_string());
            }
            match m.a_pow {
                0 => {}
                1 => factors.push("a".into()),
                p => factors.push(format!("a^{p}")),
            }
            factors.extend(m.vars.iter().map(|&(i, j)| format!("x{i},{j}")));
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
