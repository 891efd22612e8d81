//! Multivariate polynomials with integer coefficients, and exact normal
//! forms modulo the determinant relation `a*d - b*c - 1`.

mod parse;
mod quotient;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use quotient::{equals_mod_ideal, normal_form, QuotientContext, QuotientRing, DEFAULT_TERM_LIMIT};

use crate::error::AlgebraError;
use crate::ring::Ring;

/// Exponent vector indexed by the ambient variable list.
///
/// The derived ordering is lexicographic with the first variable largest,
/// which is the term order used throughout.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// A polynomial in `ℤ[vars]`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            let one = Monomial::one(p.vars.len());
            p.terms.insert(one, c);
        }
        p
    }

    pub fn var(vars: Arc<[String]>, name: &str) -> Result<Self, AlgebraError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut mono = Monomial::one(vars.len());
        mono.0[idx] = 1;
        Ok(Self::from_terms(vars, [(mono, BigInt::one())]))
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), p.vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(vars: Arc<[String]>, text: &str) -> Result<Self, AlgebraError> {
        parse::parse_poly(vars, text)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under the lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The integer value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    /// Product; fails once the result would exceed `limit` terms.
    pub fn mul_guarded(&self, other: &Self, limit: usize) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
            if out.terms.len() > limit {
                return Err(AlgebraError::ResourceGuard {
                    terms: out.terms.len(),
                    limit,
                });
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul_guarded(other, DEFAULT_TERM_LIMIT)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::constant(self.vars.clone(), 1);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluate in any ring at a point given in variable order.
    pub fn eval<R: Ring>(&self, ring: &R, point: &[R::Elem]) -> Result<R::Elem, AlgebraError> {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_bigint(c);
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = ring.mul(&t, x)?;
                }
            }
            acc = ring.add(&acc, &t);
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in decreasing order, e.g. `3*a^2*d - b*c + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (name, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
