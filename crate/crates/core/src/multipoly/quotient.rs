use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, MultiPoly};
use crate::error::AlgebraError;
use crate::ring::Ring;

/// Reductions and products abort once a polynomial exceeds this many terms.
pub const DEFAULT_TERM_LIMIT: usize = 1_000_000;

/// The ring `ℤ[vars] / (a*d - b*c - 1)` under lexicographic order.
///
/// The variable order must put `a` or `d` ahead of both `b` and `c`, so that
/// `a*d` is the leading monomial of the relation. A single monic generator
/// of a principal ideal is a Gröbner basis, hence normal forms are unique
/// and never need denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientContext {
    vars: Arc<[String]>,
    relation: MultiPoly,
    ia: usize,
    ib: usize,
    ic: usize,
    id: usize,
    term_limit: usize,
}

impl QuotientContext {
    /// Variables `a > b > c > d > f > l1 > … > l18`.
    pub fn standard() -> Self {
        let mut names: Vec<String> = ["a", "b", "c", "d", "f"].iter().map(|s| s.to_string()).collect();
        names.extend((1..=18).map(|k| format!("l{k}")));
        Self::with_variables(names).expect("standard variable order is valid")
    }

    pub fn with_variables<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let vars: Arc<[String]> = names.into_iter().map(Into::into).collect();
        let find = |n: &str| {
            vars.iter()
                .position(|v| v == n)
                .ok_or_else(|| AlgebraError::UnknownVariable(n.to_string()))
        };
        let (ia, ib, ic, id) = (find("a")?, find("b")?, find("c")?, find("d")?);
        if ia.min(id) > ib.min(ic) {
            return Err(AlgebraError::parse(
                "variable order must make a*d the leading monomial of a*d - b*c - 1",
            ));
        }
        let relation = MultiPoly::parse(vars.clone(), "a*d - b*c - 1")?;
        Ok(Self {
            vars,
            relation,
            ia,
            ib,
            ic,
            id,
            term_limit: DEFAULT_TERM_LIMIT,
        })
    }

    pub fn with_term_limit(mut self, limit: usize) -> Self {
        self.term_limit = limit;
        self
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn relation(&self) -> &MultiPoly {
        &self.relation
    }

    pub fn term_limit(&self) -> usize {
        self.term_limit
    }

    pub fn term_order(&self) -> String {
        format!("lex {}", self.vars.join(" > "))
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly, AlgebraError> {
        MultiPoly::var(self.vars.clone(), name)
    }

    /// Parse and reduce.
    pub fn parse(&self, text: &str) -> Result<MultiPoly, AlgebraError> {
        self.normal_form(&MultiPoly::parse(self.vars.clone(), text)?)
    }

    fn guard(&self, p: &MultiPoly) -> Result<(), AlgebraError> {
        if p.len() > self.term_limit {
            Err(AlgebraError::ResourceGuard {
                terms: p.len(),
                limit: self.term_limit,
            })
        } else {
            Ok(())
        }
    }

    /// Re-index `p` onto this context's variables.
    fn adopt(&self, p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        if Arc::ptr_eq(p.vars(), &self.vars) || **p.vars() == *self.vars {
            return Ok(MultiPoly {
                vars: self.vars.clone(),
                terms: p.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(p.vars().len());
        for (k, name) in p.vars().iter().enumerate() {
            let used = p.terms.keys().any(|m| m.0[k] > 0);
            match self.vars.iter().position(|v| v == name) {
                Some(j) => map.push(Some(j)),
                None if used => return Err(AlgebraError::UnknownVariable(name.clone())),
                None => map.push(None),
            }
        }
        let terms = p.terms.iter().map(|(m, c)| {
            let mut e = vec![0; self.vars.len()];
            for (k, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[k] {
                    e[j] = x;
                }
            }
            (Monomial(e), c.clone())
        });
        Ok(MultiPoly::from_terms(self.vars.clone(), terms))
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        m.0[self.ia] > 0 && m.0[self.id] > 0
    }

    pub fn is_reduced(&self, p: &MultiPoly) -> bool {
        p.terms.keys().all(|m| !self.is_reducible(m))
    }

    /// Unique remainder of `p` modulo the relation.
    ///
    /// A term `c * a^i * d^j * m` with `k = min(i, j)` is rewritten in one go
    /// to `c * a^(i-k) * d^(j-k) * m * (b*c + 1)^k`.
    pub fn normal_form(&self, p: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let p = self.adopt(p)?;
        self.guard(&p)?;
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &p.terms {
            let k = m.0[self.ia].min(m.0[self.id]);
            if k == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut base = m.clone();
            base.0[self.ia] -= k;
            base.0[self.id] -= k;
            let mut binom = BigInt::one();
            for t in 0..=k {
                let mut mono = base.clone();
                mono.0[self.ib] += t;
                mono.0[self.ic] += t;
                out.add_term(mono, c * &binom);
                binom = binom * (k - t) / (t + 1);
            }
            self.guard(&out)?;
        }
        Ok(out)
    }

    /// Reduction one elementary rewrite `a*d -> b*c + 1` at a time; `pick`
    /// chooses which of the currently reducible monomials (listed in
    /// increasing term order) to rewrite next. Used to check that the
    /// result does not depend on the rewrite order.
    pub fn normal_form_stepwise(
        &self,
        p: &MultiPoly,
        mut pick: impl FnMut(&[Monomial]) -> usize,
    ) -> Result<MultiPoly, AlgebraError> {
        let mut cur = self.adopt(p)?;
        loop {
            let reducible: Vec<Monomial> = cur.terms.keys().filter(|m| self.is_reducible(m)).cloned().collect();
            if reducible.is_empty() {
                return Ok(cur);
            }
            let m = reducible[pick(&reducible) % reducible.len()].clone();
            let c = cur.terms.remove(&m).expect("picked term present");
            let mut base = m;
            base.0[self.ia] -= 1;
            base.0[self.id] -= 1;
            let mut bc = base.clone();
            bc.0[self.ib] += 1;
            bc.0[self.ic] += 1;
            cur.add_term(bc, c.clone());
            cur.add_term(base, c);
            self.guard(&cur)?;
        }
    }

    pub fn equals_mod_ideal(&self, p: &MultiPoly, q: &MultiPoly) -> Result<bool, AlgebraError> {
        if !(Arc::ptr_eq(p.vars(), q.vars()) || p.vars() == q.vars()) {
            return Err(AlgebraError::VariableMismatch);
        }
        Ok(self.normal_form(&p.sub(q)?)?.is_zero())
    }
}

/// Free-function form of [`QuotientContext::normal_form`].
pub fn normal_form(p: &MultiPoly, ctx: &QuotientContext) -> Result<MultiPoly, AlgebraError> {
    ctx.normal_form(p)
}

/// Free-function form of [`QuotientContext::equals_mod_ideal`].
pub fn equals_mod_ideal(p: &MultiPoly, q: &MultiPoly, ctx: &QuotientContext) -> Result<bool, AlgebraError> {
    ctx.equals_mod_ideal(p, q)
}

/// [`QuotientContext`] as a [`Ring`] whose elements are kept in normal form.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ctx: Arc<QuotientContext>,
}

impl QuotientRing {
    pub fn new(ctx: QuotientContext) -> Self {
        Self { ctx: Arc::new(ctx) }
    }

    pub fn standard() -> Self {
        Self::new(QuotientContext::standard())
    }

    pub fn context(&self) -> &QuotientContext {
        &self.ctx
    }

    /// The reduced generator named `name`.
    pub fn var(&self, name: &str) -> Result<MultiPoly, AlgebraError> {
        self.ctx.var(name)
    }
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }
}

impl Ring for QuotientRing {
    type Elem = MultiPoly;

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.ctx.vars.clone())
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::constant(self.ctx.vars.clone(), 1)
    }

    fn from_i64(&self, n: i64) -> MultiPoly {
        MultiPoly::constant(self.ctx.vars.clone(), n)
    }

    fn from_bigint(&self, n: &BigInt) -> MultiPoly {
        MultiPoly::constant(self.ctx.vars.clone(), n.clone())
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b).expect("operands share the context variables")
    }

    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        a.neg()
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let prod = a.mul_guarded(b, self.ctx.term_limit)?;
        self.ctx.normal_form(&prod)
    }

    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }

    fn equal(&self, a: &MultiPoly, b: &MultiPoly) -> bool {
        a == b
    }

    fn contains(&self, a: &MultiPoly) -> bool {
        **a.vars() == *self.ctx.vars && self.ctx.is_reduced(a)
    }

    fn unit_inverse(&self, a: &MultiPoly) -> Option<MultiPoly> {
        // ±1 are the only units recognised; enough for the constant matrices used here
        match a.as_constant() {
            Some(c) if c.magnitude().is_one() => Some(a.clone()),
            _ => None,
        }
    }

    fn render(&self, a: &MultiPoly) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<MultiPoly, AlgebraError> {
        self.ctx.parse(s)
    }

    fn header(&self) -> String {
        format!("Z[{}]/(a*d - b*c - 1)", self.ctx.vars.join(","))
    }
}
