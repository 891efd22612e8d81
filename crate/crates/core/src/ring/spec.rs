//! The euclidean rings: integers, Gaussian integers, and univariate
//! polynomials over a prime field or over the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Euclid, One, Signed, Zero};

use super::field::{is_prime, CoeffField, ModP, Rationals};
use super::gaussian::GaussianInt;
use super::poly;
use super::Ring;
use crate::error::AlgebraError;

/// Which euclidean ring an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    GaussianIntegers,
    /// `F_p[x]`; construct through [`RingSpec::poly_over_prime_field`].
    PolyOverPrimeField(u64),
    PolyOverRationals,
}

impl RingSpec {
    pub fn poly_over_prime_field(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(RingSpec::PolyOverPrimeField(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn integer(&self, n: i64) -> RingElement {
        match *self {
            RingSpec::Integers => RingElement::Integer(BigInt::from(n)),
            RingSpec::GaussianIntegers => RingElement::Gaussian(GaussianInt::new(n, 0)),
            RingSpec::PolyOverPrimeField(p) => RingElement::poly_fp(p, &[n]),
            RingSpec::PolyOverRationals => RingElement::poly_q(vec![BigRational::from_integer(n.into())]),
        }
    }

    /// The indeterminate `x` of a polynomial ring.
    pub fn variable(&self) -> Option<RingElement> {
        match *self {
            RingSpec::PolyOverPrimeField(p) => Some(RingElement::poly_fp(p, &[0, 1])),
            RingSpec::PolyOverRationals => Some(RingElement::poly_q(vec![BigRational::zero(), BigRational::one()])),
            _ => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, RingSpec::PolyOverPrimeField(_) | RingSpec::PolyOverRationals)
    }

    /// Short human description used by `ring-info`.
    pub fn describe(&self) -> String {
        match self {
            RingSpec::Integers => "integers; norm |a|; units ±1".into(),
            RingSpec::GaussianIntegers => {
                "Gaussian integers Z[i]; norm a^2+b^2; units ±1, ±i; quotients rounded to nearest (ties to even)".into()
            }
            RingSpec::PolyOverPrimeField(p) => {
                format!("polynomials over F_{p}; norm = degree; units = nonzero constants")
            }
            RingSpec::PolyOverRationals => {
                "polynomials over Q (exact fractions); norm = degree; units = nonzero constants".into()
            }
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<RingElement, AlgebraError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match *self {
            RingSpec::Integers => parse_int(&s).map(RingElement::Integer),
            RingSpec::GaussianIntegers => parse_gaussian(&s).map(RingElement::Gaussian),
            RingSpec::PolyOverPrimeField(p) => {
                let field = ModP(p);
                let coeffs = parse_coeff_list(&s)?
                    .iter()
                    .map(|c| parse_int(c).map(|n| field.reduce_big(&n)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RingElement::poly_fp_residues(p, coeffs))
            }
            RingSpec::PolyOverRationals => {
                let coeffs = parse_coeff_list(&s)?
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RingElement::poly_q(coeffs))
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::GaussianIntegers => write!(f, "Zi"),
            RingSpec::PolyOverPrimeField(p) => write!(f, "Fp[x]:{p}"),
            RingSpec::PolyOverRationals => write!(f, "Q[x]"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Zi" => Ok(RingSpec::GaussianIntegers),
            "Q[x]" => Ok(RingSpec::PolyOverRationals),
            other => {
                let p = other
                    .strip_prefix("Fp[x]:")
                    .ok_or_else(|| AlgebraError::parse(format!("unknown ring spec `{other}`")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| AlgebraError::parse(format!("bad modulus in `{other}`")))?;
                RingSpec::poly_over_prime_field(p)
            }
        }
    }
}

/// An element of one of the euclidean rings, tagged with its ring.
///
/// Polynomial coefficient vectors never carry trailing zeros, so equality
/// is representation equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Gaussian(GaussianInt),
    PolyFp { p: u64, coeffs: Vec<u64> },
    PolyQ(Vec<BigRational>),
}

impl RingElement {
    pub fn int(n: i64) -> Self {
        RingElement::Integer(BigInt::from(n))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        RingElement::Gaussian(GaussianInt::new(re, im))
    }

    pub fn poly_fp(p: u64, coeffs: &[i64]) -> Self {
        let field = ModP(p);
        Self::poly_fp_residues(p, coeffs.iter().map(|&c| field.reduce_i64(c)).collect())
    }

    fn poly_fp_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        poly::trim(&ModP(p), &mut coeffs);
        RingElement::PolyFp { p, coeffs }
    }

    pub fn poly_q(mut coeffs: Vec<BigRational>) -> Self {
        poly::trim(&Rationals, &mut coeffs);
        RingElement::PolyQ(coeffs)
    }

    pub fn ring(&self) -> RingSpec {
        match self {
            RingElement::Integer(_) => RingSpec::Integers,
            RingElement::Gaussian(_) => RingSpec::GaussianIntegers,
            RingElement::PolyFp { p, .. } => RingSpec::PolyOverPrimeField(*p),
            RingElement::PolyQ(_) => RingSpec::PolyOverRationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(n) => n.is_zero(),
            RingElement::Gaussian(g) => g.is_zero(),
            RingElement::PolyFp { coeffs, .. } => coeffs.is_empty(),
            RingElement::PolyQ(coeffs) => coeffs.is_empty(),
        }
    }

    /// Euclidean norm; `None` for zero.
    pub fn norm(&self) -> Option<BigUint> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            RingElement::Integer(n) => n.magnitude().clone(),
            RingElement::Gaussian(g) => g.norm().magnitude().clone(),
            RingElement::PolyFp { coeffs, .. } => BigUint::from(coeffs.len() - 1),
            RingElement::PolyQ(coeffs) => BigUint::from(coeffs.len() - 1),
        })
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch {
                left: self.ring().to_string(),
                right: other.ring().to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a + b),
            (RingElement::Gaussian(a), RingElement::Gaussian(b)) => RingElement::Gaussian(a.add(b)),
            (RingElement::PolyFp { p, coeffs: a }, RingElement::PolyFp { coeffs: b, .. }) => RingElement::PolyFp {
                p: *p,
                coeffs: poly::add(&ModP(*p), a, b),
            },
            (RingElement::PolyQ(a), RingElement::PolyQ(b)) => RingElement::PolyQ(poly::add(&Rationals, a, b)),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            RingElement::Integer(a) => RingElement::Integer(-a),
            RingElement::Gaussian(a) => RingElement::Gaussian(a.neg()),
            RingElement::PolyFp { p, coeffs } => RingElement::PolyFp {
                p: *p,
                coeffs: poly::neg(&ModP(*p), coeffs),
            },
            RingElement::PolyQ(a) => RingElement::PolyQ(poly::neg(&Rationals, a)),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a * b),
            (RingElement::Gaussian(a), RingElement::Gaussian(b)) => RingElement::Gaussian(a.mul(b)),
            (RingElement::PolyFp { p, coeffs: a }, RingElement::PolyFp { coeffs: b, .. }) => RingElement::PolyFp {
                p: *p,
                coeffs: poly::mul(&ModP(*p), a, b),
            },
            (RingElement::PolyQ(a), RingElement::PolyQ(b)) => RingElement::PolyQ(poly::mul(&Rationals, a, b)),
            _ => unreachable!(),
        })
    }

    /// Division with remainder: `self = q * b + r` with `r = 0` or
    /// `norm(r) < norm(b)`.
    ///
    /// Integer remainders are nonnegative; Gaussian quotients round each
    /// coordinate to the nearest integer with ties to even.
    pub fn euclidean_divide(&self, b: &Self) -> Result<(Self, Self), AlgebraError> {
        self.check_same(b)?;
        if b.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match (self, b) {
            (RingElement::Integer(a), RingElement::Integer(d)) => (
                RingElement::Integer(a.div_euclid(d)),
                RingElement::Integer(a.rem_euclid(d)),
            ),
            (RingElement::Gaussian(a), RingElement::Gaussian(d)) => {
                let (q, r) = a.div_rem(d);
                (RingElement::Gaussian(q), RingElement::Gaussian(r))
            }
            (RingElement::PolyFp { p, coeffs: a }, RingElement::PolyFp { coeffs: d, .. }) => {
                let (q, r) = poly::div_rem(&ModP(*p), a, d);
                (
                    RingElement::PolyFp { p: *p, coeffs: q },
                    RingElement::PolyFp { p: *p, coeffs: r },
                )
            }
            (RingElement::PolyQ(a), RingElement::PolyQ(d)) => {
                let (q, r) = poly::div_rem(&Rationals, a, d);
                (RingElement::PolyQ(q), RingElement::PolyQ(r))
            }
            _ => unreachable!(),
        })
    }

    /// `self / b` if `b` divides `self`.
    pub fn exact_div(&self, b: &Self) -> Result<Option<Self>, AlgebraError> {
        let (q, r) = self.euclidean_divide(b)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Integer(n) => n.magnitude().is_one(),
            RingElement::Gaussian(g) => g.norm().is_one(),
            RingElement::PolyFp { coeffs, .. } => coeffs.len() == 1,
            RingElement::PolyQ(coeffs) => coeffs.len() == 1,
        }
    }

    pub fn unit_inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_unit() {
            return Err(AlgebraError::NotAUnit(self.to_string()));
        }
        Ok(match self {
            RingElement::Integer(n) => RingElement::Integer(n.clone()),
            // the conjugate of a norm-one Gaussian integer is its inverse
            RingElement::Gaussian(g) => RingElement::Gaussian(g.conj()),
            RingElement::PolyFp { p, coeffs } => RingElement::PolyFp {
                p: *p,
                coeffs: vec![ModP(*p).inv(&coeffs[0])],
            },
            RingElement::PolyQ(coeffs) => RingElement::PolyQ(vec![coeffs[0].recip()]),
        })
    }

    /// Unit `u` such that `u * self` is the canonical associate: positive for
    /// integers, monic for polynomials, first quadrant for Gaussian integers.
    pub fn normalizing_unit(&self) -> Self {
        match self {
            RingElement::Integer(n) => RingElement::int(if n.is_negative() { -1 } else { 1 }),
            RingElement::Gaussian(g) => RingElement::Gaussian(g.normalizing_unit()),
            RingElement::PolyFp { p, coeffs } => RingElement::PolyFp {
                p: *p,
                coeffs: vec![coeffs.last().map_or(1, |c| ModP(*p).inv(c))],
            },
            RingElement::PolyQ(coeffs) => {
                RingElement::PolyQ(vec![coeffs.last().map_or_else(BigRational::one, |c| c.recip())])
            }
        }
    }

    /// Extended gcd: returns `(g, u, v)` with `g = u*self + v*b` and `g`
    /// the canonical associate of the gcd.
    pub fn gcd_bezout(&self, b: &Self) -> Result<(Self, Self, Self), AlgebraError> {
        self.check_same(b)?;
        if self.is_zero() && b.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let ring = self.ring();
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (ring.integer(1), ring.integer(0));
        let (mut t0, mut t1) = (ring.integer(0), ring.integer(1));
        while !r1.is_zero() {
            let (q, r) = r0.euclidean_divide(&r1)?;
            let s = s0.try_sub(&q.try_mul(&s1)?)?;
            let t = t0.try_sub(&q.try_mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let unit = r0.normalizing_unit();
        Ok((r0.try_mul(&unit)?, s0.try_mul(&unit)?, t0.try_mul(&unit)?))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(n) => write!(f, "{n}"),
            RingElement::Gaussian(g) => write!(f, "{g}"),
            RingElement::PolyFp { coeffs, .. } => write_list(f, coeffs),
            RingElement::PolyQ(coeffs) => write_list(f, coeffs),
        }
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "[0]");
    }
    write!(f, "[")?;
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

fn parse_int(s: &str) -> Result<BigInt, AlgebraError> {
    s.parse::<BigInt>()
        .map_err(|_| AlgebraError::parse(format!("`{s}` is not an integer")))
}

fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(AlgebraError::parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

fn parse_coeff_list(s: &str) -> Result<Vec<&str>, AlgebraError> {
    match s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        Some("") => Ok(Vec::new()),
        Some(inner) => Ok(inner.split(',').collect()),
        // a bare scalar is read as a constant polynomial
        None => Ok(vec![s]),
    }
}

fn parse_gaussian(s: &str) -> Result<GaussianInt, AlgebraError> {
    let err = || AlgebraError::parse(format!("`{s}` is not a Gaussian integer"));
    let Some(body) = s.strip_suffix('i') else {
        return Ok(GaussianInt::new(parse_int(s)?, 0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_int(&body[..i]).map_err(|_| err())?, &body[i..]),
        None => (BigInt::zero(), body),
    };
    let im = match im {
        "" | "+" => BigInt::one(),
        "-" => -BigInt::one(),
        t => parse_int(t.strip_prefix('+').unwrap_or(t)).map_err(|_| err())?,
    };
    Ok(GaussianInt::new(re, im))
}

impl Ring for RingSpec {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        self.integer(0)
    }

    fn one(&self) -> RingElement {
        self.integer(1)
    }

    fn from_i64(&self, n: i64) -> RingElement {
        self.integer(n)
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        a.try_add(b).expect("ring mismatch inside a RingSpec context")
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        a.neg()
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, AlgebraError> {
        a.try_mul(b)
    }

    fn is_zero(&self, a: &RingElement) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &RingElement) -> bool {
        a.ring() == *self
    }

    fn unit_inverse(&self, a: &RingElement) -> Option<RingElement> {
        a.unit_inverse().ok()
    }

    fn exact_quotient(&self, a: &RingElement, b: &RingElement) -> Option<RingElement> {
        a.exact_div(b).ok().flatten()
    }

    fn is_integral_domain(&self) -> bool {
        true
    }

    fn render(&self, a: &RingElement) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<RingElement, AlgebraError> {
        self.parse_element(s)
    }

    fn header(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(re: i64, im: i64) -> RingElement {
        RingElement::gaussian(re, im)
    }

    #[test]
    fn integer_division() {
        let (q, r) = RingElement::int(7).euclidean_divide(&RingElement::int(3)).unwrap();
        assert_eq!((q, r), (RingElement::int(2), RingElement::int(1)));
    }

    #[test]
    fn f2_polynomial_division() {
        let a = RingElement::poly_fp(2, &[1, 0, 1]);
        let b = RingElement::poly_fp(2, &[1, 1]);
        let (q, r) = a.euclidean_divide(&b).unwrap();
        assert_eq!(q, RingElement::poly_fp(2, &[1, 1]));
        assert!(r.is_zero());
        // multiply back
        assert_eq!(q.try_mul(&b).unwrap().try_add(&r).unwrap(), a);
    }

    #[test]
    fn gaussian_division_of_five() {
        let (q, r) = zi(5, 0).euclidean_divide(&zi(1, 2)).unwrap();
        assert_eq!(q, zi(1, -2));
        assert!(r.is_zero());
        assert_eq!(zi(1, 2).try_mul(&zi(1, -2)).unwrap(), zi(5, 0));
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            RingElement::int(1).euclidean_divide(&RingElement::int(0)),
            Err(AlgebraError::DivisionByZero)
        );
        assert!(matches!(
            RingElement::int(1).euclidean_divide(&zi(1, 0)),
            Err(AlgebraError::RingMismatch { .. })
        ));
        assert!(matches!(
            RingElement::poly_fp(3, &[1]).try_add(&RingElement::poly_fp(5, &[1])),
            Err(AlgebraError::RingMismatch { .. })
        ));
    }

    #[test]
    fn bezout_examples() {
        let (g, u, v) = RingElement::int(6).gcd_bezout(&RingElement::int(4)).unwrap();
        assert_eq!(
            (g, u, v),
            (RingElement::int(2), RingElement::int(1), RingElement::int(-1))
        );

        let q = |c: &[i64]| RingElement::poly_q(c.iter().map(|&n| BigRational::from_integer(n.into())).collect());
        let (g, _, _) = q(&[-1, 0, 1]).gcd_bezout(&q(&[-1, 1])).unwrap();
        assert_eq!(g, q(&[-1, 1]));

        let (g, u, v) = RingElement::int(0).gcd_bezout(&RingElement::int(-9)).unwrap();
        assert_eq!(g, RingElement::int(9));
        assert_eq!(u, RingElement::int(0));
        assert_eq!(v, RingElement::int(-1));

        let (g, _, _) = zi(0, 0).gcd_bezout(&zi(-3, 2)).unwrap();
        assert_eq!(g, zi(2, 3));

        assert_eq!(
            RingElement::int(0).gcd_bezout(&RingElement::int(0)),
            Err(AlgebraError::BothZero)
        );
    }

    #[test]
    fn units() {
        let m1 = RingElement::int(-1);
        assert!(m1.is_unit());
        assert_eq!(m1.unit_inverse().unwrap(), m1);
        let x = RingSpec::PolyOverRationals.variable().unwrap();
        assert!(!x.is_unit());
        assert!(x.unit_inverse().is_err());
        assert_eq!(zi(0, 1).unit_inverse().unwrap(), zi(0, -1));
        let c = RingElement::poly_fp(7, &[3]);
        assert_eq!(
            c.try_mul(&c.unit_inverse().unwrap()).unwrap(),
            RingElement::poly_fp(7, &[1])
        );
    }

    #[test]
    fn text_round_trip() {
        for (ring, text) in [
            ("Z", "-42"),
            ("Zi", "3-4i"),
            ("Zi", "0+1i"),
            ("Fp[x]:5", "[1,0,4]"),
            ("Q[x]", "[1/2,0,-3]"),
            ("Q[x]", "[0]"),
        ] {
            let ring: RingSpec = ring.parse().unwrap();
            assert_eq!(ring.to_string().parse::<RingSpec>().unwrap(), ring);
            let e = ring.parse_element(text).unwrap();
            assert_eq!(e.to_string(), text);
        }
        let zi_ring = RingSpec::GaussianIntegers;
        assert_eq!(zi_ring.parse_element("i").unwrap(), zi(0, 1));
        assert_eq!(zi_ring.parse_element("-i").unwrap(), zi(0, -1));
        assert_eq!(zi_ring.parse_element("2-i").unwrap(), zi(2, -1));
        assert_eq!(zi_ring.parse_element("-3i").unwrap(), zi(0, -3));
        assert_eq!(
            RingSpec::PolyOverPrimeField(3).parse_element("[1,3]").unwrap(),
            RingElement::poly_fp(3, &[1])
        );
        assert!("Fp[x]:6".parse::<RingSpec>().is_err());
        assert!("R".parse::<RingSpec>().is_err());
    }

    #[test]
    fn canonical_zero() {
        let a = RingElement::poly_fp(5, &[1, 2, 3]);
        let z = a.try_sub(&a).unwrap();
        assert_eq!(z, RingSpec::PolyOverPrimeField(5).integer(0));
        assert!(z.norm().is_none());
    }
}
