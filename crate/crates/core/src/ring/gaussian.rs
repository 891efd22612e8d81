//! Gaussian integers `a + bi`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    /// Quotient rounded coordinatewise to the nearest integer (ties to even),
    /// so the remainder has norm at most half the divisor's norm.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let n = d.norm();
        let num = self.mul(&d.conj());
        let q = Self::new(round_half_even(&num.re, &n), round_half_even(&num.im, &n));
        let r = self.sub(&q.mul(d));
        (q, r)
    }

    /// The four units `1, i, -1, -i`.
    pub fn units() -> [Self; 4] {
        [Self::new(1, 0), Self::new(0, 1), Self::new(-1, 0), Self::new(0, -1)]
    }

    /// Unit `u` such that `u * self` lies in the first quadrant
    /// (positive real part, nonnegative imaginary part).
    pub fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            return Self::one();
        }
        Self::units()
            .into_iter()
            .find(|u| {
                let w = u.mul(self);
                w.re.is_positive() && !w.im.is_negative()
            })
            .expect("some associate lies in the first quadrant")
    }
}

/// `x / n` rounded to the nearest integer with ties to even; `n > 0`.
fn round_half_even(x: &BigInt, n: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(n);
    let twice: BigInt = &r * 2u32;
    match twice.cmp(n) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + BigInt::one(),
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + BigInt::one()
            }
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
