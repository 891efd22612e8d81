//! Exact coefficient rings.
//!
//! [`Ring`] is the arithmetic interface that [`crate::matrix::Matrix`] is
//! generic over. The euclidean rings ([`RingSpec`]) implement it, as do the
//! prime fields used for numeric spot checks and the symbolic quotient ring
//! in [`crate::multipoly`].

pub mod field;
pub mod gaussian;
pub mod poly;
mod prime_field;
mod spec;

use std::fmt::Debug;

use num_bigint::{BigInt, Sign};

pub use gaussian::GaussianInt;
pub use prime_field::PrimeField;
pub use spec::{RingElement, RingSpec};

use crate::error::AlgebraError;

/// A commutative ring with unit, acting as a context for its elements.
///
/// Elements passed to these methods must belong to the ring (see
/// [`Ring::contains`]); implementations may panic otherwise.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        // Horner in base 2^31 so every digit fits in an i64
        let base = self.from_i64(1 << 31);
        let (sign, digits) = n.to_u32_digits();
        let mut acc = self.zero();
        for d in digits.iter().rev() {
            let hi = self.from_i64(i64::from(d >> 31));
            let lo = self.from_i64(i64::from(d & 0x7fff_ffff));
            acc = self.mul(&acc, &base).expect("scalar multiplication");
            acc = self.mul(&acc, &self.from_i64(2)).expect("scalar multiplication");
            acc = self.add(&acc, &self.mul(&hi, &base).expect("scalar multiplication"));
            acc = self.add(&acc, &lo);
        }
        if sign == Sign::Minus {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplication is fallible because the symbolic ring enforces a size guard.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, &self.one()))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn contains(&self, a: &Self::Elem) -> bool;

    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a / b` when `b` divides `a` exactly.
    fn exact_quotient(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// True when the ring has no zero divisors and `exact_quotient` is implemented.
    fn is_integral_domain(&self) -> bool {
        false
    }

    fn render(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, AlgebraError>;

    /// Header string naming the ring in serialized files.
    fn header(&self) -> String;
}
