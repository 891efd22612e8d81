//! Coefficient fields for dense univariate polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arithmetic on the coefficients of a dense polynomial.
pub trait CoeffField {
    type C: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    /// Inverse of a nonzero coefficient.
    fn inv(&self, a: &Self::C) -> Self::C;
    fn is_zero(&self, a: &Self::C) -> bool;

    fn sub(&self, a: &Self::C, b: &Self::C) -> Self::C {
        self.add(a, &self.neg(b))
    }
}

/// Integers modulo a prime `p`, stored as canonical residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModP(pub u64);

impl ModP {
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        let r = ((n % &p) + &p) % &p;
        u64::try_from(r).expect("residue fits in u64")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl CoeffField for ModP {
    type C = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.0);
        // Fermat; p is prime.
        self.pow(*a, self.0 - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// The rational numbers, as reduced fractions of big integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl CoeffField for Rationals {
    type C = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
