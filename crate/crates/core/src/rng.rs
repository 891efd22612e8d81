//! Seeded sampling of ring elements and elementary words.
//!
//! Every randomized path in the crate draws from a [`ChaCha8Rng`] built by
//! [`seeded_rng`], so a seed fixes all outputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::{elementary, ElementaryMatrix, Matrix, MatrixError};
use crate::ring::{RingElement, RingSpec};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for sampled elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleBounds {
    /// Integer coefficients are drawn from `-int_bound..=int_bound`.
    pub int_bound: i64,
    /// Polynomials have degree at most this.
    pub max_degree: usize,
}

impl Default for SampleBounds {
    fn default() -> Self {
        Self {
            int_bound: 5,
            max_degree: 2,
        }
    }
}

pub fn random_element(ring: &RingSpec, rng: &mut impl Rng, bounds: SampleBounds) -> RingElement {
    let b = bounds.int_bound;
    match *ring {
        RingSpec::Integers => RingElement::int(rng.gen_range(-b..=b)),
        RingSpec::GaussianIntegers => RingElement::gaussian(rng.gen_range(-b..=b), rng.gen_range(-b..=b)),
        RingSpec::PolyOverPrimeField(p) => {
            let deg = rng.gen_range(0..=bounds.max_degree);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(0..p) as i64).collect();
            RingElement::poly_fp(p, &coeffs)
        }
        RingSpec::PolyOverRationals => {
            let deg = rng.gen_range(0..=bounds.max_degree);
            let coeffs = (0..=deg)
                .map(|_| {
                    let num = rng.gen_range(-b..=b);
                    let den = rng.gen_range(1..=b.max(1));
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect();
            RingElement::poly_q(coeffs)
        }
    }
}

pub fn random_elementary(
    ring: &RingSpec,
    n: usize,
    rng: &mut impl Rng,
    bounds: SampleBounds,
) -> ElementaryMatrix<RingElement> {
    let row = rng.gen_range(0..n);
    let mut col = rng.gen_range(0..n - 1);
    if col >= row {
        col += 1;
    }
    ElementaryMatrix {
        n,
        row,
        col,
        value: random_element(ring, rng, bounds),
    }
}

/// A word of `len` random elementary matrices and its product.
pub fn random_sl(
    ring: &RingSpec,
    n: usize,
    len: usize,
    rng: &mut impl Rng,
    bounds: SampleBounds,
) -> Result<(Matrix<RingSpec>, Vec<ElementaryMatrix<RingElement>>), MatrixError> {
    let word: Vec<_> = (0..len).map(|_| random_elementary(ring, n, rng, bounds)).collect();
    let m = elementary::product(ring, n, &word)?;
    Ok((m, word))
}
