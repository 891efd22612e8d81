//! Dense univariate polynomials over a coefficient field.
//!
//! Coefficients are stored lowest degree first and never carry trailing
//! zeros, so the zero polynomial is the empty vector.

use super::field::CoeffField;

pub fn trim<F: CoeffField>(field: &F, coeffs: &mut Vec<F::C>) {
    while coeffs.last().is_some_and(|c| field.is_zero(c)) {
        coeffs.pop();
    }
}

pub fn degree<C>(coeffs: &[C]) -> Option<usize> {
    coeffs.len().checked_sub(1)
}

pub fn add<F: CoeffField>(field: &F, a: &[F::C], b: &[F::C]) -> Vec<F::C> {
    let n = a.len().max(b.len());
    let zero = field.zero();
    let mut out: Vec<F::C> = (0..n)
        .map(|i| field.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(field, &mut out);
    out
}

pub fn neg<F: CoeffField>(field: &F, a: &[F::C]) -> Vec<F::C> {
    a.iter().map(|c| field.neg(c)).collect()
}

pub fn sub<F: CoeffField>(field: &F, a: &[F::C], b: &[F::C]) -> Vec<F::C> {
    add(field, a, &neg(field, b))
}

pub fn mul<F: CoeffField>(field: &F, a: &[F::C], b: &[F::C]) -> Vec<F::C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    trim(field, &mut out);
    out
}

pub fn scale<F: CoeffField>(field: &F, a: &[F::C], k: &F::C) -> Vec<F::C> {
    let mut out: Vec<F::C> = a.iter().map(|c| field.mul(c, k)).collect();
    trim(field, &mut out);
    out
}

/// Long division; `b` must be nonzero.
pub fn div_rem<F: CoeffField>(field: &F, a: &[F::C], b: &[F::C]) -> (Vec<F::C>, Vec<F::C>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = field.inv(&b[db]);
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![field.zero(); a.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let k = field.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = field.sub(&rem[shift + i], &field.mul(&k, c));
        }
        quot[shift] = k;
        trim(field, &mut rem);
    }
    trim(field, &mut quot);
    (quot, rem)
}
