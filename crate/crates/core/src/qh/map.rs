use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::group::{FiniteGroup, Group};
use super::QhError;

/// Largest `k` accepted by [`homogenize`]; `g^(2^k)` is formed explicitly.
pub const MAX_DOUBLINGS: u32 = 256;

/// A map from group elements to exact rationals.
#[derive(Clone)]
pub struct RealValuedMap<E> {
    description: String,
    f: Arc<dyn Fn(&E) -> BigRational + Send + Sync>,
}

impl<E> fmt::Debug for RealValuedMap<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealValuedMap")
            .field("description", &self.description)
            .finish()
    }
}

impl<E> RealValuedMap<E> {
    pub fn new(description: impl Into<String>, f: impl Fn(&E) -> BigRational + Send + Sync + 'static) -> Self {
        Self {
            description: description.into(),
            f: Arc::new(f),
        }
    }

    pub fn eval(&self, g: &E) -> BigRational {
        (self.f)(g)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

/// `floor(x * sqrt(2))`, exact for every integer `x`.
pub fn floor_times_sqrt2(x: &BigInt) -> BigInt {
    let r = (x * x * 2u32).sqrt();
    if x.is_negative() {
        // x*sqrt(2) is irrational for x != 0, so the floor sits strictly below
        -(r + 1u32)
    } else {
        r
    }
}

impl RealValuedMap<Vec<BigInt>> {
    /// `n ↦ floor(n sqrt 2)` on `ℤ` (first coordinate); defect 1.
    pub fn floor_sqrt2() -> Self {
        Self::new("floor(n*sqrt(2))", |g: &Vec<BigInt>| {
            BigRational::from_integer(floor_times_sqrt2(&g[0]))
        })
    }

    /// The homomorphism `v ↦ Σ c_i v_i` on `ℤ^rank`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
        let parts: Vec<String> = coeffs.iter().map(|x| x.to_string()).collect();
        Self::new(format!("linear({})", parts.join(",")), move |g: &Vec<BigInt>| {
            BigRational::from_integer(c.iter().zip(g).map(|(a, b)| a * b).sum())
        })
    }
}

fn defect_at<G: Group>(group: &G, psi: &RealValuedMap<G::Elem>, g: &G::Elem, h: &G::Elem) -> BigRational {
    (psi.eval(&group.op(g, h)) - psi.eval(g) - psi.eval(h)).abs()
}

/// `max |ψ(gh) - ψ(g) - ψ(h)|` over the supplied pairs.
pub fn defect_estimate<G: Group>(
    group: &G,
    psi: &RealValuedMap<G::Elem>,
    pairs: &[(G::Elem, G::Elem)],
) -> Result<BigRational, QhError> {
    pairs
        .iter()
        .map(|(g, h)| defect_at(group, psi, g, h))
        .max()
        .ok_or(QhError::EmptySample)
}

/// The exact defect over all pairs of a finite group.
pub fn defect_exhaustive<G: FiniteGroup>(
    group: &G,
    psi: &RealValuedMap<G::Elem>,
    cap: u128,
) -> Result<BigRational, QhError> {
    let size = group.order();
    if size > cap {
        return Err(QhError::CapExceeded { size, cap });
    }
    let elems = group.elements();
    let values: Vec<BigRational> = elems.iter().map(|g| psi.eval(g)).collect();
    let mut best = BigRational::zero();
    for (i, g) in elems.iter().enumerate() {
        for (j, h) in elems.iter().enumerate() {
            let d = (psi.eval(&group.op(g, h)) - &values[i] - &values[j]).abs();
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// `ψ(g^(2^k)) / 2^k`.
pub fn homogenize<G: Group>(
    group: &G,
    psi: &RealValuedMap<G::Elem>,
    g: &G::Elem,
    k: u32,
) -> Result<BigRational, QhError> {
    if k < 1 {
        return Err(QhError::KTooSmall);
    }
    if k > MAX_DOUBLINGS {
        return Err(QhError::PowerGuard { k, max: MAX_DOUBLINGS });
    }
    let big = group.pow_two_power(g, k);
    Ok(psi.eval(&big) / BigRational::from_integer(BigInt::from(1) << k))
}

/// `Δ / 2^(k-1)`: distance bound between the level-`k` value and the
/// homogeneous limit when the defect along powers is at most `Δ`.
pub fn homogenization_error_bound(delta: &BigRational, k: u32) -> BigRational {
    delta / BigRational::from_integer(BigInt::from(1) << k.saturating_sub(1))
}

/// `ψ` homogenized at a fixed level `k`, with the defect bound used for
/// error budgets.
#[derive(Clone, Debug)]
pub struct HomogenizedMap<E> {
    pub psi: RealValuedMap<E>,
    pub k: u32,
    pub delta: BigRational,
}

impl<E> HomogenizedMap<E> {
    pub fn new(psi: RealValuedMap<E>, k: u32, delta: BigRational) -> Result<Self, QhError> {
        if k < 1 {
            return Err(QhError::KTooSmall);
        }
        if k > MAX_DOUBLINGS {
            return Err(QhError::PowerGuard { k, max: MAX_DOUBLINGS });
        }
        Ok(Self { psi, k, delta })
    }

    pub fn eval<G: Group<Elem = E>>(&self, group: &G, g: &E) -> Result<BigRational, QhError> {
        homogenize(group, &self.psi, g, self.k)
    }

    /// Bound on `|φ̄_k(g) - φ̄(g)|`.
    pub fn error_bound(&self) -> BigRational {
        homogenization_error_bound(&self.delta, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityReport {
    pub pairs: usize,
    pub max_residual: BigRational,
    /// Three times the per-value error bound.
    pub error_budget: BigRational,
    pub within_budget: bool,
}

/// `max |φ̄(gh) - φ̄(g) - φ̄(h)|` over commuting pairs.
pub fn commuting_additivity_check<G: Group>(
    group: &G,
    phi: &HomogenizedMap<G::Elem>,
    pairs: &[(G::Elem, G::Elem)],
) -> Result<AdditivityReport, QhError> {
    if pairs.is_empty() {
        return Err(QhError::EmptySample);
    }
    let mut max_residual = BigRational::zero();
    for (g, h) in pairs {
        if !group.commutes(g, h) {
            return Err(QhError::NonCommutingPair(group.render(g), group.render(h)));
        }
        let r = (phi.eval(group, &group.op(g, h))? - phi.eval(group, g)? - phi.eval(group, h)?).abs();
        if r > max_residual {
            max_residual = r;
        }
    }
    let error_budget = phi.error_bound() * BigRational::from_integer(3.into());
    Ok(AdditivityReport {
        pairs: pairs.len(),
        within_budget: max_residual <= error_budget,
        max_residual,
        error_budget,
    })
}
