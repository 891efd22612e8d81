use serde::{Deserialize, Serialize};

use super::context::{blocks3, ProofContext};
use super::VerifyError;
use crate::factor::dv_decompose;
use crate::matrix::Matrix;
use crate::ring::Ring;

/// The identities checked by the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    DvIdentity,
    ZxyIdentity,
    XzShapes,
    NRing,
    GammaNGroup,
    Normalizer,
    TConjugation,
    PowerIdentity,
    ElementaryConjugateToInverse,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::DvIdentity,
        Statement::ZxyIdentity,
        Statement::XzShapes,
        Statement::NRing,
        Statement::GammaNGroup,
        Statement::Normalizer,
        Statement::TConjugation,
        Statement::PowerIdentity,
        Statement::ElementaryConjugateToInverse,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::DvIdentity => "dv-identity",
            Statement::ZxyIdentity => "zxy-identity",
            Statement::XzShapes => "x-z-shapes",
            Statement::NRing => "n-ring",
            Statement::GammaNGroup => "gamma-n-group",
            Statement::Normalizer => "normalizer",
            Statement::TConjugation => "t-conjugation",
            Statement::PowerIdentity => "power-identity",
            Statement::ElementaryConjugateToInverse => "elementary-conjugate-to-inverse",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Statement::DvIdentity => "[[I,0,0],[p^-1,I,0],[0,q^-1,I]] diag(p,q,r) = X1 Y X2",
            Statement::ZxyIdentity => "block (2,3) of X2 X1 vanishes, X2 X1 Y = Z X Y, s + s^-1 = 2I",
            Statement::XzShapes => "x is upper triangular and z lies in N",
            Statement::NRing => "uv = 0 and xN, Nx lie in N",
            Statement::GammaNGroup => "Gamma_N is closed, has inverses 2I - g, and splits as upper times lower",
            Statement::Normalizer => "X and Y normalize Gamma_N",
            Statement::TConjugation => "T X T^-1 = X^-1, T Y T^-1 = Y^-1, and W = XT conjugates XY to its inverse",
            Statement::PowerIdentity => "(hg)^m g^-m stays in Gamma_N for h = Z, g = XY",
            Statement::ElementaryConjugateToInverse => "a signed diagonal conjugates E_ij(r) to E_ij(-r)",
        }
    }

    pub fn from_id(id: &str) -> Option<Statement> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }
}

/// One named sub-check of a statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

fn check(name: &str, passed: bool) -> Check {
    Check {
        name: name.to_string(),
        passed,
    }
}

/// A 2x2 block of shape `[[0,*],[0,0]]`.
pub fn in_n<R: Ring>(m: &Matrix<R>) -> bool {
    let r = m.ring();
    m.rows() == 2 && m.cols() == 2 && r.is_zero(m.get(0, 0)) && r.is_zero(m.get(1, 0)) && r.is_zero(m.get(1, 1))
}

/// A 6x6 matrix whose diagonal 2x2 blocks lie in `I + N` and whose other
/// blocks lie in `N`.
pub fn in_gamma_n<R: Ring>(m: &Matrix<R>) -> bool {
    if m.rows() != 6 || m.cols() != 6 {
        return false;
    }
    let id = Matrix::identity(m.ring().clone(), 2);
    (0..3).all(|i| {
        (0..3).all(|j| {
            let b = m.block(i, j, 2);
            if i == j {
                matches!(b.sub(&id), Ok(d) if in_n(&d))
            } else {
                in_n(&b)
            }
        })
    })
}

/// Check that `h' = (hg)^m g^-m` satisfies `member` for `m = 1..=m_max`.
pub fn verify_gene_power<R: Ring>(
    h: &Matrix<R>,
    g: &Matrix<R>,
    g_inv: &Matrix<R>,
    member: impl Fn(&Matrix<R>) -> bool,
    m_max: u64,
) -> Result<(), VerifyError> {
    if !g.mul(g_inv)?.is_identity() {
        return Err(VerifyError::BadContext("g_inv is not the inverse of g".into()));
    }
    if !member(h) {
        return Err(VerifyError::Membership { m: 0 });
    }
    let hg = h.mul(g)?;
    let mut hg_pow = Matrix::identity(g.ring().clone(), g.rows());
    let mut g_inv_pow = hg_pow.clone();
    for m in 1..=m_max {
        hg_pow = hg_pow.mul(&hg)?;
        g_inv_pow = g_inv_pow.mul(g_inv)?;
        if !member(&hg_pow.mul(&g_inv_pow)?) {
            return Err(VerifyError::Membership { m });
        }
    }
    Ok(())
}

/// Diagonal `D` with entries ±1 and determinant 1 such that
/// `D E_ij(r) D^-1 = E_ij(-r)`: `-1` at `i` and at the smallest index
/// outside `{i, j}`. Indices are zero-based.
pub fn elementary_conjugate_to_inverse_witness<R: Ring>(
    ring: &R,
    n: usize,
    i: usize,
    j: usize,
) -> Result<Matrix<R>, VerifyError> {
    if n < 3 {
        return Err(VerifyError::BadContext(format!("need n >= 3, got {n}")));
    }
    if i == j || i >= n || j >= n {
        return Err(VerifyError::BadContext(format!(
            "bad index pair ({i}, {j}) for n = {n}"
        )));
    }
    let k = (0..n).find(|&k| k != i && k != j).unwrap_or(0);
    let diag: Vec<R::Elem> = (0..n)
        .map(|t| {
            if t == i || t == k {
                ring.neg(&ring.one())
            } else {
                ring.one()
            }
        })
        .collect();
    Ok(Matrix::diagonal(ring.clone(), &diag)?)
}

/// Structural failures from a perturbed context count as failed checks;
/// only the resource guard propagates.
fn soft<R>(r: Result<R, VerifyError>) -> Result<Option<R>, VerifyError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_resource_guard() => Err(e),
        Err(_) => Ok(None),
    }
}

impl<R: Ring> ProofContext<R> {
    fn id2(&self) -> Matrix<R> {
        Matrix::identity(self.ring.clone(), 2)
    }

    /// Evaluate the checks of one statement.
    pub fn checks(&self, st: Statement) -> Result<Vec<Check>, VerifyError> {
        match st {
            Statement::DvIdentity => self.dv_checks(),
            Statement::ZxyIdentity => self.zxy_checks(),
            Statement::XzShapes => self.shape_checks(),
            Statement::NRing => self.n_ring_checks(),
            Statement::GammaNGroup => self.gamma_checks(),
            Statement::Normalizer => self.normalizer_checks(),
            Statement::TConjugation => self.t_checks(),
            Statement::PowerIdentity => self.power_checks(),
            Statement::ElementaryConjugateToInverse => self.elementary_checks(),
        }
    }

    fn dv_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let id = self.id2();
        let o = Matrix::zeros(self.ring.clone(), 2, 2);
        let p_inv = self.q.mul(&self.r)?;
        let q_inv = &self.g;
        let lower = blocks3([[&id, &o, &o], [&p_inv, &id, &o], [&o, q_inv, &id]])?;
        let diag = blocks3([[&self.p, &o, &o], [&o, &self.q, &o], [&o, &o, &self.r]])?;
        let lhs = lower.mul(&diag)?;
        let rhs = self.x1.mul(&self.y)?.mul(&self.x2)?;
        let mut out = vec![check("lower * diag(p,q,r) = X1 Y X2", lhs == rhs)];
        let closed = soft(dv_decompose(&self.p, &self.q, &self.r).map_err(VerifyError::from))?;
        let agrees = matches!(&closed, Some(d) if d.u1 == self.x1 && d.l2 == self.y && d.u2 == self.x2 && d.verify());
        out.push(check("four-factor decomposition reproduces X1, Y, X2", agrees));
        Ok(out)
    }

    fn zxy_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let x2x1 = self.x2.mul(&self.x1)?;
        let lhs = x2x1.mul(&self.y)?;
        let rhs = self.z.mul(&self.x)?.mul(&self.y)?;
        let two = self.id2().add(&self.id2())?;
        Ok(vec![
            check("block (2,3) of X2 X1 is zero", x2x1.block(1, 2, 2).is_zero()),
            check("X2 X1 Y = Z X Y", lhs == rhs),
            check("s + s^-1 = 2I", self.s.add(&self.r)? == two),
        ])
    }

    fn shape_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let x = self.x_block();
        let z = self.z_block();
        Ok(vec![
            check("x[2,1] = 0", self.ring.is_zero(x.get(1, 0))),
            check("z[1,1] = z[2,1] = z[2,2] = 0", in_n(&z)),
        ])
    }

    fn n_ring_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let u = self.n_element(0)?;
        let v = self.n_element(1)?;
        let x = self.x_block();
        Ok(vec![
            check("uv = 0", u.mul(&v)?.is_zero()),
            check("xu in N", in_n(&x.mul(&u)?)),
            check("ux in N", in_n(&u.mul(&x)?)),
        ])
    }

    fn gamma_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let g1 = self.gamma(0)?;
        let g2 = self.gamma(9)?;
        let id = Matrix::identity(self.ring.clone(), 6);
        let two = id.add(&id)?;
        let inv = two.sub(&g1)?;
        let mut v = Matrix::zeros(self.ring.clone(), 6, 6);
        let n = g1.sub(&id)?;
        for bi in 1..3 {
            for bj in 0..bi {
                v.set_submatrix(2 * bi, 2 * bj, &n.block(bi, bj, 2))?;
            }
        }
        let upper = g1.mul(&id.sub(&v)?)?;
        let lower = id.add(&v)?;
        Ok(vec![
            check("gamma, gamma' in Gamma_N", in_gamma_n(&g1) && in_gamma_n(&g2)),
            check("gamma gamma' in Gamma_N", in_gamma_n(&g1.mul(&g2)?)),
            check(
                "gamma (2I - gamma) = I",
                g1.mul(&inv)?.is_identity() && in_gamma_n(&inv),
            ),
            check(
                "U = gamma (I - v) is upper unitriangular in Gamma_N",
                upper.is_upper_unitriangular() && in_gamma_n(&upper),
            ),
            check(
                "L = I + v is lower unitriangular in Gamma_N",
                lower.is_lower_unitriangular() && in_gamma_n(&lower),
            ),
            check("U L = gamma", upper.mul(&lower)? == g1),
        ])
    }

    fn normalizer_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let gamma = self.gamma(0)?;
        let conj = |m: &Matrix<R>| -> Result<Option<bool>, VerifyError> {
            soft((|| {
                let inv = m.unitriangular_inverse()?;
                Ok(in_gamma_n(&m.mul(&gamma)?.mul(&inv)?))
            })())
        };
        Ok(vec![
            check("X gamma X^-1 in Gamma_N", conj(&self.x)? == Some(true)),
            check("Y gamma Y^-1 in Gamma_N", conj(&self.y)? == Some(true)),
        ])
    }

    fn t_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let inverses = soft((|| {
            let t_inv = self.t.inverse()?;
            let x_inv = self.x.unitriangular_inverse()?;
            let y_inv = self.y.unitriangular_inverse()?;
            Ok((t_inv, x_inv, y_inv))
        })())?;
        let Some((t_inv, x_inv, y_inv)) = inverses else {
            return Ok(vec![check("T, X, Y invertible", false)]);
        };
        let xy = self.x.mul(&self.y)?;
        let w = self.x.mul(&self.t)?;
        let w_inv = t_inv.mul(&x_inv)?;
        Ok(vec![
            check("T X T^-1 = X^-1", self.t.mul(&self.x)?.mul(&t_inv)? == x_inv),
            check("T Y T^-1 = Y^-1", self.t.mul(&self.y)?.mul(&t_inv)? == y_inv),
            check(
                "W (XY) W^-1 = (XY)^-1 for W = XT",
                w.mul(&xy)?.mul(&w_inv)? == y_inv.mul(&x_inv)?,
            ),
        ])
    }

    fn power_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let member = |m: &Matrix<R>| in_gamma_n(m);
        let run = |h: &Matrix<R>, g: &Matrix<R>, depth: u64| -> Result<bool, VerifyError> {
            let g_inv = match soft(
                g.unitriangular_inverse()
                    .or_else(|_| g.inverse())
                    .map_err(VerifyError::from),
            )? {
                Some(i) => i,
                None => return Ok(false),
            };
            match verify_gene_power(h, g, &g_inv, member, depth) {
                Ok(()) => Ok(true),
                Err(e) if e.is_resource_guard() => Err(e),
                Err(_) => Ok(false),
            }
        };
        let xy = self.x.mul(&self.y)?;
        let gamma = self.gamma(0)?;
        Ok(vec![
            check(
                &format!("h = Z, g = XY, m <= {}", self.power_depth),
                run(&self.z, &xy, self.power_depth)?,
            ),
            check("h = gamma, g = X, m <= 5", run(&gamma, &self.x, 5)?),
        ])
    }

    fn elementary_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let r = self.l[0].clone();
        let mut ok = true;
        for n in 3..=6 {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let d = elementary_conjugate_to_inverse_witness(&self.ring, n, i, j)?;
                    let mut e = Matrix::identity(self.ring.clone(), n);
                    e.set(i, j, r.clone())?;
                    let mut e_neg = Matrix::identity(self.ring.clone(), n);
                    e_neg.set(i, j, self.ring.neg(&r))?;
                    // D is an involution, so it serves as its own inverse once D^2 = I
                    ok &= d.mul(&d)?.is_identity();
                    ok &= self.ring.is_one(&d.determinant()?);
                    ok &= d.mul(&e)?.mul(&d)? == e_neg;
                }
            }
        }
        Ok(vec![check("D E_ij(r) D^-1 = E_ij(-r), det D = 1, n = 3..6", ok)])
    }

    /// Matrices recorded alongside a passing certificate.
    pub fn witnesses(&self, st: Statement) -> Vec<(String, Matrix<R>)> {
        match st {
            Statement::TConjugation => match self.x.mul(&self.t) {
                Ok(w) => vec![("W".into(), w), ("T".into(), self.t.clone())],
                Err(_) => vec![],
            },
            Statement::ElementaryConjugateToInverse => {
                match elementary_conjugate_to_inverse_witness(&self.ring, 3, 0, 1) {
                    Ok(d) => vec![("D(3,1,2)".into(), d)],
                    Err(_) => vec![],
                }
            }
            _ => vec![],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, RingSpec};

    #[test]
    fn witness_for_first_pair() {
        let ring = RingSpec::Integers;
        let d = elementary_conjugate_to_inverse_witness(&ring, 3, 0, 1).unwrap();
        assert_eq!(
            d,
            Matrix::from_i64_rows(ring, &[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]]).unwrap()
        );
    }

    #[test]
    fn witness_six_six_one() {
        let f = PrimeField::new(101).unwrap();
        let d = elementary_conjugate_to_inverse_witness(&f, 6, 5, 0).unwrap();
        let diag: Vec<u64> = (0..6).map(|i| *d.get(i, i)).collect();
        assert_ne!(diag[5], diag[0]);
        assert_eq!(diag.iter().filter(|&&x| x == 100).count() % 2, 0);
        assert!(elementary_conjugate_to_inverse_witness(&f, 2, 0, 1).is_err());
    }

    #[test]
    fn gene_power_with_identity_h() {
        let ring = RingSpec::Integers;
        let id = Matrix::identity(ring, 6);
        let mut g = id.clone();
        g.set(0, 3, ring.integer(4)).unwrap();
        let g_inv = g.unitriangular_inverse().unwrap();
        verify_gene_power(&id, &g, &g_inv, in_gamma_n, 6).unwrap();
        // h commutes with g, so (hg)^2 g^-2 = h^2 leaves the set {I, h}
        let mut h = id.clone();
        h.set(0, 1, ring.integer(1)).unwrap();
        let err = verify_gene_power(&h, &g, &g_inv, |m| m.is_identity() || m == &h, 3).unwrap_err();
        assert!(matches!(err, VerifyError::Membership { m: 2 }));
    }
}
