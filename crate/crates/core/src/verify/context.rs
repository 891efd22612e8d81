use std::fmt;
use std::str::FromStr;

use rand::Rng;
use sha2::{Digest, Sha256};

use super::VerifyError;
use crate::matrix::Matrix;
use crate::multipoly::QuotientRing;
use crate::ring::Ring;

/// Number of auxiliary variables describing generic elements of `N`.
pub const N_VARIABLES: usize = 18;

/// One of the 6x6 matrices that can be perturbed for mutation testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MutationTarget {
    X1,
    X2,
    X,
    Z,
    T,
}

impl fmt::Display for MutationTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MutationTarget::X1 => "X1",
            MutationTarget::X2 => "X2",
            MutationTarget::X => "X",
            MutationTarget::Z => "Z",
            MutationTarget::T => "T",
        };
        write!(f, "{s}")
    }
}

impl FromStr for MutationTarget {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X1" => Ok(MutationTarget::X1),
            "X2" => Ok(MutationTarget::X2),
            "X" => Ok(MutationTarget::X),
            "Z" => Ok(MutationTarget::Z),
            "T" => Ok(MutationTarget::T),
            _ => Err(VerifyError::BadContext(format!("unknown mutation target `{s}`"))),
        }
    }
}

/// Add one to entry `(row, col)` (zero-based) of the target matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mutation {
    pub target: MutationTarget,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]+1", self.target, self.row + 1, self.col + 1)
    }
}

/// The matrices of the commutator-vanishing argument, built from
/// `g = [[a,b],[c,d]]` with `ad - bc = 1` and `s = [[1,f],[0,1]]`:
///
/// * `p = s g`, `q = adj(g) = g^-1`, `r = s^-1`
/// * `X1 = [[I, I-p, 0],[0, I, I-pq],[0,0,I]]^-1`, `Y = [[I,0,0],[I,I,0],[0,I,I]]`,
///   `X2 = [[I,(I-p)q,0],[0,I,(I-pq)r],[0,0,I]]`
/// * `X` with `x = -(p-I)(q-I)` in block (1,2), `Z` with
///   `z = -(p-I)(q-I)(pq-I)` in block (1,3)
/// * `T = [[I,0,0],[0,-I,0],[0,I,I]]`
///
/// `l` holds the values of the auxiliary variables used for generic elements
/// of `N = {[[0,l],[0,0]]}`.
#[derive(Clone, Debug)]
pub struct ProofContext<R: Ring> {
    pub(crate) ring: R,
    pub(crate) label: String,
    pub(crate) symbolic: bool,
    pub(crate) entries: [R::Elem; 5],
    pub(crate) l: Vec<R::Elem>,
    pub(crate) g: Matrix<R>,
    pub(crate) s: Matrix<R>,
    pub(crate) p: Matrix<R>,
    pub(crate) q: Matrix<R>,
    pub(crate) r: Matrix<R>,
    pub(crate) x1: Matrix<R>,
    pub(crate) y: Matrix<R>,
    pub(crate) x2: Matrix<R>,
    pub(crate) x: Matrix<R>,
    pub(crate) z: Matrix<R>,
    pub(crate) t: Matrix<R>,
    pub(crate) power_depth: u64,
    pub(crate) mutation: Option<Mutation>,
}

pub(crate) fn blocks3<R: Ring>(rows: [[&Matrix<R>; 3]; 3]) -> Result<Matrix<R>, VerifyError> {
    Ok(Matrix::from_blocks(
        rows.iter().map(|r| r.iter().map(|m| (*m).clone()).collect()).collect(),
    )?)
}

impl ProofContext<QuotientRing> {
    /// Fully symbolic context over `ℤ[a,b,c,d,f,l1..l18]/(ad - bc - 1)`.
    pub fn symbolic(ring: QuotientRing) -> Result<Self, VerifyError> {
        let var = |n: &str| ring.var(n);
        let entries = [var("a")?, var("b")?, var("c")?, var("d")?, var("f")?];
        let l = (1..=N_VARIABLES)
            .map(|k| var(&format!("l{k}")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut ctx = Self::build(ring, "symbolic".into(), entries, l)?;
        ctx.symbolic = true;
        ctx.power_depth = 8;
        Ok(ctx)
    }
}

impl<R: Ring> ProofContext<R> {
    /// Context at explicit values; fails unless `ad - bc = 1`.
    pub fn from_values(ring: R, entries: [R::Elem; 5], l: Vec<R::Elem>) -> Result<Self, VerifyError> {
        let label = format!(
            "a={} b={} c={} d={} f={}",
            ring.render(&entries[0]),
            ring.render(&entries[1]),
            ring.render(&entries[2]),
            ring.render(&entries[3]),
            ring.render(&entries[4])
        );
        Self::build(ring, label, entries, l)
    }

    /// Draw `a, b, c, f` and the auxiliary values with `draw`, then solve
    /// `d = (bc + 1) / a`, redrawing whenever the division is not exact.
    pub fn random_instance<G: Rng>(
        ring: R,
        rng: &mut G,
        mut draw: impl FnMut(&mut G) -> R::Elem,
    ) -> Result<Self, VerifyError> {
        for _ in 0..100_000 {
            let a = draw(rng);
            let b = draw(rng);
            let c = draw(rng);
            let f = draw(rng);
            let l: Vec<R::Elem> = (0..N_VARIABLES).map(|_| draw(rng)).collect();
            let bc1 = ring.add(&ring.mul(&b, &c)?, &ring.one());
            if ring.is_zero(&a) {
                continue;
            }
            if let Some(d) = ring.exact_quotient(&bc1, &a) {
                return Self::from_values(ring, [a, b, c, d, f], l);
            }
        }
        Err(VerifyError::BadContext(
            "could not sample a point with ad - bc = 1".into(),
        ))
    }

    fn build(ring: R, label: String, entries: [R::Elem; 5], l: Vec<R::Elem>) -> Result<Self, VerifyError> {
        if l.len() != N_VARIABLES {
            return Err(VerifyError::BadContext(format!(
                "expected {N_VARIABLES} auxiliary values, got {}",
                l.len()
            )));
        }
        let [a, b, c, d, f] = entries.clone();
        let rg = ring.clone();
        let m2 = |rows: [[R::Elem; 2]; 2]| Matrix::from_rows(rg.clone(), rows.map(Vec::from).to_vec());
        let zero = ring.zero();
        let one = ring.one();
        let g = m2([[a.clone(), b.clone()], [c.clone(), d.clone()]])?;
        let s = m2([[one.clone(), f.clone()], [zero.clone(), one.clone()]])?;
        let q = m2([[d, ring.neg(&b)], [ring.neg(&c), a]])?;
        let r = m2([[one.clone(), ring.neg(&f)], [zero, one]])?;
        let p = s.mul(&g)?;

        let det = ring.sub(
            &ring.mul(g.get(0, 0), g.get(1, 1))?,
            &ring.mul(g.get(0, 1), g.get(1, 0))?,
        );
        if !ring.is_one(&det) {
            return Err(VerifyError::BadContext(format!(
                "ad - bc = {}, not 1",
                ring.render(&det)
            )));
        }
        if !g.mul(&q)?.is_identity() || !p.mul(&q)?.mul(&r)?.is_identity() {
            return Err(VerifyError::BadContext("g q or p q r is not the identity".into()));
        }

        let id = Matrix::identity(ring.clone(), 2);
        let o = Matrix::zeros(ring.clone(), 2, 2);
        let pq = p.mul(&q)?;
        let i_p = id.sub(&p)?;
        let i_pq = id.sub(&pq)?;
        let x1 = blocks3([[&id, &i_p, &o], [&o, &id, &i_pq], [&o, &o, &id]])?.unitriangular_inverse()?;
        let y = blocks3([[&id, &o, &o], [&id, &id, &o], [&o, &id, &id]])?;
        let x2 = blocks3([[&id, &i_p.mul(&q)?, &o], [&o, &id, &i_pq.mul(&r)?], [&o, &o, &id]])?;
        let p_i = p.sub(&id)?;
        let q_i = q.sub(&id)?;
        let x_block = p_i.mul(&q_i)?.neg();
        let z_block = x_block.mul(&pq.sub(&id)?)?;
        let x = blocks3([[&id, &x_block, &o], [&o, &id, &o], [&o, &o, &id]])?;
        let z = blocks3([[&id, &o, &z_block], [&o, &id, &o], [&o, &o, &id]])?;
        let t = blocks3([[&id, &o, &o], [&o, &id.neg(), &o], [&o, &id, &id]])?;
        Ok(Self {
            ring,
            label,
            symbolic: false,
            entries,
            l,
            g,
            s,
            p,
            q,
            r,
            x1,
            y,
            x2,
            x,
            z,
            t,
            power_depth: 8,
            mutation: None,
        })
    }

    /// Perturb one entry of `X1`, `X2`, `X`, `Z` or `T` by +1.
    pub fn with_mutation(mut self, m: Mutation) -> Result<Self, VerifyError> {
        let target = match m.target {
            MutationTarget::X1 => &mut self.x1,
            MutationTarget::X2 => &mut self.x2,
            MutationTarget::X => &mut self.x,
            MutationTarget::Z => &mut self.z,
            MutationTarget::T => &mut self.t,
        };
        if m.row >= 6 || m.col >= 6 {
            return Err(VerifyError::BadContext(format!("mutation {m} out of range")));
        }
        let v = self.ring.add(target.get(m.row, m.col), &self.ring.one());
        target.set(m.row, m.col, v)?;
        self.mutation = Some(m);
        Ok(self)
    }

    /// Exponent bound for the power identity check.
    pub fn with_power_depth(mut self, depth: u64) -> Self {
        self.power_depth = depth;
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_symbolic(&self) -> bool {
        self.symbolic
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    pub fn g(&self) -> &Matrix<R> {
        &self.g
    }
    pub fn s(&self) -> &Matrix<R> {
        &self.s
    }
    pub fn p(&self) -> &Matrix<R> {
        &self.p
    }
    pub fn q(&self) -> &Matrix<R> {
        &self.q
    }
    pub fn r(&self) -> &Matrix<R> {
        &self.r
    }
    pub fn x1(&self) -> &Matrix<R> {
        &self.x1
    }
    pub fn y(&self) -> &Matrix<R> {
        &self.y
    }
    pub fn x2(&self) -> &Matrix<R> {
        &self.x2
    }
    pub fn x(&self) -> &Matrix<R> {
        &self.x
    }
    pub fn z(&self) -> &Matrix<R> {
        &self.z
    }
    pub fn t(&self) -> &Matrix<R> {
        &self.t
    }

    /// The 2x2 block `x` of `X`.
    pub fn x_block(&self) -> Matrix<R> {
        self.x.block(0, 1, 2)
    }

    /// The 2x2 block `z` of `Z`.
    pub fn z_block(&self) -> Matrix<R> {
        self.z.block(0, 2, 2)
    }

    /// `[[0, l_k], [0, 0]]` for auxiliary variable `k` (zero-based).
    pub fn n_element(&self, k: usize) -> Result<Matrix<R>, VerifyError> {
        let mut m = Matrix::zeros(self.ring.clone(), 2, 2);
        m.set(0, 1, self.l[k].clone())?;
        Ok(m)
    }

    /// Generic element of `Γ_N`: the identity plus one `N` element per
    /// block, using auxiliary variables `offset .. offset + 9`.
    pub fn gamma(&self, offset: usize) -> Result<Matrix<R>, VerifyError> {
        let mut m = Matrix::identity(self.ring.clone(), 6);
        for bi in 0..3 {
            for bj in 0..3 {
                let k = offset + bi * 3 + bj;
                let v = self.ring.add(m.get(2 * bi, 2 * bj + 1), &self.l[k]);
                m.set(2 * bi, 2 * bj + 1, v)?;
            }
        }
        Ok(m)
    }

    /// Stable digest of the ring, the point and any mutation.
    pub fn context_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.ring.header().as_bytes());
        for e in self.entries.iter().chain(&self.l) {
            h.update(b"|");
            h.update(self.ring.render(e).as_bytes());
        }
        if let Some(m) = self.mutation {
            h.update(format!("|mutation {m}").as_bytes());
        }
        hex::encode(&h.finalize()[..8])
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}
