//! Mechanical verification of the block-matrix identities behind the
//! vanishing of quasi-homomorphisms on `SL_n` over a commutative ring.
//!
//! Every statement runs through the same generic code twice: once over the
//! universal quotient ring `ℤ[a,b,c,d,f,l1..l18]/(ad - bc - 1)` and once on
//! seeded random points over concrete rings.

mod context;
mod statements;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use context::{Mutation, MutationTarget, ProofContext, N_VARIABLES};
pub use statements::{elementary_conjugate_to_inverse_witness, in_gamma_n, in_n, verify_gene_power, Check, Statement};

use crate::error::AlgebraError;
use crate::factor::FactorError;
use crate::matrix::MatrixError;
use crate::multipoly::{QuotientContext, QuotientRing, DEFAULT_TERM_LIMIT};
use crate::ring::{PrimeField, Ring, RingSpec};
use crate::rng::{random_element, seeded_rng, SampleBounds};

pub const CERTIFICATE_FORMAT: &str = "quasilin-certificates/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("invalid proof context: {0}")]
    BadContext(String),
    #[error("membership fails at m = {m}")]
    Membership { m: u64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

impl VerifyError {
    pub fn is_resource_guard(&self) -> bool {
        use AlgebraError::ResourceGuard as G;
        matches!(
            self,
            VerifyError::Algebra(G { .. })
                | VerifyError::Matrix(MatrixError::Algebra(G { .. }))
                | VerifyError::Factor(FactorError::Algebra(G { .. }))
                | VerifyError::Factor(FactorError::Matrix(MatrixError::Algebra(G { .. })))
        )
    }
}

/// Record of one statement checked over one ring, symbolically or on a
/// batch of numeric points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCertificate {
    pub statement_id: String,
    pub description: String,
    pub mode: String,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub term_order: Option<String>,
    pub instances: usize,
    pub context_hash: String,
    pub checks: Vec<Check>,
    pub residual_is_zero: bool,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Check `st` on every context; all contexts must share one ring.
pub fn certify<R: Ring>(
    st: Statement,
    contexts: &[ProofContext<R>],
    timing: bool,
) -> Result<ProofCertificate, VerifyError> {
    let first = contexts
        .first()
        .ok_or_else(|| VerifyError::BadContext("no contexts to check".into()))?;
    let start = Instant::now();
    let mut checks: Vec<Check> = Vec::new();
    let mut failure = None;
    for ctx in contexts {
        match ctx.checks(st) {
            Ok(cs) => {
                if checks.is_empty() {
                    checks = cs.clone();
                }
                for (agg, c) in checks.iter_mut().zip(&cs) {
                    if !c.passed && failure.is_none() {
                        failure = Some(format!("{}: `{}` fails", ctx.label(), c.name));
                    }
                    agg.passed &= c.passed;
                }
            }
            Err(e) if e.is_resource_guard() => return Err(e),
            Err(e) => {
                failure.get_or_insert_with(|| format!("{}: {e}", ctx.label()));
            }
        }
    }
    let passed = failure.is_none() && !checks.is_empty() && checks.iter().all(|c| c.passed);
    let context_hash = if contexts.len() == 1 {
        first.context_hash()
    } else {
        let mut h = Sha256::new();
        for c in contexts {
            h.update(c.context_hash().as_bytes());
        }
        hex::encode(&h.finalize()[..8])
    };
    let mut witnesses = BTreeMap::new();
    if passed && first.is_symbolic() {
        for (name, m) in first.witnesses(st) {
            witnesses.insert(name, m.render_rows());
        }
    }
    Ok(ProofCertificate {
        statement_id: st.id().into(),
        description: st.description().into(),
        mode: if first.is_symbolic() { "symbolic" } else { "numeric" }.into(),
        ring: first.ring().header(),
        term_order: None,
        instances: contexts.len(),
        context_hash,
        checks,
        residual_is_zero: passed,
        passed,
        failure,
        witnesses,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

macro_rules! single_statement {
    ($($(#[$m:meta])* $name:ident => $st:ident;)*) => {$(
        $(#[$m])*
        pub fn $name<R: Ring>(ctx: &ProofContext<R>) -> Result<ProofCertificate, VerifyError> {
            certify(Statement::$st, std::slice::from_ref(ctx), false)
        }
    )*};
}

single_statement! {
    verify_dv_identity => DvIdentity;
    verify_zxy_identity => ZxyIdentity;
    verify_x_z_shapes => XzShapes;
    verify_n_ring => NRing;
    verify_gamma_n_group => GammaNGroup;
    verify_normalizer => Normalizer;
    verify_t_conjugation => TConjugation;
    verify_power_identity => PowerIdentity;
    verify_elementary_conjugate_to_inverse => ElementaryConjugateToInverse;
}

/// Where numeric points come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSource {
    /// The prime field `F_p`, written `F7`.
    Field(u64),
    /// Any euclidean ring spec such as `Z` or `Fp[x]:101`.
    Ring(RingSpec),
}

impl fmt::Display for InstanceSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSource::Field(p) => write!(f, "F{p}"),
            InstanceSource::Ring(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for InstanceSource {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(p) = s.strip_prefix('F').and_then(|t| t.parse::<u64>().ok()) {
            PrimeField::new(p)?;
            return Ok(InstanceSource::Field(p));
        }
        Ok(InstanceSource::Ring(s.parse()?))
    }
}

pub fn default_sources() -> Vec<InstanceSource> {
    vec![
        InstanceSource::Field(7),
        InstanceSource::Field(101),
        InstanceSource::Field(5),
        InstanceSource::Field(11),
        InstanceSource::Field(13),
        InstanceSource::Ring(RingSpec::Integers),
        InstanceSource::Ring(RingSpec::PolyOverPrimeField(7)),
    ]
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Numeric points per source.
    pub instances: usize,
    pub numeric_only: bool,
    pub sources: Vec<InstanceSource>,
    pub mutation: Option<Mutation>,
    pub symbolic_power_depth: u64,
    pub numeric_power_depth: u64,
    pub term_limit: usize,
    /// Record wall-clock time per certificate (breaks byte-identical output).
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            instances: 200,
            numeric_only: false,
            sources: default_sources(),
            mutation: None,
            symbolic_power_depth: 8,
            numeric_power_depth: 8,
            term_limit: DEFAULT_TERM_LIMIT,
            timing: false,
        }
    }
}

/// All certificates from one run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofRun {
    pub format: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    pub passed: bool,
    pub certificates: Vec<ProofCertificate>,
}

impl ProofRun {
    pub fn failures(&self) -> impl Iterator<Item = &ProofCertificate> {
        self.certificates.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One line per certificate: statement, mode, ring, points, verdict.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "{:<32} {:<9} {:<34} {:>6}  {}\n",
            "statement", "mode", "ring", "points", "result"
        );
        for c in &self.certificates {
            let ring = if c.ring.len() > 34 {
                format!("{}...", &c.ring[..31])
            } else {
                c.ring.clone()
            };
            out.push_str(&format!(
                "{:<32} {:<9} {:<34} {:>6}  {}\n",
                c.statement_id,
                c.mode,
                ring,
                c.instances,
                if c.passed { "PASS" } else { "FAIL" }
            ));
        }
        out.push('\n');
        for st in Statement::ALL {
            out.push_str(&format!("{:<32} {}\n", st.id(), st.description()));
        }
        out
    }
}

fn numeric_batch<R: Ring, G: Rng>(
    ring: R,
    rng: &mut G,
    config: &VerifyConfig,
    mut draw: impl FnMut(&mut G) -> R::Elem,
    out: &mut Vec<ProofCertificate>,
) -> Result<(), VerifyError> {
    let mut contexts = Vec::with_capacity(config.instances);
    for _ in 0..config.instances {
        let mut ctx =
            ProofContext::random_instance(ring.clone(), rng, &mut draw)?.with_power_depth(config.numeric_power_depth);
        if let Some(m) = config.mutation {
            ctx = ctx.with_mutation(m)?;
        }
        contexts.push(ctx);
    }
    if contexts.is_empty() {
        return Ok(());
    }
    for st in Statement::ALL {
        out.push(certify(st, &contexts, config.timing)?);
    }
    Ok(())
}

/// Symbolic pass (unless `numeric_only`) followed by a numeric batch per
/// source, all drawn from one generator seeded with `config.seed`.
pub fn run_all(config: &VerifyConfig) -> Result<ProofRun, VerifyError> {
    let mut certificates = Vec::new();
    if !config.numeric_only {
        let qctx = QuotientContext::standard().with_term_limit(config.term_limit);
        let order = qctx.term_order();
        let mut ctx = ProofContext::symbolic(QuotientRing::new(qctx))?.with_power_depth(config.symbolic_power_depth);
        if let Some(m) = config.mutation {
            ctx = ctx.with_mutation(m)?;
        }
        for st in Statement::ALL {
            let mut cert = certify(st, std::slice::from_ref(&ctx), config.timing)?;
            cert.term_order = Some(order.clone());
            certificates.push(cert);
        }
    }
    let mut rng = seeded_rng(config.seed);
    for source in &config.sources {
        match source {
            InstanceSource::Field(p) => {
                let field = PrimeField::new(*p)?;
                let p = *p;
                numeric_batch(field, &mut rng, config, |r| r.gen_range(0..p), &mut certificates)?;
            }
            InstanceSource::Ring(spec) => {
                let bounds = SampleBounds {
                    int_bound: 10,
                    max_degree: 2,
                };
                let s = *spec;
                numeric_batch(
                    *spec,
                    &mut rng,
                    config,
                    |r| random_element(&s, r, bounds),
                    &mut certificates,
                )?;
            }
        }
    }
    Ok(ProofRun {
        format: CERTIFICATE_FORMAT.into(),
        seed: config.seed,
        mutation: config.mutation.map(|m| m.to_string()),
        passed: !certificates.is_empty() && certificates.iter().all(|c| c.passed),
        certificates,
    })
}
