//! The `quasilin` command line. Exit codes: 0 success, 1 a certificate or
//! in-process check failed, 2 bad input (parse, usage, I/O), 3 determinant
//! not 1, 4 resource guard or enumeration cap exceeded.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::AlgebraError;
use crate::factor::{dv_decompose, elementary_as_commutator, factor_sln, FactorError};
use crate::io::{read_json, to_json, write_atomic, DvFile, DvInputFile, FactorizationFile, IoError, MatrixFile};
use crate::matrix::{Matrix, MatrixError};
use crate::multipoly::DEFAULT_TERM_LIMIT;
use crate::qh::{
    homogenize, is_conjugate_to_inverse, scl_estimate, witness_product, CommutatorLengths, FiniteGroup, GroupSpec,
    QhError, RealValuedMap, Sl2Fp, Symmetric, TableGroup, DEFAULT_CAP,
};
use crate::ring::{Ring, RingElement, RingSpec};
use crate::rng::{random_sl, seeded_rng, SampleBounds};
use crate::verify::{default_sources, run_all, InstanceSource, Mutation, MutationTarget, VerifyConfig, VerifyError};

pub const OUT_DIR_ENV: &str = "QUASILIN_OUT_DIR";
pub const CL_BOUND_FORMAT: &str = "quasilin-cl-bound/1";
pub const SCL_FORMAT: &str = "quasilin-scl/1";
pub const RING_INFO_FORMAT: &str = "quasilin-ring-info/1";

#[derive(Debug, Parser)]
#[command(
    name = "quasilin",
    version,
    about = "Exact SL_n factorization, proof certificates and commutator-length experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output file (defaults to a per-command name in the output directory).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for default output files.
    #[arg(long, global = true, env = OUT_DIR_ENV, default_value = "quasilin-out")]
    pub out_dir: PathBuf,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor an SL_n matrix into elementary matrices.
    Factor(FactorArgs),
    /// Four-factor unitriangular decomposition of diag(p, q, r).
    Dv(DvArgs),
    /// Check every block-matrix identity and write certificates.
    VerifyProof(VerifyArgs),
    /// Commutator-length upper bound for an SL_n matrix, n >= 3.
    ClBound(FactorArgs),
    /// Exact cl and scl estimates in a finite group.
    Scl(SclArgs),
    /// Describe a coefficient ring.
    RingInfo(RingInfoArgs),
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// Matrix file; without it a random matrix is sampled.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Ring for sampled matrices.
    #[arg(long, default_value = "Z")]
    pub ring: RingSpec,
    /// Size of sampled matrices.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Number of elementary factors in a sampled matrix.
    #[arg(long, default_value_t = 20)]
    pub length: usize,
}

#[derive(Debug, Args)]
pub struct DvArgs {
    /// Input file with blocks p, q and optional r.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Ring for sampled 2x2 blocks.
    #[arg(long, default_value = "Z")]
    pub ring: RingSpec,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Numeric points per ring.
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    /// Skip the symbolic pass.
    #[arg(long)]
    pub numeric_only: bool,
    /// Restrict numeric points to one ring (`F7`, `Z`, `Fp[x]:101`, ...).
    #[arg(long)]
    pub ring: Option<InstanceSource>,
    /// Bound on the number of terms of any intermediate polynomial.
    #[arg(long, default_value_t = DEFAULT_TERM_LIMIT)]
    pub term_limit: usize,
    /// Add 1 to one entry of X1, X2, X, Z or T, e.g. `X2` or `T[3,1]`.
    #[arg(long, hide = true)]
    pub mutate: Option<String>,
}

#[derive(Debug, Args)]
pub struct SclArgs {
    /// `SL2:Fp`, `symmetric:n` or `table:<file>`.
    #[arg(long)]
    pub group: GroupSpec,
    /// Elements to report on (repeatable).
    #[arg(long = "element", allow_hyphen_values = true)]
    pub elements: Vec<String>,
    /// Largest power n in cl(g^n)/n.
    #[arg(long, default_value_t = 8)]
    pub nmax: u64,
    /// Doubling level for cl(g^(2^k))/2^k.
    #[arg(long, default_value_t = 4)]
    pub kmax: u32,
    /// Largest group order that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
}

#[derive(Debug, Args)]
pub struct RingInfoArgs {
    #[arg(long, default_value = "Z")]
    pub ring: RingSpec,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Qh(#[from] QhError),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

fn is_guard(e: &AlgebraError) -> bool {
    matches!(e, AlgebraError::ResourceGuard { .. })
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Algebra(e) if is_guard(e) => 4,
            CliError::Matrix(MatrixError::Algebra(e)) if is_guard(e) => 4,
            CliError::Factor(FactorError::NotUnimodular { .. } | FactorError::NotUnitProduct) => 3,
            CliError::Factor(FactorError::Algebra(e)) if is_guard(e) => 4,
            CliError::Factor(FactorError::Matrix(MatrixError::Algebra(e))) if is_guard(e) => 4,
            CliError::Verify(e) if e.is_resource_guard() => 4,
            CliError::Qh(QhError::CapExceeded { .. }) => 4,
            _ => 2,
        }
    }
}

struct Ctx<'a> {
    out: Option<&'a Path>,
    out_dir: &'a Path,
    seed: u64,
}

impl Ctx<'_> {
    fn target(&self, default_name: &str) -> PathBuf {
        self.out
            .map(Path::to_path_buf)
            .unwrap_or_else(|| self.out_dir.join(default_name))
    }

    fn write(&self, default_name: &str, contents: &str, w: &mut dyn Write) -> Result<(), CliError> {
        let path = self.target(default_name);
        write_atomic(&path, contents)?;
        let _ = writeln!(w, "wrote {}", path.display());
        Ok(())
    }
}

/// Parse arguments and run; returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Run a parsed command; `Ok(1)` means the run completed with failed checks.
pub fn run(cli: &Cli, w: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Ctx {
        out: cli.out.as_deref(),
        out_dir: &cli.out_dir,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Factor(a) => cmd_factor(&ctx, a, w),
        Command::Dv(a) => cmd_dv(&ctx, a, w),
        Command::VerifyProof(a) => cmd_verify_proof(&ctx, a, w),
        Command::ClBound(a) => cmd_cl_bound(&ctx, a, w),
        Command::Scl(a) => cmd_scl(&ctx, a, w),
        Command::RingInfo(a) => cmd_ring_info(&ctx, a, w),
    }
}

fn load_or_sample(ctx: &Ctx, a: &FactorArgs) -> Result<Matrix<RingSpec>, CliError> {
    match &a.input {
        Some(path) => Ok(read_json::<MatrixFile>(path)?.to_matrix()?),
        None => {
            if a.n < 2 {
                return Err(CliError::Usage(format!("--n must be at least 2, got {}", a.n)));
            }
            let mut rng = seeded_rng(ctx.seed);
            Ok(random_sl(&a.ring, a.n, a.length, &mut rng, SampleBounds::default())?.0)
        }
    }
}

fn cmd_factor(ctx: &Ctx, a: &FactorArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let m = load_or_sample(ctx, a)?;
    let result = factor_sln(&m)?;
    if !result.verify() {
        return Err(CliError::CheckFailed(
            "factor product does not reproduce the input".into(),
        ));
    }
    let file = FactorizationFile::new(&result);
    let _ = writeln!(w, "ring {}  n = {}  factors: {}", file.ring, file.n, file.count);
    if file.n >= 3 {
        let _ = writeln!(w, "cl upper bound: {}", file.count);
    }
    for f in &file.factors {
        let _ = writeln!(w, "  E[{},{}]({})", f.i, f.j, f.value);
    }
    ctx.write("factor.json", &to_json(&file), w)?;
    Ok(0)
}

fn cmd_dv(ctx: &Ctx, a: &DvArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let (p, q, r) = match &a.input {
        Some(path) => {
            let (_, p, q, r) = read_json::<DvInputFile>(path)?.matrices()?;
            let r = match r {
                Some(r) => r,
                None => p.mul(&q)?.inverse().map_err(|_| FactorError::NotInvertible("pq"))?,
            };
            (p, q, r)
        }
        None => {
            let mut rng = seeded_rng(ctx.seed);
            let p = random_sl(&a.ring, 2, 6, &mut rng, SampleBounds::default())?.0;
            let q = random_sl(&a.ring, 2, 6, &mut rng, SampleBounds::default())?.0;
            let r = p.mul(&q)?.inverse()?;
            (p, q, r)
        }
    };
    let d = dv_decompose(&p, &q, &r)?;
    let file = DvFile::new(&d);
    let _ = writeln!(
        w,
        "shapes L/U/L/U: {}  product = diag(p,q,r): {}",
        file.shapes_ok, file.product_check
    );
    ctx.write("dv.json", &to_json(&file), w)?;
    Ok(if file.shapes_ok && file.product_check { 0 } else { 1 })
}

/// `X2` (entry (1,3)) or `X2[i,j]` with 1-based indices.
pub fn parse_mutation(text: &str) -> Result<Mutation, CliError> {
    let bad = || CliError::Usage(format!("bad mutation `{text}` (expected e.g. X2 or T[3,1])"));
    let (name, pos) = match text.split_once('[') {
        Some((n, rest)) => (n, Some(rest.strip_suffix(']').ok_or_else(bad)?)),
        None => (text, None),
    };
    let target: MutationTarget = name.parse().map_err(|_| bad())?;
    let (row, col) = match pos {
        None => (0, 2),
        Some(p) => {
            let (i, j) = p.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            if !(1..=6).contains(&i) || !(1..=6).contains(&j) {
                return Err(bad());
            }
            (i - 1, j - 1)
        }
    };
    Ok(Mutation { target, row, col })
}

fn cmd_verify_proof(ctx: &Ctx, a: &VerifyArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let config = VerifyConfig {
        seed: ctx.seed,
        instances: a.instances,
        numeric_only: a.numeric_only,
        sources: a.ring.clone().map(|r| vec![r]).unwrap_or_else(default_sources),
        mutation: a.mutate.as_deref().map(parse_mutation).transpose()?,
        term_limit: a.term_limit,
        ..VerifyConfig::default()
    };
    let run = run_all(&config)?;
    let _ = write!(w, "{}", run.summary_table());
    for c in run.failures() {
        let _ = writeln!(
            w,
            "FAILED {} [{}]: {}",
            c.statement_id,
            c.ring,
            c.failure.as_deref().unwrap_or("")
        );
    }
    let _ = writeln!(w, "overall: {}", if run.passed { "PASS" } else { "FAIL" });
    ctx.write("certificates.json", &run.to_json(), w)?;
    Ok(if run.passed { 0 } else { 1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClBoundFile {
    pub format: String,
    pub ring: String,
    pub n: usize,
    pub input: Vec<Vec<String>>,
    pub cl_upper_bound: usize,
    pub commutator_witnesses_verified: bool,
}

fn cmd_cl_bound(ctx: &Ctx, a: &FactorArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let m = load_or_sample(ctx, a)?;
    if m.rows() < 3 {
        return Err(FactorError::TooSmall { n: m.rows(), min: 3 }.into());
    }
    let result = factor_sln(&m)?;
    if !result.verify() {
        return Err(CliError::CheckFailed(
            "factor product does not reproduce the input".into(),
        ));
    }
    // each elementary factor is one commutator; check every witness
    let mut verified = true;
    for e in &result.factors {
        verified &= elementary_as_commutator(&result.ring, e)?.verify();
    }
    let file = ClBoundFile {
        format: CL_BOUND_FORMAT.into(),
        ring: result.ring.to_string(),
        n: m.rows(),
        input: m.render_rows(),
        cl_upper_bound: result.len(),
        commutator_witnesses_verified: verified,
    };
    let _ = writeln!(w, "cl <= {} (witnesses verified: {verified})", file.cl_upper_bound);
    ctx.write("cl-bound.json", &to_json(&file), w)?;
    Ok(if verified { 0 } else { 1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub element: String,
    pub order: u64,
    pub in_commutator_subgroup: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cl: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<[String; 2]>,
    pub scl_estimate: Option<String>,
    pub scl_best_n: Option<u64>,
    /// `cl(g^(2^k)) / 2^k` when that power lies in the commutator subgroup.
    pub cl_doubling: Option<String>,
    pub conjugate_to_inverse_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SclReport {
    pub format: String,
    pub group: String,
    pub order: u128,
    pub commutator_subgroup_order: usize,
    pub distinct_commutators: usize,
    pub n_max: u64,
    pub k_max: u32,
    /// Number of elements of the commutator subgroup with each cl value.
    pub cl_histogram: BTreeMap<u32, usize>,
    pub elements: Vec<ElementReport>,
}

fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn scl_report<G>(group: &G, a: &SclArgs, spec: &GroupSpec) -> Result<SclReport, CliError>
where
    G: FiniteGroup + Clone + Send + Sync + 'static,
    G::Elem: Send + Sync,
{
    let lengths = CommutatorLengths::new(group, a.cap)?;
    let cl_map = {
        let l = lengths.clone();
        RealValuedMap::new("cl", move |g: &G::Elem| {
            BigRational::from_integer(l.cl(g).map(|r| r.cl).unwrap_or(0).into())
        })
    };
    let mut elements = Vec::new();
    for text in &a.elements {
        let g = group.parse_elem(text)?;
        let inside = lengths.contains(&g);
        let record = inside.then(|| lengths.cl(&g)).transpose()?;
        if let Some(r) = &record {
            if witness_product(group, &r.witness) != g {
                return Err(CliError::CheckFailed(format!(
                    "cl witness for {text} does not multiply back"
                )));
            }
        }
        let scl = match scl_estimate(&lengths, &g, a.nmax) {
            Ok(s) => Some(s),
            Err(QhError::NoQualifyingPower { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let doubled = group.pow_two_power(&g, a.kmax);
        let cl_doubling = if a.kmax >= 1 && lengths.contains(&doubled) {
            Some(rational(&homogenize(group, &cl_map, &g, a.kmax)?))
        } else {
            None
        };
        let conj = is_conjugate_to_inverse(group, &g, a.cap)?;
        elements.push(ElementReport {
            element: group.render(&g),
            order: group.order_of(&g),
            in_commutator_subgroup: inside,
            cl: record.as_ref().map(|r| r.cl),
            witness: record
                .map(|r| {
                    r.witness
                        .iter()
                        .map(|(x, y)| [group.render(x), group.render(y)])
                        .collect()
                })
                .unwrap_or_default(),
            scl_estimate: scl.as_ref().map(|s| rational(&s.value)),
            scl_best_n: scl.as_ref().map(|s| s.best_n),
            cl_doubling,
            conjugate_to_inverse_by: conj.map(|t| group.render(&t)),
        });
    }
    Ok(SclReport {
        format: SCL_FORMAT.into(),
        group: spec.to_string(),
        order: group.order(),
        commutator_subgroup_order: lengths.subgroup_order(),
        distinct_commutators: lengths.commutator_count(),
        n_max: a.nmax,
        k_max: a.kmax,
        cl_histogram: lengths.histogram(),
        elements,
    })
}

fn cmd_scl(ctx: &Ctx, a: &SclArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let report = match &a.group {
        GroupSpec::Sl2(p) => scl_report(&Sl2Fp::new(*p)?, a, &a.group)?,
        GroupSpec::Symmetric(n) => scl_report(&Symmetric::new(*n)?, a, &a.group)?,
        GroupSpec::Table(path) => scl_report(&TableGroup::load(Path::new(path))?, a, &a.group)?,
    };
    let _ = writeln!(
        w,
        "{}: order {}, commutator subgroup order {}, {} distinct commutators",
        report.group, report.order, report.commutator_subgroup_order, report.distinct_commutators
    );
    let _ = writeln!(w, "cl  elements");
    for (cl, count) in &report.cl_histogram {
        let _ = writeln!(w, "{cl:>2}  {count}");
    }
    for e in &report.elements {
        let show = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".into());
        let _ = writeln!(
            w,
            "{}: order {}, cl {}, scl <= {} (n = {}), cl(g^2^{})/2^{} = {}, inverted by {}",
            e.element,
            e.order,
            e.cl.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
            show(&e.scl_estimate),
            e.scl_best_n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
            report.k_max,
            report.k_max,
            show(&e.cl_doubling),
            show(&e.conjugate_to_inverse_by),
        );
    }
    ctx.write("scl.json", &to_json(&report), w)?;
    Ok(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInfoFile {
    pub format: String,
    pub ring: String,
    pub description: String,
    pub polynomial: bool,
    /// All units when finitely many, otherwise a description.
    pub units: Vec<String>,
}

fn units(ring: &RingSpec) -> Vec<String> {
    match ring {
        RingSpec::Integers => vec!["1".into(), "-1".into()],
        RingSpec::GaussianIntegers => crate::ring::GaussianInt::units()
            .iter()
            .map(|u| u.to_string())
            .collect(),
        RingSpec::PolyOverPrimeField(p) => (1..*p)
            .take(16)
            .map(|c| ring.render(&RingElement::poly_fp(*p, &[c as i64])))
            .chain((*p > 17).then(|| "...".to_string()))
            .collect(),
        RingSpec::PolyOverRationals => vec!["nonzero constants".into()],
    }
}

fn cmd_ring_info(ctx: &Ctx, a: &RingInfoArgs, w: &mut dyn Write) -> Result<i32, CliError> {
    let file = RingInfoFile {
        format: RING_INFO_FORMAT.into(),
        ring: a.ring.to_string(),
        description: a.ring.describe(),
        polynomial: a.ring.is_polynomial(),
        units: units(&a.ring),
    };
    let _ = writeln!(w, "{}: {}", file.ring, file.description);
    let _ = writeln!(w, "units: {}", file.units.join(", "));
    ctx.write("ring-info.json", &to_json(&file), w)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutation_syntax() {
        let m = parse_mutation("X2").unwrap();
        assert_eq!((m.target, m.row, m.col), (MutationTarget::X2, 0, 2));
        let m = parse_mutation("T[3,1]").unwrap();
        assert_eq!((m.target, m.row, m.col), (MutationTarget::T, 2, 0));
        assert!(parse_mutation("Q").is_err());
        assert!(parse_mutation("X[7,1]").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::CheckFailed("x".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Factor(FactorError::NotUnimodular { det: "2".into() }).exit_code(),
            3
        );
        let guard = AlgebraError::ResourceGuard { terms: 9, limit: 1 };
        assert_eq!(CliError::Verify(VerifyError::Algebra(guard)).exit_code(), 4);
        assert_eq!(CliError::Qh(QhError::CapExceeded { size: 9, cap: 1 }).exit_code(), 4);
    }
}
