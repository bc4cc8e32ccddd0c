//! Batch command-line surface: parse polynomial files, run every
//! verification, and emit human-readable or machine-readable reports.
//!
//! Exit codes: 0 when the run's verdict is pass (or the scan simply
//! completed, for enumeration commands); 1 when a verified property failed
//! and a counterexample was emitted; 2 for usage, file, or parse errors.
//! Commands with a `--json` flag print a single report object with a
//! `schema_version` field; rerunning any command with identical arguments
//! (and seed) is byte-identical, so wall-clock timings never enter JSON
//! output. Progress and shard logs go to stderr.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cyclotomic::{cyclotomic_polynomial, CycElem};
use crate::error::{Error, Result};
use crate::spectral::{
    circulant, find_vanishing_minors, verify_chebotarev, SparsePoly, VerifyMode,
};
use crate::uncertainty::{
    check_bound, classify_extremal, enumerate_extremal, verify_theorem_exhaustive, BoundReport,
    ExtremalDescriptor, TheoremReport,
};

/// On-disk polynomial document. JSON form:
/// `{"n": 4, "terms": [{"exp": 0, "coeff": "1"}, {"exp": 2, "coeff": "1"}]}`;
/// text form: a `n=4` header line followed by one `exp coeff` line per term.
/// The format is auto-detected from the first non-whitespace byte.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyDocument {
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: usize,
    pub coeff: String,
}

impl PolyDocument {
    /// Validates the document and builds the polynomial: exponents must be
    /// distinct and in range, coefficients must parse to nonzero elements
    /// of Q(w_n).
    pub fn to_poly(&self) -> Result<SparsePoly> {
        if self.n == 0 {
            return Err(Error::Parse("n: must be positive".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.iter().enumerate() {
            if t.exp >= self.n {
                return Err(Error::Parse(format!(
                    "terms[{i}].exp: {} out of range for n = {}",
                    t.exp, self.n
                )));
            }
            if !seen.insert(t.exp) {
                return Err(Error::Parse(format!(
                    "terms[{i}].exp: duplicate exponent {}",
                    t.exp
                )));
            }
            let coeff = CycElem::parse(self.n, &t.coeff)
                .map_err(|e| Error::Parse(format!("terms[{i}].coeff: {e}")))?;
            if coeff.is_zero() {
                return Err(Error::Parse(format!(
                    "terms[{i}].coeff: coefficient must be nonzero"
                )));
            }
            terms.push((t.exp, coeff));
        }
        SparsePoly::new(self.n, terms)
    }

    pub fn parse_str(content: &str) -> Result<PolyDocument> {
        let trimmed = content.trim_start();
        if trimmed.starts_with('{') {
            return serde_json::from_str(content)
                .map_err(|e| Error::Parse(format!("polynomial JSON: {e}")));
        }
        let mut n: Option<usize> = None;
        let mut terms = Vec::new();
        for (lineno, raw) in content.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                let rest = line
                    .strip_prefix('n')
                    .map(str::trim_start)
                    .and_then(|r| r.strip_prefix('='))
                    .ok_or_else(|| {
                        Error::Parse(format!("line {}: expected `n=<int>` header", lineno + 1))
                    })?;
                n = Some(rest.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: n: bad integer {rest:?}", lineno + 1))
                })?);
                continue;
            }
            let Some((exp_tok, coeff_tok)) = line.split_once(char::is_whitespace) else {
                return Err(Error::Parse(format!(
                    "line {}: expected `exp coeff`",
                    lineno + 1
                )));
            };
            let exp: usize = exp_tok.parse().map_err(|_| {
                Error::Parse(format!("line {}: exp: bad integer {exp_tok:?}", lineno + 1))
            })?;
            terms.push(TermDoc {
                exp,
                coeff: coeff_tok.trim().to_string(),
            });
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n=<int>` header".into()))?;
        Ok(PolyDocument { n, terms })
    }

    pub fn load(path: &Path) -> Result<PolyDocument> {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("poly file {}: {e}", path.display())))?;
        Self::parse_str(&content)
    }
}

/// Top-level verdict of a run. `Violation` is reserved for
/// theorem-contradiction events and must never occur; its presence is the
/// loudest possible failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Violation,
}

/// The machine-readable report wrapper printed by `--json` commands.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: serde_json::Value,
    pub verdict: Verdict,
    pub payload: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunReport {
    fn new(command: &str, inputs: serde_json::Value, verdict: Verdict) -> Self {
        RunReport {
            schema_version: 1,
            command: command.to_string(),
            inputs,
            verdict,
            payload: serde_json::Value::Null,
            seed: None,
        }
    }

    fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail | Verdict::Violation => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "chebotarev",
    version,
    about = "Exact verification of DFT minor non-vanishing and the sparsity bound w*(n-k) >= n"
)]
struct Cli {
    /// Cap the worker-thread count (default: one per CPU). The
    /// CHEBOTAREV_THREADS environment variable is honored when the flag is
    /// absent.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th cyclotomic polynomial.
    Phi {
        #[arg(long)]
        n: usize,
    },
    /// Minors of the n x n DFT matrix.
    #[command(subcommand)]
    Minors(MinorsCommand),
    /// Circulant matrices of polynomial files.
    #[command(subcommand)]
    Circulant(CirculantCommand),
    /// Bound report for a polynomial file, with equality classification.
    Check(CheckArgs),
    /// The extremal family D_{n,r,l}.
    #[command(subcommand)]
    Extremal(ExtremalCommand),
    /// The full weight/root-count theorem at one n.
    #[command(subcommand)]
    Theorem(TheoremCommand),
}

#[derive(Subcommand)]
enum MinorsCommand {
    /// Assert that no minor vanishes (prime n) or report the first witness.
    Verify(MinorsVerifyArgs),
    /// Collect vanishing minors in lexicographic order.
    FindZero(FindZeroArgs),
}

#[derive(Args)]
struct MinorsVerifyArgs {
    #[arg(long)]
    n: usize,
    /// Enumerate every pair of equal-size index sets.
    #[arg(long)]
    exhaustive: bool,
    /// Draw COUNT subset pairs uniformly instead (requires --seed).
    #[arg(long, value_name = "COUNT")]
    sample: Option<u64>,
    /// Seed for the sampled mode; runs are bit-reproducible per seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FindZeroArgs {
    #[arg(long)]
    n: usize,
    /// Stop after this many witnesses.
    #[arg(long, default_value_t = 1)]
    max: usize,
}

#[derive(Subcommand)]
enum CirculantCommand {
    /// Exact rank of the circulant matrix of a polynomial.
    Rank(PolyFileArgs),
}

#[derive(Args)]
struct PolyFileArgs {
    /// Polynomial file (JSON or `n=`-headed text; auto-detected).
    #[arg(long)]
    poly: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    /// Polynomial file (JSON or `n=`-headed text; auto-detected).
    #[arg(long)]
    poly: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ExtremalCommand {
    /// List every (r, l) with r | n and 0 <= l < r, with its polynomial.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum TheoremCommand {
    /// Exhaustively verify the bound and its equality cases at one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Parses argv, runs the selected command, prints its report, and returns
/// the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("CHEBOTAREV_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let execute = || match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    match threads.filter(|&t| t > 0) {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(execute),
            Err(e) => {
                eprintln!("error: cannot build thread pool: {e}");
                2
            }
        },
        None => execute(),
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Phi { n } => {
            if n == 0 {
                return Err(Error::InvalidInput("phi needs n >= 1".into()));
            }
            println!("Phi_{n}(x) = {}", cyclotomic_polynomial(n));
            Ok(0)
        }
        Command::Minors(MinorsCommand::Verify(args)) => minors_verify(args),
        Command::Minors(MinorsCommand::FindZero(args)) => minors_find_zero(args),
        Command::Circulant(CirculantCommand::Rank(args)) => circulant_rank(args),
        Command::Check(args) => check(args),
        Command::Extremal(ExtremalCommand::Enumerate { n }) => extremal_enumerate(n),
        Command::Theorem(TheoremCommand::Verify { n, json }) => theorem_verify(n, json),
    }
}

fn minors_verify(args: MinorsVerifyArgs) -> Result<i32> {
    let mode = match (args.exhaustive, args.sample) {
        (true, None) => VerifyMode::Exhaustive,
        (false, Some(count)) => {
            let seed = args.seed.ok_or_else(|| {
                Error::InvalidInput("--sample requires an explicit --seed".into())
            })?;
            VerifyMode::Sampled { count, seed }
        }
        (false, None) => {
            return Err(Error::InvalidInput(
                "choose a mode: --exhaustive or --sample COUNT --seed S".into(),
            ))
        }
        (true, Some(_)) => {
            return Err(Error::InvalidInput(
                "--exhaustive and --sample are mutually exclusive".into(),
            ))
        }
    };
    let report = verify_chebotarev(args.n, mode)?;
    for level in &report.levels {
        eprintln!(
            "shard size={}: {} minors, {} zero",
            level.size, level.checked, level.zeros
        );
    }
    let verdict = if report.passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut run = RunReport::new("minors verify", json!({"n": args.n, "mode": mode}), verdict);
    run.payload = serde_json::to_value(&report).expect("report serializes");
    if let VerifyMode::Sampled { seed, .. } = mode {
        run.seed = Some(seed);
    }
    if args.json {
        println!("{}", render_json(&run));
    } else {
        println!(
            "minors verify: n = {}, mode = {}",
            args.n,
            match mode {
                VerifyMode::Exhaustive => "exhaustive".to_string(),
                VerifyMode::Sampled { count, seed } =>
                    format!("sampled (count = {count}, seed = {seed})"),
            }
        );
        if let Some(w) = &report.first_witness {
            println!("first vanishing minor: {}", witness_record(w));
        }
        println!(
            "verdict: {} ({} minors checked) [{} ms]",
            verdict_str(verdict),
            report.minors_checked,
            report.elapsed.as_millis()
        );
    }
    Ok(run.exit_code())
}

fn minors_find_zero(args: FindZeroArgs) -> Result<i32> {
    let witnesses = find_vanishing_minors(args.n, args.max)?;
    for w in &witnesses {
        println!("{}", witness_record(w));
    }
    println!(
        "found {} vanishing minor{} (n = {}, max = {})",
        witnesses.len(),
        if witnesses.len() == 1 { "" } else { "s" },
        args.n,
        args.max
    );
    Ok(0)
}

/// The witness record serialization: fields n, rows, cols, det (element
/// text syntax), integers in decimal.
fn witness_record(w: &crate::spectral::MinorWitness) -> String {
    serde_json::to_string(w).expect("witness serializes")
}

fn circulant_rank(args: PolyFileArgs) -> Result<i32> {
    let doc = PolyDocument::load(&args.poly)?;
    let poly = doc.to_poly()?;
    let rank = circulant(&poly).rank();
    println!(
        "circulant rank: n = {}, weight = {}, rank = {}",
        poly.modulus(),
        poly.weight(),
        rank
    );
    Ok(0)
}

fn check(args: CheckArgs) -> Result<i32> {
    let doc = PolyDocument::load(&args.poly)?;
    let poly = doc.to_poly()?;
    let bound = check_bound(&poly)?;
    let (verdict, descriptor, violation_note) = if !bound.holds {
        (
            Verdict::Violation,
            None,
            Some(format!(
                "bound violated: w * (n - k) = {} < n = {}",
                bound.product, bound.n
            )),
        )
    } else if bound.equality {
        match classify_extremal(&poly) {
            Ok(d) => (Verdict::Pass, d, None),
            Err(Error::TheoremViolation(msg)) => (Verdict::Violation, None, Some(msg)),
            Err(e) => return Err(e),
        }
    } else {
        (Verdict::Pass, None, None)
    };
    let mut run = RunReport::new(
        "check",
        json!({"poly": doc, "file": args.poly.display().to_string()}),
        verdict,
    );
    run.payload = json!({
        "bound": bound,
        "descriptor": descriptor,
        "violation": violation_note,
    });
    if args.json {
        println!("{}", render_json(&run));
    } else {
        render_check_human(&poly, &bound, descriptor.as_ref(), verdict, &violation_note);
    }
    Ok(run.exit_code())
}

fn render_check_human(
    poly: &SparsePoly,
    bound: &BoundReport,
    descriptor: Option<&ExtremalDescriptor>,
    verdict: Verdict,
    violation_note: &Option<String>,
) {
    println!("check: P = {poly}");
    println!(
        "bound: n = {}, w = {}, k = {}, product = {}",
        bound.n, bound.w, bound.k, bound.product
    );
    match (bound.holds, bound.equality) {
        (true, true) => println!("bound holds with equality"),
        (true, false) => println!("bound holds strictly"),
        (false, _) => println!("BOUND VIOLATED"),
    }
    if let Some(d) = descriptor {
        println!(
            "classified: r = {}, l = {}, j = {}, c = {}",
            d.r, d.l, d.j, d.c
        );
    }
    if let Some(note) = violation_note {
        println!("THEOREM VIOLATION: {note}");
    }
    println!("verdict: {}", verdict_str(verdict));
}

fn extremal_enumerate(n: usize) -> Result<i32> {
    let members = enumerate_extremal(n)?;
    for (r, l, poly) in &members {
        println!("(r = {r}, l = {l}): {poly}");
    }
    println!("{} family members for n = {n}", members.len());
    Ok(0)
}

fn theorem_verify(n: usize, json_out: bool) -> Result<i32> {
    let report: TheoremReport = verify_theorem_exhaustive(n)?;
    for shard in &report.shards {
        eprintln!(
            "shard w={} k={}: {} pairs, {} boundary kernels",
            shard.support_size, shard.root_size, shard.pairs, shard.boundary_kernels
        );
    }
    let verdict = if report.passed {
        Verdict::Pass
    } else {
        Verdict::Violation
    };
    let mut run = RunReport::new("theorem verify", json!({"n": n}), verdict);
    run.payload = serde_json::to_value(&report).expect("report serializes");
    if json_out {
        println!("{}", render_json(&run));
    } else {
        println!("theorem verify: n = {n}");
        for f in &report.strict_failures {
            println!(
                "STRICT FAILURE: support {:?}, roots {:?}",
                f.support, f.roots
            );
        }
        for a in &report.boundary_anomalies {
            println!(
                "BOUNDARY ANOMALY: support {:?}, roots {:?}: {}",
                a.support, a.roots, a.reason
            );
        }
        println!(
            "verdict: {} ({} pairs checked) [{} ms]",
            verdict_str(verdict),
            report.pairs_checked,
            report.elapsed.as_millis()
        );
    }
    Ok(run.exit_code())
}

fn render_json(run: &RunReport) -> String {
    serde_json::to_string_pretty(run).expect("report serializes")
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Violation => "violation",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_document_json_form() {
        let doc = PolyDocument::parse_str(
            r#"{"n": 4, "terms": [{"exp": 0, "coeff": "1"}, {"exp": 2, "coeff": "1"}]}"#,
        )
        .unwrap();
        let poly = doc.to_poly().unwrap();
        assert_eq!(poly.modulus(), 4);
        assert_eq!(poly.support(), vec![0, 2]);
    }

    #[test]
    fn poly_document_text_form() {
        let doc = PolyDocument::parse_str("# comment\n n = 6 \n1 1\n4 -1/2 * w^3\n").unwrap();
        let poly = doc.to_poly().unwrap();
        assert_eq!(poly.modulus(), 6);
        assert_eq!(poly.support(), vec![1, 4]);
    }

    #[test]
    fn poly_document_names_bad_fields() {
        let doc = PolyDocument {
            n: 4,
            terms: vec![TermDoc {
                exp: 7,
                coeff: "1".into(),
            }],
        };
        let err = doc.to_poly().unwrap_err().to_string();
        assert!(err.contains("terms[0].exp"), "{err}");

        let doc = PolyDocument {
            n: 4,
            terms: vec![TermDoc {
                exp: 1,
                coeff: "w - w".into(),
            }],
        };
        let err = doc.to_poly().unwrap_err().to_string();
        assert!(err.contains("terms[0].coeff"), "{err}");

        let doc = PolyDocument {
            n: 4,
            terms: vec![
                TermDoc {
                    exp: 1,
                    coeff: "1".into(),
                },
                TermDoc {
                    exp: 1,
                    coeff: "2".into(),
                },
            ],
        };
        let err = doc.to_poly().unwrap_err().to_string();
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn text_form_requires_header() {
        assert!(PolyDocument::parse_str("0 1\n").is_err());
    }

    #[test]
    fn run_report_json_shape() {
        let mut run = RunReport::new("check", json!({"n": 4}), Verdict::Pass);
        run.payload = json!({"w": 2});
        let text = render_json(&run);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["verdict"], "pass");
        assert!(v.get("seed").is_none());
    }
}
