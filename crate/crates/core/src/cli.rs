//! Command-line front end. Every command prints one JSON report
//! `{command, inputs_digest, results, seed, version}` on standard output.
//!
//! Exit codes: 0 success, 1 property violation, 2 input error; `equiv`
//! additionally uses 10 for inequivalent and 11 for undecided.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::construct;
use crate::equivalence::{self, EquivMode, Verdict};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::io::{self, CodeFile, PairFile, WitnessFile};
use crate::linalg::Tag;
use crate::netsim::{self, Codebook, Mode};
use crate::puncture::{self, PunctureContext};
use crate::rankcore::{self, LinearCode};
use crate::schemes::{self, Metric};
use crate::verify;
use crate::weights::{self, Method, RelMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INEQUIVALENT: i32 = 10;
pub const EXIT_UNKNOWN: i32 = 11;

#[derive(Parser, Debug)]
#[command(
    name = "rankmetric",
    version,
    about = "Rank-metric codes: weights, puncturing, equivalence, leakage and network simulation"
)]
pub struct Cli {
    /// Enumeration cap (default from RANKMETRIC_CAP, else 10^7).
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generalized rank and Hamming weights of a code, or relative weights of a pair.
    Weights(WeightsArgs),
    /// The bound suite, MRD classification and degeneracy.
    Bounds(BoundsArgs),
    /// Duality theorem, Galois-closure characterizations and Delsarte's lemma.
    Duality(CodeArg),
    /// Rank puncturing or shortening by a subspace L of F_q^n.
    Puncture(PunctureArgs),
    /// Decide rank-metric equivalence of two codes.
    Equiv(EquivArgs),
    /// Information leakage of a nested coset coding scheme.
    Leakage(LeakageArgs),
    /// Coherent network-coding channel experiment.
    Simulate(SimulateArgs),
    /// Emit a code file.
    Gen(GenArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CodeArg {
    #[arg(long)]
    pub code: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Def1,
    Def3,
    Def5,
    Maxmin,
    Bases,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub pair: Option<PathBuf>,
    /// Methods to cross-check (default: def1, def3, def5).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub methods: Vec<MethodArg>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub pair: Option<PathBuf>,
    /// Level r of the MRD classification.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct PunctureArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Generator matrix of L over F_q.
    #[arg(long = "L")]
    pub l: PathBuf,
    #[arg(long)]
    pub shorten: bool,
    /// Report the compressed code in F_{q^m}^{dim L}.
    #[arg(long)]
    pub compress: bool,
    /// Puncture along every complement L' and compare the results.
    #[arg(long)]
    pub all_complements: bool,
}

#[derive(Args, Debug)]
pub struct EquivArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long)]
    pub other: PathBuf,
    /// Candidate map `{beta, A}` to verify.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    /// Only compare invariants, without the exhaustive search.
    #[arg(long, conflicts_with = "witness")]
    pub invariants_only: bool,
}

#[derive(Args, Debug)]
pub struct LeakageArgs {
    #[arg(long)]
    pub pair: PathBuf,
    /// Observation matrix over F_q.
    #[arg(long = "B", conflicts_with = "all")]
    pub b: Option<PathBuf>,
    /// Bucket every observation subspace (and every index set).
    #[arg(long)]
    pub all: bool,
    /// Compare observed leakage per dimension with the piecewise predictions.
    #[arg(long)]
    pub profile: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecoderArg {
    Full,
    Sub,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Coherent,
    NonCoherent,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    pub code: Option<PathBuf>,
    #[arg(long)]
    pub pair: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    #[arg(long, default_value_t = 0)]
    pub rho: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number N of received packets (default n).
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long, value_enum, default_value_t = DecoderArg::Both)]
    pub decoder: DecoderArg,
    /// Fixed transfer matrix instead of random ones.
    #[arg(long = "A")]
    pub a: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Coherent)]
    pub mode: ModeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    Gabidulin,
    Random,
    GaloisClosed,
    Nondegenerate,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the code file here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `all` or one of: field, linalg, rankcore, weights, puncture, equivalence, schemes, netsim.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// Outcome of one command: the report payload and the exit code.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    inputs_digest: String,
    results: Value,
    seed: Option<u64>,
    version: &'static str,
}

struct Inputs(Vec<(String, Value)>);

impl Inputs {
    fn new() -> Self {
        Inputs(Vec::new())
    }
    fn file(&mut self, name: &str, path: &Path) -> Result<()> {
        self.0.push((name.into(), io::canonical(path)?));
        Ok(())
    }
    fn param(&mut self, name: &str, v: Value) {
        self.0.push((name.into(), v));
    }
    fn digest(&self) -> String {
        let mut h = Sha256::new();
        for (k, v) in &self.0 {
            h.update(k.as_bytes());
            h.update([0]);
            h.update(serde_json::to_string(v).expect("values serialize").as_bytes());
            h.update([0]);
        }
        hex::encode(h.finalize())
    }
}

fn envelope(command: &str, inputs: &Inputs, results: Value, seed: Option<u64>) -> Value {
    serde_json::to_value(Report {
        command,
        inputs_digest: inputs.digest(),
        results,
        seed,
        version: env!("CARGO_PKG_VERSION"),
    })
    .expect("report serializes")
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

/// Exit code for an error: 1 when a checked property failed, 2 otherwise.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::InternalInconsistency(_) | Error::AmbiguityDetected(_) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

fn load_code(path: &Path) -> Result<LinearCode> {
    let loaded = CodeFile::load(path)?.to_code()?;
    if loaded.dropped > 0 {
        eprintln!(
            "warning: {}: {} dependent generator row(s) dropped",
            path.display(),
            loaded.dropped
        );
    }
    Ok(loaded.code)
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let cap = cli.cap.unwrap_or_else(crate::default_cap);
    match cli.command {
        Command::Weights(a) => weights_cmd(a, cap),
        Command::Bounds(a) => bounds_cmd(a, cap),
        Command::Duality(a) => duality_cmd(a, cap),
        Command::Puncture(a) => puncture_cmd(a, cap),
        Command::Equiv(a) => equiv_cmd(a, cap),
        Command::Leakage(a) => leakage_cmd(a, cap),
        Command::Simulate(a) => simulate_cmd(a, cap),
        Command::Gen(a) => gen_cmd(a),
        Command::Verify(a) => verify_cmd(a, cap),
    }
}

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Def1 => Method::Def1,
        MethodArg::Def3 => Method::Def3,
        MethodArg::Def5 => Method::Def5,
        MethodArg::Maxmin => Method::MaxMin,
        MethodArg::Bases => Method::Bases,
    }
}

fn weights_cmd(a: WeightsArgs, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    if let Some(path) = &a.pair {
        inputs.file("pair", path)?;
        let p = PairFile::load(path)?.to_pair()?;
        let (c1, c2) = (p.c1(), p.c2());
        let mut profiles = Vec::new();
        for m in [RelMethod::Def1r, RelMethod::Def3r, RelMethod::Def5r] {
            profiles.push(weights::relative_grw(c1, c2, m, cap)?);
        }
        let agree = profiles.windows(2).all(|w| w[0].values == w[1].values);
        let mh = weights::relative_hamming_weights(c1, c2, cap)?;
        let bounds = weights::relative_bounds_report(&profiles[0].values, p.n(), p.k1(), p.k2(), p.field().m());
        let ok = agree && bounds.iter().all(|b| !b.applicable || b.holds);
        let results = json!({
            "M_R": profiles[0].values,
            "M_H": mh.values,
            "methods_agree": agree,
            "methods": profiles,
            "bounds": bounds,
        });
        return Ok(Outcome {
            report: envelope("weights", &inputs, results, None),
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        });
    }
    let path = a.code.as_ref().expect("clap enforces --code or --pair");
    inputs.file("code", path)?;
    let c = load_code(path)?;
    let methods: Vec<Method> = if a.methods.is_empty() {
        vec![Method::Def1, Method::Def3, Method::Def5]
    } else {
        a.methods.iter().map(|&m| method(m)).collect()
    };
    inputs.param("methods", to_value(&methods));
    let mut profiles = Vec::new();
    for m in &methods {
        profiles.push(weights::grw(&c, *m, cap)?);
    }
    let agree = profiles.windows(2).all(|w| w[0].values == w[1].values);
    let d = profiles[0].values.clone();
    let dh = weights::hamming_weights(&c, cap)?;
    let f = c.field();
    let bounds = weights::bounds_report(&d, c.n(), f.q() as u64, f.m());
    let ok = agree && bounds.iter().all(|b| !b.applicable || b.holds);
    let results = json!({
        "n": c.n(),
        "k": c.k(),
        "dim_closure": c.rank_weight(),
        "d_R": d,
        "d_H": dh.values,
        "methods_agree": agree,
        "methods": profiles,
        "bounds": bounds,
    });
    Ok(Outcome {
        report: envelope("weights", &inputs, results, None),
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn bounds_cmd(a: BoundsArgs, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    inputs.param("r", json!(a.r));
    if let Some(path) = &a.pair {
        inputs.file("pair", path)?;
        let p = PairFile::load(path)?.to_pair()?;
        let mv = weights::relative_grw(p.c1(), p.c2(), RelMethod::Def3r, cap)?.values;
        let bounds = weights::relative_bounds_report(&mv, p.n(), p.k1(), p.k2(), p.field().m());
        let ok = bounds.iter().all(|b| !b.applicable || b.holds);
        let results = json!({ "M_R": mv, "bounds": bounds });
        return Ok(Outcome {
            report: envelope("bounds", &inputs, results, None),
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        });
    }
    let path = a.code.as_ref().expect("clap enforces --code or --pair");
    inputs.file("code", path)?;
    let c = load_code(path)?;
    if a.r == 0 || a.r > c.k() {
        return Err(Error::InvalidParams(format!("r must lie in 1..={}", c.k())));
    }
    let f = c.field();
    let d = weights::grw_profile(&c, cap)?;
    let dh = weights::hamming_weights(&c, cap)?;
    let bounds = weights::bounds_report(&d, c.n(), f.q() as u64, f.m());
    let mrd = weights::classify_mrd(&c, a.r, cap)?;
    let ok = bounds.iter().all(|b| !b.applicable || b.holds);
    let results = json!({
        "d_R": d,
        "d_H": dh.values,
        "bounds": bounds,
        "mrd": mrd,
        "degeneracy": weights::degeneracy(&c),
    });
    Ok(Outcome {
        report: envelope("bounds", &inputs, results, None),
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn duality_cmd(a: CodeArg, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    inputs.file("code", &a.code)?;
    let c = load_code(&a.code)?;
    let report = weights::duality_check(&c, cap)?;
    let galois = rankcore::galois_characterize(&c, cap)?;
    let (delsarte_sub, delsarte_trace) = rankcore::delsarte_check(&c);
    let characteristic = rankcore::characteristic_check(c.field(), c.space());
    let ok =
        report.partition_holds && report.characterization_holds && delsarte_sub && delsarte_trace && characteristic;
    let results = json!({
        "duality": report,
        "galois": galois,
        "delsarte": { "subfield_perp_equals_trace_of_dual": delsarte_sub, "subfield_of_dual_equals_trace_perp": delsarte_trace },
        "characteristic": characteristic,
    });
    Ok(Outcome {
        report: envelope("duality", &inputs, results, None),
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn code_json(c: &LinearCode) -> Value {
    json!({ "n": c.n(), "k": c.k(), "G": io::matrix_json(c.field(), c.generator()) })
}

fn puncture_cmd(a: PunctureArgs, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    inputs.file("code", &a.code)?;
    inputs.file("L", &a.l)?;
    inputs.param("flags", json!([a.shorten, a.compress, a.all_complements]));
    let c = load_code(&a.code)?;
    let f = c.field().clone();
    let l = io::load_base_subspace(&f, c.n(), &a.l)?;
    let forney = puncture::forney_dims(&c, &l)?;
    let mut results = json!({
        "dim_L": l.dim(),
        "forney": forney,
        "information_space": puncture::is_information_space(&c, &l),
    });
    if a.shorten {
        let s = if a.compress {
            puncture::shorten_compressed(&c, &l)?
        } else {
            puncture::shorten(&c, &l)?
        };
        results["shortened"] = code_json(&s);
    } else {
        let ctx = PunctureContext::new(&f, &l)?;
        let p = if a.compress {
            puncture::puncture_compressed(&c, &ctx)
        } else {
            puncture::puncture_with(&c, &ctx)
        };
        results["punctured"] = code_json(&p);
    }
    if a.all_complements {
        let contexts = PunctureContext::all_complements(&f, &l, cap)?;
        let mut profiles = Vec::new();
        for ctx in &contexts {
            let p = puncture::puncture_with(&c, ctx);
            profiles.push(weights::grw_profile(&p, cap)?);
        }
        let same_profile = profiles.windows(2).all(|w| w[0] == w[1]);
        results["complements"] = json!({
            "count": contexts.len(),
            "grw_profiles_equal": same_profile,
            "grw_profile": profiles.first(),
        });
    }
    Ok(Outcome {
        report: envelope("puncture", &inputs, results, None),
        code: EXIT_OK,
    })
}

fn equiv_cmd(a: EquivArgs, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    inputs.file("code", &a.code)?;
    inputs.file("other", &a.other)?;
    let c1 = load_code(&a.code)?;
    let c2 = load_code(&a.other)?;
    if c1.field() != c2.field() || c1.n() != c2.n() {
        return Err(Error::Input("the two codes must share the field and the length".into()));
    }
    let f = c1.field().clone();
    let mode = if let Some(w) = &a.witness {
        inputs.file("witness", w)?;
        let domain = crate::linalg::Subspace::full(c1.n(), Tag::Ext);
        EquivMode::Verify(Box::new(WitnessFile::load(w)?.to_equivalence(&f, &domain)?))
    } else if a.invariants_only {
        EquivMode::Invariants
    } else {
        EquivMode::Search
    };
    let verdict = equivalence::codes_equivalent(&c1, &c2, &mode, cap)?;
    let (name, code, detail) = match &verdict {
        Verdict::Equivalent(eq) => ("equivalent", EXIT_OK, to_value(&WitnessFile::from_equivalence(&f, eq))),
        Verdict::Inequivalent(why) => ("inequivalent", EXIT_INEQUIVALENT, json!(why)),
        Verdict::PossiblyEquivalent => ("unknown", EXIT_UNKNOWN, Value::Null),
        Verdict::WitnessRejected(why) => ("witness_rejected", EXIT_UNKNOWN, json!(why)),
    };
    let results = json!({ "verdict": name, "detail": detail });
    Ok(Outcome {
        report: envelope("equiv", &inputs, results, None),
        code,
    })
}

fn leakage_cmd(a: LeakageArgs, cap: u128) -> Result<Outcome> {
    let mut inputs = Inputs::new();
    inputs.file("pair", &a.pair)?;
    inputs.param("flags", json!([a.all, a.profile]));
    let p = PairFile::load(&a.pair)?.to_pair()?;
    let f = p.field().clone();
    let mut results = json!({ "n": p.n(), "k1": p.k1(), "k2": p.k2(), "ell": p.ell() });
    let mut ok = true;
    if let Some(path) = &a.b {
        inputs.file("B", path)?;
        let b = io::load_matrix(&f, p.n(), path)?;
        let leak = schemes::leakage_of_matrix(&p, &b)?;
        let oracle = schemes::leakage_entropy_oracle(&p, &b, cap).ok();
        ok &= oracle.as_ref().is_none_or(|o| *o == schemes::rational(leak));
        results["leakage"] = json!(leak);
        results["mutual_information"] = json!(oracle.map(|o| o.to_string()));
    }
    if a.all {
        let mut out = serde_json::Map::new();
        for metric in [Metric::Rank, Metric::Hamming] {
            let s = schemes::access_structure(&p, metric, cap)?;
            let dual = schemes::access_duality_check(&p, metric, cap)?;
            ok &= dual;
            let buckets: Vec<Value> = match metric {
                Metric::Rank => s
                    .buckets
                    .iter()
                    .map(|b| b.iter().map(|l| io::matrix_json(&f, l.basis())).collect())
                    .collect(),
                Metric::Hamming => s.index_sets().into_iter().map(|x| json!(x)).collect(),
            };
            let key = if metric == Metric::Rank { "rank" } else { "hamming" };
            out.insert(key.into(), json!({ "buckets": buckets, "duality_holds": dual }));
        }
        results["access_structure"] = Value::Object(out);
    }
    if a.profile {
        let prof = schemes::leakage_profile(&p, cap)?;
        ok &= prof.all_hold;
        results["profile"] = to_value(&prof);
    }
    Ok(Outcome {
        report: envelope("leakage", &inputs, results, None),
        code: if ok { EXIT_OK } else { EXIT_VIOLATION },
    })
}

fn simulate_cmd(a: SimulateArgs, cap: u128) -> Result<Outcome> {
    netsim::require_coherent(match a.mode {
        ModeArg::Coherent => Mode::Coherent,
        ModeArg::NonCoherent => Mode::NonCoherent,
    })?;
    let mut inputs = Inputs::new();
    let book = if let Some(path) = &a.pair {
        inputs.file("pair", path)?;
        Codebook::from_pair(&PairFile::load(path)?.to_pair()?, cap)?
    } else {
        let path = a.code.as_ref().expect("clap enforces --code or --pair");
        inputs.file("code", path)?;
        Codebook::from_code(&load_code(path)?, cap)?
    };
    inputs.param(
        "params",
        json!([a.t, a.rho, a.trials, a.rows, format!("{:?}", a.decoder)]),
    );
    let fixed = match &a.a {
        Some(path) => {
            inputs.file("A", path)?;
            let m = io::load_matrix(book.field(), book.n(), path)?;
            Some(netsim::Channel::new(book.field(), m)?)
        }
        None => None,
    };
    let rep = netsim::run_experiment(&book, a.t, a.rho, a.rows, fixed.as_ref(), a.trials, a.seed, cap)?;
    let failures = match a.decoder {
        DecoderArg::Full => rep.failures_full,
        DecoderArg::Sub => rep.failures_sub,
        DecoderArg::Both => rep.failures,
    };
    let mut results = to_value(&rep);
    results["failures"] = json!(failures);
    results["decoder"] = json!(format!("{:?}", a.decoder).to_lowercase());
    let violated = rep.guaranteed && failures > 0 || rep.converse_verified == Some(false);
    Ok(Outcome {
        report: envelope("simulate", &inputs, results, Some(a.seed)),
        code: if violated { EXIT_VIOLATION } else { EXIT_OK },
    })
}

fn gen_cmd(a: GenArgs) -> Result<Outcome> {
    let f = Field::new(a.p, a.e, a.m)?;
    let mut rng = crate::rng::seeded(a.seed);
    let c = match a.kind {
        GenKind::Gabidulin => construct::gabidulin(&f, a.n, a.k, None)?,
        GenKind::Random => construct::random_code(&f, a.n, a.k, &mut rng)?,
        GenKind::GaloisClosed => construct::galois_closed_code(&f, a.n, a.k, &mut rng)?,
        GenKind::Nondegenerate => weights::nondegenerate_code(&f, a.n, a.k)?,
    };
    let file = to_value(&CodeFile::from_code(&c));
    if let Some(out) = &a.out {
        let text = serde_json::to_string_pretty(&file).expect("serializes") + "\n";
        std::fs::write(out, text).map_err(|e| Error::Input(format!("{}: {e}", out.display())))?;
    }
    Ok(Outcome {
        report: file,
        code: EXIT_OK,
    })
}

fn verify_cmd(a: VerifyArgs, cap: u128) -> Result<Outcome> {
    let suites = if a.suite == "all" {
        verify::run_all(a.seed, cap)
    } else {
        vec![verify::run_suite(&a.suite, a.seed, cap)
            .ok_or_else(|| Error::Input(format!("unknown suite {:?}", a.suite)))?]
    };
    let passed = suites.iter().all(|s| s.passed);
    let mut inputs = Inputs::new();
    inputs.param("suite", json!(a.suite));
    let results = json!({ "passed": passed, "suites": suites });
    Ok(Outcome {
        report: envelope("verify", &inputs, results, Some(a.seed)),
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    })
}

/// Parses `argv`, runs the command and prints the report. Returns the exit code.
/// Parses `argv` and runs the command without printing anything.
pub fn run_args<I, T>(argv: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Input(e.to_string()))?;
    run(cli)
}

pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.report).expect("serializes");
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is the reader's choice, not an error of ours
            let _ = writeln!(stdout, "{text}");
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
