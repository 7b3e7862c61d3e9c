//! Command-line surface and the code behind each subcommand.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monostab::stability::{socle_witness, DstabResult};
use monostab::{
    analytic_spread, ass_primes, astab, build_gamma, check_bounds, component_factorization, dstab,
    exact_depth, is_matroidal, is_polymatroidal, max_ideal_associated, random_instance,
    EngineConfig, ExchangeVerdict, FieldChoice, KnownCase, Mode, MonomialIdeal, RandomFamily,
    RandomSpec, VerdictStatus,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::instance::{parse_instance, Instance};
use crate::report::{self, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "monostab",
    version,
    about = "Associated primes, depth and their stability indices for powers of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: FormatArg,
    /// Worker threads for the engine (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Resource caps, e.g. `ass-vars=12,generators=256,lattice=5000,components=10000`.
    #[arg(long, global = true)]
    pub caps: Option<String>,
    /// Characteristic of the homology field: 0, 2, 3, 32003 or 2147483647.
    #[arg(long, default_value_t = 2_147_483_647, global = true)]
    pub field_prime: u64,
    /// A second characteristic to recompute Betti numbers over, flagging any difference.
    #[arg(long, global = true)]
    pub check_prime: Option<u64>,
    /// Include wall-clock timing in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            format: FormatArg::Text,
            workers: None,
            caps: None,
            field_prime: 2_147_483_647,
            check_prime: None,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Instance file (`-` reads standard input).
    pub file: PathBuf,
    /// Divide out gcd(I) and drop unused variables first.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Ex6,
    Ex8,
    Km4,
}

impl From<CaseArg> for KnownCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Ex6 => KnownCase::Ex6,
            CaseArg::Ex8 => KnownCase::Ex8,
            CaseArg::Km4 => KnownCase::Km4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Graphic,
    Transversal,
    Veronese,
}

impl From<FamilyArg> for RandomFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Graphic => RandomFamily::Graphic,
            FamilyArg::Transversal => RandomFamily::Transversal,
            FamilyArg::Veronese => RandomFamily::Veronese,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Basic invariants, exchange property and certification status.
    Check(InputArgs),
    /// The linear relation graph and the component factorization.
    Gamma(InputArgs),
    /// Associated primes of R/I^k.
    Ass {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Exact depth and projective dimension of R/I^k.
    Depth {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Analytic spread.
    Spread(InputArgs),
    /// Index of Ass stability. Certified for matroidal input; `--kmax` explores
    /// any equigenerated input without a certificate.
    Astab {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Index of depth stability; same modes as `astab`.
    Dstab {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Every bound check on a matroidal ideal in standard position.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// Examine powers beyond min{d, ℓ} as well.
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Recompute one of the built-in worked examples end to end.
    Reproduce {
        #[arg(long, value_enum)]
        case: CaseArg,
    },
    /// Run the bound checks over seeded random matroidal ideals.
    Search {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Gamma(_) => "gamma",
            Command::Ass { .. } => "ass",
            Command::Depth { .. } => "depth",
            Command::Spread(_) => "spread",
            Command::Astab { .. } => "astab",
            Command::Dstab { .. } => "dstab",
            Command::Bounds { .. } => "bounds",
            Command::Reproduce { .. } => "reproduce",
            Command::Search { .. } => "search",
        }
    }
}

/// Engine configuration from the global flags.
pub fn engine_config(opts: &GlobalOpts) -> Result<EngineConfig> {
    let mut cfg = EngineConfig {
        field: FieldChoice::from_characteristic(opts.field_prime)?,
        check_field: opts
            .check_prime
            .map(FieldChoice::from_characteristic)
            .transpose()?,
        ..EngineConfig::default()
    };
    if let Some(caps) = &opts.caps {
        cfg = cfg.with_caps(caps)?;
    }
    Ok(cfg)
}

/// Run one command and assemble its report. Verdict failures are reported
/// inside the report; only input, mode and resource problems are errors.
pub fn run(cmd: &Command, opts: &GlobalOpts) -> Result<Report> {
    let cfg = engine_config(opts)?;
    let start = Instant::now();
    let mut report = match cmd {
        Command::Check(input) => run_check(input)?,
        Command::Gamma(input) => run_gamma(input)?,
        Command::Ass { input, power } => run_ass(input, *power, &cfg)?,
        Command::Depth { input, power } => run_depth(input, *power, &cfg)?,
        Command::Spread(input) => run_spread(input)?,
        Command::Astab { input, kmax } => run_astab(input, *kmax, &cfg)?,
        Command::Dstab { input, kmax } => run_dstab(input, *kmax, &cfg)?,
        Command::Bounds { input, kmax } => run_bounds(input, *kmax, &cfg)?,
        Command::Reproduce { case } => reproduce((*case).into(), &cfg)?,
        Command::Search {
            family,
            trials,
            seed,
        } => search((*family).into(), *trials, *seed, &cfg)?,
    };
    report.set("config", report::config(&cfg));
    if opts.timing {
        report.set("timing_ms", json!(start.elapsed().as_millis() as u64));
    }
    Ok(report)
}

fn read_source(path: &Path) -> Result<String> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Parse the input file and build its ideal, recording the echo (and the
/// normalization, if requested) in the report.
fn load(command: &str, input: &InputArgs) -> Result<(Report, MonomialIdeal)> {
    let text = read_source(&input.file)?;
    let origin = input.file.display().to_string();
    let instance = parse_instance(&text, &origin)?;
    let mut ideal = instance.ideal()?;
    let mut rep = Report::new(command);
    rep.set("input", echo(&instance, &ideal));
    if input.normalize {
        let norm = ideal.normalized();
        rep.set(
            "normalized",
            json!({
                "kept_vars": norm.kept_vars.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "divided_by": norm.gcd.to_string(),
                "ideal": report::ideal(&norm.ideal),
            }),
        );
        ideal = norm.ideal;
    }
    if ideal.is_zero() {
        return Err(CliError::Usage(
            "the instance describes the zero ideal".into(),
        ));
    }
    Ok((rep, ideal))
}

fn echo(instance: &Instance, ideal: &MonomialIdeal) -> Value {
    use monostab::MatroidSpec as S;
    let mut v = json!({
        "family": instance.spec.family(),
        "ideal": report::ideal(ideal),
    });
    let params = match &instance.spec {
        S::Explicit(_) => json!(null),
        S::Uniform { n, degree } => json!({"vars": n, "degree": degree}),
        S::Veronese { degree, caps } => json!({"degree": degree, "caps": caps}),
        S::Graphic(g) => json!({
            "vertices": g.num_vertices(),
            "edges": g.edges().iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect::<Vec<_>>(),
        }),
        S::Transversal { n, sets } => json!({
            "vars": n,
            "sets": sets.iter().map(|s| s.one_based()).collect::<Vec<_>>(),
        }),
    };
    v["parameters"] = params;
    if let Some(names) = &instance.names {
        v["names"] = json!(names);
    }
    v
}

fn exchange(verdict: &ExchangeVerdict) -> Value {
    match verdict {
        ExchangeVerdict::Polymatroidal => json!({"holds": true}),
        ExchangeVerdict::ZeroIdeal => json!({"holds": false, "reason": "zero ideal"}),
        ExchangeVerdict::NotEquigenerated => {
            json!({"holds": false, "reason": "not generated in one degree"})
        }
        ExchangeVerdict::Violation { u, v, var } => json!({
            "holds": false,
            "reason": "exchange fails",
            "u": u.to_string(),
            "v": v.to_string(),
            "var": var + 1,
        }),
    }
}

fn run_check(input: &InputArgs) -> Result<Report> {
    let (mut rep, ideal) = load("check", input)?;
    rep.set("invariants", report::invariants(&ideal));
    rep.set("exchange", exchange(&is_polymatroidal(&ideal)));
    rep.set("matroidal", json!(is_matroidal(&ideal)));
    rep.set("standard_position", json!(ideal.has_standard_position()));
    rep.set(
        "certificate",
        match monostab::stability::certify(&ideal) {
            Ok(c) => json!({"degree": c.degree, "spread": c.spread, "bound": c.bound}),
            Err(e) => json!({"refused": e.to_string()}),
        },
    );
    Ok(rep)
}

fn run_gamma(input: &InputArgs) -> Result<Report> {
    let (mut rep, ideal) = load("gamma", input)?;
    let gamma = build_gamma(&ideal)?;
    rep.set("gamma", report::gamma(&gamma));
    if ideal.has_standard_position() {
        let f = component_factorization(&ideal)?;
        let factors: Vec<Value> = f
            .factors
            .iter()
            .map(|fac| {
                json!({
                    "block": fac.block.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "degree": fac.degree(),
                    "generators": report::monomials(fac.ambient.generators()),
                })
            })
            .collect();
        rep.set(
            "factorization",
            json!({
                "factors": factors,
                "verified": f.verified,
                "witness": f.witness.map(|w| w.to_string()),
            }),
        );
    } else {
        rep.set(
            "factorization",
            json!({"refused": "needs gcd(I) = 1 and every variable in supp(I); try --normalize"}),
        );
    }
    Ok(rep)
}

fn run_ass(input: &InputArgs, power: u32, cfg: &EngineConfig) -> Result<Report> {
    if power == 0 {
        return Err(CliError::Usage("--power must be at least 1".into()));
    }
    let (mut rep, ideal) = load("ass", input)?;
    let j = ideal.power(power)?;
    let ass = ass_primes(&j, cfg)?;
    rep.set("power", json!(power));
    rep.set("power_generators", json!(j.len()));
    rep.set("ass", report::ass_set(&ass));
    rep.set("count", json!(ass.len()));
    rep.set("max_ideal_associated", json!(ass.contains_maximal()));
    rep.set(
        "socle_element",
        json!(j.socle_element().map(|u| u.to_string())),
    );
    Ok(rep)
}

fn run_depth(input: &InputArgs, power: u32, cfg: &EngineConfig) -> Result<Report> {
    if power == 0 {
        return Err(CliError::Usage("--power must be at least 1".into()));
    }
    let (mut rep, ideal) = load("depth", input)?;
    let j = ideal.power(power)?;
    let e = exact_depth(&j, cfg)?;
    rep.set("power", json!(power));
    rep.set("power_generators", json!(j.len()));
    rep.set("depth", json!(e.depth));
    rep.set("pd", json!(e.pd));
    rep.set("betti_totals", json!(e.betti.totals()));
    rep.set("field_characteristic", json!(e.field.characteristic()));
    rep.set("field_discrepancy", json!(e.field_discrepancy));
    if e.field_discrepancy == Some(true) {
        rep.push_verdict(
            "field_agreement",
            VerdictStatus::Flagged,
            "Betti numbers differ over the check field",
        );
    }
    Ok(rep)
}

fn run_spread(input: &InputArgs) -> Result<Report> {
    let (mut rep, ideal) = load("spread", input)?;
    let spread = analytic_spread(&ideal)?;
    rep.set("spread", json!(spread));
    if let Ok(g) = build_gamma(&ideal) {
        let n = ideal.num_vars();
        rep.set("gamma_components", json!(g.num_components()));
        rep.set(
            "n_minus_s_plus_1",
            json!(n + 1 - g.num_components().min(n + 1)),
        );
    }
    Ok(rep)
}

fn mode_for(ideal: &MonomialIdeal, kmax: Option<u32>) -> Result<Mode> {
    match kmax {
        Some(kmax) => Ok(Mode::Uncertified { kmax }),
        None => {
            monostab::stability::certify(ideal).map_err(|e| {
                CliError::Engine(monostab::Error::Mode(format!(
                    "{}; pass --kmax for an uncertified run",
                    e.to_string().trim_start_matches("mode error: ")
                )))
            })?;
            Ok(Mode::Certified)
        }
    }
}

fn run_astab(input: &InputArgs, kmax: Option<u32>, cfg: &EngineConfig) -> Result<Report> {
    let (mut rep, ideal) = load("astab", input)?;
    let mode = mode_for(&ideal, kmax)?;
    let r = astab(&ideal, mode, cfg)?;
    rep.set("certified", json!(r.certified));
    rep.set("horizon", json!(r.horizon));
    rep.set("astab", json!(r.index));
    rep.set("ass_chain", report::chain(&r.chain));
    Ok(rep)
}

fn dstab_section(r: &DstabResult) -> Value {
    let comps: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            json!({
                "block": c.block.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "degree": c.degree,
                "dstab": c.index,
            })
        })
        .collect();
    json!({
        "dstab": r.index,
        "method": report::dstab_method(r.method),
        "certified": r.certified,
        "components": comps,
        "depths": r.depths,
    })
}

fn run_dstab(input: &InputArgs, kmax: Option<u32>, cfg: &EngineConfig) -> Result<Report> {
    let (mut rep, ideal) = load("dstab", input)?;
    let mode = mode_for(&ideal, kmax)?;
    let r = dstab(&ideal, mode, cfg)?;
    rep.set("certified", json!(r.certified));
    rep.set("dstab", json!(r.index));
    rep.set("detail", dstab_section(&r));
    Ok(rep)
}

fn run_bounds(input: &InputArgs, kmax: Option<u32>, cfg: &EngineConfig) -> Result<Report> {
    let (mut rep, ideal) = load("bounds", input)?;
    let r = check_bounds(&ideal, kmax, cfg)?;
    rep.set("stability", report::stability(&r));
    rep.push_verdicts(&r.verdicts);
    Ok(rep)
}

/// Recompute a built-in example and check it against the published values.
pub fn reproduce(case: KnownCase, cfg: &EngineConfig) -> Result<Report> {
    let mut rep = Report::new("reproduce");
    let ideal = case.ideal();
    rep.set("case", json!(case.name()));
    rep.set(
        "input",
        json!({"family": "explicit", "ideal": report::ideal(&ideal)}),
    );
    rep.set("invariants", report::invariants(&ideal));
    rep.set("matroidal", json!(is_matroidal(&ideal)));
    rep.set("polymatroidal", json!(is_polymatroidal(&ideal).holds()));

    if let Some((k, u)) = case.socle_witness() {
        let colon = ideal.power(k)?.colon(&u)?;
        let maximal = MonomialIdeal::maximal(ideal.num_vars());
        rep.set(
            "colon",
            json!({
                "power": k,
                "by": u.to_string(),
                "result": report::ideal(&colon),
                "equals_maximal": colon == maximal,
            }),
        );
        rep.claim(
            "colon_is_maximal",
            colon == maximal,
            format!("(I^{k} : {u}) = m"),
        );
    }

    match case {
        KnownCase::Ex6 | KnownCase::Ex8 => {
            // The published Ass comparison for the n = 8 case reaches I^4.
            let kmax = if case == KnownCase::Ex8 {
                Some(4)
            } else {
                None
            };
            let r = check_bounds(&ideal, kmax, cfg)?;
            rep.set("stability", report::stability(&r));
            rep.set("astab", json!(r.astab));
            rep.set("dstab", json!(r.dstab.index));
            if case == KnownCase::Ex8 {
                let c = &r.chain;
                rep.claim(
                    "ass_changes_from_2_to_3",
                    c[1] != c[2],
                    format!("|Ass(I^2)| = {}, |Ass(I^3)| = {}", c[1].len(), c[2].len()),
                );
                rep.claim(
                    "ass_equal_at_3_and_4",
                    c[2] == c[3],
                    format!("|Ass(I^3)| = {}, |Ass(I^4)| = {}", c[2].len(), c[3].len()),
                );
            }
            if let Some((a, d)) = case.expected_indices() {
                rep.claim(
                    "astab_matches",
                    r.astab == a,
                    format!("astab = {} (expected {a})", r.astab),
                );
                rep.claim(
                    "dstab_matches",
                    r.dstab.index == d,
                    format!("dstab = {} (expected {d})", r.dstab.index),
                );
            }
            rep.push_verdicts(&r.verdicts);
        }
        KnownCase::Km4 => {
            let mode = Mode::Uncertified { kmax: 3 };
            let a = astab(&ideal, mode, cfg)?;
            let d = dstab(&ideal, mode, cfg)?;
            rep.set("horizon", json!(a.horizon));
            rep.set("ass_chain", report::chain(&a.chain));
            rep.set("dstab_detail", dstab_section(&d));
            rep.set("astab", json!(a.index));
            rep.set("dstab", json!(d.index));
            let c = &a.chain;
            if c.len() >= 3 {
                rep.claim(
                    "ass_grows_then_settles",
                    c[0].is_subset(&c[1]) && c[0] != c[1] && c[1] == c[2],
                    format!(
                        "|Ass(I^k)| for k = 1..3: {} {} {}",
                        c[0].len(),
                        c[1].len(),
                        c[2].len()
                    ),
                );
            }
            if d.depths.len() >= 2 {
                rep.claim(
                    "depth_equal_at_1_and_2",
                    d.depths[0] == d.depths[1],
                    format!("depths {:?}", d.depths),
                );
            }
            if let Some((ea, ed)) = case.expected_indices() {
                rep.claim(
                    "astab_matches",
                    a.index == ea,
                    format!("astab = {} (expected {ea})", a.index),
                );
                rep.claim(
                    "dstab_matches",
                    d.index == ed,
                    format!("dstab = {} (expected {ed})", d.index),
                );
            }
        }
    }
    if case == KnownCase::Ex6 {
        let (k, _) = case.socle_witness().expect("ex6 has a witness");
        let j = ideal.power(k)?;
        let assoc = max_ideal_associated(&j)?;
        rep.claim("max_ideal_associated_to_square", assoc, "m ∈ Ass(I^2)");
        rep.set(
            "least_socle_witness",
            json!(socle_witness(&j)?.map(|u| u.to_string())),
        );
    }
    Ok(rep)
}

/// Seed used for trial `t` of a search started from `seed`.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(t)
}

/// Run `check_bounds` on `trials` random instances. Violations and
/// `astab ≠ dstab` witnesses are collected into ledgers.
pub fn search(family: RandomFamily, trials: u64, seed: u64, cfg: &EngineConfig) -> Result<Report> {
    let mut rep = Report::new("search");
    rep.set("family", json!(family.name()));
    rep.set("trials", json!(trials));
    rep.set("seed", json!(seed));

    let rows: Vec<Result<Value>> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<Value> {
            let s = trial_seed(seed, t);
            let inst = random_instance(&RandomSpec {
                family,
                seed: s,
                vertices: None,
                edges: None,
                vars: None,
            })?;
            let i = &inst.ideal;
            let mut row = json!({
                "trial": t,
                "seed": s,
                "vars": i.num_vars(),
                "generators": i.len(),
            });
            match check_bounds(i, None, cfg) {
                Ok(r) => {
                    let failures: Vec<&str> = r.failures().map(|v| v.name).collect();
                    row["degree"] = json!(r.degree);
                    row["spread"] = json!(r.spread);
                    row["gamma_components"] = json!(r.components);
                    row["bound"] = json!(r.bound);
                    row["astab"] = json!(r.astab);
                    row["dstab"] = json!(r.dstab.index);
                    row["max_ideal_stable"] = json!(r.max_ideal_stable);
                    row["failures"] = json!(failures);
                    row["status"] = json!(if failures.is_empty() {
                        "ok"
                    } else {
                        "violation"
                    });
                    row["astab_ne_dstab"] = json!(r.is_conjecture_counterexample());
                    if !failures.is_empty() || r.is_conjecture_counterexample() {
                        row["ideal"] = json!(report::monomials(i.generators()));
                    }
                }
                Err(e @ monostab::Error::Resource(_)) => {
                    row["status"] = json!("skipped");
                    row["reason"] = json!(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
            Ok(row)
        })
        .collect();
    let rows: Vec<Value> = rows.into_iter().collect::<Result<_>>()?;

    let violations: Vec<Value> = rows
        .iter()
        .filter(|r| r["status"] == "violation")
        .cloned()
        .collect();
    let witnesses: Vec<Value> = rows
        .iter()
        .filter(|r| r["astab_ne_dstab"] == true)
        .cloned()
        .collect();
    let skipped = rows.iter().filter(|r| r["status"] == "skipped").count();
    rep.claim(
        "no_bound_violations",
        violations.is_empty(),
        format!("{} of {trials} trials violated a bound", violations.len()),
    );
    rep.push_verdict(
        "astab_equals_dstab",
        if witnesses.is_empty() {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Flagged
        },
        format!("{} matroidal witnesses with astab ≠ dstab", witnesses.len()),
    );
    rep.set("skipped", json!(skipped));
    rep.set("violations", Value::Array(violations));
    rep.set("witnesses", Value::Array(witnesses));
    rep.set(
        "instances",
        Value::Array(
            rows.into_iter()
                .map(|mut r| {
                    if let Some(m) = r.as_object_mut() {
                        m.remove("ideal");
                    }
                    r
                })
                .collect(),
        ),
    );
    Ok(rep)
}

/// The exit code a finished report maps to.
pub fn report_exit_code(rep: &Report) -> i32 {
    if rep.has_failures() {
        crate::error::exit::VERDICT_FAILURE
    } else {
        crate::error::exit::OK
    }
}
