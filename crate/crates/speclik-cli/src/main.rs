mod reference;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use speclik::benchmark::{run_benchmark, BenchCriterion, BenchmarkReport, BenchmarkSpec, Scenario};
use speclik::estimate::fit;
use speclik::likelihoods::{CriterionKind, CriterionSpec};
use speclik::local_whittle::{default_bandwidth, estimate_d, LwConfig, LwVariant};
use speclik::models::{Family, SpectralModel};
use speclik::prefit::{OrderRule, PrefitConfig, PrefitMethod};
use speclik::series::TimeSeriesSample;
use speclik::simulate::{InnovationKind, RngPlan, Sampler};
use speclik::verify::run_identity_suite;

const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
    Breach(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Breach(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) | CliError::Breach(m) => f.write_str(m),
        }
    }
}

impl From<speclik::Error> for CliError {
    fn from(e: speclik::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Parser)]
#[command(name = "speclik", version, about = "Boundary-corrected Whittle estimation and Monte-Carlo benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate replications of an ARMA or ARFIMA model.
    Simulate(SimulateArgs),
    /// Fit a parametric model to one series.
    Fit(FitArgs),
    /// Local Whittle estimate of the memory parameter d.
    Lw(LwArgs),
    /// Check the exact matrix identities on random AR(p) models.
    IdentityCheck(IdentityArgs),
    /// Run a Monte-Carlo scenario and write summary and replication tables.
    Benchmark(BenchmarkArgs),
    /// Rerun a published table and print the published values alongside.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// Base seed; falls back to SPECLIK_SEED, then 20240601.
    #[arg(long)]
    seed: Option<u64>,
    /// Omit the timestamp header line so reruns are byte-identical.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// ar:p, ma:q, arma:p,q or arfima.
    #[arg(long)]
    model: String,
    /// Comma-separated parameters (AR then MA, or d).
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    params: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    #[arg(long, default_value = "gaussian")]
    innov: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// CSV with a `value` column (or a single unnamed column).
    #[arg(long)]
    input: PathBuf,
    /// Column to read; defaults to `value`, else the first column.
    #[arg(long)]
    column: Option<String>,
    /// Replication to read when the input holds several (a `rep` column).
    #[arg(long)]
    rep: Option<u64>,
}

#[derive(Args, Clone)]
struct PrefitArgs {
    #[arg(long, value_enum, default_value_t = PrefitArg::Yw)]
    prefit: PrefitArg,
    /// `aic` or a fixed order.
    #[arg(long, default_value = "aic")]
    prefit_order: String,
    /// Floor applied to the complete periodogram.
    #[arg(long, allow_hyphen_values = true)]
    threshold: Option<f64>,
    /// Tukey taper edge; defaults to n/10.
    #[arg(long)]
    taper_edge: Option<usize>,
    /// Fit without subtracting the sample mean.
    #[arg(long)]
    no_demean: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PrefitArg {
    Yw,
    TaperedYw,
    Cepstral,
}

#[derive(Args)]
struct FitArgs {
    #[arg(long)]
    model: String,
    #[arg(long, default_value = "boundary")]
    criterion: String,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    prefit: PrefitArgs,
    /// Comma-separated starting point.
    #[arg(long, allow_hyphen_values = true)]
    theta0: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct LwArgs {
    #[arg(long, default_value = "hybrid")]
    variant: String,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    prefit: PrefitArgs,
    /// Number of frequencies M; defaults to n^0.65.
    #[arg(long)]
    bandwidth: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct IdentityArgs {
    #[arg(long, default_value_t = 240)]
    cases: usize,
    #[arg(long, default_value_t = 6)]
    max_p: usize,
    #[arg(long, default_value_t = 64)]
    max_n: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    reps: usize,
    #[arg(long, default_value = "gaussian")]
    innov: String,
    /// Worker threads for the replication loop.
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for summary.csv and replications.csv.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchmarkArgs {
    #[arg(long)]
    scenario: String,
    /// Comma-separated criteria; defaults to the scenario's list.
    #[arg(long)]
    criteria: Option<String>,
    /// Generating parameter θ or d for the one-parameter scenarios.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Fitted family, overriding the scenario's.
    #[arg(long)]
    fit_model: Option<String>,
    /// Restrict every fitted coefficient to [-r, r].
    #[arg(long)]
    box_radius: Option<f64>,
    /// Also write replications.csv.
    #[arg(long)]
    replications: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Table {
    Ar1,
    Ma1,
    Arma11,
    Ar2,
    Arfima,
    Lw,
    Ar8,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    table: Table,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<f64>,
    /// Every setting and sample size of the published table.
    #[arg(long)]
    full: bool,
    #[command(flatten)]
    run: RunArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Simulate(a) => simulate_cmd(a),
        Command::Fit(a) => fit_cmd(a),
        Command::Lw(a) => lw_cmd(a),
        Command::IdentityCheck(a) => identity_cmd(a),
        Command::Benchmark(a) => benchmark_cmd(a),
        Command::Reproduce(a) => reproduce_cmd(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn base_seed(flag: Option<u64>) -> CliResult<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("SPECLIK_SEED") {
        Ok(v) => v.trim().parse().or_else(|_| usage(format!("SPECLIK_SEED '{v}' is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn parse_list(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().or_else(|_| usage(format!("'{t}' is not a number"))))
        .collect()
}

fn parse<T: std::str::FromStr<Err = speclik::Error>>(s: &str) -> CliResult<T> {
    Ok(s.parse::<T>()?)
}

fn join(v: &[f64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// CSV writer on a file or stdout, preceded by a timestamp comment unless
/// `deterministic`.
fn open_csv(out: Option<&Path>, deterministic: bool) -> CliResult<csv::Writer<Box<dyn Write>>> {
    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout()),
    };
    if !deterministic {
        let t = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        writeln!(sink, "# generated_unix={t}")?;
    }
    Ok(csv::Writer::from_writer(sink))
}

fn simulate_cmd(a: SimulateArgs) -> CliResult<()> {
    let family: Family = parse(&a.model)?;
    let params = parse_list(&a.params)?;
    let innov: InnovationKind = parse(&a.innov)?;
    if a.reps == 0 {
        return usage("--reps must be at least 1");
    }
    let seed = base_seed(a.common.seed)?;
    let model = SpectralModel::new(family, params.clone())?;
    let sampler = Sampler::new(&model, a.n)?;
    let plan = RngPlan::new(seed);
    let spec = format!("model={family};params={};n={};reps={};innov={innov};base_seed={seed}", join(&params), a.n, a.reps);
    let mut w = open_csv(a.out.as_deref(), a.common.deterministic)?;
    w.write_record(["rep", "t", "value", "seed", "spec"])?;
    for rep in 0..a.reps as u64 {
        let s = plan.seed(rep);
        let x = sampler.draw(innov, s)?;
        for (t, v) in x.values().iter().enumerate() {
            w.write_record([rep.to_string(), (t + 1).to_string(), v.to_string(), s.to_string(), spec.clone()])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn read_series(a: &InputArgs) -> CliResult<TimeSeriesSample> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .from_path(&a.input)?;
    let records: Vec<csv::StringRecord> = rdr.records().collect::<Result<_, _>>()?;
    let Some(first) = records.first() else {
        return usage(format!("{} is empty", a.input.display()));
    };
    let has_header = first.iter().any(|f| f.trim().parse::<f64>().is_err());
    let header: Vec<String> = if has_header { first.iter().map(|s| s.trim().to_string()).collect() } else { Vec::new() };
    let find = |name: &str| header.iter().position(|h| h == name);
    let col = match &a.column {
        Some(c) => find(c).ok_or_else(|| CliError::Usage(format!("no column '{c}' in {}", a.input.display())))?,
        None => find("value").unwrap_or(0),
    };
    let rep_col = find("rep");
    let body = &records[usize::from(has_header)..];
    let mut values = Vec::with_capacity(body.len());
    let mut reps_seen = std::collections::BTreeSet::new();
    for rec in body {
        if let Some(rc) = rep_col {
            let r: u64 = rec.get(rc).unwrap_or("").trim().parse().or_else(|_| usage("bad rep value"))?;
            reps_seen.insert(r);
            if a.rep.is_some_and(|want| want != r) {
                continue;
            }
        }
        let field = rec.get(col).unwrap_or("").trim();
        values.push(field.parse::<f64>().or_else(|_| usage(format!("'{field}' is not a number")))?);
    }
    if a.rep.is_none() && reps_seen.len() > 1 {
        return usage("input holds several replications; choose one with --rep");
    }
    Ok(TimeSeriesSample::new(values)?)
}

fn prefit_config(a: &PrefitArgs) -> CliResult<PrefitConfig> {
    let method = match a.prefit {
        PrefitArg::Yw => PrefitMethod::Yw,
        PrefitArg::TaperedYw => PrefitMethod::TaperedYw,
        PrefitArg::Cepstral => PrefitMethod::Cepstral,
    };
    let mut cfg = PrefitConfig::with_method(method);
    cfg.order = match a.prefit_order.trim() {
        "aic" => OrderRule::Aic,
        s => OrderRule::Fixed(s.parse().or_else(|_| usage(format!("--prefit-order '{s}' is neither aic nor an integer")))?),
    };
    cfg.taper_edge = a.taper_edge;
    Ok(cfg)
}

fn fit_cmd(a: FitArgs) -> CliResult<()> {
    let family: Family = parse(&a.model)?;
    let kind: CriterionKind = parse(&a.criterion)?;
    if kind.is_infeasible() {
        return usage("infeasible criteria need the true model and are only available in benchmarks");
    }
    let x = read_series(&a.input)?;
    let mut spec = CriterionSpec::new(kind).with_prefit(prefit_config(&a.prefit)?);
    spec.taper_edge = a.prefit.taper_edge;
    spec.demean = !a.prefit.no_demean;
    if let Some(t) = a.prefit.threshold {
        spec.threshold = t;
    }
    let theta0 = a.theta0.as_deref().map(parse_list).transpose()?;
    let r = fit(&x, family, &spec, theta0.as_deref())?;
    let desc = format!(
        "model={family};criterion={};prefit={};threshold={};demean={};input={}",
        kind.name(),
        a.prefit.prefit_order,
        spec.threshold,
        spec.demean,
        a.input.input.display()
    );
    let mut w = open_csv(a.out.as_deref(), a.deterministic)?;
    let mut head: Vec<String> = (1..=r.theta_hat.len()).map(|i| format!("theta_{i}")).collect();
    head.extend(["objective", "prefit_order", "converged", "spec"].map(String::from));
    w.write_record(&head)?;
    let mut row: Vec<String> = r.theta_hat.iter().map(|v| v.to_string()).collect();
    row.extend([r.objective.to_string(), r.prefit_order.to_string(), r.converged.to_string(), desc]);
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

fn lw_cmd(a: LwArgs) -> CliResult<()> {
    let variant: LwVariant = parse(&a.variant)?;
    let x = read_series(&a.input)?;
    let mut cfg = LwConfig::new(variant);
    cfg.bandwidth = a.bandwidth;
    cfg.taper_edge = a.prefit.taper_edge;
    cfg.prefit = prefit_config(&a.prefit)?;
    cfg.demean = !a.prefit.no_demean;
    if let Some(t) = a.prefit.threshold {
        cfg.threshold = t;
    }
    let r = estimate_d(&x, &cfg)?;
    let m = a.bandwidth.unwrap_or(default_bandwidth(x.len()));
    let desc = format!(
        "variant={variant};bandwidth={m};threshold={};demean={};input={}",
        cfg.threshold,
        cfg.demean,
        a.input.input.display()
    );
    let mut w = open_csv(a.out.as_deref(), a.deterministic)?;
    w.write_record(["d", "objective", "bandwidth", "prefit_order", "spec"])?;
    w.write_record([r.theta_hat[0].to_string(), r.objective.to_string(), m.to_string(), r.prefit_order.to_string(), desc])?;
    w.flush()?;
    Ok(())
}

fn identity_cmd(a: IdentityArgs) -> CliResult<()> {
    let seed = base_seed(a.seed)?;
    let r = run_identity_suite(a.cases, a.max_p, a.max_n, seed)?;
    println!("identity,cases,max_residual,threshold,worst_p,worst_n,status,seed");
    for c in &r.checks {
        println!(
            "{},{},{:.3e},{:.0e},{},{},{},{seed}",
            c.identity.name(),
            c.cases,
            c.max_residual,
            c.identity.threshold(),
            c.worst_case.0,
            c.worst_case.1,
            if c.passed() { "pass" } else { "fail" }
        );
    }
    eprintln!("elapsed {:.2?}", r.elapsed);
    if r.passed() {
        Ok(())
    } else {
        Err(CliError::Breach("identity residuals above threshold".into()))
    }
}

fn criteria_list(s: &str) -> CliResult<Vec<BenchCriterion>> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(parse).collect()
}

fn spec_string(spec: &BenchmarkSpec, setting: Option<f64>) -> String {
    let crits: Vec<&str> = spec.criteria.iter().map(|c| c.name()).collect();
    format!(
        "scenario={};setting={};fit={};n={};reps={};innov={};seed={};criteria={};box={}",
        spec.scenario,
        setting.map_or("-".to_string(), |v| v.to_string()),
        spec.fit_family.map_or("lw".to_string(), |f| f.to_string()),
        spec.n,
        spec.reps,
        spec.innovation,
        spec.seed,
        crits.join("|"),
        spec.box_radius.map_or("-".to_string(), |r| r.to_string()),
    )
}

fn opt(v: Option<f64>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

fn write_summary(w: &mut csv::Writer<Box<dyn Write>>, runs: &[(Option<f64>, BenchmarkReport)]) -> CliResult<()> {
    w.write_record([
        "criterion",
        "param",
        "best_fit",
        "bias",
        "sd",
        "rmse",
        "divergence_mean",
        "divergence_sd",
        "aggregate",
        "successes",
        "scenario",
        "setting",
        "n",
        "seed",
        "spec",
    ])?;
    for (setting, r) in runs {
        let spec = spec_string(&r.spec, *setting);
        for s in &r.summary {
            w.write_record([
                s.criterion.name().to_string(),
                s.param.clone(),
                s.best_fit.to_string(),
                s.bias.to_string(),
                s.sd.to_string(),
                s.rmse.to_string(),
                opt(s.divergence_mean),
                opt(s.divergence_sd),
                opt(r.aggregate_of(s.criterion)),
                s.successes.to_string(),
                r.spec.scenario.to_string(),
                opt(*setting),
                r.spec.n.to_string(),
                r.spec.seed.to_string(),
                spec.clone(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn write_replications(w: &mut csv::Writer<Box<dyn Write>>, runs: &[(Option<f64>, BenchmarkReport)]) -> CliResult<()> {
    w.write_record([
        "rep",
        "seed",
        "criterion",
        "param",
        "estimate",
        "objective",
        "converged",
        "prefit_order",
        "divergence",
        "error",
        "scenario",
        "setting",
        "n",
        "spec",
    ])?;
    for (setting, r) in runs {
        let spec = spec_string(&r.spec, *setting);
        for row in &r.replications {
            let tail = [r.spec.scenario.to_string(), opt(*setting), r.spec.n.to_string(), spec.clone()];
            match &row.estimate {
                Ok(e) => {
                    for (name, v) in r.param_names.iter().zip(&e.theta_hat) {
                        let mut rec = vec![
                            row.rep.to_string(),
                            row.seed.to_string(),
                            row.criterion.name().to_string(),
                            name.clone(),
                            v.to_string(),
                            e.objective.to_string(),
                            e.converged.to_string(),
                            e.prefit_order.to_string(),
                            opt(row.divergence),
                            String::new(),
                        ];
                        rec.extend(tail.iter().cloned());
                        w.write_record(&rec)?;
                    }
                }
                Err(msg) => {
                    let mut rec = vec![
                        row.rep.to_string(),
                        row.seed.to_string(),
                        row.criterion.name().to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        msg.clone(),
                    ];
                    rec.extend(tail.iter().cloned());
                    w.write_record(&rec)?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn write_outputs(run: &RunArgs, runs: &[(Option<f64>, BenchmarkReport)], replications: bool) -> CliResult<()> {
    std::fs::create_dir_all(&run.out_dir)?;
    let mut w = open_csv(Some(&run.out_dir.join("summary.csv")), run.common.deterministic)?;
    write_summary(&mut w, runs)?;
    if replications {
        let mut w = open_csv(Some(&run.out_dir.join("replications.csv")), run.common.deterministic)?;
        write_replications(&mut w, runs)?;
    }
    Ok(())
}

fn base_spec(scenario: Scenario, run: &RunArgs) -> CliResult<BenchmarkSpec> {
    let mut spec = BenchmarkSpec::new(scenario);
    if let Some(n) = run.n {
        spec.n = n;
    }
    spec.reps = run.reps;
    spec.innovation = parse(&run.innov)?;
    spec.seed = base_seed(run.common.seed)?;
    spec.jobs = run.jobs;
    Ok(spec)
}

fn benchmark_cmd(a: BenchmarkArgs) -> CliResult<()> {
    let scenario: Scenario = parse(&a.scenario)?;
    let mut spec = base_spec(scenario, &a.run)?;
    if let Some(c) = &a.criteria {
        spec.criteria = criteria_list(c)?;
    }
    spec.truth_params = a.theta.map(|t| vec![t]);
    if let Some(f) = &a.fit_model {
        spec.fit_family = Some(parse(f)?);
        // the scenario's default box targets its default family
        spec.box_radius = None;
    }
    if a.box_radius.is_some() {
        spec.box_radius = a.box_radius;
    }
    spec.keep_replications = a.replications;
    let r = run_benchmark(&spec)?;
    write_outputs(&a.run, &[(a.theta, r)], a.replications)
}

/// (scenario, fitted family override, settings, sample sizes) for a table.
fn table_plan(a: &ReproduceArgs) -> CliResult<(Scenario, Option<Family>, Vec<Option<f64>>, Vec<usize>)> {
    let one_param = |default: f64, grid: &[f64], flag: Option<f64>| -> Vec<Option<f64>> {
        if a.full {
            grid.iter().map(|&v| Some(v)).collect()
        } else {
            vec![Some(flag.unwrap_or(default))]
        }
    };
    let sizes = |default: usize| -> Vec<usize> {
        if a.full {
            vec![20, 50, 300]
        } else {
            vec![a.run.n.unwrap_or(default)]
        }
    };
    let theta_grid = [0.1, 0.3, 0.5, 0.7, 0.9];
    let d_grid = [-0.4, -0.2, 0.2, 0.4];
    let no_setting = |name: &str| -> CliResult<()> {
        if a.theta.is_some() || a.d.is_some() {
            return usage(format!("table {name} has a fixed generating model"));
        }
        Ok(())
    };
    Ok(match a.table {
        Table::Ar1 => (Scenario::Ar1Table, None, one_param(0.7, &theta_grid, a.theta), sizes(50)),
        Table::Ma1 => (Scenario::Ma1Table, None, one_param(0.7, &theta_grid, a.theta), sizes(50)),
        Table::Arfima => (Scenario::ArfimaParametric, None, one_param(0.2, &d_grid, a.d.or(a.theta)), sizes(50)),
        Table::Lw => (Scenario::ArfimaLw, None, one_param(0.2, &d_grid, a.d.or(a.theta)), sizes(300)),
        Table::Arma11 => {
            no_setting("arma11")?;
            (Scenario::Arma32Misspec, None, vec![None], sizes(50))
        }
        Table::Ar2 => {
            no_setting("ar2")?;
            (Scenario::Arma32Misspec, Some(Family::Ar(2)), vec![None], sizes(50))
        }
        Table::Ar8 => {
            no_setting("ar8")?;
            (Scenario::Ar8Peaked, None, vec![None], vec![a.run.n.unwrap_or(100)])
        }
    })
}

fn reproduce_cmd(a: ReproduceArgs) -> CliResult<()> {
    let (scenario, family, settings, sizes) = table_plan(&a)?;
    let mut runs = Vec::new();
    for &n in &sizes {
        for &setting in &settings {
            let mut spec = base_spec(scenario, &a.run)?;
            spec.n = n;
            spec.truth_params = setting.map(|v| vec![v]);
            if let Some(f) = family {
                spec.fit_family = Some(f);
                spec.box_radius = None;
            }
            spec.keep_replications = true;
            let r = run_benchmark(&spec)?;
            print_comparison(&r, setting);
            runs.push((setting, r));
        }
    }
    write_outputs(&a.run, &runs, true)
}

fn print_comparison(r: &BenchmarkReport, setting: Option<f64>) {
    let spec = &r.spec;
    let family = spec.fit_family.map_or("lw".to_string(), |f| f.to_string());
    let gaussian = spec.innovation == InnovationKind::Gaussian;
    println!(
        "{} fit={family} setting={} n={} reps={} innov={} seed={}",
        spec.scenario,
        setting.map_or("-".into(), |v| v.to_string()),
        spec.n,
        spec.reps,
        spec.innovation,
        spec.seed
    );
    if let Some(best) = r.best_divergence {
        let published = reference::best_fit(&family, spec.n)
            .map_or(String::new(), |(t, d)| format!("   published ({}, {}) I_n = {d}", t[0], t[1]));
        println!("  best fit ({}) I_n = {best:.3}{published}", join(&r.best_fit.iter().map(|v| (v * 1e3).round() / 1e3).collect::<Vec<_>>()));
    }
    println!("  {:<20} {:<10} {:>16} {:>16}", "criterion", "param", "bias (sd)", "published");
    let show = |crit: &str, param: &str, ours: String| {
        let published = if gaussian {
            reference::lookup(spec.scenario.name(), &family, setting, spec.n, crit, param).map(|p| match p.sd {
                Some(sd) => format!("{:.3} ({sd:.2})", p.bias),
                None => format!("{:.3}", p.bias),
            })
        } else {
            None
        };
        println!("  {crit:<20} {param:<10} {ours:>16} {:>16}", published.unwrap_or_else(|| "-".into()));
    };
    for s in &r.summary {
        show(s.criterion.name(), &s.param, format!("{:.3} ({:.2})", s.bias, s.sd));
    }
    if r.misspecified {
        let mut seen = Vec::new();
        for s in &r.summary {
            if seen.contains(&s.criterion) {
                continue;
            }
            seen.push(s.criterion);
            if let (Some(m), Some(sd)) = (s.divergence_mean, s.divergence_sd) {
                show(s.criterion.name(), "divergence", format!("{m:.3} ({sd:.2})"));
            }
        }
    }
    if r.param_names.len() > 2 {
        for (c, v) in &r.aggregate {
            show(c.name(), "aggregate", format!("{v:.3}"));
        }
    }
}
