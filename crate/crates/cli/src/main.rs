//! Batch front end: each experiment in the library as one subcommand that
//! emits a machine-readable table (CSV or JSON) and exits 0 on success,
//! 2 on usage/configuration problems, 3 when a sampling budget runs out.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use depthmod_core::{
    auto_scaling, bst_external_sigma, bst_sigma, cgwt_sigma, fit_variance_exponent,
    oscillation_check, rrt_sigma, run_replicates, variance_growth_grid, z_moments,
    CirculantCovariance, Error, MonteCarloSummary, OffspringDistribution, Result, ScaleNote,
    Scaling, TreeModel, UrnModel, OSCILLATION_TOL,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "depthmod",
    version,
    about = "Depth-mod-m count experiments for random trees",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Worker threads for replicate simulation (0 = one per core).
    /// Results are identical for every value.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output path, or "-" for standard output.
    #[arg(long, global = true, default_value = "-")]
    out: String,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Rrt,
    Bst,
    Cgwt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UrnArg {
    Rrt,
    Bst,
}

impl UrnArg {
    fn to_model(self) -> UrnModel {
        match self {
            UrnArg::Rrt => UrnModel::Rrt,
            UrnArg::Bst => UrnModel::Bst,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CovModelArg {
    Rrt,
    Bst,
    BstExternal,
    Cgwt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Monte Carlo replicates of one configuration: mean, covariance, SEs.
    Simulate(SimulateArgs),
    /// Exact limit covariance: rational first row plus float matrix.
    Covariance(CovarianceArgs),
    /// Joint moments of the limit variables Z and Z-hat (large-m regime).
    Moments(MomentsArgs),
    /// Oscillation verdicts for a range of moduli.
    Oscillation(OscillationArgs),
    /// Variance growth over a size grid with a fitted exponent.
    Scaling(ScalingArgs),
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Offspring law for cgwt: poisson1, geometric-half, binomial2-half,
    /// two-point-0-2, or custom:p0,p1,...
    #[arg(long)]
    offspring: Option<String>,
    #[arg(long)]
    m: usize,
    /// Vertices per tree.
    #[arg(long)]
    n: u64,
    /// Independent replicates.
    #[arg(long)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// auto, sqrt-n, sqrt-n-log-n, or n-alpha:<a>.
    #[arg(long, default_value = "auto")]
    scaling: String,
}

#[derive(Args)]
struct CovarianceArgs {
    #[arg(long, value_enum)]
    model: CovModelArg,
    #[arg(long)]
    m: usize,
    /// Offspring variance (cgwt only; defaults to 1).
    #[arg(long)]
    sigma2: Option<f64>,
}

#[derive(Args)]
struct MomentsArgs {
    #[arg(long, value_enum)]
    model: UrnArg,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
}

#[derive(Args)]
struct OscillationArgs {
    #[arg(long, value_enum)]
    model: UrnArg,
    #[arg(long)]
    m_from: usize,
    #[arg(long)]
    m_to: usize,
    #[arg(long, default_value_t = OSCILLATION_TOL)]
    tol: f64,
}

#[derive(Args)]
struct ScalingArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Offspring law for cgwt (see simulate).
    #[arg(long)]
    offspring: Option<String>,
    #[arg(long)]
    m: usize,
    /// Comma-separated tree sizes, e.g. 1024,4096,16384.
    #[arg(long, value_delimiter = ',')]
    n_grid: Vec<u64>,
    #[arg(long)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // ignore the error from a second global-pool build in the same process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::SamplingBudget { .. } => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<()> {
    let text = match &cli.cmd {
        Cmd::Simulate(args) => cmd_simulate(args, cli.format)?,
        Cmd::Covariance(args) => cmd_covariance(args, cli.format)?,
        Cmd::Moments(args) => cmd_moments(args, cli.format)?,
        Cmd::Oscillation(args) => cmd_oscillation(args, cli.format)?,
        Cmd::Scaling(args) => cmd_scaling(args, cli.format)?,
    };
    write_out(&cli.out, &text)
}

fn write_out(out: &str, text: &str) -> Result<()> {
    if out == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(out, text)
            .map_err(|e| Error::Config(format!("cannot write {out}: {e}")))
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Config(format!("serialization failed: {e}")))
}

/// 12 significant digits, round-trippable.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{:.11e}", x)
    }
}

fn parse_offspring(s: &str) -> Result<OffspringDistribution> {
    match s {
        "poisson1" => Ok(OffspringDistribution::poisson1()),
        "geometric-half" => Ok(OffspringDistribution::geometric_half()),
        "binomial2-half" => Ok(OffspringDistribution::binomial_two_half()),
        "two-point-0-2" => Ok(OffspringDistribution::two_point_zero_two()),
        other => {
            if let Some(list) = other.strip_prefix("custom:") {
                let pmf = list
                    .split(',')
                    .map(|t| t.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<f64>, _>>()
                    .map_err(|e| Error::InvalidOffspring(format!("bad pmf '{list}': {e}")))?;
                OffspringDistribution::custom(&pmf)
            } else {
                Err(Error::InvalidOffspring(format!(
                    "unknown law '{other}' (poisson1, geometric-half, binomial2-half, \
                     two-point-0-2, custom:p0,p1,...)"
                )))
            }
        }
    }
}

fn tree_model(model: ModelArg, offspring: &Option<String>) -> Result<TreeModel> {
    match (model, offspring) {
        (ModelArg::Rrt, None) => Ok(TreeModel::Rrt),
        (ModelArg::Bst, None) => Ok(TreeModel::Bst),
        (ModelArg::Cgwt, Some(s)) => Ok(TreeModel::Cgwt(parse_offspring(s)?)),
        (ModelArg::Cgwt, None) => Err(Error::Config(
            "--model cgwt requires --offspring".into(),
        )),
        _ => Err(Error::Config("--offspring only applies to cgwt".into())),
    }
}

fn parse_scaling(s: &str, model: &TreeModel, m: usize) -> Result<Scaling> {
    match s {
        "auto" => auto_scaling(model, m),
        "sqrt-n" => Ok(Scaling::SqrtN),
        "sqrt-n-log-n" => Ok(Scaling::SqrtNLogN),
        other => {
            if let Some(a) = other.strip_prefix("n-alpha:") {
                let a: f64 = a
                    .parse()
                    .map_err(|_| Error::Config(format!("bad exponent in '{other}'")))?;
                Ok(Scaling::NAlpha(a))
            } else {
                Err(Error::Config(format!(
                    "unknown scaling '{other}' (auto, sqrt-n, sqrt-n-log-n, n-alpha:<a>)"
                )))
            }
        }
    }
}

fn cmd_simulate(args: &SimulateArgs, format: Format) -> Result<String> {
    let model = tree_model(args.model, &args.offspring)?;
    let scaling = parse_scaling(&args.scaling, &model, args.m)?;
    let summary = run_replicates(&model, args.m, args.n, args.reps, args.seed, scaling)?;
    match format {
        Format::Json => to_json(&summary),
        Format::Csv => Ok(simulate_csv(&summary)),
    }
}

fn simulate_csv(s: &MonteCarloSummary) -> String {
    let mut t = String::new();
    let meta = format!(
        "{},{},{},{},{},{}",
        s.model, s.m, s.n, s.replicates, s.seed, s.scaling
    );
    t.push_str("model,m,n,replicates,seed,scaling,kind,row,col,value\n");
    for (j, v) in s.raw_mean.iter().enumerate() {
        let _ = writeln!(t, "{meta},raw_mean,{j},,{}", sig12(*v));
    }
    for (j, v) in s.mean.iter().enumerate() {
        let _ = writeln!(t, "{meta},mean,{j},,{}", sig12(*v));
    }
    for (p, row) in s.sample_cov.iter().enumerate() {
        for (q, v) in row.iter().enumerate() {
            let _ = writeln!(t, "{meta},cov,{p},{q},{}", sig12(*v));
        }
    }
    for (p, row) in s.standard_errors.iter().enumerate() {
        for (q, v) in row.iter().enumerate() {
            let _ = writeln!(t, "{meta},se,{p},{q},{}", sig12(*v));
        }
    }
    t
}

#[derive(Serialize)]
struct CovarianceOut {
    model: &'static str,
    m: usize,
    /// What the variance is measured against: "n" or "n log n".
    scale: &'static str,
    sigma_sq: f64,
    rational_first_row: Vec<String>,
    float_matrix: Vec<Vec<f64>>,
}

fn scale_str(note: ScaleNote) -> &'static str {
    match note {
        ScaleNote::PerN => "n",
        ScaleNote::PerNLogN => "n log n",
    }
}

fn cmd_covariance(args: &CovarianceArgs, format: Format) -> Result<String> {
    if args.sigma2.is_some() && args.model != CovModelArg::Cgwt {
        return Err(Error::Config("--sigma2 only applies to cgwt".into()));
    }
    let (table, model): (CirculantCovariance, &'static str) = match args.model {
        CovModelArg::Rrt => (rrt_sigma(args.m)?, "rrt"),
        CovModelArg::Bst => (bst_sigma(args.m)?, "bst"),
        CovModelArg::BstExternal => (bst_external_sigma(args.m)?, "bst-external"),
        CovModelArg::Cgwt => (cgwt_sigma(args.m, args.sigma2.unwrap_or(1.0))?, "cgwt"),
    };
    let out = CovarianceOut {
        model,
        m: table.m,
        scale: scale_str(table.scale),
        sigma_sq: table.sigma_sq,
        rational_first_row: table.rational_row_strings(),
        float_matrix: table.to_float_matrix(),
    };
    match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut t = String::new();
            let meta = format!("{},{},{},{}", out.model, out.m, out.scale, sig12(out.sigma_sq));
            t.push_str("model,m,scale,sigma_sq,kind,row,col,value\n");
            for (k, s) in out.rational_first_row.iter().enumerate() {
                let _ = writeln!(t, "{meta},rational,{k},,{s}");
            }
            for (p, row) in out.float_matrix.iter().enumerate() {
                for (q, v) in row.iter().enumerate() {
                    let _ = writeln!(t, "{meta},float,{p},{q},{}", sig12(*v));
                }
            }
            Ok(t)
        }
    }
}

#[derive(Serialize)]
struct MomentRow {
    a: u32,
    b: u32,
    z_re: f64,
    z_im: f64,
    z_hat_re: f64,
    z_hat_im: f64,
}

#[derive(Serialize)]
struct MomentsOut {
    model: &'static str,
    m: usize,
    max_degree: u32,
    rows: Vec<MomentRow>,
}

fn cmd_moments(args: &MomentsArgs, format: Format) -> Result<String> {
    let table = z_moments(args.model.to_model(), args.m, args.max_degree)?;
    let rows: Vec<MomentRow> = table
        .entries
        .iter()
        .map(|(&(a, b), z)| {
            let zh = table.hat_entries[&(a, b)];
            MomentRow {
                a,
                b,
                z_re: z.re,
                z_im: z.im,
                z_hat_re: zh.re,
                z_hat_im: zh.im,
            }
        })
        .collect();
    let out = MomentsOut {
        model: table.model.name(),
        m: table.m,
        max_degree: table.max_degree,
        rows,
    };
    match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut t = String::new();
            t.push_str("model,m,max_degree,a,b,z_re,z_im,z_hat_re,z_hat_im\n");
            for r in &out.rows {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{},{},{},{},{}",
                    out.model,
                    out.m,
                    out.max_degree,
                    r.a,
                    r.b,
                    sig12(r.z_re),
                    sig12(r.z_im),
                    sig12(r.z_hat_re),
                    sig12(r.z_hat_im)
                );
            }
            Ok(t)
        }
    }
}

#[derive(Serialize)]
struct OscRow {
    m: usize,
    c2_re: f64,
    c2_im: f64,
    c11: f64,
    c3_re: f64,
    c3_im: f64,
    oscillates: bool,
}

#[derive(Serialize)]
struct OscillationOut {
    model: &'static str,
    tol: f64,
    rows: Vec<OscRow>,
}

fn cmd_oscillation(args: &OscillationArgs, format: Format) -> Result<String> {
    if args.m_from > args.m_to {
        return Err(Error::Config(format!(
            "--m-from {} exceeds --m-to {}",
            args.m_from, args.m_to
        )));
    }
    let model = args.model.to_model();
    let mut rows = Vec::with_capacity(args.m_to - args.m_from + 1);
    for m in args.m_from..=args.m_to {
        let r = oscillation_check(model, m, args.tol)?;
        rows.push(OscRow {
            m,
            c2_re: r.c2.re,
            c2_im: r.c2.im,
            c11: r.c11,
            c3_re: r.c3.re,
            c3_im: r.c3.im,
            oscillates: r.oscillates,
        });
    }
    let out = OscillationOut {
        model: model.name(),
        tol: args.tol,
        rows,
    };
    match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut t = String::new();
            t.push_str("model,tol,m,c2_re,c2_im,c11,c3_re,c3_im,oscillates\n");
            for r in &out.rows {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{},{},{},{},{}",
                    out.model,
                    sig12(out.tol),
                    r.m,
                    sig12(r.c2_re),
                    sig12(r.c2_im),
                    sig12(r.c11),
                    sig12(r.c3_re),
                    sig12(r.c3_im),
                    r.oscillates
                );
            }
            Ok(t)
        }
    }
}

#[derive(Serialize)]
struct ScalePoint {
    n: u64,
    variance: f64,
}

#[derive(Serialize)]
struct ScalingOut {
    model: String,
    m: usize,
    replicates: usize,
    seed: u64,
    points: Vec<ScalePoint>,
    gamma_hat: f64,
    intercept: f64,
    r_squared: f64,
    points_used: usize,
}

fn cmd_scaling(args: &ScalingArgs, format: Format) -> Result<String> {
    let model = tree_model(args.model, &args.offspring)?;
    let grid = variance_growth_grid(&model, args.m, &args.n_grid, args.reps, args.seed)?;
    let fit = fit_variance_exponent(&grid)?;
    let out = ScalingOut {
        model: model.name(),
        m: args.m,
        replicates: args.reps,
        seed: args.seed,
        points: grid
            .iter()
            .map(|&(n, variance)| ScalePoint { n, variance })
            .collect(),
        gamma_hat: fit.gamma_hat,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
        points_used: fit.points_used,
    };
    match format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut t = String::new();
            t.push_str(
                "model,m,replicates,seed,n,variance,gamma_hat,intercept,r_squared,points_used\n",
            );
            for p in &out.points {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{},{},{},{},{},{}",
                    out.model,
                    out.m,
                    out.replicates,
                    out.seed,
                    p.n,
                    sig12(p.variance),
                    sig12(out.gamma_hat),
                    sig12(out.intercept),
                    sig12(out.r_squared),
                    out.points_used
                );
            }
            Ok(t)
        }
    }
}
