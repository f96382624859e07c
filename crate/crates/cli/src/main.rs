use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use matching_energy::emd::EmpiricalDistribution;
use matching_energy::experiments::{self, output, ExperimentConfig, ExperimentKind, RunOptions};
use matching_energy::graph::read_edge_list;
use matching_energy::par::Parallelism;
use matching_energy::poly::{closed_form, matching_polynomial, Family, PolyJson};
use matching_energy::roots::{matching_energy, matching_roots, normalize, spectrum_of_graph, DEFAULT_TOL};
use matching_energy::treewalk::{count_tree_like, power_sums};
use matching_energy::{semicircle, Engine, Graph, MatchingPolynomial};

#[derive(Parser)]
#[command(name = "menergy", version, about = "Matching polynomials, matching energy and random-graph experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matching polynomial coefficients as JSON.
    Mpoly {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "auto")]
        engine: EngineArg,
    },
    /// Matching energy and roots of a graph.
    Energy {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Roots of a matching polynomial given by its counts `m_0,m_1,...`.
    Roots {
        /// Comma-separated counts, starting with 1.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<String>,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Semicircle density, CDF and moments.
    Semicircle {
        #[arg(long, allow_hyphen_values = true)]
        density: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        cdf: Option<f64>,
        #[arg(long)]
        moment: Option<u32>,
        #[arg(long)]
        abs_moment: bool,
    },
    /// Empirical matching distribution of a graph.
    Emd {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        p: f64,
        #[arg(long, value_delimiter = ',', default_value = "2,4,6")]
        moments: Vec<u32>,
        #[arg(long)]
        ks: bool,
    },
    /// Tree-like closed walks of length k.
    Walks {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "both")]
        method: WalkMethod,
    },
    /// Run an experiment and write CSV rows plus a JSON summary.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file, `-` for stdin.
    graph: Option<PathBuf>,
    /// Named family instead of a file.
    #[arg(long, conflicts_with = "graph", requires = "order")]
    family: Option<FamilyArg>,
    /// Order of the named family.
    #[arg(long = "order")]
    order: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Complete => Family::Complete,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Dp,
    Recursion,
    Forest,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum WalkMethod {
    Enumerate,
    Powersum,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Convergence,
    LowerBound,
    VarianceDecay,
    Kn,
    Godsil,
}

#[derive(Args)]
struct ExperimentArgs {
    /// JSON experiment config; inline flags are ignored when given.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "convergence")]
    kind: KindArg,
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value = "experiment")]
    name: String,
    #[arg(long, default_value = "auto")]
    engine: String,
    /// CSV output; the JSON summary goes next to it with a `.json` extension.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add a wall-clock `elapsed` column.
    #[arg(long)]
    timing: bool,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, default_value_t = 200)]
    n_min: usize,
    /// Largest order: 2000 for `kn`, 7 for `godsil` unless given.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 10)]
    step: usize,
    #[arg(long, default_value_t = 8)]
    k_max: usize,
    #[arg(long, default_value_t = 500)]
    corpus_size: usize,
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(f) = input.family {
        let n = input.order.ok_or_else(|| anyhow!("--family needs --order"))?;
        return Ok(Family::from(f).graph(n)?);
    }
    let path = input.graph.as_ref().ok_or_else(|| anyhow!("give an edge-list file or --family"))?;
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(read_edge_list(&text)?)
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn mpoly(input: &GraphInput, engine: EngineArg) -> Result<()> {
    let poly = match engine {
        EngineArg::Closed => {
            let f = input.family.ok_or_else(|| anyhow!("--engine closed needs --family"))?;
            closed_form(f.into(), input.order.unwrap_or_default())?
        }
        e => {
            let engine = match e {
                EngineArg::Auto => Engine::Auto,
                EngineArg::Dp => Engine::SubsetDp,
                EngineArg::Recursion => Engine::EdgeRecursion,
                _ => Engine::Forest,
            };
            matching_polynomial(&load_graph(input)?, engine)?
        }
    };
    print_json(&serde_json::to_value(PolyJson::from(&poly))?)
}

fn energy(input: &GraphInput, tol: f64) -> Result<()> {
    let s = spectrum_of_graph(&load_graph(input)?, tol)?;
    print_json(&json!({ "me": matching_energy(&s), "roots": s.roots() }))
}

fn roots(m: Vec<String>, n: usize, tol: f64) -> Result<()> {
    let poly = MatchingPolynomial::try_from(PolyJson { n, m })?;
    let s = matching_roots(&poly, tol)?;
    print_json(&json!({ "me": matching_energy(&s), "roots": s.roots() }))
}

fn semicircle_cmd(density: Option<f64>, cdf: Option<f64>, moment: Option<u32>, abs_moment: bool) -> Result<()> {
    let mut any = false;
    if let Some(x) = density {
        println!("{}", semicircle::density(x));
        any = true;
    }
    if let Some(x) = cdf {
        println!("{}", semicircle::cdf(x));
        any = true;
    }
    if let Some(k) = moment {
        println!("{}", semicircle::moment_exact(k));
        any = true;
    }
    if abs_moment {
        println!("{}", semicircle::abs_moment());
        any = true;
    }
    if !any {
        bail!("pass at least one of --density, --cdf, --moment, --abs-moment");
    }
    Ok(())
}

fn emd(input: &GraphInput, p: f64, moments: &[u32], ks: bool) -> Result<()> {
    let g = load_graph(input)?;
    let s = spectrum_of_graph(&g, DEFAULT_TOL)?;
    let e = EmpiricalDistribution::from_spectrum(&normalize(&s, g.order(), p)?);
    let m: Map<String, Value> = moments.iter().map(|&k| (k.to_string(), json!(e.moment(k)))).collect();
    let mut out = json!({ "moments": m, "mean_abs": e.mean_abs() });
    if ks {
        out["ks"] = json!(e.ks_distance());
    }
    print_json(&out)
}

fn walks(input: &GraphInput, k: usize, method: WalkMethod) -> Result<()> {
    let g = load_graph(input)?;
    let enumerated = || count_tree_like(&g, k).map(|c| c.to_string());
    let power_sum = || -> Result<String> {
        if k == 0 {
            return Ok(g.order().to_string());
        }
        let ps = power_sums(&matching_polynomial(&g, Engine::Auto)?, k);
        Ok(ps[k - 1].to_string())
    };
    let out = match method {
        WalkMethod::Enumerate => json!({ "k": k, "enumerated": enumerated()? }),
        WalkMethod::Powersum => json!({ "k": k, "power_sum": power_sum()? }),
        WalkMethod::Both => {
            let (a, b) = (enumerated()?, power_sum()?);
            json!({ "k": k, "enumerated": a, "power_sum": b, "match": a == b })
        }
    };
    print_json(&out)
}

fn emit(out: Option<&Path>, csv: String, summary: String) -> Result<()> {
    match out {
        Some(path) => {
            let side = output::write_pair(path, &csv, &summary)?;
            eprintln!("wrote {} and {}", path.display(), side.display());
        }
        None => print!("{summary}"),
    }
    Ok(())
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let opts = RunOptions { parallelism: if a.sequential { Parallelism::Sequential } else { Parallelism::Auto } };
    match a.kind {
        KindArg::Kn => {
            let r = experiments::run_kn_asymptotics(a.n_min, a.n_max.unwrap_or(2000), a.step, opts)?;
            return emit(a.out.as_deref(), output::kn_csv(&r)?, output::kn_json(&r)?);
        }
        KindArg::Godsil => {
            let n_max = a.n_max.unwrap_or(experiments::GODSIL_MAX_N);
            let r = experiments::run_godsil_verification(n_max, a.k_max, a.corpus_size, a.seed, opts)?;
            emit(a.out.as_deref(), output::godsil_csv(&r)?, output::godsil_json(&r)?)?;
            if !r.all_equal {
                bail!("{} mismatches", r.mismatches);
            }
            return Ok(());
        }
        _ => {}
    }
    let config = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let mut c: ExperimentConfig = serde_json::from_str(&text).context("parsing config")?;
            if a.out.is_some() {
                c.output_path = a.out.clone();
            }
            c
        }
        None => {
            let mut c = ExperimentConfig::new(a.name.clone(), a.n.clone(), a.p.clone(), a.trials, a.seed);
            c.kind = match a.kind {
                KindArg::LowerBound => ExperimentKind::LowerBound,
                KindArg::VarianceDecay => ExperimentKind::VarianceDecay,
                _ => ExperimentKind::Convergence,
            };
            c.engine = a.engine.parse()?;
            c.output_path = a.out.clone();
            c.include_timing = a.timing;
            c
        }
    };
    let out = config.output_path.clone();
    let (csv, summary) = match config.kind {
        ExperimentKind::Convergence => {
            let r = experiments::run_convergence(&config, opts)?;
            (output::trials_csv(&r)?, output::convergence_json(&r)?)
        }
        ExperimentKind::LowerBound => {
            let r = experiments::run_lower_bound(&config, opts)?;
            (output::lower_bound_csv(&r)?, output::lower_bound_json(&r)?)
        }
        ExperimentKind::VarianceDecay => {
            let r = experiments::run_variance_decay(&config, opts)?;
            (output::variance_csv(&r)?, output::variance_json(&r)?)
        }
    };
    emit(out.as_deref(), csv, summary)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Mpoly { input, engine } => mpoly(&input, engine),
        Command::Energy { input, tol } => energy(&input, tol),
        Command::Roots { m, n, tol } => roots(m, n, tol),
        Command::Semicircle { density, cdf, moment, abs_moment } => semicircle_cmd(density, cdf, moment, abs_moment),
        Command::Emd { input, p, moments, ks } => emd(&input, p, &moments, ks),
        Command::Walks { input, k, method } => walks(&input, k, method),
        Command::Experiment(a) => experiment(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
