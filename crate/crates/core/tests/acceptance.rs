//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::fs;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;

use matching_energy::experiments::{
    output, run_convergence, run_godsil_verification, run_kn_asymptotics, run_lower_bound, run_variance_decay,
    ExperimentConfig, RunOptions,
};
use matching_energy::graph::{complete, cycle, path};
use matching_energy::par::Parallelism;
use matching_energy::poly::{
    closed_form, counts_edge_recursion, counts_forest, counts_subset_dp, matching_polynomial, Engine, Family,
};
use matching_energy::roots::{energy_of_graph, matching_roots, DEFAULT_TOL};

const LIMIT: f64 = 8.0 / (3.0 * PI);
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, minutes: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(60 * minutes) {
        return Err(format!("took {:.1}s, limit {minutes} min", elapsed.as_secs_f64()));
    }
    Ok(())
}

fn exact_combinatorics() -> Outcome {
    let start = Instant::now();
    let corpus = common::corpus();
    let mut forests = 0;
    for g in &corpus {
        let dp = counts_subset_dp(g).map_err(|e| e.to_string())?;
        let rec = counts_edge_recursion(g).map_err(|e| e.to_string())?;
        if dp != rec {
            return Err(format!("dp and recursion differ on {:?}", g.edges()));
        }
        if g.is_forest() {
            forests += 1;
            if counts_forest(g).map_err(|e| e.to_string())? != dp {
                return Err(format!("forest engine differs on {:?}", g.edges()));
            }
        }
    }
    for n in 1..=16 {
        let mut cases = vec![(Family::Path, path(n)), (Family::Complete, complete(n))];
        if n >= 3 {
            cases.push((Family::Cycle, cycle(n).unwrap()));
        }
        for (family, g) in cases {
            let want = closed_form(family, n).map_err(|e| e.to_string())?;
            for engine in [Engine::SubsetDp, Engine::EdgeRecursion] {
                if matching_polynomial(&g, engine).map_err(|e| e.to_string())? != want {
                    return Err(format!("{family:?} {n} closed form differs from {engine:?}"));
                }
            }
            if family == Family::Path && counts_forest(&g).map_err(|e| e.to_string())? != want {
                return Err(format!("path {n} closed form differs from forest engine"));
            }
        }
    }
    within(start.elapsed(), 2)?;
    Ok(format!("{} graphs ({forests} forests) and 46 closed forms agree", corpus.len()))
}

fn godsil() -> Outcome {
    let start = Instant::now();
    let r = run_godsil_verification(7, 8, 500, SEED, RunOptions::default()).map_err(|e| e.to_string())?;
    let odd_nonzero =
        r.rows.iter().filter(|row| row.k % 2 == 1 && (row.enumerated != "0" || row.power_sum != "0")).count();
    within(start.elapsed(), 5)?;
    check(
        r.all_equal && odd_nonzero == 0 && r.graphs == 1099 + 500,
        format!("{} graphs, {} mismatches, {odd_nonzero} nonzero odd counts", r.graphs, r.mismatches),
    )
}

fn relative(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

fn root_quality() -> Outcome {
    let corpus = common::corpus();
    let (mut worst_newton, mut worst_sym) = (0.0f64, 0.0f64);
    for g in &corpus {
        let poly = matching_polynomial(g, Engine::Auto).map_err(|e| e.to_string())?;
        let s = matching_roots(&poly, DEFAULT_TOL).map_err(|e| e.to_string())?;
        let m1 = poly.coeff(1).to_f64().unwrap();
        let m2 = poly.coeff(2).to_f64().unwrap();
        worst_newton = worst_newton
            .max(relative(s.power_sum(2), 2.0 * m1))
            .max(relative(s.power_sum(4), 2.0 * m1 * m1 - 4.0 * m2));
        let r = s.roots();
        for i in 0..r.len() {
            worst_sym = worst_sym.max((r[i] + r[r.len() - 1 - i]).abs() / r[i].abs().max(1.0));
        }
    }
    check(
        worst_newton <= 1e-8 && worst_sym <= 1e-8,
        format!("{} graphs, worst Newton residual {worst_newton:.2e}, worst asymmetry {worst_sym:.2e}", corpus.len()),
    )
}

fn edge_deletion() -> Outcome {
    let start = Instant::now();
    let orders: Vec<usize> = (2..=12).collect();
    let graphs = common::random_graphs(200, &orders, SEED);
    let (mut edges, mut smallest) = (0usize, f64::INFINITY);
    for g in &graphs {
        let me = energy_of_graph(g).map_err(|e| e.to_string())?;
        for &e in g.edges() {
            let less = energy_of_graph(&g.delete_edge(e).unwrap()).map_err(|e| e.to_string())?;
            smallest = smallest.min(me - less);
            edges += 1;
        }
    }
    within(start.elapsed(), 2)?;
    check(smallest > 1e-9, format!("{edges} edge deletions, smallest decrease {smallest:.3e}"))
}

/// Remainder band from an oracle run over the same range: observed
/// `[-0.0256, -0.0081]`, frozen with headroom.
const REMAINDER_BAND: (f64, f64) = (-0.035, 0.0);

fn complete_asymptotics() -> Outcome {
    let start = Instant::now();
    let r = run_kn_asymptotics(200, 2000, 10, RunOptions::default()).map_err(|e| e.to_string())?;
    within(start.elapsed(), 5)?;
    let rel = (r.a / 0.848_826_4 - 1.0).abs();
    check(
        rel < 0.01 && r.remainder_min >= REMAINDER_BAND.0 && r.remainder_max <= REMAINDER_BAND.1,
        format!(
            "a = {:.7} ({:.3}% off), b = {:.4}, remainder in [{:.4}, {:.4}]",
            r.a,
            100.0 * rel,
            r.b,
            r.remainder_min,
            r.remainder_max
        ),
    )
}

fn semicircle_moments() -> Outcome {
    let start = Instant::now();
    let c = ExperimentConfig::new("acceptance-semicircle", vec![8, 16, 24], vec![0.5], 200, SEED);
    let r = run_convergence(&c, RunOptions::default()).map_err(|e| e.to_string())?;
    within(start.elapsed(), 30)?;
    let at = |n| r.aggregate(n, 0.5).unwrap();
    let (m2, m4) = (at(24).moments[&2], at(24).moments[&4]);
    let ks: Vec<f64> = [8, 16, 24].iter().map(|&n| at(n).ks.mean).collect();
    check(
        (m2 - 1.0).abs() <= 0.10 && (m4 - 2.0).abs() <= 0.30 && ks[0] > ks[1] && ks[1] > ks[2],
        format!("n=24: m2 = {m2:.4}, m4 = {m4:.4}; mean KS {:.4} > {:.4} > {:.4}", ks[0], ks[1], ks[2]),
    )
}

/// Trials per `(n, p)` for the trend check. The step from `n = 20` to `24`
/// is a few thousandths, so the standard error has to be well below that.
const TREND_TRIALS: usize = 1500;

fn energy_trend() -> Outcome {
    let ns = vec![8, 12, 16, 20, 24];
    let c = ExperimentConfig::new("acceptance-trend", ns.clone(), vec![0.3, 0.5, 0.7], TREND_TRIALS, SEED);
    let r = run_convergence(&c, RunOptions::default()).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    let mut ok = true;
    for p in [0.3, 0.5, 0.7] {
        let means: Vec<f64> = ns.iter().map(|&n| r.aggregate(n, p).unwrap().me_ratio.mean).collect();
        let gaps: Vec<f64> = means.iter().map(|m| (LIMIT - m).abs()).collect();
        ok &= means.windows(2).all(|w| w[0] < w[1]) && gaps.windows(2).all(|w| w[0] > w[1]);
        let shown: Vec<String> = means.iter().map(|m| format!("{m:.4}")).collect();
        lines.push(format!("p={p}: {}", shown.join(" < ")));
    }
    check(ok, lines.join("; "))
}

fn lower_bound() -> Outcome {
    let c = ExperimentConfig::new("acceptance-lower-bound", vec![24], vec![0.5], 200, SEED);
    let r = run_lower_bound(&c, RunOptions::default()).map_err(|e| e.to_string())?;
    let g = &r.groups[0];
    let min = r.rows.iter().map(|x| x.margin).fold(f64::INFINITY, f64::min);
    check(
        g.trials == 200 && g.fraction_positive == 1.0,
        format!("{}/{} positive, smallest margin {min:.3}", g.positive, g.trials),
    )
}

fn variance_decay() -> Outcome {
    let c = ExperimentConfig::new("acceptance-variance", vec![8, 12, 16, 20, 24], vec![0.5], 400, SEED);
    let r = run_variance_decay(&c, RunOptions::default()).map_err(|e| e.to_string())?;
    let slope = r.groups[0].slope.ok_or("a variance was zero")?;
    check((-2.6..=-1.4).contains(&slope), format!("log-log slope {slope:.4}"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let c = ExperimentConfig::new("acceptance-determinism", vec![8, 12, 20], vec![0.3, 0.5], 15, SEED);
    let mut files = Vec::new();
    for (run, mode) in [Parallelism::Auto, Parallelism::Sequential, Parallelism::Auto].into_iter().enumerate() {
        let opts = RunOptions { parallelism: mode };
        let conv = run_convergence(&c, opts).map_err(|e| e.to_string())?;
        let lb = run_lower_bound(&c, opts).map_err(|e| e.to_string())?;
        let var = run_variance_decay(&c, opts).map_err(|e| e.to_string())?;
        let kn = run_kn_asymptotics(50, 300, 25, opts).map_err(|e| e.to_string())?;
        let gs = run_godsil_verification(6, 6, 40, SEED, opts).map_err(|e| e.to_string())?;
        let outputs = [
            ("conv", output::trials_csv(&conv), output::convergence_json(&conv)),
            ("lb", output::lower_bound_csv(&lb), output::lower_bound_json(&lb)),
            ("var", output::variance_csv(&var), output::variance_json(&var)),
            ("kn", output::kn_csv(&kn), output::kn_json(&kn)),
            ("godsil", output::godsil_csv(&gs), output::godsil_json(&gs)),
        ];
        let mut written = Vec::new();
        for (name, csv, json) in outputs {
            let path = dir.path().join(format!("{name}-{run}.csv"));
            let side = output::write_pair(&path, &csv.map_err(|e| e.to_string())?, &json.map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            written.push((fs::read(&path).unwrap(), fs::read(side).unwrap()));
        }
        files.push(written);
    }
    let same = files.windows(2).all(|w| w[0] == w[1]);
    let bytes: usize = files[0].iter().map(|(a, b)| a.len() + b.len()).sum();
    check(
        same,
        format!("3 runs (parallel, sequential, parallel) of 5 experiments, {bytes} bytes each, identical: {same}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("exact combinatorics", exact_combinatorics),
        ("tree-like walks equal power sums", godsil),
        ("root quality", root_quality),
        ("edge deletion lowers energy", edge_deletion),
        ("complete graph asymptotics", complete_asymptotics),
        ("semicircle moments and KS", semicircle_moments),
        ("energy ratio trend", energy_trend),
        ("lower bound", lower_bound),
        ("variance decay", variance_decay),
        ("determinism", determinism),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d} [{secs:.1}s]", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {d} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
