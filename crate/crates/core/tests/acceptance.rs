//! Acceptance suite. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use tperfect::cli::run_cli;
use tperfect::graph::{make_named, Graph, NamedGraph};
use tperfect::io::corpus::{
    all_connected_claw_free, all_connected_subcubic, random_claw_free, random_line_graph, random_subcubic,
    rng_from_seed,
};
use tperfect::io::Report;
use tperfect::linegraph::line_graph;
use tperfect::oracle::{
    has_k4_tminor_bruteforce, has_skewed_prism_bruteforce, has_skewed_theta_bruteforce, is_t_perfect_bruteforce,
};
use tperfect::recognizer::{is_t_perfect, Decision};
use tperfect::theta::{has_skewed_theta_with, ThetaCtx};

/// Diagnostics raised anywhere in the suite, checked by the structural
/// criterion.
static DIAGNOSTICS: Mutex<Vec<String>> = Mutex::new(Vec::new());

fn record(label: &str, diagnostics: &[String]) {
    if !diagnostics.is_empty() {
        let mut all = DIAGNOSTICS.lock().unwrap();
        all.extend(diagnostics.iter().map(|d| format!("{label}: {d}")));
    }
}

fn recognize(g: &Graph, label: &str) -> Decision {
    let d = is_t_perfect(g).unwrap_or_else(|e| panic!("{label}: {e} on {g:?}"));
    record(label, &d.diagnostics);
    d
}

fn theta(h: &Graph, label: &str) -> bool {
    let mut ctx = ThetaCtx::default();
    let found = has_skewed_theta_with(h, &mut ctx).unwrap_or_else(|e| panic!("{label}: {e} on {h:?}"));
    record(label, &ctx.diagnostics);
    found
}

/// Number of instances where `f` returns false, with the first few labels.
fn mismatches<T: Sync>(items: &[T], f: impl Fn(&T) -> bool + Sync + Send) -> (usize, Vec<usize>) {
    let bad: Vec<usize> = items
        .par_iter()
        .enumerate()
        .filter(|(_, x)| !f(x))
        .map(|(i, _)| i)
        .collect();
    (bad.len(), bad.into_iter().take(5).collect())
}

fn named_golden() -> (bool, String) {
    let started = Instant::now();
    let cases = [
        (NamedGraph::K4, false),
        (NamedGraph::W5, false),
        (NamedGraph::CycleSquare(7), false),
        (NamedGraph::CycleSquare(10), false),
        (NamedGraph::C6SquareMinusEdge, true),
        (NamedGraph::CycleSquareMinusVertex(7), true),
        (NamedGraph::CycleSquareMinusVertex(10), true),
    ];
    let correct = cases
        .iter()
        .filter(|(k, want)| recognize(&make_named(*k).unwrap(), &k.label()).verdict.is_t_perfect() == *want)
        .count();
    let elapsed = started.elapsed();
    (
        correct == cases.len() && elapsed < Duration::from_secs(1),
        format!("{correct}/{} correct in {elapsed:?}", cases.len()),
    )
}

fn recognizer_vs_oracle() -> (bool, String) {
    let exhaustive = all_connected_claw_free(8);
    let mut rng = rng_from_seed(20);
    let random: Vec<Graph> = (0..10_000)
        .map(|i| {
            if i % 2 == 0 {
                let n = rng.gen_range(1..=12);
                random_claw_free(n, &mut rng)
            } else {
                random_line_graph(12, 4, &mut rng)
            }
        })
        .collect();
    let agree = |g: &Graph| recognize(g, "recognizer-oracle").verdict.is_t_perfect() == is_t_perfect_bruteforce(g).unwrap();
    let (bad_e, first_e) = mismatches(&exhaustive, agree);
    let (bad_r, first_r) = mismatches(&random, agree);
    (
        bad_e + bad_r == 0,
        format!(
            "{} exhaustive ({bad_e} disagree {first_e:?}), {} random ({bad_r} disagree {first_r:?})",
            exhaustive.len(),
            random.len()
        ),
    )
}

fn theta_vs_oracle() -> (bool, String) {
    let exhaustive = all_connected_subcubic(8);
    let mut rng = rng_from_seed(30);
    let random: Vec<Graph> = (0..5_000)
        .map(|_| {
            let n = rng.gen_range(1..=14);
            random_subcubic(n, &mut rng)
        })
        .collect();
    let agree = |h: &Graph| theta(h, "theta-oracle") == has_skewed_theta_bruteforce(h).unwrap();
    let (bad_e, first_e) = mismatches(&exhaustive, agree);
    let (bad_r, first_r) = mismatches(&random, agree);
    (
        bad_e + bad_r == 0,
        format!(
            "{} exhaustive ({bad_e} disagree {first_e:?}), {} random ({bad_r} disagree {first_r:?})",
            exhaustive.len(),
            random.len()
        ),
    )
}

fn line_graph_bridge() -> (bool, String) {
    let mut rng = rng_from_seed(40);
    let mut roots = Vec::new();
    while roots.len() < 1_000 {
        let n = rng.gen_range(2..=10);
        let h = random_subcubic(n, &mut rng);
        if h.m() > 0 {
            roots.push(h);
        }
    }
    let (bad, first) = mismatches(&roots, |h| {
        let (l, _) = line_graph(h).unwrap();
        recognize(&l, "line-graph-bridge").verdict.is_t_perfect() != has_skewed_theta_bruteforce(h).unwrap()
    });
    (bad == 0, format!("{} roots, {bad} disagree {first:?}", roots.len()))
}

fn prism_vs_tminor() -> (bool, String) {
    let mut rng = rng_from_seed(50);
    let graphs: Vec<Graph> = (0..1_000)
        .map(|i| {
            if i % 2 == 0 {
                let n = rng.gen_range(1..=10);
                random_claw_free(n, &mut rng)
            } else {
                random_line_graph(10, 4, &mut rng)
            }
        })
        .collect();
    let with_k4 = graphs.iter().filter(|g| has_k4_tminor_bruteforce(g).unwrap()).count();
    let (bad, first) = mismatches(&graphs, |g| {
        has_skewed_prism_bruteforce(g).unwrap() == has_k4_tminor_bruteforce(g).unwrap()
    });
    (
        bad == 0,
        format!("{} graphs ({with_k4} with K4 t-minor), {bad} disagree {first:?}", graphs.len()),
    )
}

fn structural() -> (bool, String) {
    let all = DIAGNOSTICS.lock().unwrap();
    let shown: Vec<&String> = all.iter().take(3).collect();
    (all.is_empty(), format!("{} diagnostics {shown:?}", all.len()))
}

/// Least-squares slope of `log y` against `log x`.
fn log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    num / den
}

fn scaling() -> (bool, String) {
    let mut rng = rng_from_seed(70);
    let mut worst = Duration::ZERO;
    for _ in 0..3 {
        let (l, _) = line_graph(&random_subcubic(500, &mut rng)).unwrap();
        let started = Instant::now();
        recognize(&l, "scaling-500");
        worst = worst.max(started.elapsed());
    }
    let mut points = Vec::new();
    for n in [50usize, 100, 200, 400] {
        let total: usize = (0..5)
            .map(|_| {
                let (l, _) = line_graph(&random_subcubic(n, &mut rng)).unwrap();
                recognize(&l, "scaling").recursion_calls
            })
            .sum();
        points.push((n as f64, total as f64 / 5.0));
    }
    let slope = log_slope(&points);
    (
        worst < Duration::from_secs(60) && slope <= 2.5,
        format!("slowest 500-vertex root {worst:?}, call counts {points:?}, exponent {slope:.2}"),
    )
}

fn stable_lines(args: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli(std::iter::once("tperfect").chain(args.iter().copied()), &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let mut lines = vec![format!("exit {code}")];
    for line in text.lines() {
        match serde_json::from_str::<Report>(line) {
            Ok(r) => lines.push(r.stable_line()),
            Err(_) => lines.push(line.to_string()),
        }
    }
    lines
}

fn determinism() -> (bool, String) {
    let dir = std::env::temp_dir().join(format!("tperfect-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c10 = dir.join("c10sq-minus-v.el");
    let g = make_named(NamedGraph::CycleSquareMinusVertex(10)).unwrap();
    std::fs::write(&c10, tperfect::io::format::write_edge_list(&g)).unwrap();
    let c10 = c10.display().to_string();
    let commands: [&[&str]; 3] = [
        &["corpus-check", "--max-n", "9", "--samples", "60", "--seed", "8"],
        &["recognize", &c10, "--trace"],
        &["gen", "--kind", "random-clawfree", "--count", "20", "--seed", "8"],
    ];
    let mut identical = true;
    let mut lines = 0;
    for args in commands {
        let runs: Vec<Vec<String>> = (0..3).map(|_| stable_lines(args)).collect();
        identical &= runs.windows(2).all(|w| w[0] == w[1]);
        lines += runs[0].len();
    }
    (identical, format!("{} commands x 3 runs, {lines} lines each run", commands.len()))
}

type Criterion = fn() -> (bool, String);

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Criterion); 8] = [
        ("named golden suite", named_golden),
        ("recognizer agrees with oracle", recognizer_vs_oracle),
        ("skewed theta agrees with oracle", theta_vs_oracle),
        ("line graph bridge", line_graph_bridge),
        ("skewed prism iff K4 t-minor", prism_vs_tminor),
        ("structural assertions silent", structural),
        ("polynomial scaling", scaling),
        ("determinism", determinism),
    ];
    // the structural criterion reads diagnostics gathered by the others
    let order = [0, 1, 2, 3, 4, 6, 7, 5];
    let mut results = vec![None; criteria.len()];
    for i in order {
        let started = Instant::now();
        let (ok, detail) = (criteria[i].1)();
        results[i] = Some((ok, detail, started.elapsed()));
    }
    let mut failed = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        let (ok, detail, elapsed) = r.unwrap();
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} [{}] {}: {detail} ({elapsed:.1?})", i + 1, criteria[i].0);
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
