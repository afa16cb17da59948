//! Command-line surface. Every command writes line-delimited JSON reports to
//! stdout; exit codes mirror the reported verdict.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::graph::Graph;
use crate::io::corpus::{generate_corpus, CorpusKind};
use crate::io::format::{parse_graph, write_edge_list, write_graph6, GraphFormat};
use crate::io::report::{InputIdentity, Report, Timing};
use crate::linegraph::recognize_line_graph;
use crate::oracle::{has_skewed_prism_bruteforce, has_skewed_theta_bruteforce, is_t_perfect_bruteforce};
use crate::parity::{ParityBackend, ParityConfig, DEFAULT_MAX_EXHAUSTIVE_N};
use crate::recognizer::{is_t_perfect_with, RecognizerConfig};
use crate::theta::{has_skewed_theta_with, ThetaCtx};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "tperfect", version, about = "Decide t-perfection of claw-free graphs")]
pub struct Cli {
    /// Input format; sniffed from the content when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<GraphFormat>,
    #[arg(long, global = true, value_enum, default_value_t = ParityBackend::Exhaustive)]
    pub parity_backend: ParityBackend,
    /// Largest graph handed to the exhaustive induced-path search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_EXHAUSTIVE_N)]
    pub max_exhaustive_n: usize,
    /// Include the full rule trace in reports.
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Question {
    Tperfect,
    Theta,
    Prism,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide t-perfection (exit 0 t-perfect, 1 not, 2 input error).
    Recognize { file: PathBuf },
    /// Decide whether a subcubic graph contains a skewed theta (exit 1 if so).
    SkewedTheta { file: PathBuf },
    /// Reconstruct a root graph (exit 1 if the input is not a line graph).
    LineRoot { file: PathBuf },
    /// Ask a brute-force oracle (exit 0 for true, 1 for false).
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum)]
        question: Question,
    },
    /// Print a seeded corpus, one graph per record.
    Gen {
        #[arg(long, value_enum)]
        kind: CorpusKind,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Compare the recognizer with the t-minor oracle on random claw-free
    /// graphs (exit 1 on any disagreement).
    CorpusCheck {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Settings {
    format: Option<GraphFormat>,
    parity: ParityConfig,
    trace: bool,
}

fn read_input(path: &PathBuf, format: Option<GraphFormat>) -> Result<Graph, String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    parse_graph(&text, format).map_err(|e| format!("{}: {e}", path.display()))
}

fn report(name: &str, g: &Graph, command: &str, verdict: &str, s: &Settings, started: Instant) -> Report {
    Report {
        input: InputIdentity::of(name, g),
        command: command.to_string(),
        verdict: verdict.to_string(),
        certificate: None,
        diagnostics: Vec::new(),
        recursion_calls: None,
        config: s.parity.into(),
        timing: Some(Timing {
            elapsed_micros: started.elapsed().as_micros() as u64,
        }),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let settings = Settings {
        format: cli.format,
        parity: ParityConfig {
            backend: cli.parity_backend,
            max_exhaustive_n: cli.max_exhaustive_n,
        },
        trace: cli.trace,
    };
    match execute(&cli.command, &settings, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn emit(out: &mut dyn Write, r: &Report) -> Result<(), String> {
    writeln!(out, "{}", r.to_line()).map_err(|e| format!("write: {e}"))
}

fn execute(cmd: &Command, s: &Settings, out: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Recognize { file } => {
            let g = read_input(file, s.format)?;
            let started = Instant::now();
            let cfg = RecognizerConfig { parity: s.parity };
            let d = is_t_perfect_with(&g, &cfg).map_err(|e| e.to_string())?;
            let verdict = if d.verdict.is_t_perfect() { "t-perfect" } else { "not-t-perfect" };
            let mut r = report(&file.display().to_string(), &g, "recognize", verdict, s, started);
            r.certificate = s.trace.then(|| json!(d.trace));
            r.diagnostics = d.diagnostics;
            r.recursion_calls = Some(d.recursion_calls);
            emit(out, &r)?;
            Ok(if d.verdict.is_t_perfect() { EXIT_YES } else { EXIT_NO })
        }
        Command::SkewedTheta { file } => {
            let g = read_input(file, s.format)?;
            let started = Instant::now();
            let mut ctx = if s.trace { ThetaCtx::with_trace() } else { ThetaCtx::default() };
            let found = has_skewed_theta_with(&g, &mut ctx).map_err(|e| e.to_string())?;
            let verdict = if found { "skewed-theta" } else { "no-skewed-theta" };
            let mut r = report(&file.display().to_string(), &g, "skewed-theta", verdict, s, started);
            r.certificate = s.trace.then(|| json!(ctx.trace));
            r.diagnostics = ctx.diagnostics;
            r.recursion_calls = Some(ctx.calls);
            emit(out, &r)?;
            Ok(if found { EXIT_NO } else { EXIT_YES })
        }
        Command::LineRoot { file } => {
            let g = read_input(file, s.format)?;
            let started = Instant::now();
            let mapping = recognize_line_graph(&g);
            let verdict = if mapping.is_some() { "line-graph" } else { "not-line-graph" };
            let mut r = report(&file.display().to_string(), &g, "line-root", verdict, s, started);
            r.certificate = mapping.as_ref().map(|m| {
                json!({
                    "root": write_graph6(&m.root),
                    "vertex_edges": m.vertex_edges,
                })
            });
            emit(out, &r)?;
            Ok(if mapping.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle { file, question } => {
            let g = read_input(file, s.format)?;
            let started = Instant::now();
            let answer = match question {
                Question::Tperfect => is_t_perfect_bruteforce(&g),
                Question::Theta => has_skewed_theta_bruteforce(&g),
                Question::Prism => has_skewed_prism_bruteforce(&g),
            }
            .map_err(|e| e.to_string())?;
            let name = format!("oracle-{}", format!("{question:?}").to_lowercase());
            let r = report(&file.display().to_string(), &g, &name, &answer.to_string(), s, started);
            emit(out, &r)?;
            Ok(if answer { EXIT_YES } else { EXIT_NO })
        }
        Command::Gen {
            kind,
            count,
            seed,
            max_n,
        } => {
            for inst in generate_corpus(*kind, *count, *seed, *max_n) {
                let text = match s.format.unwrap_or(GraphFormat::Graph6) {
                    GraphFormat::Graph6 => format!("{}\n", write_graph6(&inst.graph)),
                    GraphFormat::EdgeList => format!("# {}\n{}", inst.name, write_edge_list(&inst.graph)),
                };
                out.write_all(text.as_bytes()).map_err(|e| format!("write: {e}"))?;
            }
            Ok(EXIT_YES)
        }
        Command::CorpusCheck { max_n, samples, seed } => corpus_check(*max_n, *samples, *seed, s, out),
    }
}

fn corpus_check(max_n: usize, samples: usize, seed: u64, s: &Settings, out: &mut dyn Write) -> Result<i32, String> {
    if max_n > crate::oracle::TMINOR_MAX_VERTICES {
        return Err(format!(
            "--max-n {max_n} exceeds the oracle limit of {} vertices",
            crate::oracle::TMINOR_MAX_VERTICES
        ));
    }
    let half = samples / 2;
    let mut instances = generate_corpus(CorpusKind::RandomClawfree, samples - half, seed, max_n);
    instances.extend(generate_corpus(CorpusKind::RandomClawfreeViaLinegraph, half, seed, max_n));
    let cfg = RecognizerConfig { parity: s.parity };
    let rows: Vec<Result<(Report, bool), String>> = instances
        .par_iter()
        .map(|inst| {
            let started = Instant::now();
            let d = is_t_perfect_with(&inst.graph, &cfg).map_err(|e| format!("{}: {e}", inst.name))?;
            let oracle = is_t_perfect_bruteforce(&inst.graph).map_err(|e| format!("{}: {e}", inst.name))?;
            let agree = d.verdict.is_t_perfect() == oracle;
            let verdict = if d.verdict.is_t_perfect() { "t-perfect" } else { "not-t-perfect" };
            let mut r = report(&inst.name, &inst.graph, "corpus-check", verdict, s, started);
            r.certificate = Some(json!({ "oracle_t_perfect": oracle, "agree": agree }));
            r.diagnostics = d.diagnostics;
            r.recursion_calls = Some(d.recursion_calls);
            Ok((r, agree))
        })
        .collect();
    let (mut agree, mut disagree, mut perfect, mut flagged) = (0, 0, 0, 0);
    for row in rows {
        let (r, ok) = row?;
        emit(out, &r)?;
        if ok {
            agree += 1;
        } else {
            disagree += 1;
        }
        perfect += usize::from(r.verdict == "t-perfect");
        flagged += usize::from(!r.diagnostics.is_empty());
    }
    let table = format!(
        "# instances      {}\n# agree          {agree}\n# disagree       {disagree}\n# t-perfect      {perfect}\n# not-t-perfect  {}\n# diagnostics    {flagged}\n",
        agree + disagree,
        agree + disagree - perfect,
    );
    out.write_all(table.as_bytes()).map_err(|e| format!("write: {e}"))?;
    Ok(if disagree == 0 { EXIT_YES } else { EXIT_NO })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(std::iter::once("tperfect").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn temp_file(name: &str, text: &str) -> String {
        let dir = std::env::temp_dir().join(format!("tperfect-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    }

    #[test]
    fn recognize_exit_codes() {
        let k4 = temp_file("k4.g6", "C~\n");
        let (code, out, _) = run(&["recognize", &k4]);
        assert_eq!(code, EXIT_NO);
        assert!(out.contains("\"verdict\":\"not-t-perfect\""));
        let c7 = crate::graph::make_named(crate::graph::NamedGraph::CycleSquareMinusVertex(7)).unwrap();
        let f = temp_file("c7sq-minus-v7.el", &write_edge_list(&c7));
        assert_eq!(run(&["recognize", &f]).0, EXIT_YES);
        let claw = temp_file("claw.el", "4 3\n0 1\n0 2\n0 3\n");
        let (code, _, err) = run(&["recognize", &claw]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("claw"));
    }

    #[test]
    fn oracle_and_usage() {
        let c5 = temp_file("c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        let (code, out, _) = run(&["oracle", &c5, "--question", "tperfect"]);
        assert_eq!(code, EXIT_YES);
        assert!(out.contains("\"verdict\":\"true\""));
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["recognize", &c5, "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run(&["recognize", "/nonexistent/file"]).0, EXIT_INPUT);
    }

    #[test]
    fn theta_root_and_gen() {
        let k4 = temp_file("k4b.g6", "C~");
        assert_eq!(run(&["skewed-theta", &k4]).0, EXIT_YES);
        let (code, out, _) = run(&["line-root", &k4]);
        assert_eq!(code, EXIT_YES);
        assert!(out.contains("\"root\""));
        let claw = temp_file("clawb.el", "4 3\n0 1\n0 2\n0 3\n");
        let (code, out, _) = run(&["line-root", &claw]);
        assert_eq!(code, EXIT_NO);
        assert!(out.contains("not-line-graph"));
        let (code, out, _) = run(&["gen", "--kind", "named"]);
        assert_eq!(code, EXIT_YES);
        assert_eq!(out.lines().count(), 8);
    }

    #[test]
    fn corpus_check_summary_matches_records() {
        let (code, out, _) = run(&["corpus-check", "--max-n", "7", "--samples", "20", "--seed", "3"]);
        assert_eq!(code, EXIT_YES);
        let records = out.lines().filter(|l| l.starts_with('{')).count();
        assert_eq!(records, 20);
        assert!(out.contains("# agree          20"));
    }
}
