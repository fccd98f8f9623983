//! `qelab` command-line entry point.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qelab::{read_records, run_suite, summarize, Arithmetic, ExperimentConfig, QelabError, ResultRecord, SeedRange};

#[derive(Parser)]
#[command(name = "qelab", version, about = "Desk-scale experiments on edge-list cycle finding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every suite.
#[derive(Args, Debug, Default)]
struct SuiteArgs {
    /// JSON experiment configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// JSON object merged over the configured parameters.
    #[arg(long)]
    params: Option<String>,
    /// Seed range `a..b`.
    #[arg(long)]
    seeds: Option<SeedRange>,
    /// JSON-lines output file; records go to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse_arithmetic)]
    arithmetic: Option<Arithmetic>,
    /// Add per-task wall time to each record (output is then not reproducible).
    #[arg(long)]
    timing: bool,
}

fn parse_arithmetic(s: &str) -> std::result::Result<Arithmetic, String> {
    match s {
        "exact" => Ok(Arithmetic::Exact),
        "float" => Ok(Arithmetic::Float),
        _ => Err(format!("expected `exact` or `float`, got `{s}`")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Monte Carlo random-graph facts.
    GraphFacts(SuiteArgs),
    /// Exhaustive soundness and completeness of the reductions.
    Reductions(SuiteArgs),
    /// Search-to-decision certificates and call budgets.
    SearchToDecision(SuiteArgs),
    /// Recording identity, support, query table, leakage, exclusion and mirroring audits.
    RecordingLemmas(SuiteArgs),
    /// Progress-measure recurrences.
    Recurrences(SuiteArgs),
    /// Exact learning-graph feasibility on sampled triples.
    LearningGraphFeasibility(SuiteArgs),
    /// Objective against its scaling target over a range of m.
    ObjectiveScan(SuiteArgs),
    /// Exact distances, Bad probabilities and binomial identities; or a single computation.
    Tvd(TvdCmd),
    /// Exact distance for one `(n, t)`.
    TvdExact(SuiteArgs),
    /// Monte Carlo distance estimate.
    TvdMc(SuiteArgs),
    /// Binomial identities for one `(n, t)`.
    TvdIdentities(SuiteArgs),
    /// Runs one recording-simulator audit over a seed range.
    Simulate(commands::SimulateArgs),
    /// Learning-graph feasibility, objective and structure.
    Lgraph {
        #[command(subcommand)]
        cmd: commands::LgraphCmd,
    },
    /// Applies one reduction to an input file.
    Reduce(commands::ReduceArgs),
    /// Runs one idealized algorithm on an input file.
    Algo(commands::AlgoArgs),
    /// Summarizes a JSON-lines result file.
    Report { path: PathBuf },
    /// Lists suites and simulator audits.
    List,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct TvdCmd {
    #[command(subcommand)]
    mode: Option<commands::TvdMode>,
    #[command(flatten)]
    suite: SuiteArgs,
}

fn suite(name: &str, a: SuiteArgs) -> Result<bool> {
    let mut cfg = match &a.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if let Some(p) = &a.params {
        cfg.merge_params(p)?;
    }
    if a.seeds.is_some() {
        cfg.seeds = a.seeds;
    }
    if a.arithmetic.is_some() {
        cfg.arithmetic = a.arithmetic;
    }
    let records = run_suite(Some(name), &cfg, a.timing)?;
    write_records(a.out.as_ref().or(cfg.out.as_ref()), &records)?;
    let summary = summarize(&records);
    eprint!("{summary}");
    Ok(summary.all_pass())
}

fn write_records(out: Option<&PathBuf>, records: &[ResultRecord]) -> Result<()> {
    let mut text = String::new();
    for r in records {
        text.push_str(&r.to_json_line());
        text.push('\n');
    }
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn report(path: &PathBuf) -> Result<bool> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| QelabError::Config(format!("cannot read {}: {e}", path.display())))?;
    let summary = summarize(&read_records(&text)?);
    write!(std::io::stdout(), "{summary}")?;
    Ok(summary.all_pass())
}

fn run(cli: Cli) -> Result<bool> {
    qelab::configure_threads()?;
    match cli.command {
        Command::GraphFacts(a) => suite("graph-facts", a),
        Command::Reductions(a) => suite("reductions", a),
        Command::SearchToDecision(a) => suite("search-to-decision", a),
        Command::RecordingLemmas(a) => suite("recording-lemmas", a),
        Command::Recurrences(a) => suite("recurrences", a),
        Command::LearningGraphFeasibility(a) => suite("learning-graph-feasibility", a),
        Command::ObjectiveScan(a) => suite("objective-scan", a),
        Command::Tvd(TvdCmd { mode: Some(m), .. }) => commands::tvd(m),
        Command::Tvd(TvdCmd { mode: None, suite: a }) => suite("tvd", a),
        Command::TvdExact(a) => suite("tvd-exact", a),
        Command::TvdMc(a) => suite("tvd-mc", a),
        Command::TvdIdentities(a) => suite("tvd-identities", a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Lgraph { cmd } => commands::lgraph(cmd),
        Command::Reduce(a) => commands::reduce(a),
        Command::Algo(a) => commands::algo(a),
        Command::Report { path } => report(&path),
        Command::List => {
            let mut out = std::io::stdout();
            writeln!(out, "suites: {}", qelab::SUITES.join(", "))?;
            writeln!(out, "audits: {}", recording::AUDITS.join(", "))?;
            Ok(true)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().filter_map(|c| c.downcast_ref::<std::io::Error>()).any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = e.downcast_ref::<QelabError>().map_or(1, QelabError::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
