//! Direct module commands: single computations printed as JSON.

use std::io::Write;
use std::path::{Path, PathBuf};

use algorithms::{
    run_hide_ed, run_hide_symmetric, run_shuffle_dsum, run_sigma_maj_classical, CostModel, SymmetricProfile,
};
use anyhow::{Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use graphcore::EdgeList;
use lgraph::{
    audit_feasibility, default_params, enumerate_structure, objective_eval, scaling_target, stage_structure, v1_size,
    Edit, LGParams, StageCount, Variant,
};
use qelab::{QelabError, SeedRange};
use randprocess::{check_binomial_identities, exact_tvd, mc_tvd};
use recording::{run_audit_seeds, AuditParams};
use reductions::{
    ed_to_dense_triangle, hide3dist_to_trivertex, hide_ed_to_triedge, kdist_to_kcycle, partition_kcycle_to_or_kdist,
    triangle_to_3sum, triedge_to_hide_ed, PartitionMode,
};
use serde::Serialize;
use serde_json::json;
use transforms::{parse_hidden, HiddenString, ShuffledDirectSumInput, SigmaMajInstance};

fn input_error(msg: impl std::fmt::Display) -> anyhow::Error {
    QelabError::Config(msg.to_string()).into()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn print<T: Serialize>(v: &T) -> Result<()> {
    writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

// tvd

#[derive(Subcommand)]
pub enum TvdMode {
    /// Exact ℓ1 distance and Bad probabilities by enumeration.
    Exact {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
    },
    /// Monte Carlo estimate with a bootstrap interval.
    Mc {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 20_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Mixed bit distributions against Bin(t, 1/2).
    Identities {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
    },
}

pub fn tvd(mode: TvdMode) -> Result<bool> {
    match mode {
        TvdMode::Exact { n, t } => {
            let r = exact_tvd(n, t)?;
            print(&r)?;
            Ok(r.within_bound && r.bad_equal)
        }
        TvdMode::Mc { n, t, trials, seed } => {
            print(&mc_tvd(n, t, trials, seed)?)?;
            Ok(true)
        }
        TvdMode::Identities { n, t } => {
            let r = check_binomial_identities(n, t)?;
            print(&r)?;
            Ok(r.pass)
        }
    }
}

// simulate

#[derive(Args)]
pub struct SimulateArgs {
    /// JSON simulator parameters; defaults apply to missing keys.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    audit: String,
    #[arg(long, default_value = "0..1")]
    seeds: SeedRange,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn simulate(a: SimulateArgs) -> Result<bool> {
    let p: AuditParams = match &a.config {
        Some(path) => {
            serde_json::from_str(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?
        }
        None => AuditParams::default(),
    };
    if !recording::AUDITS.contains(&a.audit.as_str()) {
        return Err(input_error(format!("unknown audit `{}`", a.audit)));
    }
    let recs = run_audit_seeds(&a.audit, &p, a.seeds.range())?;
    let mut text = String::new();
    for r in &recs {
        text.push_str(&serde_json::to_string(r)?);
        text.push('\n');
    }
    match &a.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    let failed = recs.iter().filter(|r| !r.pass).count();
    eprintln!("{}: {} records, {} failed", a.audit, recs.len(), failed);
    Ok(failed == 0)
}

// learning graph

#[derive(Args, Clone)]
pub struct LgArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::Triangle)]
    variant: VariantArg,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 30)]
    m: usize,
    /// Vertex count (feasibility and structure).
    #[arg(long, default_value_t = 60)]
    n: u32,
    /// Set sizes per level, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1,1")]
    r: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Triangle,
    General,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Triangle => Variant::Triangle,
            VariantArg::General => Variant::General,
        }
    }
}

#[derive(Subcommand)]
pub enum LgraphCmd {
    /// Exact feasibility sums over sampled triples.
    Feasibility {
        #[command(flatten)]
        p: LgArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stage costs at the default parameters for `m`.
    Objective {
        #[command(flatten)]
        p: LgArgs,
    },
    /// Vertex and arc counts per stage, cross-checked by enumeration when small.
    Structure {
        #[command(flatten)]
        p: LgArgs,
    },
}

fn sizes(p: &LgArgs) -> Result<LGParams> {
    LGParams::with_sizes(p.variant.into(), p.k, p.d, p.m, p.n, p.r.clone()).map_err(input_error)
}

fn counts(c: &[StageCount]) -> Vec<serde_json::Value> {
    c.iter()
        .map(|s| json!({"stage": s.stage, "arcs": s.arcs.to_string(), "vertices": s.vertices.to_string()}))
        .collect()
}

pub fn lgraph(cmd: LgraphCmd) -> Result<bool> {
    match cmd {
        LgraphCmd::Feasibility { p, trials, seed } => {
            let params = sizes(&p)?;
            let a = audit_feasibility(&params, &[Edit::Redirect, Edit::Noisy, Edit::Fault], trials, seed)?;
            let first = a.first_failure.as_ref().map(|r| {
                json!({"symbolic": r.symbolic, "exact": r.exact.map(|(n, d)| format!("{n}/{d}")), "float": r.float_value})
            });
            print(&json!({
                "trials": a.trials,
                "exact_ones": format!("{}/{}", a.exact_ones, a.trials),
                "fault_paths": a.fault_paths,
                "max_float_error": a.max_float_error,
                "first_failure": first,
            }))?;
            Ok(a.all_exact())
        }
        LgraphCmd::Objective { p } => {
            let v: Variant = p.variant.into();
            let o = objective_eval(&default_params(v, p.k, p.d, p.m))?;
            let target = scaling_target(v, p.k, p.d, p.m);
            print(&json!({"objective": o, "target": target, "ratio": o.total / target}))?;
            Ok(true)
        }
        LgraphCmd::Structure { p } => {
            let params = sizes(&p)?;
            let closed = stage_structure(&params)?;
            let enumerated = enumerate_structure(&params).ok();
            let agree = enumerated.as_ref().is_none_or(|e| *e == closed);
            print(&json!({
                "v1": v1_size(&params).to_string(),
                "closed_form": counts(&closed),
                "enumerated": enumerated.as_deref().map(counts),
                "agree": agree,
            }))?;
            Ok(agree)
        }
    }
}

// reductions

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    KdistToKcycle,
    #[value(name = "triangle-to-3sum")]
    TriangleTo3sum,
    TriedgeToHideEd,
    HideEdToTriedge,
    #[value(name = "hide-3dist-to-trivertex")]
    Hide3distToTrivertex,
    PartitionKcycle,
    EdToDenseTriangle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Independent,
    Balanced,
}

impl From<ModeArg> for PartitionMode {
    fn from(m: ModeArg) -> PartitionMode {
        match m {
            ModeArg::Independent => PartitionMode::Independent,
            ModeArg::Balanced => PartitionMode::Balanced,
        }
    }
}

#[derive(Args)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    name: ReductionArg,
    /// Input: edge list text (`n m` header, one `u v` per line), symbols
    /// separated by whitespace (`*` hidden), or `i,j` pairs.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output JSON; the randomness record is written next to it as `<out>.randomness.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Independent)]
    mode: ModeArg,
    /// Target edge `u v` for tri-edge.
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    v: Option<u32>,
    /// Alphabet size for hide-ed-to-triedge.
    #[arg(long)]
    s: Option<u32>,
    /// Grid size for ed-to-dense-triangle.
    #[arg(long)]
    n: Option<u32>,
    /// Vertex parts, `|` between parts, e.g. `1 2 3|4 5 6`.
    #[arg(long)]
    parts: Option<String>,
}

fn edge_list(text: &str) -> Result<EdgeList> {
    text.parse().map_err(input_error)
}

fn hidden(text: &str) -> Result<HiddenString> {
    Ok(HiddenString::from_symbols(parse_hidden(text).map_err(input_error)?))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| input_error(format!("--{flag} is required for this reduction")))
}

fn emit(out: Option<&PathBuf>, value: serde_json::Value, record: serde_json::Value) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&value)?)?;
            let mut side = path.clone().into_os_string();
            side.push(".randomness.json");
            std::fs::write(PathBuf::from(side), serde_json::to_string_pretty(&record)?)?;
        }
        None => print(&json!({"outcome": value, "randomness": record}))?,
    }
    Ok(())
}

pub fn reduce(a: ReduceArgs) -> Result<bool> {
    let text = read(&a.input)?;
    let (value, record) = match a.name {
        ReductionArg::KdistToKcycle => {
            let x: Vec<u32> = text
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| input_error(format!("bad symbol `{t}`"))))
                .collect::<Result<_>>()?;
            let o = kdist_to_kcycle(&x, a.k, a.mode.into(), a.seed)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
        ReductionArg::TriangleTo3sum => {
            let o = triangle_to_3sum(&edge_list(&text)?, a.seed)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
        ReductionArg::TriedgeToHideEd => {
            let o = triedge_to_hide_ed(&edge_list(&text)?, need(a.u, "u")?, need(a.v, "v")?)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
        ReductionArg::HideEdToTriedge => {
            let o = hide_ed_to_triedge(&hidden(&text)?, need(a.s, "s")?, a.seed)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
        ReductionArg::Hide3distToTrivertex => {
            let o = hide3dist_to_trivertex(&hidden(&text)?, a.mode.into(), a.seed)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
        ReductionArg::PartitionKcycle => {
            let parts: Vec<Vec<u32>> = need(a.parts.as_deref(), "parts")?
                .split('|')
                .map(|p| {
                    p.split_whitespace()
                        .map(|t| t.parse().map_err(|_| input_error(format!("bad vertex `{t}`"))))
                        .collect()
                })
                .collect::<Result<_>>()?;
            let x = edge_list(&text)?;
            let fam = partition_kcycle_to_or_kdist(&x, &parts, a.k)?;
            (json!({"strings": fam.len(), "any_collision": fam.any_collision()}), json!("None"))
        }
        ReductionArg::EdToDenseTriangle => {
            let x: Vec<(u32, u32)> = text
                .split_whitespace()
                .map(|t| {
                    let (i, j) = t.split_once(',').ok_or_else(|| input_error(format!("bad pair `{t}`")))?;
                    Ok((i.parse().map_err(input_error)?, j.parse().map_err(input_error)?))
                })
                .collect::<Result<_>>()?;
            let o = ed_to_dense_triangle(&x, need(a.n, "n")?, a.seed)?;
            (serde_json::to_value(&o)?, serde_json::to_value(&o.record)?)
        }
    };
    emit(a.out.as_ref(), value, record)?;
    Ok(true)
}

// idealized algorithms

#[derive(Clone, Copy, ValueEnum)]
enum AlgoName {
    HideEd,
    HideSymmetric,
    SigmaMaj,
    ShuffleDsum,
}

#[derive(Args)]
pub struct AlgoArgs {
    #[arg(value_enum)]
    name: AlgoName,
    /// Hidden string text, a 0/1 matrix for sigma-maj, or JSON for shuffle-dsum.
    #[arg(long = "in")]
    input: PathBuf,
    /// JSON `{"c_g": .., "c_a": .., "c_e": ..}`; unit constants otherwise.
    #[arg(long)]
    cost_model: Option<PathBuf>,
    /// Base arity for hide-ed.
    #[arg(long)]
    d: Option<usize>,
    /// Symmetric profile `f_0 .. f_n` as a 0/1 string.
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = 64)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn profile(s: Option<&str>) -> Result<SymmetricProfile> {
    let bits: Vec<bool> = need(s, "profile")?
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(input_error(format!("bad profile bit `{c}`"))),
        })
        .collect::<Result<_>>()?;
    SymmetricProfile::new(bits).map_err(input_error)
}

pub fn algo(a: AlgoArgs) -> Result<bool> {
    let model: CostModel = match &a.cost_model {
        Some(p) => serde_json::from_str(&read(p)?).map_err(|e| input_error(format!("{}: {e}", p.display())))?,
        None => CostModel::default(),
    };
    let text = read(&a.input)?;
    match a.name {
        AlgoName::HideEd => {
            let y = hidden(&text)?;
            let d = a.d.unwrap_or_else(|| y.base_length());
            let (out, cost) = run_hide_ed(&y, d, &model, a.seed)?;
            print(&json!({"output": out, "cost": cost}))?;
        }
        AlgoName::HideSymmetric => {
            let (out, cost) = run_hide_symmetric(&profile(a.profile.as_deref())?, &hidden(&text)?, &model)?;
            print(&json!({"output": out, "cost": cost}))?;
        }
        AlgoName::SigmaMaj => {
            let x = SigmaMajInstance::parse(&text).map_err(input_error)?;
            print(&run_sigma_maj_classical(&x, a.samples, a.seed)?)?;
        }
        AlgoName::ShuffleDsum => {
            let x: ShuffledDirectSumInput = serde_json::from_str(&text).map_err(input_error)?;
            let (out, cost) = run_shuffle_dsum(&profile(a.profile.as_deref())?, &x, &model)?;
            print(&json!({"output": out, "cost": cost}))?;
        }
    }
    Ok(true)
}
