use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

use dicolor::bounds::{
    bound_indegree, sandwich_check_with_limit, symmetric_claim_row, symmetric_claim_search,
};
use dicolor::chromatic::CHROMATIC_LIMIT;
use dicolor::dichromatic::{
    chi_d_exact_with_limit, chi_d_ordering_oracle, is_valid_coloring, ColoringVerdict,
    DICHROMATIC_LIMIT,
};
use dicolor::ensemble::{run_ensemble, EnsembleCheck, EnsembleSpec};
use dicolor::figures::run_figures_suite;
use dicolor::io::{
    export_dot, parse_colors, parse_edge_list, parse_matrix_csv, parse_order, write_edge_list,
    write_matrix_csv,
};
use dicolor::lmatrix::{acyclic_color_matrix_semantic, decode, encode, validate, LMatrix};
use dicolor::partitions::{
    achromatic_number_with_limit, chain_check_with_limit, chi_equals_psi_check,
    grundy_number_with_limit, interpolation_check_with_limit, psi_sd_with_limit, CHAIN_LIMIT,
    GRUNDY_LIMIT, PARTITION_LIMIT,
};
use dicolor::random::{derive_seeds, random_dag, random_digraph, random_labeling};
use dicolor::seq::{
    max_over_orders_with_limit, min_over_orders_with_limit, s_number, s_number_exact_with_limit,
    s_number_greedy, ORDER_LIMIT,
};
use dicolor::{Coloring, LabeledDigraph, ScanMode, SequenceColoring, VertexOrder};

use crate::report::{canonical_json, RunReport};
use crate::{Check, Cli, Command, LmatrixOp, Mode, Scan, What};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] dicolor::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(dicolor::Error::SizeLimit { .. }) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// What a command produced.
struct Outcome {
    stdout: String,
    results: Value,
    /// False for a negative verdict (exit code 1).
    ok: bool,
}

impl Outcome {
    /// Results printed as canonical JSON.
    fn json<T: Serialize>(results: &T, ok: bool) -> Self {
        let results = serde_json::to_value(results).expect("results serialize");
        Outcome { stdout: canonical_json(&results), results, ok }
    }

    fn text(stdout: String, results: Value) -> Self {
        Outcome { stdout, results, ok: true }
    }
}

/// Input bytes and parameters collected for the run report.
#[derive(Default)]
struct Context {
    inputs: Vec<Vec<u8>>,
    parameters: BTreeMap<String, Value>,
}

impl Context {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| {
            CliError::Usage(format!("{}: not valid UTF-8", path.display()))
        })?;
        self.inputs.push(bytes);
        Ok(text)
    }

    fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("parameter"));
    }

    fn input(&mut self, cli: &Cli) -> Result<LabeledDigraph> {
        let path = cli
            .input
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs --input FILE".into()))?;
        Ok(parse_edge_list(&self.read(path)?)?)
    }

    fn matrix(&mut self, path: &Path) -> Result<LMatrix> {
        Ok(parse_matrix_csv(&self.read(path)?)?)
    }
}

fn require_seed(cli: &Cli) -> Result<u64> {
    cli.seed
        .ok_or_else(|| CliError::Usage("randomized commands need an explicit --seed".into()))
}

fn scan_mode(mode: Mode) -> ScanMode {
    match mode {
        Mode::Greedy => ScanMode::Greedy,
        Mode::Exact => ScanMode::Exact,
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let mut ctx = Context::default();
    if let Some(limit) = cli.limit {
        ctx.param("limit", limit);
    }
    if let Some(seed) = cli.seed {
        ctx.param("seed", seed);
    }
    let (name, outcome) = match &cli.command {
        Command::Chid { oracle, check_iff_claim } => ("chid", chid(cli, &mut ctx, *oracle, *check_iff_claim)?),
        Command::Validate { colors } => ("validate", validate_colors(cli, &mut ctx, colors)?),
        Command::Scolor { order, mode, scan } => ("scolor", scolor(cli, &mut ctx, order.as_deref(), *mode, *scan)?),
        Command::Bounds => ("bounds", bounds(cli, &mut ctx)?),
        Command::Partitions { what } => ("partitions", partitions(cli, &mut ctx, *what)?),
        Command::Lmatrix { op } => lmatrix(cli, &mut ctx, op)?,
        Command::Ensemble { p, count, check, prob, no_digons } => {
            ("ensemble", ensemble(cli, &mut ctx, *p, *count, *check, *prob, *no_digons)?)
        }
        Command::Figures => ("figures", figures()?),
        Command::Gen { p, prob, dag, no_digons, labels } => {
            ("gen", generate(cli, &mut ctx, *p, *prob, *dag, *no_digons, *labels)?)
        }
        Command::Dot => {
            let ld = ctx.input(cli)?;
            let dot = export_dot(&ld);
            ("dot", Outcome::text(dot.clone(), json!({ "dot": dot })))
        }
    };
    print!("{}", outcome.stdout);
    if let Some(path) = &cli.json {
        let report = RunReport::new(name, &ctx.inputs, ctx.parameters, outcome.results);
        fs::write(path, canonical_json(&report))
            .map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(if outcome.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn chid(cli: &Cli, ctx: &mut Context, oracle: bool, check_iff_claim: bool) -> Result<Outcome> {
    ctx.param("oracle", oracle);
    ctx.param("check_iff_claim", check_iff_claim);
    let mut results = serde_json::Map::new();
    let mut ok = true;
    if cli.input.is_none() && check_iff_claim {
        let searches = (1..=4)
            .map(symmetric_claim_search)
            .collect::<dicolor::Result<Vec<_>>>()?;
        results.insert("iff_claim_search".into(), json!(searches));
        return Ok(Outcome::json(&results, true));
    }
    let ld = ctx.input(cli)?;
    let d = &ld.digraph;
    let (k, partition) = chi_d_exact_with_limit(d, cli.limit.unwrap_or(DICHROMATIC_LIMIT))?;
    results.insert("chi_d".into(), json!(k));
    results.insert("partition".into(), json!(partition));
    results.insert("oracle_checked".into(), json!(oracle));
    if oracle {
        let by_orders = chi_d_ordering_oracle(d)?;
        results.insert("oracle_chi_d".into(), json!(by_orders));
        results.insert("oracle_agrees".into(), json!(by_orders == k));
        ok = by_orders == k;
    }
    if check_iff_claim {
        results.insert("iff_claim".into(), json!(symmetric_claim_row(d)?));
    }
    Ok(Outcome::json(&results, ok))
}

fn validate_colors(cli: &Cli, ctx: &mut Context, colors: &Path) -> Result<Outcome> {
    let ld = ctx.input(cli)?;
    let coloring = parse_colors(&ctx.read(colors)?, ld.order())?;
    Ok(match is_valid_coloring(&ld.digraph, &coloring)? {
        ColoringVerdict::Valid(order) => {
            let sequence = SequenceColoring::from_order(&order, &coloring);
            Outcome::json(&json!({ "valid": true, "realizing_order": order, "sequence": sequence }), true)
        }
        ColoringVerdict::Invalid(cycle) => {
            let cycle: Vec<String> = cycle.into_iter().map(dicolor::vertex_name).collect();
            Outcome::json(&json!({ "valid": false, "monochromatic_cycle": cycle }), false)
        }
    })
}

fn scolor(cli: &Cli, ctx: &mut Context, order: Option<&str>, mode: Mode, scan: Option<Scan>) -> Result<Outcome> {
    let mode = scan_mode(mode);
    ctx.param("mode", mode);
    let ld = ctx.input(cli)?;
    let d = &ld.digraph;
    if let Some(scan) = scan {
        let limit = cli.limit.unwrap_or(ORDER_LIMIT);
        let (k, best) = match scan {
            Scan::Min => min_over_orders_with_limit(d, mode, limit)?,
            Scan::Max => max_over_orders_with_limit(d, mode, limit)?,
        };
        let scan_name = match scan {
            Scan::Min => "min",
            Scan::Max => "max",
        };
        ctx.param("scan", scan_name);
        let (_, sequence) = s_number(d, &best, mode)?;
        return Ok(Outcome::json(
            &json!({ "mode": mode, "scan": scan_name, "colors": k, "order": best, "sequence": sequence }),
            true,
        ));
    }
    let order = match order {
        Some(text) => {
            ctx.param("order", text);
            parse_order(text, d.order())?
        }
        None => VertexOrder::natural(d.order()),
    };
    let (k, sequence) = match mode {
        ScanMode::Exact => s_number_exact_with_limit(d, &order, cli.limit.unwrap_or(CHROMATIC_LIMIT))?,
        ScanMode::Greedy => s_number_greedy(d, &order)?,
    };
    Ok(Outcome::json(&json!({ "mode": mode, "colors": k, "sequence": sequence }), true))
}

fn bounds(cli: &Cli, ctx: &mut Context) -> Result<Outcome> {
    let ld = ctx.input(cli)?;
    let d = &ld.digraph;
    let report = sandwich_check_with_limit(d, cli.limit.unwrap_or(DICHROMATIC_LIMIT))?;
    let mut results = serde_json::to_value(&report).expect("report serializes");
    results["indegree_refusal"] = json!(bound_indegree(d).err().map(|e| e.to_string()));
    Ok(Outcome::json(&results, true))
}

fn partitions(cli: &Cli, ctx: &mut Context, what: What) -> Result<Outcome> {
    let ld = ctx.input(cli)?;
    let d = &ld.digraph;
    let g = d.underlying_graph();
    let (what_name, outcome) = match what {
        What::Psi => {
            let (k, partition) = achromatic_number_with_limit(&g, cli.limit.unwrap_or(PARTITION_LIMIT))?;
            ("psi", Outcome::json(&json!({ "psi": k, "partition": partition }), true))
        }
        What::Psisd => {
            let (k, partition) = psi_sd_with_limit(d, cli.limit.unwrap_or(PARTITION_LIMIT))?;
            ("psisd", Outcome::json(&json!({ "psi_sd": k, "partition": partition }), true))
        }
        What::Grundy => {
            let (k, order) = grundy_number_with_limit(&g, cli.limit.unwrap_or(GRUNDY_LIMIT))?;
            ("grundy", Outcome::json(&json!({ "grundy": k, "order": order }), true))
        }
        What::Interpolate => {
            let table = interpolation_check_with_limit(&g, cli.limit.unwrap_or(CHAIN_LIMIT))?;
            let ok = table.holds;
            ("interpolate", Outcome::json(&table, ok))
        }
        What::Chain => {
            let report = chain_check_with_limit(d, cli.limit.unwrap_or(CHAIN_LIMIT))?;
            ("chain", Outcome::json(&report, true))
        }
        What::ChiPsi => ("chi-psi", Outcome::json(&chi_equals_psi_check(&g)?, true)),
    };
    ctx.param("what", what_name);
    Ok(outcome)
}

fn lmatrix(cli: &Cli, ctx: &mut Context, op: &LmatrixOp) -> Result<(&'static str, Outcome)> {
    Ok(match op {
        LmatrixOp::Encode { pretty } => {
            ctx.param("pretty", pretty);
            let m = encode(&ctx.input(cli)?);
            let text = if *pretty { m.to_string() } else { write_matrix_csv(&m) };
            ("lmatrix encode", Outcome::text(text, json!({ "matrix": m })))
        }
        LmatrixOp::Decode { matrix } => {
            let ld = decode(&ctx.matrix(matrix)?)?;
            let classes = Coloring::new(ld.labeling.0.clone())?.classes();
            let text = write_edge_list(&ld);
            ("lmatrix decode", Outcome::text(text.clone(), json!({ "edge_list": text, "classes": classes })))
        }
        LmatrixOp::Validate { matrix } => {
            let verdict = validate(&ctx.matrix(matrix)?);
            let ok = verdict.valid;
            ("lmatrix validate", Outcome::json(&verdict, ok))
        }
        LmatrixOp::AcyclicCheck { matrix } => {
            let verdict = acyclic_color_matrix_semantic(&ctx.matrix(matrix)?)?;
            ("lmatrix acyclic-check", Outcome::json(&verdict, verdict.semantic))
        }
    })
}

fn ensemble(
    cli: &Cli,
    ctx: &mut Context,
    p: usize,
    count: usize,
    check: Check,
    prob: f64,
    no_digons: bool,
) -> Result<Outcome> {
    let seed = require_seed(cli)?;
    let check = match check {
        Check::Sandwich => EnsembleCheck::Sandwich,
        Check::Prop8 => EnsembleCheck::Prop8,
        Check::Chain => EnsembleCheck::Chain,
    };
    ctx.param("p", p);
    ctx.param("count", count);
    ctx.param("check", check);
    ctx.param("prob", prob);
    ctx.param("no_digons", no_digons);
    let spec = EnsembleSpec { arc_probability: prob, allow_digons: !no_digons, ..EnsembleSpec::new(p, count, seed) };
    if !(0.0..=1.0).contains(&prob) {
        return Err(CliError::Usage(format!("--prob {prob} is outside [0, 1]")));
    }
    Ok(Outcome::json(&run_ensemble(check, &spec)?, true))
}

fn figures() -> Result<Outcome> {
    let report = run_figures_suite()?;
    let ok = report.unexplained_mismatches == 0;
    Ok(Outcome::json(&report, ok))
}

fn generate(
    cli: &Cli,
    ctx: &mut Context,
    p: usize,
    prob: f64,
    dag: bool,
    no_digons: bool,
    labels: Option<u32>,
) -> Result<Outcome> {
    let seed = require_seed(cli)?;
    ctx.param("p", p);
    ctx.param("prob", prob);
    ctx.param("dag", dag);
    ctx.param("no_digons", no_digons);
    ctx.param("labels", labels);
    let d = if dag { random_dag(p, prob, seed)? } else { random_digraph(p, prob, !no_digons, seed)? };
    let ld = match labels {
        Some(k) => {
            let label_seed = derive_seeds(seed, 1)[0];
            LabeledDigraph::new(d, random_labeling(p, k, label_seed))?
        }
        None => LabeledDigraph::unlabeled(d),
    };
    let text = write_edge_list(&ld);
    Ok(Outcome::text(text.clone(), json!({ "edge_list": text })))
}
