//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! FAIL. Seeds, sample sizes and time limits are pinned below.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dicolor::bounds::{bound_indegree, sandwich_check, BoundsReport};
use dicolor::dichromatic::{acyclic_one_coloring, chi_d_exact, chi_d_ordering_oracle};
use dicolor::enumerate::{all_digraphs, all_graphs};
use dicolor::figures::{run_figures_suite, FigureStatus, FIGURE8_MATRIX};
use dicolor::lmatrix::{acyclic_color_matrix_semantic, decode, encode, validate, LMatrix};
use dicolor::partitions::{
    achromatic_number, chain_check, interpolation_check, is_complete_partition, psi_sd, LINK_CHI_SD_CHI_G,
    LINK_NOTE_PSI_SD, LINK_PSI_SD_PSI_G,
};
use dicolor::random::{derive_seeds, random_dag, random_digraph, random_labeling};
use dicolor::seq::validate_sequence_coloring;
use dicolor::{Digraph, Labeling, LabeledDigraph};

const FIGURES_TIME: Duration = Duration::from_secs(5);
const ORACLE_TIME: Duration = Duration::from_secs(120);
const DAG_TIME: Duration = Duration::from_secs(30);

const ORACLE_SEED: u64 = 2024;
const ORACLE_P5: usize = 500;
const ORACLE_P6: usize = 200;
const DAG_SEED: u64 = 7;
const DAG_COUNT: usize = 1000;
const DAG_MAX_P: usize = 50;
const DAG_PROB: f64 = 0.3;
const RANDOM_SEED: u64 = 11;
const RANDOM_COUNT: usize = 1000;
const RANDOM_MAX_P: usize = 8;
const PSI_COUNT: usize = 300;
const ARC_PROB: f64 = 0.4;
const LABEL_SEED: u64 = 13;

/// Links of the chain that fail somewhere on the digraphs with 1 to 4
/// vertices, by order, computed by an independent brute-force script.
/// Every other link holds on all 4165 digraphs.
const CHAIN_GOLDEN: &[(usize, &str, usize)] = &[
    (3, LINK_NOTE_PSI_SD, 2),
    (4, LINK_CHI_SD_CHI_G, 360),
    (4, LINK_PSI_SD_PSI_G, 240),
    (4, LINK_NOTE_PSI_SD, 422),
];

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    details: String,
}

fn verdict(pass: bool, details: impl Into<String>) -> Verdict {
    Verdict { pass, details: details.into() }
}

/// `p = 1 + i % max_p` for sample `i`.
fn random_sample(seed: u64, count: usize, max_p: usize) -> Vec<Digraph> {
    derive_seeds(seed, count)
        .into_iter()
        .enumerate()
        .map(|(i, s)| random_digraph(1 + i % max_p, ARC_PROB, true, s).unwrap())
        .collect()
}

fn figures() -> Verdict {
    let start = Instant::now();
    let report = run_figures_suite().unwrap();
    let elapsed = start.elapsed();
    let required = [
        ("1a", "chi_d"),
        ("1b", "chi_d"),
        ("2", "chi_d"),
        ("2", "delta_in"),
        ("3", "chi_d"),
        ("3", "beta_oc"),
        ("4a", "greedy s-number"),
        ("4b", "greedy s-number"),
        ("5a", "greedy s-number"),
        ("5b", "greedy s-number"),
        ("6", "greedy s-numbers of D1, D2, D3"),
        ("6", "v_i receives colour i"),
        ("7", "psi_sd"),
        ("8", "L-matrix"),
    ];
    let missing: Vec<String> = required
        .iter()
        .filter(|(f, q)| report.entry(f, q).is_none_or(|e| e.status != FigureStatus::Match))
        .map(|(f, q)| format!("{f}/{q}"))
        .collect();
    let matrix_ok = report
        .entry("8", "L-matrix")
        .is_some_and(|e| e.computed == serde_json::json!(FIGURE8_MATRIX));
    verdict(
        missing.is_empty() && matrix_ok && report.unexplained_mismatches == 0 && elapsed < FIGURES_TIME,
        format!(
            "{} matches, {} explained, {} unexplained; not matching: {:?}; {:.2?} (limit {:?})",
            report.matches, report.explained, report.unexplained_mismatches, missing, elapsed, FIGURES_TIME
        ),
    )
}

fn oracle() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    let mut disagreements = Vec::new();
    let seeds = derive_seeds(ORACLE_SEED, ORACLE_P5 + ORACLE_P6);
    let sampled = seeds.iter().enumerate().map(|(i, &s)| {
        let p = if i < ORACLE_P5 { 5 } else { 6 };
        random_digraph(p, ARC_PROB, true, s).unwrap()
    });
    for d in all_digraphs(4).chain(sampled) {
        let exact = chi_d_exact(&d).unwrap().0;
        let oracle = chi_d_ordering_oracle(&d).unwrap();
        if exact != oracle {
            disagreements.push((d.order(), d.arcs().collect::<Vec<_>>(), exact, oracle));
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    verdict(
        checked == 4096 + ORACLE_P5 + ORACLE_P6 && disagreements.is_empty() && elapsed < ORACLE_TIME,
        format!(
            "{checked} digraphs (4096 at p=4, {ORACLE_P5} at p=5, {ORACLE_P6} at p=6), {} disagreements {:?}; {:.2?} (limit {:?})",
            disagreements.len(),
            disagreements.first(),
            elapsed,
            ORACLE_TIME
        ),
    )
}

fn dags() -> Verdict {
    let start = Instant::now();
    let mut failures = 0;
    let mut largest = 0;
    for (i, s) in derive_seeds(DAG_SEED, DAG_COUNT).into_iter().enumerate() {
        let p = 1 + i % DAG_MAX_P;
        largest = largest.max(p);
        let d = random_dag(p, DAG_PROB, s).unwrap();
        let one = chi_d_exact(&d).unwrap().0 == 1;
        let sequence_ok = acyclic_one_coloring(&d)
            .and_then(|s| validate_sequence_coloring(&d, &s))
            .is_ok_and(|v| v.valid);
        if !(one && sequence_ok) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        failures == 0 && elapsed < DAG_TIME,
        format!("{DAG_COUNT} DAGs, p up to {largest}, {failures} failures; {elapsed:.2?} (limit {DAG_TIME:?})"),
    )
}

fn bounds() -> Verdict {
    let mut violations: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut first: BTreeMap<&'static str, Vec<(usize, usize)>> = BTreeMap::new();
    let mut refusal_ok = true;
    let mut count = 0;
    let exhaustive = (1..=4).flat_map(all_digraphs);
    for d in exhaustive.chain(random_sample(RANDOM_SEED, RANDOM_COUNT, RANDOM_MAX_P)) {
        let r: BoundsReport = sandwich_check(&d).unwrap();
        for name in r.violations() {
            *violations.entry(name).or_default() += 1;
            first.entry(name).or_insert_with(|| d.arcs().collect());
        }
        refusal_ok &= d.symmetric_arcs().is_empty() == bound_indegree(&d).is_ok();
        count += 1;
    }
    let fig2 = sandwich_check(&dicolor::figures::figure2()).unwrap();
    let fig2_ok = fig2.indegree_value == 1 && fig2.chi_d == 2 && fig2.bound_indegree.is_none();
    let total: usize = violations.values().sum();
    verdict(
        total == 0 && refusal_ok && fig2_ok,
        format!(
            "{count} digraphs; violations {violations:?}; first counterexamples (arcs, 0-based) {first:?}; \
             refuses digons: {refusal_ok}; Figure 2 p - Delta_in = {} < chi_d = {}: {fig2_ok}",
            fig2.indegree_value, fig2.chi_d
        ),
    )
}

fn partitions() -> Verdict {
    let mut violations = 0;
    let mut first = None;
    let mut count = 0;
    let exhaustive = (1..=4).flat_map(all_digraphs);
    for d in exhaustive.chain(random_sample(RANDOM_SEED, PSI_COUNT, RANDOM_MAX_P)) {
        let sd = psi_sd(&d).unwrap().0;
        let psi = achromatic_number(&d.underlying_graph()).unwrap().0;
        if sd > psi {
            violations += 1;
            first.get_or_insert((d.arcs().collect::<Vec<_>>(), sd, psi));
        }
        count += 1;
    }
    let fig7 = is_complete_partition(&dicolor::figures::figure7(), &dicolor::figures::figure7_partition()).unwrap();
    let mut graphs = 0;
    let mut interpolation_failures = 0;
    for p in 1..=6 {
        for g in all_graphs(p) {
            graphs += 1;
            if !interpolation_check(&g).unwrap().holds {
                interpolation_failures += 1;
            }
        }
    }
    verdict(
        violations == 0 && fig7 && interpolation_failures == 0,
        format!(
            "psi_sd <= psi(G): {violations} violations over {count} digraphs, first (arcs, psi_sd, psi) {first:?}; \
             Figure 7 partition complete: {fig7}; interpolation fails on {interpolation_failures} of {graphs} graphs"
        ),
    )
}

fn lmatrix() -> Verdict {
    let mut unsound = 0;
    let mut sound_checked = 0;
    for d in all_digraphs(3) {
        for code in 0..27u32 {
            let labels = vec![code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1];
            let ld = LabeledDigraph::new(d.clone(), Labeling(labels)).unwrap();
            sound_checked += 1;
            if !validate(&encode(&ld)).valid {
                unsound += 1;
            }
        }
    }
    let mut roundtrip_failures = 0;
    let sample = random_sample(RANDOM_SEED, RANDOM_COUNT, RANDOM_MAX_P);
    for (d, s) in sample.into_iter().zip(derive_seeds(LABEL_SEED, RANDOM_COUNT)) {
        let labels = random_labeling(d.order(), 3, s);
        let ld = LabeledDigraph::new(d, labels).unwrap();
        let m = encode(&ld);
        sound_checked += 1;
        if !validate(&m).valid {
            unsound += 1;
        }
        if decode(&m).ok() != Some(ld.canonical()) {
            roundtrip_failures += 1;
        }
    }
    let (mut valid, mut invalid, mut incomplete) = (0, 0, 0);
    let values = [2i8, 1, 0, -1];
    for code in 0..4usize.pow(6) {
        let mut rows = vec![vec![0i8; 3]; 3];
        let cells = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
        for (n, &(i, j)) in cells.iter().enumerate() {
            rows[i][j] = values[code / 4usize.pow(n as u32) % 4];
        }
        let m = LMatrix::from_rows(rows).unwrap();
        let v = validate(&m);
        if v.valid {
            valid += 1;
            if decode(&m).map(|ld| encode(&ld)).ok() != Some(m) {
                incomplete += 1;
            }
        } else {
            invalid += 1;
            if v.violations.is_empty() || decode(&m).is_ok() {
                incomplete += 1;
            }
        }
    }
    verdict(
        unsound == 0 && roundtrip_failures == 0 && incomplete == 0 && valid + invalid == 4096,
        format!(
            "soundness: {unsound} failures of {sound_checked}; completeness: {valid} valid, {invalid} rejected, \
             {incomplete} failures; roundtrip: {roundtrip_failures} failures of {RANDOM_COUNT}"
        ),
    )
}

fn discrepancies() -> Verdict {
    let mono = encode(&LabeledDigraph::unlabeled(Digraph::directed_cycle(3).unwrap()));
    let a = acyclic_color_matrix_semantic(&mono).unwrap();
    let a_ok = a.literal && !a.semantic && a.discrepancy;

    let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
    let g = digon.underlying_graph();
    let tree = g.edge_count() + 1 == g.order() && g.order() == 2;
    let chi = chi_d_exact(&digon).unwrap().0;
    let b_ok = tree && chi == 2;

    let mut fails: BTreeMap<(usize, &'static str), usize> = BTreeMap::new();
    let mut total = 0;
    for p in 1..=4 {
        for d in all_digraphs(p) {
            total += 1;
            for link in chain_check(&d).unwrap().links {
                if !link.holds {
                    *fails.entry((p, link.link)).or_default() += 1;
                }
            }
        }
    }
    let golden: BTreeMap<(usize, &str), usize> = CHAIN_GOLDEN.iter().map(|&(p, l, n)| ((p, l), n)).collect();
    let table_ok = fails == golden;
    let prop10_fails: usize = fails.iter().filter(|(k, _)| k.1 == LINK_PSI_SD_PSI_G).map(|(_, n)| n).sum();
    verdict(
        a_ok && b_ok && table_ok && prop10_fails == 0,
        format!(
            "(a) literal {}, semantic {}: {a_ok}; (b) digon underlying tree {tree}, chi_d {chi}: {b_ok}; \
             (c) {total} digraphs, fail table matches golden: {table_ok}, {fails:?}; \
             psi_sd <= psi(G) fails on {prop10_fails}",
            a.literal, a.semantic
        ),
    )
}

fn run_twice(bin: &Path, dir: &Path, name: &str, args: &[&str]) -> Result<(), String> {
    let mut outputs = Vec::new();
    for round in 0..2 {
        let json = dir.join(format!("{name}-{round}.json"));
        let out = Command::new(bin)
            .args(args)
            .arg("--json")
            .arg(&json)
            .output()
            .map_err(|e| format!("{name}: {e}"))?;
        let code = out.status.code();
        if !matches!(code, Some(0 | 1)) {
            return Err(format!("{name}: exit {code:?}: {}", String::from_utf8_lossy(&out.stderr)));
        }
        let report = std::fs::read(&json).map_err(|e| format!("{name}: {e}"))?;
        outputs.push((code, out.stdout, report));
    }
    if outputs[0] != outputs[1] {
        return Err(format!("{name}: outputs differ"));
    }
    Ok(())
}

fn determinism() -> Verdict {
    let bin = Path::new(env!("CARGO_BIN_EXE_dicolor"));
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    };
    let graph = write("g.txt", "p 3\na 1 2\na 2 3\na 3 1\nl 1 1\nl 2 2\nl 3 1\n");
    let fig7 = write("f7.txt", "p 5\na 1 2\na 1 3\na 1 4\na 1 5\na 2 3\na 3 4\na 5 4\n");
    let colors = write("c.txt", "v1 1\nv2 2\nv3 1\n");
    let matrix = write("m.csv", "0,1,-1\n0,0,1\n2,0,0\n");
    let g = graph.as_str();
    let f = fig7.as_str();
    let runs: Vec<(&str, Vec<&str>)> = vec![
        ("chid", vec!["chid", "--input", g, "--oracle", "--check-iff-claim"]),
        ("chid-search", vec!["chid", "--check-iff-claim"]),
        ("validate", vec!["validate", "--input", g, "--colors", &colors]),
        ("scolor", vec!["scolor", "--input", f, "--order", "v1,v2,v5,v3,v4"]),
        ("scolor-exact", vec!["scolor", "--input", f, "--mode", "exact"]),
        ("scolor-scan", vec!["scolor", "--input", f, "--scan", "max"]),
        ("bounds", vec!["bounds", "--input", g]),
        ("psi", vec!["partitions", "--input", f, "--what", "psi"]),
        ("psisd", vec!["partitions", "--input", f, "--what", "psisd"]),
        ("grundy", vec!["partitions", "--input", f, "--what", "grundy"]),
        ("interpolate", vec!["partitions", "--input", f, "--what", "interpolate"]),
        ("chain", vec!["partitions", "--input", f, "--what", "chain"]),
        ("chi-psi", vec!["partitions", "--input", f, "--what", "chi-psi"]),
        ("encode", vec!["lmatrix", "--input", g, "encode"]),
        ("encode-pretty", vec!["lmatrix", "--input", g, "encode", "--pretty"]),
        ("decode", vec!["lmatrix", "decode", "--matrix", &matrix]),
        ("mvalidate", vec!["lmatrix", "validate", "--matrix", &matrix]),
        ("acyclic-check", vec!["lmatrix", "acyclic-check", "--matrix", &matrix]),
        ("ensemble-sandwich", vec!["ensemble", "--p", "6", "--count", "20", "--check", "sandwich", "--seed", "5"]),
        ("ensemble-prop8", vec!["ensemble", "--p", "5", "--count", "20", "--check", "prop8", "--seed", "5"]),
        ("ensemble-chain", vec!["ensemble", "--p", "4", "--count", "10", "--check", "chain", "--seed", "5"]),
        ("figures", vec!["figures"]),
        ("gen", vec!["gen", "--p", "9", "--seed", "3", "--labels", "3"]),
        ("gen-dag", vec!["gen", "--p", "9", "--seed", "3", "--dag"]),
        ("dot", vec!["dot", "--input", g]),
    ];
    let errors: Vec<String> = runs
        .iter()
        .filter_map(|(name, args)| run_twice(bin, dir.path(), name, args).err())
        .collect();
    verdict(
        errors.is_empty(),
        format!("{} command lines run twice; {} differ or fail {:?}", runs.len(), errors.len(), errors),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("figure fixtures", figures),
        ("oracle equivalence", oracle),
        ("acyclic digraphs at scale", dags),
        ("bounds suite", bounds),
        ("complete partitions", partitions),
        ("L-matrix characterization", lmatrix),
        ("documented discrepancies", discrepancies),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        failed += usize::from(!v.pass);
        println!("criterion {} ({name}): {}: {}", n + 1, if v.pass { "PASS" } else { "FAIL" }, v.details);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
