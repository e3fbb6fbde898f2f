//! Seeded batches of random digraphs run through one of the checkers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{prop8_row, sandwich_check};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::partitions::chain_check;
use crate::random::{derive_seeds, random_digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleCheck {
    Sandwich,
    Prop8,
    Chain,
}

impl fmt::Display for EnsembleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnsembleCheck::Sandwich => "sandwich",
            EnsembleCheck::Prop8 => "prop8",
            EnsembleCheck::Chain => "chain",
        })
    }
}

impl FromStr for EnsembleCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sandwich" => Ok(EnsembleCheck::Sandwich),
            "prop8" => Ok(EnsembleCheck::Prop8),
            "chain" => Ok(EnsembleCheck::Chain),
            other => Err(Error::Precondition(format!(
                "unknown check `{other}` (expected sandwich, prop8 or chain)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnsembleSpec {
    pub p: usize,
    pub count: usize,
    pub seed: u64,
    pub arc_probability: f64,
    pub allow_digons: bool,
}

impl EnsembleSpec {
    pub fn new(p: usize, count: usize, seed: u64) -> Self {
        EnsembleSpec { p, count, seed, arc_probability: 0.4, allow_digons: true }
    }

    /// The instances, in id order.
    pub fn digraphs(&self) -> Result<Vec<(u64, Digraph)>> {
        derive_seeds(self.seed, self.count)
            .into_iter()
            .map(|s| Ok((s, random_digraph(self.p, self.arc_probability, self.allow_digons, s)?)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceRow {
    pub id: usize,
    pub seed: u64,
    pub arcs: usize,
    /// Names of the inequalities or agreements that failed.
    pub failed: Vec<String>,
    pub values: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleReport {
    pub check: EnsembleCheck,
    pub spec: EnsembleSpec,
    pub failing_instances: usize,
    pub failure_counts: BTreeMap<String, usize>,
    pub instances: Vec<InstanceRow>,
}

fn row(check: EnsembleCheck, id: usize, seed: u64, d: &Digraph) -> Result<InstanceRow> {
    let (failed, values) = match check {
        EnsembleCheck::Sandwich => {
            let r = sandwich_check(d)?;
            let failed = r.violations().into_iter().map(String::from).collect();
            (failed, serde_json::to_value(&r).expect("plain data"))
        }
        EnsembleCheck::Prop8 => {
            let r = prop8_row(id, d)?;
            let failed = if r.agree { Vec::new() } else { vec!["c-bipartite iff no odd symmetric cycle".into()] };
            (
                failed,
                json!({
                    "chi_d": r.chi_d,
                    "c_bipartite": r.c_bipartite,
                    "odd_symmetric_cycle": r.odd_symmetric_cycle,
                }),
            )
        }
        EnsembleCheck::Chain => {
            let r = chain_check(d)?;
            let failed = r.links.iter().filter(|l| !l.holds).map(|l| l.link.to_string()).collect();
            (failed, serde_json::to_value(&r).expect("plain data"))
        }
    };
    Ok(InstanceRow { id, seed, arcs: d.arc_count(), failed, values })
}

pub fn run_ensemble(check: EnsembleCheck, spec: &EnsembleSpec) -> Result<EnsembleReport> {
    let mut instances = Vec::with_capacity(spec.count);
    for (id, (seed, d)) in spec.digraphs()?.into_iter().enumerate() {
        instances.push(row(check, id, seed, &d)?);
    }
    let mut failure_counts = BTreeMap::new();
    for r in &instances {
        for f in &r.failed {
            *failure_counts.entry(f.clone()).or_insert(0) += 1;
        }
    }
    Ok(EnsembleReport {
        check,
        spec: *spec,
        failing_instances: instances.iter().filter(|r| !r.failed.is_empty()).count(),
        failure_counts,
        instances,
    })
}
