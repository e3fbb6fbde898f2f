//! Order-indexed coloring: validity of `(vertex, color)` sequences, the
//! forward constraint graph, per-order coloring numbers and extremal scans.
//!
//! The coloring rule: for an arc `u -> v`, if the tail `u` is colored before
//! the head `v` the two colors must differ; if the head comes first there is
//! no constraint. For a fixed order this is exactly proper coloring of the
//! forward constraint graph, whose edges are the arcs pointing forward.
//!
//! Two per-order numbers are provided. [`ScanMode::Exact`] is the minimum
//! number of colors any valid assignment along the order uses.
//! [`ScanMode::Greedy`] colors first-fit along the order, which is what the
//! hand-worked sequences in the literature do; on undirected graphs the two
//! differ (exact is always the chromatic number).

use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_number_exact_with_limit, smallest_missing, CHROMATIC_LIMIT};
use crate::coloring::{is_permutation, Coloring, SequenceColoring, VertexOrder};
use crate::digraph::{Digraph, UndirectedGraph, Vertex};
use crate::enumerate::for_each_permutation;
use crate::error::{Error, Result};

/// Default limit on `p` for scans over all `p!` orders.
pub const ORDER_LIMIT: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Exact,
    Greedy,
}

impl std::fmt::Display for ScanMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ScanMode::Exact => "exact",
            ScanMode::Greedy => "greedy",
        })
    }
}

impl std::str::FromStr for ScanMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ScanMode::Exact),
            "greedy" => Ok(ScanMode::Greedy),
            other => Err(Error::Precondition(format!(
                "unknown mode {other:?} (expected exact or greedy)"
            ))),
        }
    }
}

/// A forward arc whose endpoints share a color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceViolation {
    #[serde(serialize_with = "crate::digraph::names::position")]
    pub tail_position: usize,
    #[serde(serialize_with = "crate::digraph::names::position")]
    pub head_position: usize,
    #[serde(serialize_with = "crate::digraph::names::pair")]
    pub arc: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceVerdict {
    pub valid: bool,
    pub violations: Vec<SequenceViolation>,
}

/// Checks a sequence against the coloring rule.
///
/// Violations are listed by tail position, then head position.
pub fn validate_sequence_coloring(d: &Digraph, s: &SequenceColoring) -> Result<SequenceVerdict> {
    let p = d.order();
    let vertices = s.vertices();
    if !is_permutation(p, &vertices) {
        return Err(Error::NotPermutation { p });
    }
    let mut pos = vec![0; p];
    let mut color = vec![0; p];
    for (i, &(v, c)) in s.pairs().iter().enumerate() {
        pos[v] = i;
        color[v] = c;
    }
    let mut violations: Vec<SequenceViolation> = d
        .arcs()
        .filter(|&(t, h)| pos[t] < pos[h] && color[t] == color[h])
        .map(|(t, h)| SequenceViolation {
            tail_position: pos[t],
            head_position: pos[h],
            arc: (t, h),
        })
        .collect();
    violations.sort_by_key(|v| (v.tail_position, v.head_position));
    Ok(SequenceVerdict {
        valid: violations.is_empty(),
        violations,
    })
}

/// Undirected graph with an edge `{u, v}` for every arc `u -> v` whose tail
/// precedes its head in `order`.
pub fn forward_constraint_graph(d: &Digraph, order: &VertexOrder) -> Result<UndirectedGraph> {
    check_order(d, order)?;
    let pos = order.positions();
    UndirectedGraph::new(d.order(), d.arcs().filter(|&(t, h)| pos[t] < pos[h]))
}

fn check_order(d: &Digraph, order: &VertexOrder) -> Result<()> {
    if order.len() != d.order() {
        return Err(Error::NotPermutation { p: d.order() });
    }
    Ok(())
}

/// Minimum colors of a valid sequence along `order`: the chromatic number of
/// the forward constraint graph.
pub fn s_number_exact(d: &Digraph, order: &VertexOrder) -> Result<(usize, SequenceColoring)> {
    s_number_exact_with_limit(d, order, CHROMATIC_LIMIT)
}

pub fn s_number_exact_with_limit(
    d: &Digraph,
    order: &VertexOrder,
    limit: usize,
) -> Result<(usize, SequenceColoring)> {
    let h = forward_constraint_graph(d, order)?;
    let (k, coloring) = chromatic_number_exact_with_limit(&h, limit)?;
    Ok((k, SequenceColoring::from_order(order, &coloring)))
}

/// First-fit along `order`: each vertex takes the smallest color not used by
/// an already-colored tail of an arc into it.
pub fn s_number_greedy(d: &Digraph, order: &VertexOrder) -> Result<(usize, SequenceColoring)> {
    check_order(d, order)?;
    let mut colors = vec![0u32; d.order()];
    for &v in order.as_slice() {
        let taken: Vec<u32> = d
            .predecessors(v)
            .iter()
            .map(|&u| colors[u])
            .filter(|&c| c != 0)
            .collect();
        colors[v] = smallest_missing(&taken);
    }
    let coloring = Coloring::new(colors)?;
    Ok((
        coloring.num_colors(),
        SequenceColoring::from_order(order, &coloring),
    ))
}

fn greedy_count(d: &Digraph, order: &[Vertex], colors: &mut [u32], taken: &mut Vec<u32>) -> usize {
    colors.iter_mut().for_each(|c| *c = 0);
    let mut max = 0;
    for &v in order {
        taken.clear();
        taken.extend(d.predecessors(v).iter().map(|&u| colors[u]).filter(|&c| c != 0));
        let c = smallest_missing(taken);
        colors[v] = c;
        max = max.max(c);
    }
    max as usize
}

/// The per-order number in the requested mode.
pub fn s_number(d: &Digraph, order: &VertexOrder, mode: ScanMode) -> Result<(usize, SequenceColoring)> {
    match mode {
        ScanMode::Exact => s_number_exact(d, order),
        ScanMode::Greedy => s_number_greedy(d, order),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Extremum {
    Min,
    Max,
}

fn scan(d: &Digraph, mode: ScanMode, limit: usize, goal: Extremum) -> Result<(usize, VertexOrder)> {
    let p = d.order();
    if p > limit {
        return Err(Error::SizeLimit {
            what: "scan over vertex orders",
            p,
            limit,
        });
    }
    if p == 0 {
        return Ok((0, VertexOrder::natural(0)));
    }
    // Neither extreme can go past these, so the first order reaching one is
    // also the lexicographically smallest optimum.
    let bound = match goal {
        Extremum::Min => 1,
        Extremum::Max => p,
    };
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    let mut colors = vec![0u32; p];
    let mut taken = Vec::new();
    let mut failure = None;
    for_each_permutation(p, |perm| {
        let value = match mode {
            ScanMode::Greedy => greedy_count(d, perm, &mut colors, &mut taken),
            ScanMode::Exact => {
                let order = VertexOrder::from_vec_unchecked(perm.to_vec());
                match s_number_exact(d, &order) {
                    Ok((k, _)) => k,
                    Err(e) => {
                        failure = Some(e);
                        return false;
                    }
                }
            }
        };
        let better = match (&best, goal) {
            (None, _) => true,
            (Some((b, _)), Extremum::Min) => value < *b,
            (Some((b, _)), Extremum::Max) => value > *b,
        };
        if better {
            best = Some((value, perm.to_vec()));
        }
        value != bound
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let (value, order) = best.expect("at least one order");
    Ok((value, VertexOrder::from_vec_unchecked(order)))
}

/// Minimum per-order number over all orders, with the lexicographically
/// smallest optimal order.
pub fn min_over_orders(d: &Digraph, mode: ScanMode) -> Result<(usize, VertexOrder)> {
    scan(d, mode, ORDER_LIMIT, Extremum::Min)
}

pub fn min_over_orders_with_limit(d: &Digraph, mode: ScanMode, limit: usize) -> Result<(usize, VertexOrder)> {
    scan(d, mode, limit, Extremum::Min)
}

/// Maximum per-order number over all orders, with the lexicographically
/// smallest optimal order. For a graph in greedy mode this is its Grundy number.
pub fn max_over_orders(d: &Digraph, mode: ScanMode) -> Result<(usize, VertexOrder)> {
    scan(d, mode, ORDER_LIMIT, Extremum::Max)
}

pub fn max_over_orders_with_limit(d: &Digraph, mode: ScanMode, limit: usize) -> Result<(usize, VertexOrder)> {
    scan(d, mode, limit, Extremum::Max)
}

/// The complete forward tournament on `n` vertices (arcs `v_i -> v_j` for
/// `i < j`, built by adding one vertex at a time) with its natural order,
/// along which first-fit needs `n` colors.
pub fn prop9_construct(n: usize) -> Result<(Digraph, VertexOrder)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let arcs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Ok((Digraph::new(n, arcs)?, VertexOrder::natural(n)))
}
