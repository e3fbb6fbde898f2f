//! Exact chromatic number and first-fit coloring of undirected graphs.

use crate::coloring::{Coloring, VertexOrder};
use crate::digraph::{UndirectedGraph, Vertex};
use crate::error::{Error, Result};

/// Default size limit of [`chromatic_number_exact`].
pub const CHROMATIC_LIMIT: usize = 24;

/// Minimum number of colors of a proper coloring, with a witness.
///
/// Iterative deepening on `k`; vertices are branched in descending-degree
/// order and a vertex may open at most one new color beyond those in use.
/// The witness is renumbered by first occurrence along vertex indices.
pub fn chromatic_number_exact(g: &UndirectedGraph) -> Result<(usize, Coloring)> {
    chromatic_number_exact_with_limit(g, CHROMATIC_LIMIT)
}

pub fn chromatic_number_exact_with_limit(
    g: &UndirectedGraph,
    limit: usize,
) -> Result<(usize, Coloring)> {
    let p = g.order();
    if p > limit {
        return Err(Error::SizeLimit {
            what: "chromatic number",
            p,
            limit,
        });
    }
    if p == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    let mut order: Vec<Vertex> = (0..p).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut colors = vec![0u32; p];
    for k in 1..=p as u32 {
        if extend(g, &order, 0, k, 0, &mut colors) {
            let c = Coloring::new(colors)?.normalized();
            return Ok((k as usize, c));
        }
    }
    unreachable!("p colors always suffice")
}

fn extend(
    g: &UndirectedGraph,
    order: &[Vertex],
    pos: usize,
    k: u32,
    used: u32,
    colors: &mut [u32],
) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    let mut forbidden = 0u64;
    for &w in g.neighbors(v) {
        if colors[w] != 0 {
            forbidden |= 1 << colors[w];
        }
    }
    for c in 1..=k.min(used + 1) {
        if forbidden & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if extend(g, order, pos + 1, k, used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// First-fit along `order`: each vertex takes the smallest color missing
/// among its already-colored neighbors.
pub fn greedy_color_graph(g: &UndirectedGraph, order: &VertexOrder) -> Result<Coloring> {
    if order.len() != g.order() {
        return Err(Error::NotPermutation { p: g.order() });
    }
    let mut colors = vec![0u32; g.order()];
    for &v in order.as_slice() {
        let taken: Vec<u32> = g
            .neighbors(v)
            .iter()
            .map(|&w| colors[w])
            .filter(|&c| c != 0)
            .collect();
        colors[v] = smallest_missing(&taken);
    }
    Coloring::new(colors)
}

pub(crate) fn smallest_missing(taken: &[u32]) -> u32 {
    (1..).find(|c| !taken.contains(c)).expect("unbounded range")
}
