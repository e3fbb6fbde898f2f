//! Complete partitions: achromatic number, its c-independent analogue,
//! Grundy numbers, the interpolation property and the chain of coloring
//! numbers.
//!
//! A partition is complete when every two classes are joined by an edge (or
//! an arc in either direction). Partitions are enumerated in
//! restricted-growth order; class admissibility prunes the search.

use serde::Serialize;

use crate::chromatic::chromatic_number_exact;
use crate::coloring::{ColorClassPartition, VertexOrder};
use crate::dichromatic::chi_d_exact;
use crate::digraph::{Adjacency, BitDigraph, Digraph, UndirectedGraph, Vertex};
use crate::enumerate::for_each_partition;
use crate::error::{Error, Result};
use crate::seq::{max_over_orders_with_limit, min_over_orders_with_limit, ScanMode};

/// Default limit for psi and psi_sd.
pub const PARTITION_LIMIT: usize = 10;
/// Default limit for the interpolation, chain and chi = psi checks.
pub const CHAIN_LIMIT: usize = 8;
/// Default limit for the Grundy scan.
pub const GRUNDY_LIMIT: usize = 9;

fn limit_check(p: usize, limit: usize, what: &'static str) -> Result<()> {
    if p > limit {
        return Err(Error::SizeLimit { what, p, limit });
    }
    Ok(())
}

/// Every two classes are joined.
pub fn is_complete_partition<G: Adjacency>(g: &G, partition: &ColorClassPartition) -> Result<bool> {
    if partition.order() != g.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices, graph has {}",
            partition.order(),
            g.order()
        )));
    }
    let classes = partition.classes();
    Ok((0..classes.len()).all(|i| {
        (i + 1..classes.len()).all(|j| {
            classes[i]
                .iter()
                .any(|&u| classes[j].iter().any(|&v| g.adjacent(u, v)))
        })
    }))
}

fn adjacency_masks<G: Adjacency>(g: &G) -> Vec<u64> {
    (0..g.order())
        .map(|u| {
            (0..g.order())
                .filter(|&v| v != u && g.adjacent(u, v))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

fn masks_complete(adj: &[u64], classes: &[u64]) -> bool {
    (0..classes.len()).all(|i| {
        let reach = crate::digraph::mask_to_vec(classes[i])
            .into_iter()
            .fold(0u64, |m, v| m | adj[v]);
        (i + 1..classes.len()).all(|j| reach & classes[j] != 0)
    })
}

/// Maximum order of a complete partition whose classes pass `admit`, with
/// the first such partition met in restricted-growth order.
fn max_complete_partition(
    adj: &[u64],
    mut admit: impl FnMut(u64, Vertex) -> bool,
) -> (usize, Vec<u64>) {
    let mut best: (usize, Vec<u64>) = (0, Vec::new());
    for_each_partition(adj.len(), &mut admit, &mut |classes| {
        if classes.len() > best.0 && masks_complete(adj, classes) {
            best = (classes.len(), classes.to_vec());
        }
    });
    best
}

/// Achromatic number: maximum complete partition into independent sets.
pub fn achromatic_number(g: &UndirectedGraph) -> Result<(usize, ColorClassPartition)> {
    achromatic_number_with_limit(g, PARTITION_LIMIT)
}

pub fn achromatic_number_with_limit(
    g: &UndirectedGraph,
    limit: usize,
) -> Result<(usize, ColorClassPartition)> {
    limit_check(g.order(), limit.min(63), "achromatic number")?;
    let adj = adjacency_masks(g);
    let (k, classes) = max_complete_partition(&adj, |class, v| adj[v] & class == 0);
    Ok((k, ColorClassPartition::from_masks(&classes)))
}

/// Maximum complete partition into c-independent (acyclic-inducing) sets.
pub fn psi_sd(d: &Digraph) -> Result<(usize, ColorClassPartition)> {
    psi_sd_with_limit(d, PARTITION_LIMIT)
}

pub fn psi_sd_with_limit(d: &Digraph, limit: usize) -> Result<(usize, ColorClassPartition)> {
    limit_check(d.order(), limit.min(63), "psi_sd")?;
    let adj = adjacency_masks(d);
    let bd = BitDigraph::new(d);
    let (k, classes) = max_complete_partition(&adj, |class, v| !bd.closes_cycle(class, v));
    Ok((k, ColorClassPartition::from_masks(&classes)))
}

/// Maximum first-fit color count over all orders.
pub fn grundy_number(g: &UndirectedGraph) -> Result<(usize, VertexOrder)> {
    grundy_number_with_limit(g, GRUNDY_LIMIT)
}

pub fn grundy_number_with_limit(g: &UndirectedGraph, limit: usize) -> Result<(usize, VertexOrder)> {
    max_over_orders_with_limit(&g.to_symmetric_digraph(), ScanMode::Greedy, limit)
}

/// All orders of complete independent partitions between chi and psi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterpolationTable {
    pub chi: usize,
    pub psi: usize,
    /// One witness per order, ascending.
    pub witnesses: Vec<(usize, ColorClassPartition)>,
    /// Every order in `chi..=psi` has a witness.
    pub holds: bool,
}

/// Checks that complete partitions into independent sets exist for every
/// order between the chromatic and achromatic numbers.
pub fn interpolation_check(g: &UndirectedGraph) -> Result<InterpolationTable> {
    interpolation_check_with_limit(g, CHAIN_LIMIT)
}

pub fn interpolation_check_with_limit(g: &UndirectedGraph, limit: usize) -> Result<InterpolationTable> {
    limit_check(g.order(), limit.min(63), "interpolation check")?;
    let adj = adjacency_masks(g);
    let p = g.order();
    let mut first: Vec<Option<Vec<u64>>> = vec![None; p + 1];
    for_each_partition(p, &mut |class, v| adj[v] & class == 0, &mut |classes| {
        let k = classes.len();
        if first[k].is_none() && masks_complete(&adj, classes) {
            first[k] = Some(classes.to_vec());
        }
    });
    let chi = chromatic_number_exact(g)?.0;
    let psi = first.iter().rposition(Option::is_some).unwrap_or(0);
    let holds = (chi..=psi).all(|a| first[a].is_some());
    let witnesses = first
        .into_iter()
        .enumerate()
        .filter_map(|(a, w)| w.map(|m| (a, ColorClassPartition::from_masks(&m))))
        .filter(|(a, _)| *a >= chi)
        .collect();
    Ok(InterpolationTable { chi, psi, witnesses, holds })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChiPsiVerdict {
    pub chi: usize,
    pub psi: usize,
    pub equal: bool,
}

/// Whether chromatic and achromatic numbers coincide.
pub fn chi_equals_psi_check(g: &UndirectedGraph) -> Result<ChiPsiVerdict> {
    limit_check(g.order(), CHAIN_LIMIT, "chi = psi check")?;
    let chi = chromatic_number_exact(g)?.0;
    let psi = achromatic_number(g)?.0;
    Ok(ChiPsiVerdict { chi, psi, equal: chi == psi })
}

/// One inequality of the chain, evaluated on one digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub link: &'static str,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// The displayed chain, reported as a header.
pub const CHAIN_AS_STATED: &str =
    "chi_d(D) <= chi_s(D) <= chi(G) <= chi_s(G) <= psi_s(G) <= psi_sd(D)";

/// Every coloring number of the chain on one digraph `D` with underlying
/// graph `G`. Per-order numbers are in greedy mode, reported as their
/// minimum and maximum over all orders; a link with a per-order side holds
/// when it holds for every order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub chain: &'static str,
    pub chi_d: usize,
    pub chi_sd_min: usize,
    pub chi_sd_max: usize,
    pub chi_g: usize,
    pub chi_s_g_min: usize,
    pub chi_s_g_max: usize,
    pub psi_g: usize,
    pub psi_sd: usize,
    pub links: Vec<ChainLink>,
}

pub const LINK_CHI_D_CHI_SD: &str = "chi_d(D) <= chi_s(D)";
pub const LINK_CHI_SD_CHI_G: &str = "chi_s(D) <= chi(G)";
pub const LINK_CHI_G_CHI_S_G: &str = "chi(G) <= chi_s(G)";
pub const LINK_CHI_S_G_PSI_G: &str = "chi_s(G) <= psi(G)";
pub const LINK_PSI_G_PSI_SD: &str = "psi(G) <= psi_sd(D)";
pub const LINK_PSI_SD_PSI_G: &str = "psi_sd(D) <= psi(G)";
pub const LINK_NOTE_CHI: &str = "chi(G) = min_s chi_s(G)";
pub const LINK_NOTE_PSI: &str = "psi(G) = max_s chi_s(G)";
pub const LINK_NOTE_CHI_D: &str = "chi_d(D) = min_s chi_s(D)";
pub const LINK_NOTE_PSI_SD: &str = "psi_sd(D) = max_s chi_s(D)";

impl ChainReport {
    pub fn link(&self, name: &str) -> Option<&ChainLink> {
        self.links.iter().find(|l| l.link == name)
    }
}

pub fn chain_check(d: &Digraph) -> Result<ChainReport> {
    chain_check_with_limit(d, CHAIN_LIMIT)
}

pub fn chain_check_with_limit(d: &Digraph, limit: usize) -> Result<ChainReport> {
    limit_check(d.order(), limit, "chain check")?;
    let g = d.underlying_graph();
    let sym = g.to_symmetric_digraph();
    let chi_d = chi_d_exact(d)?.0;
    let chi_sd_min = min_over_orders_with_limit(d, ScanMode::Greedy, limit)?.0;
    let chi_sd_max = max_over_orders_with_limit(d, ScanMode::Greedy, limit)?.0;
    let chi_g = chromatic_number_exact(&g)?.0;
    let chi_s_g_min = min_over_orders_with_limit(&sym, ScanMode::Greedy, limit)?.0;
    let chi_s_g_max = max_over_orders_with_limit(&sym, ScanMode::Greedy, limit)?.0;
    let psi_g = achromatic_number_with_limit(&g, limit)?.0;
    let psi_sd = psi_sd_with_limit(d, limit)?.0;
    let le = |link, lhs, rhs| ChainLink { link, lhs, rhs, holds: lhs <= rhs };
    let eq = |link, lhs, rhs| ChainLink { link, lhs, rhs, holds: lhs == rhs };
    let links = vec![
        le(LINK_CHI_D_CHI_SD, chi_d, chi_sd_min),
        le(LINK_CHI_SD_CHI_G, chi_sd_max, chi_g),
        le(LINK_CHI_G_CHI_S_G, chi_g, chi_s_g_min),
        le(LINK_CHI_S_G_PSI_G, chi_s_g_max, psi_g),
        le(LINK_PSI_G_PSI_SD, psi_g, psi_sd),
        le(LINK_PSI_SD_PSI_G, psi_sd, psi_g),
        eq(LINK_NOTE_CHI, chi_g, chi_s_g_min),
        eq(LINK_NOTE_PSI, psi_g, chi_s_g_max),
        eq(LINK_NOTE_CHI_D, chi_d, chi_sd_min),
        eq(LINK_NOTE_PSI_SD, psi_sd, chi_sd_max),
    ];
    Ok(ChainReport {
        chain: CHAIN_AS_STATED,
        chi_d,
        chi_sd_min,
        chi_sd_max,
        chi_g,
        chi_s_g_min,
        chi_s_g_max,
        psi_g,
        psi_sd,
        links,
    })
}
