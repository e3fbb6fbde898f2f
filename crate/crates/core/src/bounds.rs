//! Numeric bounds on the dichromatic number and the c-bipartite predicates.
//!
//! The degree-based upper bounds (`p - Delta_in` and the independent-set sum)
//! are stated for digraphs without symmetric arcs. Neither is a valid upper
//! bound in general: the in-neighbourhood of a vertex may itself contain a
//! directed cycle. They are computed and checked, never assumed; see
//! [`BoundsReport::checks`].

use std::collections::VecDeque;

use serde::Serialize;

use crate::chromatic::chromatic_number_exact;
use crate::dichromatic::{beta_oc_with_limit, chi_d_exact, chi_d_exact_with_limit, DICHROMATIC_LIMIT};
use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Chromatic number of the underlying graph; always an upper bound.
pub fn bound_underlying(d: &Digraph) -> Result<usize> {
    Ok(chromatic_number_exact(&d.underlying_graph())?.0)
}

fn require_no_symmetric_arcs(d: &Digraph, bound: &str) -> Result<()> {
    let sym = d.symmetric_arcs();
    if let Some(&(u, v)) = sym.first() {
        return Err(Error::Inapplicable(format!(
            "{bound} requires a digraph without symmetric arcs; v{} and v{} form a digon \
             (with symmetric arcs the value can fall below chi_d, e.g. p - Delta_in = 1 < chi_d = 2 \
             on the three-vertex digraph v2->v1, v1->v3, v2<->v3)",
            u + 1,
            v + 1
        )));
    }
    Ok(())
}

/// `p - Delta_in(D)`, defined only without symmetric arcs.
pub fn bound_indegree(d: &Digraph) -> Result<usize> {
    require_no_symmetric_arcs(d, "the in-degree bound p - Delta_in")?;
    Ok(d.order() - d.delta_in())
}

/// Minimum of `p - sum_{v in S} ind(v) + |S|` over independent sets `S`,
/// with a minimizing set. The value can be zero or negative.
pub fn bound_independent_sum(d: &Digraph) -> Result<(i64, Vec<Vertex>)> {
    bound_independent_sum_with_limit(d, INDEPENDENT_SUM_LIMIT)
}

/// Default size limit of [`bound_independent_sum`].
pub const INDEPENDENT_SUM_LIMIT: usize = 20;

pub fn bound_independent_sum_with_limit(d: &Digraph, limit: usize) -> Result<(i64, Vec<Vertex>)> {
    require_no_symmetric_arcs(d, "the independent-set bound")?;
    let p = d.order();
    if p > limit.min(63) {
        return Err(Error::SizeLimit { what: "independent-set bound", p, limit: limit.min(63) });
    }
    let adj: Vec<u64> = (0..p)
        .map(|v| {
            d.successors(v)
                .iter()
                .chain(d.predecessors(v))
                .fold(0u64, |m, &w| m | 1 << w)
        })
        .collect();
    // Each member contributes 1 - ind(v).
    let gain: Vec<i64> = (0..p).map(|v| d.in_degree(v) as i64 - 1).collect();
    let mut best = (0i64, 0u64);
    let mut stack: Vec<(Vertex, u64, u64, i64)> = vec![(0, 0, 0, 0)];
    while let Some((v, chosen, blocked, total)) = stack.pop() {
        if v == p {
            if total > best.0 {
                best = (total, chosen);
            }
            continue;
        }
        if blocked & (1 << v) == 0 {
            stack.push((v + 1, chosen | 1 << v, blocked | adj[v], total + gain[v]));
        }
        stack.push((v + 1, chosen, blocked, total));
    }
    let set = crate::digraph::mask_to_vec(best.1);
    Ok((p as i64 - best.0, set))
}

/// One inequality evaluated on one digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
}

/// Every bound of the dichromatic number on one digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub p: usize,
    pub chi_d: usize,
    pub chi_underlying: usize,
    pub delta_in: usize,
    /// `p - Delta_in` whether or not the bound applies.
    pub indegree_value: i64,
    /// `Some` only without symmetric arcs.
    pub bound_indegree: Option<i64>,
    pub bound_independent_sum: Option<i64>,
    #[serde(serialize_with = "crate::digraph::names::option_list")]
    pub independent_set: Option<Vec<Vertex>>,
    pub beta_oc: usize,
    /// `ceil(p / beta_oc)`.
    pub lower_ratio: usize,
    /// `p - beta_oc + 1`.
    pub upper_beta: usize,
    pub sandwich_holds: bool,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn violations(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| c.applicable && !c.holds)
            .map(|c| c.name)
            .collect()
    }
}

pub const CHECK_UNDERLYING: &str = "chi_d <= chi(G(D))";
pub const CHECK_INDEGREE: &str = "chi_d <= p - Delta_in (no symmetric arcs)";
pub const CHECK_INDEPENDENT_SUM: &str = "chi_d <= p - sum ind(S) + |S| (no symmetric arcs)";
pub const CHECK_LOWER_RATIO: &str = "ceil(p / beta_oc) <= chi_d";
pub const CHECK_UPPER_BETA: &str = "chi_d <= p - beta_oc + 1";

/// Computes every bound and flags each inequality.
pub fn sandwich_check(d: &Digraph) -> Result<BoundsReport> {
    sandwich_check_with_limit(d, DICHROMATIC_LIMIT)
}

/// [`sandwich_check`] with `limit` applied to the dichromatic number, the
/// acyclic-set number and the independent-set bound.
pub fn sandwich_check_with_limit(d: &Digraph, limit: usize) -> Result<BoundsReport> {
    let p = d.order();
    let chi_d = chi_d_exact_with_limit(d, limit)?.0;
    let chi_underlying = bound_underlying(d)?;
    let beta = beta_oc_with_limit(d, limit)?.0;
    let digon_free = d.symmetric_arcs().is_empty();
    let indegree_value = p as i64 - d.delta_in() as i64;
    let (bound_indegree, independent) = if digon_free {
        let (value, set) = bound_independent_sum_with_limit(d, limit)?;
        (Some(indegree_value), Some((value, set)))
    } else {
        (None, None)
    };
    let lower_ratio = if beta == 0 { 0 } else { p.div_ceil(beta) };
    let upper_beta = p + 1 - beta;
    let sandwich_holds = lower_ratio <= chi_d && chi_d <= upper_beta;
    let chi = chi_d as i64;
    let checks = vec![
        BoundCheck { name: CHECK_UNDERLYING, applicable: true, holds: chi_d <= chi_underlying },
        BoundCheck {
            name: CHECK_INDEGREE,
            applicable: digon_free,
            holds: bound_indegree.is_none_or(|b| chi <= b),
        },
        BoundCheck {
            name: CHECK_INDEPENDENT_SUM,
            applicable: digon_free,
            holds: independent.as_ref().is_none_or(|(b, _)| chi <= *b),
        },
        BoundCheck { name: CHECK_LOWER_RATIO, applicable: true, holds: lower_ratio <= chi_d },
        BoundCheck { name: CHECK_UPPER_BETA, applicable: true, holds: chi_d <= upper_beta },
    ];
    let (bound_independent_sum, independent_set) = match independent {
        Some((b, s)) => (Some(b), Some(s)),
        None => (None, None),
    };
    Ok(BoundsReport {
        p,
        chi_d,
        chi_underlying,
        delta_in: d.delta_in(),
        indegree_value,
        bound_indegree,
        bound_independent_sum,
        independent_set,
        beta_oc: beta,
        lower_ratio,
        upper_beta,
        sandwich_holds,
        checks,
    })
}

/// Looks for an odd cycle in the graph of symmetric pairs. The witness lists
/// the cycle once, smallest vertex first; consecutive vertices, and the last
/// and first, form digons.
pub fn has_odd_symmetric_cycle(d: &Digraph) -> Option<Vec<Vertex>> {
    let p = d.order();
    let mut adj = vec![Vec::new(); p];
    for (u, v) in d.symmetric_arcs() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side = vec![u8::MAX; p];
    let mut parent = vec![usize::MAX; p];
    let mut depth = vec![0usize; p];
    for root in 0..p {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    // Join the two tree paths at their lowest common ancestor.
                    let (mut a, mut b) = (u, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    left.reverse();
                    left.extend(right);
                    return Some(crate::digraph::rotate_to_min(left));
                }
            }
        }
    }
    None
}

/// Compares "every arc is symmetric" with "chi_d equals chi of the
/// underlying graph" on one digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricClaimRow {
    pub all_symmetric: bool,
    pub chi_d: usize,
    pub chi_underlying: usize,
    pub equal: bool,
    /// The two sides disagree.
    pub counterexample: bool,
}

pub fn symmetric_claim_row(d: &Digraph) -> Result<SymmetricClaimRow> {
    let all_symmetric = d.is_symmetric();
    let chi_d = chi_d_exact(d)?.0;
    let chi_underlying = bound_underlying(d)?;
    let equal = chi_d == chi_underlying;
    Ok(SymmetricClaimRow {
        all_symmetric,
        chi_d,
        chi_underlying,
        equal,
        counterexample: all_symmetric != equal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricClaimSearch {
    pub p: usize,
    pub checked: usize,
    pub counterexamples: usize,
    /// Arcs of the first counterexample in enumeration order.
    pub first: Option<Vec<(String, String)>>,
}

/// Runs [`symmetric_claim_row`] over every digraph on `p <= 4` vertices.
pub fn symmetric_claim_search(p: usize) -> Result<SymmetricClaimSearch> {
    if p > 4 {
        return Err(Error::SizeLimit { what: "exhaustive digraph enumeration", p, limit: 4 });
    }
    let mut report = SymmetricClaimSearch { p, checked: 0, counterexamples: 0, first: None };
    for d in crate::enumerate::all_digraphs(p) {
        report.checked += 1;
        if symmetric_claim_row(&d)?.counterexample {
            report.counterexamples += 1;
            if report.first.is_none() {
                report.first = Some(
                    d.arcs()
                        .map(|(u, v)| (crate::digraph::vertex_name(u), crate::digraph::vertex_name(v)))
                        .collect(),
                );
            }
        }
    }
    Ok(report)
}

/// Two c-independent classes suffice.
pub fn is_c_bipartite(d: &Digraph) -> Result<bool> {
    Ok(chi_d_exact(d)?.0 <= 2)
}

/// One digraph compared under the two sides of the c-bipartite
/// characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop8Row {
    pub id: usize,
    pub chi_d: usize,
    pub c_bipartite: bool,
    pub odd_symmetric_cycle: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop8Report {
    pub checked: usize,
    pub agreements: usize,
    /// Instances where "chi_d <= 2" and "no odd symmetric cycle" differ.
    pub disagreements: Vec<Prop8Row>,
}

pub fn prop8_row(id: usize, d: &Digraph) -> Result<Prop8Row> {
    let chi_d = chi_d_exact(d)?.0;
    let c_bipartite = chi_d <= 2;
    let odd_symmetric_cycle = has_odd_symmetric_cycle(d).is_some();
    Ok(Prop8Row {
        id,
        chi_d,
        c_bipartite,
        odd_symmetric_cycle,
        agree: c_bipartite != odd_symmetric_cycle,
    })
}

/// Compares `is_c_bipartite` with the absence of odd symmetric cycles over
/// a sample of digraphs.
pub fn prop8_empirical<'a, I>(sample: I) -> Result<Prop8Report>
where
    I: IntoIterator<Item = &'a Digraph>,
{
    let mut checked = 0;
    let mut agreements = 0;
    let mut disagreements = Vec::new();
    for (id, d) in sample.into_iter().enumerate() {
        let row = prop8_row(id, d)?;
        checked += 1;
        if row.agree {
            agreements += 1;
        } else {
            disagreements.push(row);
        }
    }
    Ok(Prop8Report { checked, agreements, disagreements })
}
