//! Dichromatic number and the colorings around it.
//!
//! A coloring can be produced by some coloring sequence exactly when the
//! arcs joining equal colors form no directed cycle: color heads before
//! tails inside each class, i.e. topologically sort the reversed
//! monochromatic arcs. Every validity check here uses that criterion; order
//! enumeration survives only in [`chi_d_ordering_oracle`].

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::coloring::{ColorClassPartition, Coloring, SequenceColoring, VertexOrder};
use crate::digraph::{mask_to_vec, Acyclicity, BitDigraph, Digraph, Vertex, BITSET_MAX};
use crate::error::{Error, Result};
use crate::seq::{min_over_orders_with_limit, ScanMode, ORDER_LIMIT};

/// Default size limit of [`chi_d_exact`] and [`beta_oc`].
pub const DICHROMATIC_LIMIT: usize = 20;

/// Verdict of [`is_valid_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringVerdict {
    /// A realizing order.
    Valid(VertexOrder),
    /// A monochromatic directed cycle.
    Invalid(#[serde(serialize_with = "crate::digraph::names::list")] Vec<Vertex>),
}

impl ColoringVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ColoringVerdict::Valid(_))
    }
}

fn check_len(d: &Digraph, c: &Coloring) -> Result<()> {
    if c.len() != d.order() {
        return Err(Error::LengthMismatch { expected: d.order(), got: c.len() });
    }
    Ok(())
}

fn monochromatic(d: &Digraph, c: &Coloring) -> Digraph {
    Digraph::new(d.order(), d.arcs().filter(|&(t, h)| c.color(t) == c.color(h)))
        .expect("subset of valid arcs")
}

/// Valid iff the monochromatic arcs are acyclic.
pub fn is_valid_coloring(d: &Digraph, c: &Coloring) -> Result<ColoringVerdict> {
    check_len(d, c)?;
    Ok(match realize_order(d, c) {
        Ok(order) => ColoringVerdict::Valid(order),
        Err(Error::MonochromaticCycle { cycle }) => ColoringVerdict::Invalid(cycle),
        Err(e) => return Err(e),
    })
}

/// An order along which `c` obeys the coloring rule: monochromatic heads
/// come before their tails; otherwise the smallest available index goes
/// first.
pub fn realize_order(d: &Digraph, c: &Coloring) -> Result<VertexOrder> {
    check_len(d, c)?;
    let mono = monochromatic(d, c);
    match mono.reversed().is_acyclic() {
        Acyclicity::Acyclic(order) => Ok(VertexOrder::from_vec_unchecked(order)),
        Acyclicity::Cyclic(_) => {
            let Acyclicity::Cyclic(cycle) = mono.is_acyclic() else {
                unreachable!("reversal preserves cycles")
            };
            Err(Error::MonochromaticCycle { cycle })
        }
    }
}

/// Whether `set` can be one color class: it induces an acyclic subdigraph.
pub fn can_be_monochromatic(d: &Digraph, set: &[Vertex]) -> bool {
    if d.order() <= BITSET_MAX {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        return BitDigraph::new(d).is_acyclic_set(mask);
    }
    d.induced_subdigraph(set).0.is_acyclic().is_acyclic()
}

fn check_bitset(d: &Digraph, limit: usize, what: &'static str) -> Result<()> {
    let limit = limit.min(BITSET_MAX);
    if d.order() > limit {
        return Err(Error::SizeLimit { what, p: d.order(), limit });
    }
    Ok(())
}

/// Largest c-independent set: `p` minus a minimum feedback vertex set.
pub fn beta_oc(d: &Digraph) -> Result<(usize, Vec<Vertex>)> {
    beta_oc_with_limit(d, DICHROMATIC_LIMIT)
}

pub fn beta_oc_with_limit(d: &Digraph, limit: usize) -> Result<(usize, Vec<Vertex>)> {
    if let Acyclicity::Acyclic(_) = d.is_acyclic() {
        return Ok((d.order(), (0..d.order()).collect()));
    }
    check_bitset(d, limit, "c-independence number")?;
    let bd = BitDigraph::new(d);
    let all = full_mask(d.order());
    for budget in 1..=d.order() {
        if let Some(removed) = feedback_set(&bd, all, budget) {
            let kept = all & !removed;
            return Ok((kept.count_ones() as usize, mask_to_vec(kept)));
        }
    }
    unreachable!("removing every vertex leaves an acyclic set")
}

fn full_mask(p: usize) -> u64 {
    if p == 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}

/// Drops vertices that cannot lie on a cycle inside `alive`.
fn strip(bd: &BitDigraph, mut alive: u64) -> u64 {
    loop {
        let mut next = alive;
        let mut scan = alive;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if bd.pred[v] & next == 0 || bd.succ[v] & next == 0 {
                next &= !(1 << v);
            }
        }
        if next == alive {
            return alive;
        }
        alive = next;
    }
}

/// A shortest directed cycle inside `alive` (ties: smallest start vertex).
fn shortest_cycle(bd: &BitDigraph, alive: u64) -> Option<Vec<Vertex>> {
    let mut best: Option<Vec<Vertex>> = None;
    for s in mask_to_vec(alive) {
        let mut parent = vec![usize::MAX; bd.order()];
        let mut queue = VecDeque::from([s]);
        let mut seen = 1u64 << s;
        'bfs: while let Some(v) = queue.pop_front() {
            let mut out = bd.succ[v] & alive;
            while out != 0 {
                let w = out.trailing_zeros() as usize;
                out &= out - 1;
                if w == s {
                    let mut cycle = vec![v];
                    let mut cur = v;
                    while cur != s {
                        cur = parent[cur];
                        cycle.push(cur);
                    }
                    cycle.reverse();
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                    break 'bfs;
                }
                if seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 2) {
            break;
        }
    }
    best
}

/// A set of at most `budget` vertices whose removal leaves `alive` acyclic.
fn feedback_set(bd: &BitDigraph, alive: u64, budget: usize) -> Option<u64> {
    let alive = strip(bd, alive);
    if alive == 0 {
        return Some(0);
    }
    if budget == 0 {
        return None;
    }
    let cycle = shortest_cycle(bd, alive).expect("stripped non-empty set has a cycle");
    for v in cycle {
        if let Some(rest) = feedback_set(bd, alive & !(1 << v), budget - 1) {
            return Some(rest | 1 << v);
        }
    }
    None
}

/// Minimum number of c-independent classes partitioning the vertices.
///
/// Acyclic digraphs return 1 immediately at any size. Otherwise iterative
/// deepening on `k`: vertices by descending total degree, classes tried in
/// index order, at most one new class opened per step, and each class kept
/// acyclic incrementally.
pub fn chi_d_exact(d: &Digraph) -> Result<(usize, ColorClassPartition)> {
    chi_d_exact_with_limit(d, DICHROMATIC_LIMIT)
}

pub fn chi_d_exact_with_limit(d: &Digraph, limit: usize) -> Result<(usize, ColorClassPartition)> {
    let p = d.order();
    if p == 0 {
        return Ok((0, ColorClassPartition::new(0, Vec::new())?));
    }
    if d.is_acyclic().is_acyclic() {
        return Ok((1, ColorClassPartition::new(p, vec![(0..p).collect()])?));
    }
    check_bitset(d, limit, "dichromatic number")?;
    let bd = BitDigraph::new(d);
    let mut order: Vec<Vertex> = (0..p).collect();
    order.sort_by_key(|&v| (Reverse(d.in_degree(v) + d.out_degree(v)), v));
    for k in 2..=p {
        let mut classes = vec![0u64; k];
        if assign(&bd, &order, 0, 0, &mut classes) {
            classes.retain(|&m| m != 0);
            return Ok((k, ColorClassPartition::from_masks(&classes)));
        }
    }
    unreachable!("singletons are always acyclic")
}

fn assign(bd: &BitDigraph, order: &[Vertex], pos: usize, used: usize, classes: &mut [u64]) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    let open = (used + 1).min(classes.len());
    for c in 0..open {
        if bd.closes_cycle(classes[c], v) {
            continue;
        }
        classes[c] |= 1 << v;
        if assign(bd, order, pos + 1, used.max(c + 1), classes) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}

/// Dichromatic number as the minimum exact per-order number over all
/// orders. Exists to cross-check [`chi_d_exact`].
pub fn chi_d_ordering_oracle(d: &Digraph) -> Result<usize> {
    Ok(min_over_orders_with_limit(d, ScanMode::Exact, ORDER_LIMIT)?.0)
}

/// For an acyclic digraph: every vertex color 1, in reverse topological order.
pub fn acyclic_one_coloring(d: &Digraph) -> Result<SequenceColoring> {
    match d.is_acyclic() {
        Acyclicity::Acyclic(mut order) => {
            order.reverse();
            SequenceColoring::new(order.into_iter().map(|v| (v, 1)).collect())
        }
        Acyclicity::Cyclic(cycle) => Err(Error::Cyclic { cycle }),
    }
}

/// Two colors for the directed cycle `v1 -> ... -> vn -> v1`: color `v1` and
/// `vn` with 1, then `v2, ..., v(n-1)` alternately with 2 and 1.
pub fn directed_cycle_two_coloring(n: usize) -> Result<SequenceColoring> {
    if n < 3 {
        return Err(Error::Precondition(format!("directed cycle needs n >= 3, got {n}")));
    }
    let mut pairs = vec![(0, 1), (n - 1, 1)];
    pairs.extend((1..n - 1).map(|i| (i, if i % 2 == 1 { 2 } else { 1 })));
    SequenceColoring::new(pairs)
}

/// One color for an orientation of a cycle that is not a directed cycle.
///
/// Starting at a sink, walks around the cycle splitting it into maximal
/// directed paths and colors each path from its head back toward its tail.
/// A source shared by two paths waits until both of its heads are colored.
pub fn semicycle_one_coloring(d: &Digraph) -> Result<SequenceColoring> {
    let p = d.order();
    let g = d.underlying_graph();
    let is_cycle = p >= 3
        && g.edge_count() == p
        && (0..p).all(|v| g.degree(v) == 2)
        && connected(&g);
    if !is_cycle {
        return Err(Error::Precondition("underlying graph is not a cycle".into()));
    }
    if !d.symmetric_arcs().is_empty() {
        return Err(Error::Precondition("semi-cycle must not contain digons".into()));
    }
    let sink = (0..p)
        .find(|&v| d.out_degree(v) == 0)
        .ok_or_else(|| Error::Precondition("directed cycle has no sink".into()))?;

    // Walk order around the cycle from the sink.
    let mut walk = vec![sink];
    let mut prev = sink;
    let mut cur = g.neighbors(sink)[0];
    while cur != sink {
        walk.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }

    // Maximal runs of consistently oriented consecutive arcs.
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    let mut run = vec![walk[0]];
    let mut run_forward: Option<bool> = None;
    for i in 0..p {
        let (a, b) = (walk[i], walk[(i + 1) % p]);
        let forward = d.has_arc(a, b);
        if run_forward.is_some_and(|f| f != forward) {
            paths.push(std::mem::take(&mut run));
            run.push(a);
        }
        run_forward = Some(forward);
        run.push(b);
    }
    paths.push(run);

    let mut emitted = vec![false; p];
    let mut sequence = Vec::with_capacity(p);
    let mut pending: Vec<Vertex> = Vec::new();
    let ready = |v: Vertex, emitted: &[bool]| d.successors(v).iter().all(|&w| emitted[w]);
    for path in &paths {
        // Head end first: the path's arcs all point one way.
        let mut vertices = path.clone();
        if d.has_arc(vertices[0], vertices[1]) {
            vertices.reverse();
        }
        for v in vertices {
            if emitted[v] || pending.contains(&v) {
                continue;
            }
            if ready(v, &emitted) {
                emitted[v] = true;
                sequence.push((v, 1));
            } else {
                pending.push(v);
            }
        }
        flush(&mut pending, &mut emitted, &mut sequence, &ready);
    }
    flush(&mut pending, &mut emitted, &mut sequence, &ready);
    debug_assert_eq!(sequence.len(), p);
    SequenceColoring::new(sequence)
}

fn flush(
    pending: &mut Vec<Vertex>,
    emitted: &mut [bool],
    sequence: &mut Vec<(Vertex, u32)>,
    ready: &impl Fn(Vertex, &[bool]) -> bool,
) {
    loop {
        let Some(i) = pending.iter().position(|&v| ready(v, emitted)) else {
            return;
        };
        let v = pending.remove(i);
        emitted[v] = true;
        sequence.push((v, 1));
    }
}

fn connected(g: &crate::digraph::UndirectedGraph) -> bool {
    if g.order() == 0 {
        return true;
    }
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A one-color sequence of an acyclic digraph in which `u` is colored before
/// `v`, given that no directed path runs from `u` to `v`.
///
/// Heads precede tails; the descendants of `u` go first, then `u`, then the
/// rest, smallest index first among available vertices.
pub fn order_with_u_before_v(d: &Digraph, u: Vertex, v: Vertex) -> Result<SequenceColoring> {
    let p = d.order();
    for x in [u, v] {
        if x >= p {
            return Err(Error::UnknownVertex { vertex: x, p });
        }
    }
    if u == v {
        return Err(Error::Precondition("u and v must differ".into()));
    }
    if let Acyclicity::Cyclic(cycle) = d.is_acyclic() {
        return Err(Error::Cyclic { cycle });
    }
    if let Some(path) = d.directed_path_between(u, v) {
        return Err(Error::DirectedPath { from: u, to: v, path });
    }
    let mut first = d.descendants(u);
    first[u] = true;
    let mut waiting: Vec<usize> = (0..p).map(|x| d.out_degree(x)).collect();
    let key = |x: Vertex| (!first[x], x);
    let mut heap: BinaryHeap<Reverse<(bool, Vertex)>> = (0..p)
        .filter(|&x| waiting[x] == 0)
        .map(|x| Reverse(key(x)))
        .collect();
    let mut sequence = Vec::with_capacity(p);
    while let Some(Reverse((_, x))) = heap.pop() {
        sequence.push((x, 1));
        for &t in d.predecessors(x) {
            waiting[t] -= 1;
            if waiting[t] == 0 {
                heap.push(Reverse(key(t)));
            }
        }
    }
    SequenceColoring::new(sequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::validate_sequence_coloring;

    fn coloring(c: &[u32]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    fn fig2() -> Digraph {
        Digraph::new(3, [(1, 0), (0, 2), (1, 2), (2, 1)]).unwrap()
    }

    fn transitive_triangle() -> Digraph {
        Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn validity_by_monochromatic_cycles() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert_eq!(
            is_valid_coloring(&c3, &coloring(&[1, 1, 1])).unwrap(),
            ColoringVerdict::Invalid(vec![0, 1, 2])
        );
        assert!(is_valid_coloring(&c3, &coloring(&[1, 2, 1])).unwrap().is_valid());
        assert!(is_valid_coloring(&transitive_triangle(), &Coloring::constant(3)).unwrap().is_valid());
        assert!(is_valid_coloring(&c3, &coloring(&[1, 2])).is_err());
    }

    #[test]
    fn realizing_orders() {
        let order = realize_order(&transitive_triangle(), &Coloring::constant(3)).unwrap();
        assert_eq!(order.as_slice(), &[2, 1, 0]);
        let c3 = Digraph::directed_cycle(3).unwrap();
        let c = coloring(&[1, 2, 1]);
        let order = realize_order(&c3, &c).unwrap();
        let s = SequenceColoring::from_order(&order, &c);
        assert!(validate_sequence_coloring(&c3, &s).unwrap().valid);
        assert!(matches!(
            realize_order(&c3, &Coloring::constant(3)),
            Err(Error::MonochromaticCycle { .. })
        ));
    }

    #[test]
    fn monochromatic_sets() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(can_be_monochromatic(&c3, &[0, 2]));
        assert!(!can_be_monochromatic(&c3, &[0, 1, 2]));
        assert!(can_be_monochromatic(&Digraph::directed_path(5), &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn c_independence_numbers() {
        assert_eq!(beta_oc(&Digraph::directed_cycle(3).unwrap()).unwrap().0, 2);
        assert_eq!(beta_oc(&Digraph::directed_path(6)).unwrap(), (6, (0..6).collect()));
        let sym = crate::digraph::UndirectedGraph::complete(3).to_symmetric_digraph();
        assert_eq!(beta_oc(&sym).unwrap().0, 1);
    }

    #[test]
    fn dichromatic_numbers() {
        for n in 3..=8 {
            assert_eq!(chi_d_exact(&Digraph::directed_cycle(n).unwrap()).unwrap().0, 2);
        }
        assert_eq!(chi_d_exact(&Digraph::directed_path(7)).unwrap().0, 1);
        let (k, part) = chi_d_exact(&fig2()).unwrap();
        assert_eq!(k, 2);
        for class in part.classes() {
            assert!(can_be_monochromatic(&fig2(), class));
        }
        let sym = crate::digraph::UndirectedGraph::complete(4).to_symmetric_digraph();
        assert_eq!(chi_d_exact(&sym).unwrap().0, 4);
    }

    #[test]
    fn size_limit_skipped_for_acyclic() {
        let big = Digraph::directed_path(40);
        assert_eq!(chi_d_exact(&big).unwrap().0, 1);
        let big_cycle = Digraph::directed_cycle(21).unwrap();
        assert!(matches!(chi_d_exact(&big_cycle), Err(Error::SizeLimit { limit: 20, .. })));
        assert_eq!(chi_d_exact_with_limit(&big_cycle, 30).unwrap().0, 2);
    }

    #[test]
    fn oracle_agrees_on_small_cases() {
        assert_eq!(chi_d_ordering_oracle(&Digraph::directed_cycle(3).unwrap()).unwrap(), 2);
        assert_eq!(chi_d_ordering_oracle(&Digraph::empty(1)).unwrap(), 1);
    }

    #[test]
    fn constructive_colorings() {
        let s = acyclic_one_coloring(&Digraph::directed_path(3)).unwrap();
        assert_eq!(s.pairs(), &[(2, 1), (1, 1), (0, 1)]);
        assert_eq!(acyclic_one_coloring(&Digraph::empty(1)).unwrap().pairs(), &[(0, 1)]);
        assert!(matches!(
            acyclic_one_coloring(&Digraph::directed_cycle(3).unwrap()),
            Err(Error::Cyclic { .. })
        ));

        assert_eq!(directed_cycle_two_coloring(3).unwrap().pairs(), &[(0, 1), (2, 1), (1, 2)]);
        assert_eq!(
            directed_cycle_two_coloring(4).unwrap().pairs(),
            &[(0, 1), (3, 1), (1, 2), (2, 1)]
        );
        assert!(directed_cycle_two_coloring(2).is_err());
        for n in 3..=9 {
            let s = directed_cycle_two_coloring(n).unwrap();
            assert_eq!(s.num_colors(), 2);
            let c = Digraph::directed_cycle(n).unwrap();
            assert!(validate_sequence_coloring(&c, &s).unwrap().valid, "n = {n}");
        }
    }

    #[test]
    fn semicycles() {
        let s = semicycle_one_coloring(&transitive_triangle()).unwrap();
        assert!(validate_sequence_coloring(&transitive_triangle(), &s).unwrap().valid);
        // 4-cycle with one arc reversed.
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let s = semicycle_one_coloring(&d).unwrap();
        assert_eq!(s.num_colors(), 1);
        assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
        assert!(semicycle_one_coloring(&Digraph::directed_cycle(4).unwrap()).is_err());
        assert!(semicycle_one_coloring(&Digraph::directed_path(4)).is_err());
    }

    #[test]
    fn u_before_v() {
        let path = Digraph::directed_path(3);
        let s = order_with_u_before_v(&path, 2, 0).unwrap();
        assert_eq!(s.pairs(), &[(2, 1), (1, 1), (0, 1)]);
        let two = Digraph::empty(2);
        assert_eq!(order_with_u_before_v(&two, 0, 1).unwrap().pairs(), &[(0, 1), (1, 1)]);
        assert_eq!(order_with_u_before_v(&two, 1, 0).unwrap().pairs(), &[(1, 1), (0, 1)]);
        assert_eq!(
            order_with_u_before_v(&Digraph::directed_path(2), 0, 1),
            Err(Error::DirectedPath { from: 0, to: 1, path: vec![0, 1] })
        );
        assert!(order_with_u_before_v(&Digraph::directed_cycle(3).unwrap(), 0, 1).is_err());
    }
}
