//! Digraphs, undirected graphs and the structural queries every solver relies on.
//!
//! Vertices are dense indices `0..p`. File formats and reports use 1-based
//! `v1, v2, ...` names; the conversion happens at the IO boundary.

use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;

use serde::Serialize;

use crate::error::{Error, Result};

/// A dense vertex index in `0..p`.
pub type Vertex = usize;

/// Formats a vertex the way reports and files name it (`v1` for index 0).
pub fn vertex_name(v: Vertex) -> String {
    format!("v{}", v + 1)
}

/// Serde helpers writing vertices by name, for reports.
pub mod names {
    use serde::ser::{SerializeSeq, Serializer};

    use super::{vertex_name, Vertex};

    pub fn list<S: Serializer>(vs: &[Vertex], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(vs.len()))?;
        for &v in vs {
            seq.serialize_element(&vertex_name(v))?;
        }
        seq.end()
    }

    pub fn option_list<S: Serializer>(vs: &Option<Vec<Vertex>>, s: S) -> Result<S::Ok, S::Error> {
        match vs {
            Some(vs) => list(vs, s),
            None => s.serialize_none(),
        }
    }

    pub fn pair<S: Serializer>(&(a, b): &(Vertex, Vertex), s: S) -> Result<S::Ok, S::Error> {
        list(&[a, b], s)
    }

    pub fn triple<S: Serializer>(&(a, b, c): &(Vertex, Vertex, Vertex), s: S) -> Result<S::Ok, S::Error> {
        list(&[a, b, c], s)
    }

    /// A 0-based position written 1-based.
    pub fn position<S: Serializer>(i: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*i as u64 + 1)
    }
}

/// Something with a vertex count and a symmetric adjacency test.
///
/// For a digraph two vertices are adjacent when an arc joins them in either
/// direction, which is the notion complete partitions use.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn adjacent(&self, u: Vertex, v: Vertex) -> bool;
}

/// A finite digraph without loops or parallel arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    p: usize,
    succ: Vec<Vec<Vertex>>,
    pred: Vec<Vec<Vertex>>,
}

impl Digraph {
    /// Builds a digraph on `p` vertices. Duplicate arcs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(p: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (tail, head) in arcs {
            if tail >= p || head >= p {
                return Err(Error::VertexOutOfRange { tail, head, p });
            }
            if tail == head {
                return Err(Error::SelfLoop(tail));
            }
            set.insert((tail, head));
        }
        let mut succ = vec![Vec::new(); p];
        let mut pred = vec![Vec::new(); p];
        for (t, h) in set {
            succ[t].push(h);
            pred[h].push(t);
        }
        for list in &mut pred {
            list.sort_unstable();
        }
        Ok(Digraph { p, succ, pred })
    }

    pub fn empty(p: usize) -> Self {
        Digraph {
            p,
            succ: vec![Vec::new(); p],
            pred: vec![Vec::new(); p],
        }
    }

    /// The directed cycle `v1 -> v2 -> ... -> vn -> v1`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "a directed cycle needs at least 2 vertices, got {n}"
            )));
        }
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The directed path `v1 -> v2 -> ... -> vn`.
    pub fn directed_path(n: usize) -> Self {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path arcs are in range")
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)))
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        tail < self.p && self.succ[tail].binary_search(&head).is_ok()
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred[v]
    }

    /// Number of arcs with `v` as head.
    pub fn in_degree(&self, v: Vertex) -> usize {
        self.pred[v].len()
    }

    /// Number of arcs with `v` as tail.
    pub fn out_degree(&self, v: Vertex) -> usize {
        self.succ[v].len()
    }

    pub fn delta_in(&self) -> usize {
        (0..self.p).map(|v| self.in_degree(v)).max().unwrap_or(0)
    }

    pub fn delta_od(&self) -> usize {
        (0..self.p).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    /// Unordered pairs `(u, v)`, `u < v`, joined by arcs in both directions.
    pub fn symmetric_arcs(&self) -> Vec<(Vertex, Vertex)> {
        self.arcs()
            .filter(|&(t, h)| t < h && self.has_arc(h, t))
            .collect()
    }

    /// True when every arc has its reverse.
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(t, h)| self.has_arc(h, t))
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.p, self.arcs()).expect("arcs are valid edges")
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            p: self.p,
            succ: self.pred.clone(),
            pred: self.succ.clone(),
        }
    }

    /// Decides acyclicity. The witness is a topological order (smallest
    /// available index first) or a directed cycle starting at its smallest
    /// vertex.
    pub fn is_acyclic(&self) -> Acyclicity {
        let mut indeg: Vec<usize> = (0..self.p).map(|v| self.in_degree(v)).collect();
        let mut heap: BinaryHeap<Reverse<Vertex>> = (0..self.p)
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.p);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &self.succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() == self.p {
            return Acyclicity::Acyclic(order);
        }
        // Every leftover vertex keeps a leftover predecessor, so walking
        // predecessors must revisit a vertex.
        let alive: Vec<bool> = indeg.iter().map(|&d| d > 0).collect();
        let start = (0..self.p).find(|&v| alive[v]).expect("leftover vertex");
        let mut seen_at = vec![usize::MAX; self.p];
        let mut walk = Vec::new();
        let mut v = start;
        while seen_at[v] == usize::MAX {
            seen_at[v] = walk.len();
            walk.push(v);
            v = *self.pred[v]
                .iter()
                .find(|&&u| alive[u])
                .expect("leftover vertex has a leftover predecessor");
        }
        let mut cycle: Vec<Vertex> = walk[seen_at[v]..].to_vec();
        cycle.reverse();
        Acyclicity::Cyclic(rotate_to_min(cycle))
    }

    /// Subdigraph induced by `set`, re-indexed densely in the order given.
    /// Returns the new digraph and the map from new to original ids.
    pub fn induced_subdigraph(&self, set: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let mut back: Vec<Vertex> = set.to_vec();
        back.sort_unstable();
        back.dedup();
        let mut index = vec![usize::MAX; self.p];
        for (i, &v) in back.iter().enumerate() {
            index[v] = i;
        }
        let arcs = back.iter().flat_map(|&t| {
            self.succ[t]
                .iter()
                .filter(|&&h| index[h] != usize::MAX)
                .map(|&h| (index[t], index[h]))
                .collect::<Vec<_>>()
        });
        let sub = Digraph::new(back.len(), arcs).expect("induced arcs are valid");
        (sub, back)
    }

    /// No arc joins two members of `set`.
    pub fn is_independent_set(&self, set: &[Vertex]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| u == v || !self.has_arc(u, v)))
    }

    /// A shortest directed path from `from` to `to`, if any.
    pub fn directed_path_between(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let mut parent = vec![usize::MAX; self.p];
        let mut queue = VecDeque::from([from]);
        parent[from] = from;
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.succ[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertices reachable from `v` by a non-empty directed path.
    pub fn descendants(&self, v: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.p];
        let mut stack: Vec<Vertex> = self.succ[v].clone();
        while let Some(u) = stack.pop() {
            if !seen[u] {
                seen[u] = true;
                stack.extend(self.succ[u].iter().copied().filter(|&w| !seen[w]));
            }
        }
        seen
    }
}

impl Adjacency for Digraph {
    fn order(&self) -> usize {
        self.p
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }
}

/// Outcome of [`Digraph::is_acyclic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Acyclicity {
    /// A topological order: every arc tail precedes its head.
    Acyclic(#[serde(serialize_with = "names::list")] Vec<Vertex>),
    /// A directed cycle `c0 -> c1 -> ... -> c0`.
    Cyclic(#[serde(serialize_with = "names::list")] Vec<Vertex>),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic(_))
    }
}

pub(crate) fn rotate_to_min(mut cycle: Vec<Vertex>) -> Vec<Vertex> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    p: usize,
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    /// Builds a graph; `{u, v}` and `{v, u}` are the same edge.
    pub fn new<I>(p: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= p || v >= p {
                return Err(Error::VertexOutOfRange { tail: u, head: v, p });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); p];
        for (u, v) in set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(UndirectedGraph { p, adj })
    }

    pub fn edgeless(p: usize) -> Self {
        UndirectedGraph {
            p,
            adj: vec![Vec::new(); p],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        UndirectedGraph::new(n, edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        UndirectedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        UndirectedGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.p && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Each edge becomes a digon.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph::new(self.p, self.edges().flat_map(|(u, v)| [(u, v), (v, u)]))
            .expect("valid")
    }

    pub fn is_independent_set(&self, set: &[Vertex]) -> bool {
        set.iter()
            .all(|&u| set.iter().all(|&v| !self.has_edge(u, v)))
    }
}

impl Adjacency for UndirectedGraph {
    fn order(&self) -> usize {
        self.p
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }
}

/// Bitset view of a digraph for the exhaustive solvers (at most 64 vertices).
#[derive(Debug, Clone)]
pub(crate) struct BitDigraph {
    pub succ: Vec<u64>,
    pub pred: Vec<u64>,
}

pub(crate) const BITSET_MAX: usize = 64;

impl BitDigraph {
    pub fn new(d: &Digraph) -> Self {
        assert!(d.order() <= BITSET_MAX);
        let mut succ = vec![0u64; d.order()];
        let mut pred = vec![0u64; d.order()];
        for (t, h) in d.arcs() {
            succ[t] |= 1 << h;
            pred[h] |= 1 << t;
        }
        BitDigraph { succ, pred }
    }

    pub fn order(&self) -> usize {
        self.succ.len()
    }

    /// Whether adding `v` to the acyclic set `set` closes a directed cycle.
    pub fn closes_cycle(&self, set: u64, v: Vertex) -> bool {
        let mut reach = self.succ[v] & set;
        let mut frontier = reach;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.succ[u] & set & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        reach & self.pred[v] != 0
    }

    /// Whether the subdigraph induced by `set` is acyclic.
    pub fn is_acyclic_set(&self, set: u64) -> bool {
        let mut alive = set;
        loop {
            let mut removed = false;
            let mut scan = alive;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if self.pred[v] & alive == 0 {
                    alive &= !(1 << v);
                    removed = true;
                }
            }
            if alive == 0 {
                return true;
            }
            if !removed {
                return false;
            }
        }
    }
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
