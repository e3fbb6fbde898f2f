//! Exhaustive enumeration of small instances, orders and set partitions.

use crate::digraph::{Digraph, UndirectedGraph, Vertex};

/// Ordered pairs `(u, v)`, `u != v`, in lexicographic order.
pub fn ordered_pairs(p: usize) -> Vec<(Vertex, Vertex)> {
    (0..p)
        .flat_map(|u| (0..p).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// The digraph whose arc set is selected by the bits of `mask` over
/// [`ordered_pairs`]. Pairs past bit 63 are never selected.
pub fn digraph_from_mask(p: usize, mask: u64) -> Digraph {
    let pairs = ordered_pairs(p);
    Digraph::new(
        p,
        pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask.checked_shr(i as u32).is_some_and(|m| m & 1 == 1))
            .map(|(_, &a)| a),
    )
    .expect("pairs are valid arcs")
}

/// All `2^(p(p-1))` labeled digraphs on `p` vertices (`p <= 5`).
pub fn all_digraphs(p: usize) -> impl Iterator<Item = Digraph> {
    assert!(p <= 5, "2^(p(p-1)) digraphs is too many beyond p = 5");
    let bits = p * p.saturating_sub(1);
    (0..1u64 << bits).map(move |m| digraph_from_mask(p, m))
}

/// All `2^(p(p-1)/2)` labeled graphs on `p` vertices (`p <= 8`).
pub fn all_graphs(p: usize) -> impl Iterator<Item = UndirectedGraph> {
    assert!(p <= 8);
    let pairs: Vec<(Vertex, Vertex)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |m| {
        UndirectedGraph::new(
            p,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("valid")
    })
}

/// Advances `perm` to the next permutation in lexicographic order.
/// Returns false after the last one.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Calls `visit` on every permutation of `0..p` in lexicographic order until it
/// returns false.
pub fn for_each_permutation(p: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..p).collect();
    loop {
        if !visit(&perm) {
            return;
        }
        if !next_permutation(&mut perm) {
            return;
        }
    }
}

/// Enumerates set partitions of `0..p` as class bitmasks in restricted-growth
/// order: vertex `v` joins an existing class or opens the next one.
/// `admit(class_mask, v)` prunes placements; `visit` sees each full partition.
pub fn for_each_partition(
    p: usize,
    admit: &mut impl FnMut(u64, Vertex) -> bool,
    visit: &mut impl FnMut(&[u64]),
) {
    assert!(p <= 64);
    let mut classes: Vec<u64> = Vec::with_capacity(p);
    place(0, p, &mut classes, admit, visit);
}

fn place(
    v: Vertex,
    p: usize,
    classes: &mut Vec<u64>,
    admit: &mut impl FnMut(u64, Vertex) -> bool,
    visit: &mut impl FnMut(&[u64]),
) {
    if v == p {
        visit(classes);
        return;
    }
    for i in 0..classes.len() {
        if admit(classes[i], v) {
            classes[i] |= 1 << v;
            place(v + 1, p, classes, admit, visit);
            classes[i] &= !(1 << v);
        }
    }
    if admit(0, v) {
        classes.push(1 << v);
        place(v + 1, p, classes, admit, visit);
        classes.pop();
    }
}
