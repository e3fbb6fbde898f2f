//! Colorings, color-class partitions, vertex orders and sequence colorings.

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::digraph::{mask_to_vec, names, vertex_name, Vertex};
use crate::error::{Error, Result};

/// A total vertex -> color map with positive colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0) {
            return Err(Error::BadColor { vertex, color });
        }
        Ok(Coloring(colors))
    }

    pub fn constant(p: usize) -> Self {
        Coloring(vec![1; p])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of distinct colors.
    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.0.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renumbers colors `1..=k` by first occurrence along vertex index order.
    pub fn normalized(&self) -> Coloring {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let colors = self
            .0
            .iter()
            .map(|&c| match map.iter().find(|(old, _)| *old == c) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as u32 + 1;
                    map.push((c, new));
                    new
                }
            })
            .collect();
        Coloring(colors)
    }

    pub fn classes(&self) -> ColorClassPartition {
        let norm = self.normalized();
        let k = norm.num_colors();
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in norm.0.iter().enumerate() {
            classes[c as usize - 1].push(v);
        }
        ColorClassPartition { classes }
    }
}

/// A vertex labeling; labels need not be distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Labeling(pub Vec<u32>);

impl Labeling {
    pub fn uniform(p: usize, label: u32) -> Self {
        Labeling(vec![label; p])
    }

    pub fn label(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Labels renumbered `1..=k` by smallest member of each label class.
    pub fn canonical(&self) -> Labeling {
        let mut map: Vec<(u32, u32)> = Vec::new();
        Labeling(
            self.0
                .iter()
                .map(|&l| match map.iter().find(|(old, _)| *old == l) {
                    Some(&(_, new)) => new,
                    None => {
                        let new = map.len() as u32 + 1;
                        map.push((l, new));
                        new
                    }
                })
                .collect(),
        )
    }
}

/// Disjoint, covering, non-empty vertex classes.
///
/// The normalized form sorts each class and orders classes by their smallest
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorClassPartition {
    classes: Vec<Vec<Vertex>>,
}

impl ColorClassPartition {
    pub fn new(p: usize, classes: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut owner = vec![false; p];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::MalformedPartition("empty class".into()));
            }
            for &v in class {
                if v >= p {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} outside 0..{p}"
                    )));
                }
                if owner[v] {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                owner[v] = true;
            }
        }
        if let Some(v) = owner.iter().position(|&o| !o) {
            return Err(Error::MalformedPartition(format!("vertex {v} not covered")));
        }
        Ok(ColorClassPartition { classes }.normalized())
    }

    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        ColorClassPartition {
            classes: masks.iter().map(|&m| mask_to_vec(m)).collect(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        for class in &mut self.classes {
            class.sort_unstable();
        }
        self.classes.sort_by_key(|c| c[0]);
        self
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// The coloring giving class `i` color `i + 1`.
    pub fn to_coloring(&self) -> Coloring {
        let mut colors = vec![0; self.order()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colors[v] = i as u32 + 1;
            }
        }
        Coloring(colors)
    }
}

/// A permutation of the vertices; position 0 is colored first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrder(Vec<Vertex>);

impl VertexOrder {
    pub fn new(p: usize, order: Vec<Vertex>) -> Result<Self> {
        if !is_permutation(p, &order) {
            return Err(Error::NotPermutation { p });
        }
        Ok(VertexOrder(order))
    }

    pub fn natural(p: usize) -> Self {
        VertexOrder((0..p).collect())
    }

    pub(crate) fn from_vec_unchecked(order: Vec<Vertex>) -> Self {
        VertexOrder(order)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `position[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub(crate) fn is_permutation(p: usize, order: &[Vertex]) -> bool {
    if order.len() != p {
        return false;
    }
    let mut seen = vec![false; p];
    for &v in order {
        if v >= p || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// An ordered list of `(vertex, color)` pairs: the vertices in the order
/// they are colored together with the color each receives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceColoring(Vec<(Vertex, u32)>);

impl SequenceColoring {
    /// Colors must be positive. Covering the vertex set is checked against a
    /// digraph by the validator.
    pub fn new(pairs: Vec<(Vertex, u32)>) -> Result<Self> {
        if let Some(&(vertex, color)) = pairs.iter().find(|(_, c)| *c == 0) {
            return Err(Error::BadColor { vertex, color });
        }
        Ok(SequenceColoring(pairs))
    }

    /// Pairs `order[i]` with `coloring(order[i])`.
    pub fn from_order(order: &VertexOrder, coloring: &Coloring) -> Self {
        SequenceColoring(
            order
                .as_slice()
                .iter()
                .map(|&v| (v, coloring.color(v)))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(Vertex, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.0.iter().map(|&(v, _)| v).collect()
    }

    pub fn num_colors(&self) -> usize {
        let mut cs: Vec<u32> = self.0.iter().map(|&(_, c)| c).collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// The vertex -> color map, when the sequence covers `0..p` exactly.
    pub fn coloring(&self, p: usize) -> Result<Coloring> {
        if !is_permutation(p, &self.vertices()) {
            return Err(Error::NotPermutation { p });
        }
        let mut colors = vec![0; p];
        for &(v, c) in &self.0 {
            colors[v] = c;
        }
        Ok(Coloring(colors))
    }
}

// Reports name vertices `v1, v2, ...`.

impl Serialize for ColorClassPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Class<'a>(&'a [Vertex]);
        impl Serialize for Class<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                names::list(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(self.classes.len()))?;
        for class in &self.classes {
            seq.serialize_element(&Class(class))?;
        }
        seq.end()
    }
}

impl Serialize for VertexOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        names::list(&self.0, s)
    }
}

impl Serialize for SequenceColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for &(v, c) in &self.0 {
            seq.serialize_element(&(vertex_name(v), c))?;
        }
        seq.end()
    }
}
