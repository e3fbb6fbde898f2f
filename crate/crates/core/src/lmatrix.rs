//! L-matrices of vertex-labeled digraphs.
//!
//! Entry `(i, j)` records whether `i -> j` is an arc and whether `i` and `j`
//! share a label:
//!
//! | arc | same label | entry |
//! |-----|------------|-------|
//! | yes | yes        | 2     |
//! | yes | no         | 1     |
//! | no  | yes        | -1    |
//! | no  | no         | 0     |

use std::fmt;

use serde::Serialize;

use crate::coloring::Labeling;
use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

pub const ARC_SAME: i8 = 2;
pub const ARC_DIFFERENT: i8 = 1;
pub const NONE_DIFFERENT: i8 = 0;
pub const NONE_SAME: i8 = -1;

/// A square matrix over `{2, 1, 0, -1}` with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LMatrix {
    p: usize,
    entries: Vec<i8>,
}

impl LMatrix {
    pub fn new(p: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != p * p {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for order {p}, got {}",
                p * p,
                entries.len()
            )));
        }
        for i in 0..p {
            for j in 0..p {
                let a = entries[i * p + j];
                if !matches!(a, -1..=2) {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) = {a} is not one of 2, 1, 0, -1",
                        i + 1,
                        j + 1
                    )));
                }
                if i == j && a != 0 {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry ({}, {}) = {a} must be 0",
                        i + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(LMatrix { p, entries })
    }

    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let p = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != p) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {p}",
                i + 1,
                r.len()
            )));
        }
        LMatrix::new(p, rows.into_iter().flatten().collect())
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn get(&self, i: Vertex, j: Vertex) -> i8 {
        self.entries[i * self.p + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.p.max(1)).map(<[i8]>::to_vec).take(self.p).collect()
    }

    fn is_arc(&self, i: Vertex, j: Vertex) -> bool {
        matches!(self.get(i, j), ARC_SAME | ARC_DIFFERENT)
    }

    /// Same-label reading of an entry; the diagonal counts as same.
    fn same_label(&self, i: Vertex, j: Vertex) -> bool {
        i == j || matches!(self.get(i, j), ARC_SAME | NONE_SAME)
    }
}

impl Serialize for LMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl fmt::Display for LMatrix {
    /// Right-aligned table, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// A digraph with one label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDigraph {
    pub digraph: Digraph,
    pub labeling: Labeling,
}

impl LabeledDigraph {
    pub fn new(digraph: Digraph, labeling: Labeling) -> Result<Self> {
        if labeling.len() != digraph.order() {
            return Err(Error::LengthMismatch { expected: digraph.order(), got: labeling.len() });
        }
        Ok(LabeledDigraph { digraph, labeling })
    }

    /// Every vertex labeled 0.
    pub fn unlabeled(digraph: Digraph) -> Self {
        let labeling = Labeling::uniform(digraph.order(), 0);
        LabeledDigraph { digraph, labeling }
    }

    pub fn order(&self) -> usize {
        self.digraph.order()
    }

    /// Same digraph with labels renumbered by smallest class member.
    pub fn canonical(&self) -> LabeledDigraph {
        LabeledDigraph { digraph: self.digraph.clone(), labeling: self.labeling.canonical() }
    }
}

pub fn encode(ld: &LabeledDigraph) -> LMatrix {
    let p = ld.order();
    let mut entries = vec![0i8; p * p];
    for i in 0..p {
        for j in 0..p {
            if i == j {
                continue;
            }
            let same = ld.labeling.label(i) == ld.labeling.label(j);
            entries[i * p + j] = match (ld.digraph.has_arc(i, j), same) {
                (true, true) => ARC_SAME,
                (true, false) => ARC_DIFFERENT,
                (false, true) => NONE_SAME,
                (false, false) => NONE_DIFFERENT,
            };
        }
    }
    LMatrix { p, entries }
}

/// Which of the two triple conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// Same-label is transitive.
    #[serde(rename = "i")]
    Transitive,
    /// Same label followed by different label gives different label.
    #[serde(rename = "ii")]
    Separating,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Transitive => "i",
            Condition::Separating => "ii",
        })
    }
}

/// A failed condition at the 0-based triple `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TripleViolation {
    pub condition: Condition,
    #[serde(serialize_with = "crate::digraph::names::triple")]
    pub triple: (Vertex, Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixVerdict {
    pub valid: bool,
    pub violations: Vec<TripleViolation>,
}

/// Checks the triple conditions over every `(i, j, k)` with `i != j` and
/// `j != k`:
///
/// 1. `a_ij, a_jk` in `{2, -1}` implies `a_ik` in `{2, -1}`;
/// 2. `a_ij` in `{2, -1}` and `a_jk` in `{0, 1}` implies `a_ik` in `{0, 1}`.
///
/// `k = i` is included with the diagonal read as "same label", so an
/// asymmetric same-label relation is caught by condition 2. Violations are
/// listed in lexicographic triple order, condition 1 first on ties.
pub fn validate(m: &LMatrix) -> MatrixVerdict {
    let p = m.order();
    let mut violations = Vec::new();
    for i in 0..p {
        for j in (0..p).filter(|&j| j != i) {
            if !m.same_label(i, j) {
                continue;
            }
            for k in (0..p).filter(|&k| k != j) {
                let condition = if m.same_label(j, k) {
                    (!m.same_label(i, k)).then_some(Condition::Transitive)
                } else {
                    m.same_label(i, k).then_some(Condition::Separating)
                };
                if let Some(condition) = condition {
                    violations.push(TripleViolation { condition, triple: (i, j, k) });
                }
            }
        }
    }
    MatrixVerdict { valid: violations.is_empty(), violations }
}

/// Reads arcs and label classes back out of a valid matrix. Labels are
/// `1..=k`, numbered by smallest class member.
pub fn decode(m: &LMatrix) -> Result<LabeledDigraph> {
    let verdict = validate(m);
    if let Some(v) = verdict.violations.first() {
        let (i, j, k) = v.triple;
        return Err(Error::InvalidMatrix(format!(
            "condition ({}) fails at ({}, {}, {}); {} violation(s) in total",
            v.condition,
            i + 1,
            j + 1,
            k + 1,
            verdict.violations.len()
        )));
    }
    let p = m.order();
    let arcs = (0..p).flat_map(|i| (0..p).filter(move |&j| m.is_arc(i, j)).map(move |j| (i, j)));
    let digraph = Digraph::new(p, arcs)?;
    let mut labels = vec![0u32; p];
    let mut next = 0;
    for i in 0..p {
        if labels[i] == 0 {
            next += 1;
            for (j, label) in labels.iter_mut().enumerate().skip(i) {
                if m.same_label(i, j) {
                    debug_assert_eq!(*label, 0, "valid matrices have a partition");
                    *label = next;
                }
            }
        }
    }
    LabeledDigraph::new(digraph, Labeling(labels))
}

/// The label class of vertex `i`.
pub fn color_class_of(m: &LMatrix, i: Vertex) -> Result<Vec<Vertex>> {
    if i >= m.order() {
        return Err(Error::UnknownVertex { vertex: i, p: m.order() });
    }
    let verdict = validate(m);
    if !verdict.valid {
        return Err(Error::InvalidMatrix(format!(
            "{} triple violation(s)",
            verdict.violations.len()
        )));
    }
    Ok((0..m.order()).filter(|&j| m.same_label(i, j)).collect())
}

/// The two entry-wise conditions as written: every off-diagonal entry is
/// 2 or -1, and `a_ij = 2` exactly when `a_ji = -1`.
pub fn acyclic_color_matrix_literal(m: &LMatrix) -> bool {
    let p = m.order();
    (0..p).all(|i| {
        (0..p).filter(|&j| j != i).all(|j| {
            matches!(m.get(i, j), ARC_SAME | NONE_SAME)
                && ((m.get(i, j) == ARC_SAME) == (m.get(j, i) == NONE_SAME))
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AcyclicMatrixVerdict {
    pub literal: bool,
    /// The decoded digraph is acyclic and carries a single label.
    pub semantic: bool,
    pub discrepancy: bool,
}

pub fn acyclic_color_matrix_semantic(m: &LMatrix) -> Result<AcyclicMatrixVerdict> {
    let ld = decode(m)?;
    let one_label = ld.labeling.0.windows(2).all(|w| w[0] == w[1]);
    let semantic = one_label && ld.digraph.is_acyclic().is_acyclic();
    let literal = acyclic_color_matrix_literal(m);
    Ok(AcyclicMatrixVerdict { literal, semantic, discrepancy: literal != semantic })
}
