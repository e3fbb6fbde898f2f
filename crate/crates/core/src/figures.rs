//! Fixed small instances with known coloring quantities, recomputed on
//! demand and compared against the expected values.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::bound_underlying;
use crate::coloring::{ColorClassPartition, Coloring, Labeling, SequenceColoring, VertexOrder};
use crate::dichromatic::{beta_oc, chi_d_exact, realize_order, semicycle_one_coloring};
use crate::digraph::{Digraph, UndirectedGraph, Vertex};
use crate::error::Result;
use crate::lmatrix::{acyclic_color_matrix_semantic, encode, LabeledDigraph};
use crate::partitions::{is_complete_partition, psi_sd};
use crate::seq::{prop9_construct, s_number_greedy, validate_sequence_coloring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureStatus {
    Match,
    Mismatch,
    /// Differs from a naive reading for a documented reason.
    Explained,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureEntry {
    pub figure: &'static str,
    pub quantity: &'static str,
    pub expected: Value,
    pub computed: Value,
    pub status: FigureStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiguresReport {
    pub entries: Vec<FigureEntry>,
    pub matches: usize,
    pub explained: usize,
    pub unexplained_mismatches: usize,
}

impl FiguresReport {
    pub fn entry(&self, figure: &str, quantity: &str) -> Option<&FigureEntry> {
        self.entries
            .iter()
            .find(|e| e.figure == figure && e.quantity == quantity)
    }
}

pub const ORIENTATION_NOTE: &str = "the second arc of the 3-cycle is v2 -> v3; with v3 -> v2 the printed sequence would repeat colour 2 along a forward arc";
pub const LITERAL_SEMANTIC_NOTE: &str = "the entry-wise conditions accept the mono-labeled directed 3-cycle, which is not acyclic";

/// Transitive triangle `v1 -> v2, v1 -> v3, v2 -> v3`.
pub fn transitive_triangle() -> Digraph {
    Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).expect("fixture")
}

pub fn three_cycle() -> Digraph {
    Digraph::directed_cycle(3).expect("fixture")
}

/// A triangle with one digon.
pub fn figure2() -> Digraph {
    Digraph::new(3, [(1, 0), (0, 2), (1, 2), (2, 1)]).expect("fixture")
}

/// The tree of Figures 4(a) and 5.
pub fn tree() -> UndirectedGraph {
    UndirectedGraph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).expect("fixture")
}

pub fn figure4b() -> UndirectedGraph {
    UndirectedGraph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
        .expect("fixture")
}

pub fn figure7() -> Digraph {
    Digraph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (4, 3)]).expect("fixture")
}

pub fn figure7_partition() -> ColorClassPartition {
    ColorClassPartition::new(5, vec![vec![0], vec![1, 4], vec![2], vec![3]]).expect("fixture")
}

pub fn figure8() -> LabeledDigraph {
    LabeledDigraph::new(three_cycle(), Labeling(vec![1, 2, 1])).expect("fixture")
}

pub const FIGURE8_MATRIX: [[i8; 3]; 3] = [[0, 1, -1], [0, 0, 1], [2, 0, 0]];

fn seq(pairs: &[(Vertex, u32)]) -> SequenceColoring {
    SequenceColoring::new(pairs.to_vec()).expect("fixture")
}

fn order(p: usize, v: &[Vertex]) -> VertexOrder {
    VertexOrder::new(p, v.to_vec()).expect("fixture")
}

fn colors_along(s: &SequenceColoring) -> Vec<u32> {
    s.pairs().iter().map(|&(_, c)| c).collect()
}

struct Suite(Vec<FigureEntry>);

impl Suite {
    fn check(&mut self, figure: &'static str, quantity: &'static str, expected: Value, computed: Value) {
        let status = if expected == computed { FigureStatus::Match } else { FigureStatus::Mismatch };
        self.0.push(FigureEntry { figure, quantity, expected, computed, status, note: None });
    }

    fn explained(
        &mut self,
        figure: &'static str,
        quantity: &'static str,
        expected: Value,
        computed: Value,
        note: &'static str,
    ) {
        let status = if expected == computed { FigureStatus::Explained } else { FigureStatus::Mismatch };
        self.0.push(FigureEntry {
            figure,
            quantity,
            expected,
            computed,
            status,
            note: Some(note),
        });
    }
}

fn valid(d: &Digraph, s: &SequenceColoring) -> Result<Value> {
    Ok(json!(validate_sequence_coloring(d, s)?.valid))
}

fn greedy(g: &UndirectedGraph, o: &[Vertex]) -> Result<(usize, Vec<u32>)> {
    let (k, s) = s_number_greedy(&g.to_symmetric_digraph(), &order(g.order(), o))?;
    Ok((k, colors_along(&s)))
}

/// Rebuilds every fixture and recomputes its printed quantities.
pub fn run_figures_suite() -> Result<FiguresReport> {
    let mut suite = Suite(Vec::new());

    let tri = transitive_triangle();
    suite.check("1a", "chi_d", json!(1), json!(chi_d_exact(&tri)?.0));
    suite.check("1a", "sequence valid", json!(true), valid(&tri, &seq(&[(0, 1), (1, 2), (2, 3)]))?);
    let c3 = three_cycle();
    suite.check("1b", "chi_d", json!(2), json!(chi_d_exact(&c3)?.0));
    suite.explained(
        "1b",
        "sequence valid",
        json!(true),
        valid(&c3, &seq(&[(0, 1), (2, 2), (1, 2)]))?,
        ORIENTATION_NOTE,
    );
    suite.check("1c", "sequence valid", json!(true), valid(&tri, &seq(&[(2, 1), (1, 1), (0, 1)]))?);
    let realized = realize_order(&tri, &Coloring::constant(3))?;
    suite.check("1c", "realizing order", json!([2, 1, 0]), json!(realized.as_slice()));
    let sweep = semicycle_one_coloring(&tri)?;
    suite.check("1c", "semi-cycle sweep valid", json!(true), valid(&tri, &sweep)?);

    let f2 = figure2();
    suite.check("2", "chi_d", json!(2), json!(chi_d_exact(&f2)?.0));
    suite.check("2", "delta_in", json!(2), json!(f2.delta_in()));
    suite.check("2", "p - delta_in", json!(1), json!(f2.order() as i64 - f2.delta_in() as i64));
    suite.check("2", "sequence valid", json!(true), valid(&f2, &seq(&[(2, 1), (1, 2), (0, 1)]))?);

    suite.check("3", "chi_d", json!(2), json!(chi_d_exact(&c3)?.0));
    suite.check("3", "beta_oc", json!(2), json!(beta_oc(&c3)?.0));
    suite.check("3", "sequence valid", json!(true), valid(&c3, &seq(&[(0, 1), (2, 1), (1, 2)]))?);
    suite.check("3", "chi(G)", json!(3), json!(bound_underlying(&c3)?));

    let t = tree();
    let (k, colors) = greedy(&t, &[0, 2, 4, 5, 1, 3])?;
    suite.check("4a", "greedy s-number", json!(3), json!(k));
    suite.check("4a", "colours along order", json!([1, 1, 1, 1, 2, 3]), json!(colors));
    let (k, colors) = greedy(&figure4b(), &[0, 1, 4, 2, 3])?;
    suite.check("4b", "greedy s-number", json!(4), json!(k));
    suite.check("4b", "colours along order", json!([1, 2, 2, 3, 4]), json!(colors));
    suite.check("5a", "greedy s-number", json!(2), json!(greedy(&t, &[0, 1, 2, 3, 4, 5])?.0));
    suite.check("5b", "greedy s-number", json!(3), json!(greedy(&t, &[0, 2, 4, 5, 1, 3])?.0));

    let mut counts = Vec::new();
    let mut staged = true;
    for n in 2..=4 {
        let (d, o) = prop9_construct(n)?;
        let (k, s) = s_number_greedy(&d, &o)?;
        counts.push(k);
        staged &= s.pairs().iter().all(|&(v, c)| c as usize == v + 1);
    }
    suite.check("6", "greedy s-numbers of D1, D2, D3", json!([2, 3, 4]), json!(counts));
    suite.check("6", "v_i receives colour i", json!(true), json!(staged));

    let f7 = figure7();
    suite.check("7", "psi_sd", json!(4), json!(psi_sd(&f7)?.0));
    suite.check(
        "7",
        "partition complete",
        json!(true),
        json!(is_complete_partition(&f7, &figure7_partition())?),
    );
    let (k, s) = s_number_greedy(&f7, &order(5, &[0, 1, 4, 2, 3]))?;
    suite.check("7", "greedy s-number", json!(4), json!(k));
    suite.check("7", "colours along order", json!([1, 2, 2, 3, 4]), json!(colors_along(&s)));

    let m = encode(&figure8());
    suite.check("8", "L-matrix", json!(FIGURE8_MATRIX), json!(m.rows()));
    let mono = encode(&LabeledDigraph::unlabeled(c3.clone()));
    let verdict = acyclic_color_matrix_semantic(&mono)?;
    suite.explained(
        "8",
        "acyclic matrix test on mono-labeled 3-cycle (literal, semantic)",
        json!([true, false]),
        json!([verdict.literal, verdict.semantic]),
        LITERAL_SEMANTIC_NOTE,
    );

    let entries = suite.0;
    let count = |s: FigureStatus| entries.iter().filter(|e| e.status == s).count();
    Ok(FiguresReport {
        matches: count(FigureStatus::Match),
        explained: count(FigureStatus::Explained),
        unexplained_mismatches: count(FigureStatus::Mismatch),
        entries,
    })
}
