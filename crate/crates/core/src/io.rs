//! Text formats: the edge list, matrix CSV, colour files and DOT export.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! p 3
//! a 1 2
//! a 2 3
//! l 1 7
//! ```
//!
//! Vertex names are 1-based in every format; `v3` and `3` both name index 2.

use std::fmt::Write as _;

use crate::coloring::{Coloring, Labeling, VertexOrder};
use crate::digraph::{vertex_name, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::lmatrix::{LMatrix, LabeledDigraph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Lines with comments stripped, numbered from 1, blank lines skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Parses `v3` or `3` into index 2, checking it against `p`.
pub fn parse_vertex_name(token: &str, p: usize) -> std::result::Result<Vertex, String> {
    let digits = token.strip_prefix('v').unwrap_or(token);
    let n: usize = digits
        .parse()
        .map_err(|_| format!("`{token}` is not a vertex name"))?;
    if n == 0 || n > p {
        return Err(format!("vertex `{token}` is outside 1..={p}"));
    }
    Ok(n - 1)
}

pub fn parse_edge_list(text: &str) -> Result<LabeledDigraph> {
    let mut p: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut labels: Vec<Option<u32>> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (fields[0], p) {
            ("p", None) => {
                let [_, n] = fields[..] else {
                    return Err(parse_err(line_no, "expected `p <n>`"));
                };
                let n: usize = n
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{n}`")))?;
                p = Some(n);
                labels = vec![None; n];
            }
            ("p", Some(_)) => return Err(parse_err(line_no, "second `p` line")),
            (_, None) => return Err(parse_err(line_no, "expected `p <n>` before anything else")),
            ("a", Some(n)) => {
                let [_, u, v] = fields[..] else {
                    return Err(parse_err(line_no, "expected `a <u> <v>`"));
                };
                let u = parse_vertex_name(u, n).map_err(|m| parse_err(line_no, m))?;
                let v = parse_vertex_name(v, n).map_err(|m| parse_err(line_no, m))?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at {}", vertex_name(u))));
                }
                arcs.push((u, v));
            }
            ("l", Some(n)) => {
                let [_, v, label] = fields[..] else {
                    return Err(parse_err(line_no, "expected `l <v> <label>`"));
                };
                let v = parse_vertex_name(v, n).map_err(|m| parse_err(line_no, m))?;
                let label: u32 = label
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad label `{label}`")))?;
                if labels[v].replace(label).is_some() {
                    return Err(parse_err(
                        line_no,
                        format!("second label for {}", vertex_name(v)),
                    ));
                }
            }
            (other, Some(_)) => {
                return Err(parse_err(line_no, format!("unknown line type `{other}`")))
            }
        }
    }
    let p = p.ok_or_else(|| parse_err(0, "missing `p <n>` line"))?;
    let digraph = Digraph::new(p, arcs)?;
    let labeling = Labeling(labels.into_iter().map(|l| l.unwrap_or(0)).collect());
    LabeledDigraph::new(digraph, labeling)
}

/// Writes arcs in sorted order; `l` lines only when some label is non-zero.
pub fn write_edge_list(ld: &LabeledDigraph) -> String {
    let mut out = format!("p {}\n", ld.order());
    for (u, v) in ld.digraph.arcs() {
        let _ = writeln!(out, "a {} {}", u + 1, v + 1);
    }
    if ld.labeling.0.iter().any(|&l| l != 0) {
        for (v, l) in ld.labeling.0.iter().enumerate() {
            let _ = writeln!(out, "l {} {l}", v + 1);
        }
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    write_edge_list(&LabeledDigraph::unlabeled(d.clone()))
}

/// DOT text: one node line per vertex, then one line per arc. Labels appear
/// as node attributes when any is non-zero.
pub fn export_dot(ld: &LabeledDigraph) -> String {
    let labeled = ld.labeling.0.iter().any(|&l| l != 0);
    let mut out = String::from("digraph D {\n");
    for v in 0..ld.order() {
        if labeled {
            let _ = writeln!(out, "  {} [label=\"{}:{}\"];", vertex_name(v), vertex_name(v), ld.labeling.label(v));
        } else {
            let _ = writeln!(out, "  {};", vertex_name(v));
        }
    }
    for (u, v) in ld.digraph.arcs() {
        let _ = writeln!(out, "  {} -> {};", vertex_name(u), vertex_name(v));
    }
    out.push_str("}\n");
    out
}

/// Strict CSV: one row per line, integers separated by commas, no header.
pub fn parse_matrix_csv(text: &str) -> Result<LMatrix> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| {
                cell.trim()
                    .parse::<i8>()
                    .map_err(|_| parse_err(i + 1, format!("bad matrix entry `{}`", cell.trim())))
            })
            .collect::<Result<Vec<i8>>>()?;
        rows.push(row);
    }
    LMatrix::from_rows(rows)
}

pub fn write_matrix_csv(m: &LMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(i8::to_string).collect();
            cells.join(",") + "\n"
        })
        .collect()
}

/// Colour files list `<vertex> <colour>` per line, every vertex exactly once.
pub fn parse_colors(text: &str, p: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<u32>> = vec![None; p];
    for (line_no, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [v, c] = fields[..] else {
            return Err(parse_err(line_no, "expected `<vertex> <colour>`"));
        };
        let v = parse_vertex_name(v, p).map_err(|m| parse_err(line_no, m))?;
        let c: u32 = c
            .parse()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| parse_err(line_no, format!("bad colour `{c}`")))?;
        if colors[v].replace(c).is_some() {
            return Err(parse_err(line_no, format!("second colour for {}", vertex_name(v))));
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| parse_err(0, format!("no colour for {}", vertex_name(v)))))
        .collect::<Result<Vec<u32>>>()?;
    Coloring::new(colors)
}

/// Comma- or space-separated vertex names forming a permutation.
pub fn parse_order(text: &str, p: usize) -> Result<VertexOrder> {
    let order = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_vertex_name(t, p).map_err(|m| parse_err(1, m)))
        .collect::<Result<Vec<Vertex>>>()?;
    VertexOrder::new(p, order)
}
