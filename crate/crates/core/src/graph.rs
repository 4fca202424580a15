//! The minimum path graph of an end-to-end walk: one edge per letter of the
//! walk's normal form.

use std::fmt::Write as _;

use serde::Serialize;

use crate::detector::is_irreducible;
use crate::error::{Error, Result};
use crate::model::{Alphabet, LabeledString, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Symbol,
}

/// A simple path on vertices `0..vertex_count`; edge `i` joins `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathGraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
}

impl PathGraph {
    /// Edge labels in path order.
    pub fn labels(&self) -> LabeledString {
        self.edges.iter().map(|e| e.label).collect()
    }
}

pub fn build_path_graph(normal_form: &LabeledString) -> PathGraph {
    let edges = normal_form
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &label)| Edge { from: i, to: i + 1, label })
        .collect();
    PathGraph { vertex_count: normal_form.len() + 1, edges }
}

/// Like [`build_path_graph`], but rejects reducible input.
pub fn build_path_graph_checked(normal_form: &LabeledString) -> Result<PathGraph> {
    if !is_irreducible(normal_form)? {
        return Err(Error::Reducible);
    }
    Ok(build_path_graph(normal_form))
}

fn label_names<'a>(g: &PathGraph, names: &'a Alphabet) -> Result<Vec<&'a str>> {
    g.edges
        .iter()
        .map(|e| names.name(e.label).ok_or(Error::UnnamedSymbol(e.label)))
        .collect()
}

pub fn to_dot(g: &PathGraph, names: &Alphabet) -> Result<String> {
    let labels = label_names(g, names)?;
    let mut out = String::from("graph path {\n");
    for v in 0..g.vertex_count {
        let _ = writeln!(out, "  v{v};");
    }
    for (e, label) in g.edges.iter().zip(labels) {
        let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  v{} -- v{} [label=\"{escaped}\"];", e.from, e.to);
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: usize,
    edges: Vec<JsonEdge<'a>>,
}

#[derive(Serialize)]
struct JsonEdge<'a> {
    from: usize,
    to: usize,
    label: &'a str,
}

/// Compact JSON, no trailing newline.
pub fn to_json(g: &PathGraph, names: &Alphabet) -> Result<String> {
    let labels = label_names(g, names)?;
    let doc = JsonGraph {
        vertices: g.vertex_count,
        edges: g
            .edges
            .iter()
            .zip(labels)
            .map(|(e, label)| JsonEdge { from: e.from, to: e.to, label })
            .collect(),
    };
    Ok(serde_json::to_string(&doc).expect("plain structs always serialize"))
}
