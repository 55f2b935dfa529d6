//! JSON and Graphviz DOT encodings of groups and colored structures.
//!
//! Groups are `{"degree": n, "generators": [[[0, 1], [2, 3]], ...]}` with
//! each generator written as its list of nontrivial cycles. Graphs store the
//! upper triangle `{0,1}, {0,2}, .., {n-2,n-1}`; digraphs a row-major
//! `n x n` table (diagonal ignored) plus vertex colors; hypergraphs a map
//! from subset bitmask to color.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structures::{Color, ColoredDigraph, ColoredGraph, ColoredHypergraph};

#[derive(Serialize, Deserialize)]
struct GroupJson {
    degree: usize,
    generators: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<String>,
}

pub fn group_to_json(g: &PermGroup) -> Result<String> {
    let doc = GroupJson {
        degree: g.degree(),
        generators: g.generators().iter().map(Permutation::cycles).collect(),
        order: Some(g.order()?.to_string()),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn group_from_json(text: &str) -> Result<PermGroup> {
    let doc: GroupJson = serde_json::from_str(text)?;
    let gens = doc
        .generators
        .iter()
        .map(|cycles| Permutation::from_cycles(doc.degree, cycles))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(doc.degree, gens)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    colors: Vec<Color>,
}

pub fn graph_to_json(g: &ColoredGraph) -> Result<String> {
    Ok(serde_json::to_string(&GraphJson {
        n: g.n(),
        colors: g.colors().to_vec(),
    })?)
}

pub fn graph_from_json(text: &str) -> Result<ColoredGraph> {
    let doc: GraphJson = serde_json::from_str(text)?;
    ColoredGraph::new(doc.n, doc.colors)
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    colors: Vec<Color>,
    vertex_colors: Vec<Color>,
}

pub fn digraph_to_json(d: &ColoredDigraph) -> Result<String> {
    Ok(serde_json::to_string(&DigraphJson {
        n: d.n(),
        colors: d.arc_table().to_vec(),
        vertex_colors: d.vertex_colors().to_vec(),
    })?)
}

pub fn digraph_from_json(text: &str) -> Result<ColoredDigraph> {
    let doc: DigraphJson = serde_json::from_str(text)?;
    ColoredDigraph::new(doc.n, doc.colors, doc.vertex_colors)
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    colors: BTreeMap<u32, Color>,
}

pub fn hypergraph_to_json(h: &ColoredHypergraph) -> Result<String> {
    let colors = (1u32..1 << h.n()).map(|m| (m, h.color(m))).collect();
    Ok(serde_json::to_string(&HypergraphJson { n: h.n(), colors })?)
}

pub fn hypergraph_from_json(text: &str) -> Result<ColoredHypergraph> {
    let doc: HypergraphJson = serde_json::from_str(text)?;
    let size = 1u32
        .checked_shl(doc.n as u32)
        .filter(|_| doc.n <= ColoredHypergraph::MAX_VERTICES)
        .ok_or(Error::StructureTooLarge {
            n: doc.n,
            cap: ColoredHypergraph::MAX_VERTICES,
        })?;
    if let Some(m) = doc.colors.keys().find(|&&m| m == 0 || m >= size) {
        return Err(Error::Invalid(format!("subset mask {m} out of range")));
    }
    ColoredHypergraph::from_fn(doc.n, |m| doc.colors.get(&m).copied().unwrap_or(0))
}

pub fn graph_to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.color(u, v);
            let _ = writeln!(out, "  {u} -- {v} [label=\"{c}\", colorindex={c}];");
        }
    }
    out.push_str("}\n");
    out
}

pub fn digraph_to_dot(d: &ColoredDigraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v} [label=\"{v}:{}\"];", d.vertex_color(v));
    }
    for u in 0..d.n() {
        for v in 0..d.n() {
            if u != v {
                let c = d.color(u, v);
                let _ = writeln!(out, "  {u} -> {v} [label=\"{c}\", colorindex={c}];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Bipartite incidence drawing: one box per subset, labelled with its color.
pub fn hypergraph_to_dot(h: &ColoredHypergraph) -> String {
    let mut out = String::from("graph H {\n");
    for v in 0..h.n() {
        let _ = writeln!(out, "  v{v} [label=\"{v}\"];");
    }
    for m in 1u32..1 << h.n() {
        let _ = writeln!(out, "  s{m} [shape=box, label=\"{}\"];", h.color(m));
        for v in (0..h.n()).filter(|&v| m >> v & 1 == 1) {
            let _ = writeln!(out, "  v{v} -- s{m};");
        }
    }
    out.push_str("}\n");
    out
}

/// One arc `x -> x g` per moved point of each generator `g`.
pub fn group_to_dot(g: &PermGroup) -> String {
    let mut out = String::from("digraph Schreier {\n");
    for (i, gen) in g.generators().iter().enumerate() {
        for x in 0..g.degree() {
            let y = gen.apply(x);
            if y != x {
                let _ = writeln!(out, "  {x} -> {y} [label=\"g{i}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}
