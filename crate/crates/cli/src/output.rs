//! Text and JSON rendering for the commands.

use std::fmt::Write as _;

use serde_json::json;
use wreath_core::io::{
    digraph_to_dot, digraph_to_json, graph_to_dot, graph_to_json, group_to_dot, group_to_json,
    hypergraph_to_dot, hypergraph_to_json,
};
use wreath_core::{
    classify, is_primitive, orbit_hypergraph, orbitals, orbits, parse_group_spec_with,
    transposing_permutation, uncolored_hypergraph_representable, ClassReport, ClosureKind,
    ColoredDigraph, ColoredGraph, ColoredHypergraph, Limits, PermGroup, Result,
};

use crate::{Format, ScanClass};

pub enum Structure {
    Group(PermGroup),
    Graph(ColoredGraph),
    Digraph(ColoredDigraph),
    Hypergraph(ColoredHypergraph),
}

pub fn render_structure(s: &Structure, format: Format) -> Result<String> {
    Ok(match (s, format) {
        (Structure::Group(g), Format::Json) => group_to_json(g)? + "\n",
        (Structure::Graph(g), Format::Json) => graph_to_json(g)? + "\n",
        (Structure::Digraph(d), Format::Json) => digraph_to_json(d)? + "\n",
        (Structure::Hypergraph(h), Format::Json) => hypergraph_to_json(h)? + "\n",
        (Structure::Group(g), Format::Dot) => group_to_dot(g),
        (Structure::Graph(g), Format::Dot) => graph_to_dot(g),
        (Structure::Digraph(d), Format::Dot) => digraph_to_dot(d),
        (Structure::Hypergraph(h), Format::Dot) => hypergraph_to_dot(h),
    })
}

fn generators(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(ToString::to_string).collect()
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
}

pub fn group_summary(label: &str, g: &PermGroup, json: bool) -> Result<String> {
    let data = orbitals(g);
    let transposer = transposing_permutation(g)?;
    let orbit_classes = orbits(g).classes;
    if json {
        return Ok(pretty(json!({
            "group": label,
            "degree": g.degree(),
            "order": g.order()?.to_string(),
            "generators": generators(g),
            "orbits": orbit_classes,
            "transitive": orbit_classes.len() == 1,
            "primitive": is_primitive(g),
            "rank": data.rank,
            "nsp": data.nsp,
            "all_self_paired": data.all_self_paired(),
            "transposing": transposer.map(|p| p.to_string()),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "group: {label}");
    let _ = writeln!(out, "degree: {}", g.degree());
    let _ = writeln!(out, "order: {}", g.order()?);
    let _ = writeln!(out, "generators: {}", generators(g).join(", "));
    let orbit_text: Vec<String> = orbit_classes
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect();
    let _ = writeln!(out, "orbits: {}", orbit_text.join(" "));
    let _ = writeln!(out, "transitive: {}", orbit_classes.len() == 1);
    let _ = writeln!(out, "primitive: {}", is_primitive(g));
    let _ = writeln!(out, "rank: {}", data.rank);
    let _ = writeln!(out, "nsp: {}", data.nsp);
    let _ = writeln!(out, "all orbitals self-paired: {}", data.all_self_paired());
    match transposer {
        Some(p) => {
            let _ = writeln!(out, "transposing permutation: {p}");
        }
        None => {
            let _ = writeln!(out, "transposing permutation: none");
        }
    }
    Ok(out)
}

fn flag(b: Option<bool>) -> String {
    b.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

pub fn class_report(label: &str, r: &ClassReport, json: bool) -> Result<String> {
    if json {
        let mut v = serde_json::to_value(r)?;
        v["group"] = label.into();
        return Ok(pretty(v));
    }
    let mut out = format!(
        "gr:{} dgr:{} bgr:{} dgr_plus:{}\n",
        r.in_gr,
        r.in_dgr,
        flag(r.in_bgr),
        r.in_dgr_plus
    );
    let _ = writeln!(
        out,
        "group: {label} (degree {}, order {})",
        r.degree, r.order
    );
    let verdicts = [
        ("gr", Some(&r.gr)),
        ("dgr", Some(&r.dgr)),
        ("bgr", r.bgr.as_ref()),
    ];
    for (name, v) in verdicts {
        match v {
            Some(v) => {
                let _ = write!(out, "{name} closure: order {}", v.closure_order);
                if let Some(w) = &v.witness {
                    let _ = write!(out, ", witness {w}");
                }
                out.push('\n');
            }
            None => {
                let _ = writeln!(out, "{name} closure: beyond the hypergraph cap");
            }
        }
    }
    match &r.transposing {
        Some(p) => {
            let _ = writeln!(out, "transposing permutation: {p}");
        }
        None => {
            let _ = writeln!(out, "transposing permutation: none");
        }
    }
    Ok(out)
}

pub fn closure_summary(
    label: &str,
    kind: ClosureKind,
    g: &PermGroup,
    c: &PermGroup,
    json: bool,
) -> Result<String> {
    let witness = c.element_outside(g)?;
    if json {
        return Ok(pretty(json!({
            "group": label,
            "kind": kind.name(),
            "member": witness.is_none(),
            "degree": c.degree(),
            "order": c.order()?.to_string(),
            "generators": generators(c),
            "witness": witness.map(|w| w.to_string()),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{} closure of {label}", kind.name());
    let _ = writeln!(out, "order: {}", c.order()?);
    let _ = writeln!(out, "generators: {}", generators(c).join(", "));
    let _ = writeln!(out, "member: {}", witness.is_none());
    if let Some(w) = witness {
        let _ = writeln!(out, "witness: {w}");
    }
    Ok(out)
}

const FAMILIES: [&str; 5] = ["I", "C", "D", "A", "S"];

/// Largest number of subset orbits for which uncolored families are tried.
const SCAN_SUBSET_ORBITS: usize = 12;

fn scan_candidates(max_degree: usize, limits: Limits) -> Vec<(String, PermGroup)> {
    let parse = |s: &str| {
        parse_group_spec_with(s, limits)
            .ok()
            .map(|g| (s.to_string(), g))
    };
    let mut names: Vec<(String, PermGroup)> = Vec::new();
    for n in 2..=max_degree {
        for f in FAMILIES {
            names.extend(parse(&format!("{f}{n}")));
        }
        if n == 4 {
            names.extend(parse("K4"));
        }
    }
    let mut out = names.clone();
    for (a, ga) in &names {
        for k in 2..=max_degree / ga.degree() {
            out.extend(parse(&format!("par({a},{k})")));
        }
    }
    for (a, ga) in &names {
        for (b, gb) in &names {
            if ga.degree() * gb.degree() <= max_degree {
                out.extend(parse(&format!("wr({a},{b})")));
            }
            let points = ga.degree().checked_pow(gb.degree() as u32);
            if points.is_some_and(|p| p <= max_degree) {
                out.extend(parse(&format!("wrp({a},{b})")));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|(s, _)| seen.insert(s.clone()));
    out
}

/// `Some(true)` when some uncolored family has group exactly `g`; `None`
/// when the search was not attempted.
fn uncolored(g: &PermGroup, in_bgr: Option<bool>) -> Option<bool> {
    if in_bgr != Some(true) || g.degree() > 12 {
        return None;
    }
    let subset_orbits = orbit_hypergraph(g).ok()?.num_colors();
    if subset_orbits > SCAN_SUBSET_ORBITS {
        return None;
    }
    uncolored_hypergraph_representable(g)
        .ok()
        .map(|f| f.is_some())
}

pub fn scan(max_degree: usize, class: ScanClass, limits: Limits, json: bool) -> Result<String> {
    let mut rows = Vec::new();
    for (spec, g) in scan_candidates(max_degree, limits) {
        let r = classify(&g)?;
        let uncolored = match class {
            ScanClass::DgrNotBgr => None,
            _ => uncolored(&g, r.in_bgr),
        };
        let keep = match class {
            ScanClass::All => true,
            ScanClass::DgrNotBgr => r.in_dgr && r.in_bgr == Some(false),
            ScanClass::BgrNotUncolored => r.in_bgr == Some(true) && uncolored == Some(false),
        };
        if keep {
            rows.push(json!({
                "group": spec,
                "degree": r.degree,
                "order": r.order.to_string(),
                "primitive": is_primitive(&g),
                "gr": r.in_gr,
                "dgr": r.in_dgr,
                "bgr": r.in_bgr,
                "dgr_plus": r.in_dgr_plus,
                "uncolored": uncolored,
            }));
        }
    }
    if json {
        return Ok(pretty(serde_json::Value::Array(rows)));
    }
    let mut out = format!(
        "{:<16} {:>6} {:>10} {:>9} {:>5} {:>5} {:>5} {:>8} {:>9}\n",
        "group", "degree", "order", "primitive", "gr", "dgr", "bgr", "dgr_plus", "uncolored"
    );
    let cell = |v: &serde_json::Value| match v {
        serde_json::Value::Null => "-".to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    for row in &rows {
        let _ = writeln!(
            out,
            "{:<16} {:>6} {:>10} {:>9} {:>5} {:>5} {:>5} {:>8} {:>9}",
            cell(&row["group"]),
            cell(&row["degree"]),
            cell(&row["order"]),
            cell(&row["primitive"]),
            cell(&row["gr"]),
            cell(&row["dgr"]),
            cell(&row["bgr"]),
            cell(&row["dgr_plus"]),
            cell(&row["uncolored"]),
        );
    }
    let _ = writeln!(out, "{} groups", rows.len());
    Ok(out)
}
