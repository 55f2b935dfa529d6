//! Explicit colored graphs that transfer representability between
//! `A wr B` and the parallel multiple `B x I_t`.

use wreath_core::{
    automorphism_group, orbits, parallel_multiple, wreath_imprimitive, AnyStructure, ClosureKind,
    Color, ColoredGraph, Result,
};

use crate::oracle::Oracle;
use crate::outcome::{Named, VerificationOutcome};

pub const PARALLEL_LIFT: &str = "parallel-lift-construction";
pub const WREATH_LIFT: &str = "wreath-lift-construction";

/// `r * t^2 + i * t + j` for the vertical edge between copies `i < j` over
/// a point of the `r`-th orbit of `B`.
pub fn vertical_index(r: usize, i: usize, j: usize, t: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    r * t * t + i * t + j
}

/// A graph on `W x {0..t}` (point `(w, i)` at `i * |W| + w`) built from
/// `G = G*(A wr B)`, whose automorphism group should be `B x I_t`.
///
/// Returns `None` when a cross color of `G` is not determined by the
/// `A`-orbits of its endpoints.
pub fn parallel_lift_graph(oracle: &Oracle, a: &Named, b: &Named) -> Result<Option<ColoredGraph>> {
    let (nv, nw) = (a.group.degree(), b.group.degree());
    let a_orbits = orbits(&a.group);
    let b_orbits = orbits(&b.group);
    let t = a_orbits.len();
    let g = oracle.orbital_graph(&wreath_imprimitive(&a.group, &b.group)?)?;
    for x in 0..nv * nw {
        for y in x + 1..nv * nw {
            let (v1, w1, v2, w2) = (x / nw, x % nw, y / nw, y % nw);
            if w1 == w2 {
                continue;
            }
            let r1 = a_orbits.classes[a_orbits.class_of[v1]][0];
            let r2 = a_orbits.classes[a_orbits.class_of[v2]][0];
            if g.color(x, y) != g.color(r1 * nw + w1, r2 * nw + w2) {
                return Ok(None);
            }
        }
    }
    let k = g.max_color() + 1;
    let lifted = ColoredGraph::from_fn(t * nw, |x, y| {
        let (i, w1, j, w2) = (x / nw, x % nw, y / nw, y % nw);
        if w1 != w2 {
            let v1 = a_orbits.classes[i][0];
            let v2 = a_orbits.classes[j][0];
            g.color(v1 * nw + w1, v2 * nw + w2)
        } else {
            let r = b_orbits.class_of[w1];
            vertical_index(r, i, j, t) as Color + k
        }
    })?;
    Ok(Some(lifted))
}

/// Builds the parallel lift and compares its automorphism group with
/// `B x I_t` element for element. Applies when `A wr B` is in GR and `B != I2`.
pub fn build_parallel_lift(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<(Option<ColoredGraph>, VerificationOutcome)> {
    let inputs = [a.spec.as_str(), b.spec.as_str()];
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let b_is_i2 = b.group.degree() == 2 && b.group.is_trivial();
    let in_gr = oracle.membership(&product, ClosureKind::Gr)?.0;
    let predicted = in_gr && !b_is_i2;
    let Some(graph) = parallel_lift_graph(oracle, a, b)? else {
        let o = VerificationOutcome::new(PARALLEL_LIFT, &inputs, predicted, false);
        return Ok((
            None,
            o.with_note("cross colors depend on more than the fibre orbits"),
        ));
    };
    let t = orbits(&a.group).len();
    let target = parallel_multiple(&b.group, t)?;
    let aut = automorphism_group(&AnyStructure::Graph(graph.clone()), &a.group.limits())?;
    let observed = aut.same_elements(&target)?;
    let mut o = VerificationOutcome::new(PARALLEL_LIFT, &inputs, predicted, observed);
    if !predicted {
        o = o.with_note("hypothesis fails");
    }
    if let Some(w) = aut.element_outside(&target)? {
        o = o.with_witness(w);
    }
    Ok((Some(graph), o))
}

/// A graph on `V x W` assembled from `G*(B x I_t)` across fibres and
/// shifted copies of `G*(A)` inside them, whose group should be `A wr B`.
pub fn wreath_lift_graph(oracle: &Oracle, a: &Named, b: &Named) -> Result<ColoredGraph> {
    let (nv, nw) = (a.group.degree(), b.group.degree());
    let a_orbits = orbits(&a.group);
    let b_orbits = orbits(&b.group);
    let t = a_orbits.len();
    let across = oracle.orbital_graph(&parallel_multiple(&b.group, t)?)?;
    let inside = oracle.orbital_graph(&a.group)?;
    let k = (across.max_color() + 1).max(inside.max_color() + 1);
    ColoredGraph::from_fn(nv * nw, |x, y| {
        let (v1, w1, v2, w2) = (x / nw, x % nw, y / nw, y % nw);
        if w1 != w2 {
            let (i, j) = (a_orbits.class_of[v1], a_orbits.class_of[v2]);
            across.color(i * nw + w1, j * nw + w2)
        } else {
            let r = b_orbits.class_of[w1] as Color;
            inside.color(v1, v2) + k * (r + 1)
        }
    })
}

/// Builds the wreath lift and compares its automorphism group with
/// `A wr B`. Applies when `A` is in GR with at least two orbits and
/// `B x I_t` is in GR.
pub fn build_wreath_lift(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<(ColoredGraph, VerificationOutcome)> {
    let inputs = [a.spec.as_str(), b.spec.as_str()];
    let t = orbits(&a.group).len();
    let multiple = parallel_multiple(&b.group, t)?;
    let predicted =
        oracle.flags(&a.group)?.gr && t >= 2 && oracle.membership(&multiple, ClosureKind::Gr)?.0;
    let graph = wreath_lift_graph(oracle, a, b)?;
    let target = wreath_imprimitive(&a.group, &b.group)?;
    let aut = automorphism_group(&AnyStructure::Graph(graph.clone()), &a.group.limits())?;
    let observed = aut.same_elements(&target)?;
    let mut o = VerificationOutcome::new(WREATH_LIFT, &inputs, predicted, observed);
    if !predicted {
        o = o.with_note("hypothesis fails");
    }
    if let Some(w) = aut.element_outside(&target)? {
        o = o.with_witness(w);
    }
    Ok((graph, o))
}
