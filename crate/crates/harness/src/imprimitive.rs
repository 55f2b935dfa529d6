//! Claims about the imprimitive wreath product `A wr B` on `V x W`.

use wreath_core::{
    automorphism_group, color_equivalent, composition, free_composition, free_composition_directed,
    orbital_digraph, orbits, parallel_multiple, wreath_imprimitive, AnyStructure, ClosureKind,
    ColoredGraph, Result,
};

use crate::oracle::Oracle;
use crate::outcome::{Named, VerificationOutcome};

pub const GR_CLASSIFICATION: &str = "imprimitive-gr-classification";
pub const DGR_CLASSIFICATION: &str = "imprimitive-dgr-classification";
pub const GRAPH_FACTORIZATION: &str = "orbital-graph-factorization";
pub const DIGRAPH_FACTORIZATION: &str = "orbital-digraph-factorization";
pub const PARALLEL_MULTIPLE: &str = "parallel-multiple-gr";
pub const TRANSITIVE_DECOMPOSITION: &str = "transitive-decomposition";

fn membership_outcome(
    claim: &str,
    inputs: &[&str],
    predicted: bool,
    (observed, witness): (bool, Option<wreath_core::Permutation>),
) -> VerificationOutcome {
    let o = VerificationOutcome::new(claim, inputs, predicted, observed);
    match witness {
        Some(w) => o.with_witness(w),
        None => o,
    }
}

/// `A wr B` is in GR iff `A` is in `GR ∪ {I2}` and either `B` is too, or
/// `B` is 2-closed but not 2*-closed and `A` is intransitive.
pub fn verify_imprimitive_classification(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<VerificationOutcome> {
    let fa = oracle.flags(&a.group)?;
    let fb = oracle.flags(&b.group)?;
    let predicted =
        fa.gr_or_i2() && (fb.gr_or_i2() || (fb.dgr && !fb.gr_or_i2() && !fa.transitive));
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let observed = oracle.membership(&product, ClosureKind::Gr)?;
    let o = membership_outcome(GR_CLASSIFICATION, &[&a.spec, &b.spec], predicted, observed);
    Ok(if fb.is_i2 {
        o.with_note("base I2: predicted side is the plain clause")
    } else {
        o
    })
}

/// `A wr B` is in DGR iff both factors are.
pub fn verify_digraph_classification(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<VerificationOutcome> {
    let predicted = oracle.flags(&a.group)?.dgr && oracle.flags(&b.group)?.dgr;
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let observed = oracle.membership(&product, ClosureKind::Dgr)?;
    Ok(membership_outcome(
        DGR_CLASSIFICATION,
        &[&a.spec, &b.spec],
        predicted,
        observed,
    ))
}

/// `G*(A wr B)` and `G*(B) o_f G*(A)` have the same color partition.
pub fn verify_orbital_factorization(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<VerificationOutcome> {
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let direct = oracle.orbital_graph(&product)?;
    let factored = free_composition(
        &oracle.orbital_graph(&b.group)?,
        &oracle.orbital_graph(&a.group)?,
        &product.limits(),
    )?;
    let observed = color_equivalent(&direct, &factored)?;
    let o = VerificationOutcome::new(GRAPH_FACTORIZATION, &[&a.spec, &b.spec], true, observed);
    Ok(if observed {
        o
    } else {
        o.with_note(format!(
            "{} orbital colors vs {} free-composition colors",
            direct.num_colors(),
            factored.num_colors()
        ))
    })
}

/// `G(A wr B)` and `G(B) o_f G(A)` have the same color partition, vertex
/// colors included.
pub fn verify_directed_factorization(a: &Named, b: &Named) -> Result<VerificationOutcome> {
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let direct = orbital_digraph(&product)?;
    let factored = free_composition_directed(
        &orbital_digraph(&b.group)?,
        &orbital_digraph(&a.group)?,
        &product.limits(),
    )?;
    let observed = color_equivalent(&direct, &factored)?;
    Ok(VerificationOutcome::new(
        DIGRAPH_FACTORIZATION,
        &[&a.spec, &b.spec],
        true,
        observed,
    ))
}

/// `B x I_t` is in GR iff `B` is in DGR.
pub fn verify_parallel_multiple_law(
    oracle: &Oracle,
    b: &Named,
    t: usize,
) -> Result<VerificationOutcome> {
    let predicted = oracle.flags(&b.group)?.dgr;
    let multiple = parallel_multiple(&b.group, t)?;
    let observed = oracle.membership(&multiple, ClosureKind::Gr)?;
    Ok(membership_outcome(
        PARALLEL_MULTIPLE,
        &[&b.spec, &t.to_string()],
        predicted,
        observed,
    ))
}

/// The two factors of a vertex-transitive graph whose group is `A wr B`.
#[derive(Clone, Debug)]
pub struct TransitiveFactors {
    /// Colors inside the fibre over `w = 0`.
    pub fibre: ColoredGraph,
    /// Colors between fibres, read at `v = 0`.
    pub base: ColoredGraph,
}

/// Splits `g` on `V x W` (point `(v, w)` at `v * |W| + w`) into its fibre
/// and collapsed colorings; `None` when a cross color depends on the fibre
/// points and not only on the fibres.
pub fn transitive_factors(
    g: &ColoredGraph,
    nv: usize,
    nw: usize,
) -> Result<Option<TransitiveFactors>> {
    let base = ColoredGraph::from_fn(nw, |w1, w2| g.color(w1, w2))?;
    for x in 0..nv * nw {
        for y in x + 1..nv * nw {
            let (w1, w2) = (x % nw, y % nw);
            if w1 != w2 && g.color(x, y) != base.color(w1, w2) {
                return Ok(None);
            }
        }
    }
    let fibre = ColoredGraph::from_fn(nv, |v1, v2| g.color(v1 * nw, v2 * nw))?;
    Ok(Some(TransitiveFactors { fibre, base }))
}

/// For `G = G*(A wr B)` with transitive `Aut(G) = A wr B`, recovers `H1`,
/// `H2` with `G = H2 o H1`, `Aut(H1) = A` and `Aut(H2) = B`.
pub fn verify_transitive_decomposition(
    oracle: &Oracle,
    a: &Named,
    b: &Named,
) -> Result<VerificationOutcome> {
    let limits = a.group.limits();
    let product = wreath_imprimitive(&a.group, &b.group)?;
    let g = oracle.orbital_graph(&product)?;
    let aut = automorphism_group(&AnyStructure::Graph(g.clone()), &limits)?;
    let predicted = orbits(&aut).is_transitive() && aut.same_elements(&product)?;
    let inputs = [a.spec.as_str(), b.spec.as_str()];
    let Some(factors) = transitive_factors(&g, a.group.degree(), b.group.degree())? else {
        return Ok(
            VerificationOutcome::new(TRANSITIVE_DECOMPOSITION, &inputs, predicted, false)
                .with_note("cross colors are not constant between fibres"),
        );
    };
    let recomposed = composition(&factors.base, &factors.fibre)?;
    let fibre_aut = automorphism_group(&AnyStructure::Graph(factors.fibre.clone()), &limits)?;
    let base_aut = automorphism_group(&AnyStructure::Graph(factors.base.clone()), &limits)?;
    let exact = recomposed == g;
    let fibre_ok = fibre_aut.same_elements(&a.group)?;
    let base_ok = base_aut.same_elements(&b.group)?;
    let o = VerificationOutcome::new(
        TRANSITIVE_DECOMPOSITION,
        &inputs,
        predicted,
        exact && fibre_ok && base_ok,
    );
    Ok(o.with_note(format!(
        "recomposed: {exact}, fibre group: {fibre_ok}, base group: {base_ok}"
    )))
}
