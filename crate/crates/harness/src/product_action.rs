//! The product action `A ⦸ B` on `V^W`: structure of its 2*-closure and the
//! membership clauses that follow from it.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use wreath_core::{
    color_equivalent, decompose_product_action, generate_group, orbit_hypergraph,
    wreath_product_action, ClosureKind, ColoredGraph, FunctionSpace, PermGroup, Permutation,
    Result,
};

use crate::oracle::{Flags, Oracle};
use crate::outcome::{Named, VerificationOutcome};

pub const INCLUSION: &str = "product-action-closure-inclusion";
pub const BASE_FORM: &str = "product-action-base-form";
pub const NOT_DGR: &str = "product-action-not-dgr-blocker";
pub const TRANSPOSER: &str = "product-action-transposer-blocker";
pub const BGR_BASE: &str = "product-action-bgr-base";
pub const SYMMETRIC_FIBRE: &str = "product-action-symmetric-fibre";
pub const SUBSET_CLASSES: &str = "product-action-subset-classes";
pub const ALTERNATING_BASE: &str = "product-action-alternating-base";
pub const RANK: &str = "product-action-rank-sufficiency";
pub const DIRECTED: &str = "product-action-directed-bgr-base";
pub const SYMMETRIC_BASE: &str = "product-action-symmetric-fibre-base";

/// Everything learned from decomposing the 2*-closure of `A ⦸ B`.
#[derive(Clone, Debug)]
pub struct ProductActionReport {
    pub inputs: [String; 2],
    pub degree: usize,
    pub closure_order: BigUint,
    pub in_gr: bool,
    /// `B'` with `clo(A ⦸ B) = A ⦸ B'`, when that form was established.
    pub base_group: Option<PermGroup>,
    pub outcomes: Vec<VerificationOutcome>,
}

struct Decomposed {
    betas: BTreeSet<Permutation>,
    inclusion_failure: Option<Permutation>,
    fibres_in_a: bool,
}

fn decompose_all(
    closure: &PermGroup,
    a: &PermGroup,
    clo_a: &PermGroup,
    clo_b: &PermGroup,
    nw: usize,
) -> Result<Decomposed> {
    let nv = a.degree();
    let mut betas = BTreeSet::new();
    let mut inclusion_failure = None;
    let mut fibres_in_a = true;
    for phi in closure.elements()?.iter() {
        let Some(d) = decompose_product_action(phi, nv, nw)? else {
            inclusion_failure.get_or_insert_with(|| phi.clone());
            fibres_in_a = false;
            continue;
        };
        let mut inside = clo_b.contains(&d.beta)?;
        for alpha in &d.alphas {
            inside &= clo_a.contains(alpha)?;
            fibres_in_a &= a.contains(alpha)?;
        }
        if !inside {
            inclusion_failure.get_or_insert_with(|| phi.clone());
        }
        betas.insert(d.beta);
    }
    Ok(Decomposed {
        betas,
        inclusion_failure,
        fibres_in_a,
    })
}

fn is_closed(set: &BTreeSet<Permutation>) -> bool {
    set.iter()
        .all(|p| set.iter().all(|q| set.contains(&p.then(q))))
}

/// `{f, g}` colored by the `B`-orbit of the set of coordinates where `f` and
/// `g` differ.
pub fn difference_set_graph(nv: usize, b: &PermGroup) -> Result<ColoredGraph> {
    let space = FunctionSpace::new(nv, b.degree());
    let subsets = orbit_hypergraph(b)?;
    ColoredGraph::from_fn(space.size, |f, g| {
        let (df, dg) = (space.decode(f), space.decode(g));
        let mask = (0..b.degree())
            .filter(|&w| df[w] != dg[w])
            .fold(0u32, |m, w| m | (1 << w));
        subsets.color(mask)
    })
}

fn rank_condition(fa: &Flags, n: usize, parity_ok: bool) -> bool {
    fa.rank > n || (fa.rank == n && parity_ok)
}

pub fn product_action_report(oracle: &Oracle, a: &Named, b: &Named) -> Result<ProductActionReport> {
    let inputs = [a.spec.as_str(), b.spec.as_str()];
    let (nv, nw) = (a.group.degree(), b.group.degree());
    let fa = oracle.flags(&a.group)?;
    let fb = oracle.flags(&b.group)?;
    let product = wreath_product_action(&a.group, &b.group)?;
    let closure = oracle.closure(&product, ClosureKind::Gr)?;
    let clo_a = oracle.closure(&a.group, ClosureKind::Gr)?;
    let clo_b = oracle.closure(&b.group, ClosureKind::Gr)?;
    let gr_witness = closure.element_outside(&product)?;
    let in_gr = gr_witness.is_none();
    let decomposed = decompose_all(&closure, &a.group, &clo_a, &clo_b, nw)?;
    let mut outcomes = Vec::new();

    let mut o = VerificationOutcome::new(
        INCLUSION,
        &inputs,
        true,
        decomposed.inclusion_failure.is_none(),
    );
    if let Some(w) = &decomposed.inclusion_failure {
        o = o.with_witness(w);
    }
    outcomes.push(o);

    let mut base_group = None;
    if fa.dgr_plus {
        let betas = &decomposed.betas;
        let is_group = is_closed(betas);
        let contains_b = b.group.generators().iter().all(|g| betas.contains(g));
        let mut within = true;
        for beta in betas {
            within &= clo_b.contains(beta)?;
        }
        let expected = a.group.order()?.pow(nw as u32) * BigUint::from(betas.len());
        let order_ok = closure.order()? == expected;
        let observed = decomposed.fibres_in_a && is_group && contains_b && within && order_ok;
        outcomes.push(
            VerificationOutcome::new(BASE_FORM, &inputs, true, observed).with_note(format!(
                "|B'| = {}, fibres in A: {}, group: {is_group}, contains B: {contains_b}, \
                 inside clo(B): {within}, order: {order_ok}",
                betas.len(),
                decomposed.fibres_in_a
            )),
        );
        if is_group {
            let group = generate_group(nw, betas.iter().cloned().collect())?;
            if fa.is_symmetric && fb.bgr.is_some() {
                let subset_closure = oracle.closure(&b.group, ClosureKind::Bgr)?;
                let observed = group.same_elements(&subset_closure)?;
                outcomes.push(VerificationOutcome::new(
                    SYMMETRIC_BASE,
                    &inputs,
                    true,
                    observed,
                ));
            }
            base_group = Some(group);
        }
    }

    let gr_outcome = |claim: &str, predicted: bool| {
        let o = VerificationOutcome::new(claim, &inputs, predicted, in_gr);
        match &gr_witness {
            Some(w) => o.with_witness(w),
            None => o,
        }
    };
    if !fa.dgr {
        outcomes.push(gr_outcome(NOT_DGR, false));
    }
    if fa.dgr && fa.transposable && !fa.gr_or_i2() {
        outcomes.push(gr_outcome(TRANSPOSER, false));
    }
    if fb.bgr == Some(true) {
        outcomes.push(gr_outcome(BGR_BASE, fa.dgr_plus));
    }
    if fa.is_symmetric {
        if let Some(bgr) = fb.bgr {
            outcomes.push(gr_outcome(SYMMETRIC_FIBRE, bgr));
        }
        let classes = difference_set_graph(nv, &b.group)?;
        let observed = color_equivalent(&oracle.orbital_graph(&product)?, &classes)?;
        outcomes.push(VerificationOutcome::new(
            SUBSET_CLASSES,
            &inputs,
            true,
            observed,
        ));
    }
    if fb.is_alternating {
        let predicted = fa.dgr_plus && rank_condition(&fa, nw, fa.nsp % 2 == 0);
        outcomes.push(
            gr_outcome(ALTERNATING_BASE, predicted)
                .with_note(format!("rank {}, n {nw}, nsp {}", fa.rank, fa.nsp)),
        );
    }
    if fa.dgr_plus && rank_condition(&fa, nw, fa.all_self_paired) {
        outcomes.push(gr_outcome(RANK, true));
    }
    if fb.bgr == Some(true) {
        let (in_dgr, witness) = oracle.membership(&product, ClosureKind::Dgr)?;
        let o = VerificationOutcome::new(DIRECTED, &inputs, fa.dgr, in_dgr);
        outcomes.push(match witness {
            Some(w) => o.with_witness(w),
            None => o,
        });
    }

    Ok(ProductActionReport {
        inputs: [a.spec.clone(), b.spec.clone()],
        degree: product.degree(),
        closure_order: closure.order()?,
        in_gr,
        base_group,
        outcomes,
    })
}
