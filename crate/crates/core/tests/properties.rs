mod common;

use std::collections::BTreeSet;

use common::{
    all_perms, arc_closure, catalog, elements, set_of, star_closure, to_perm, to_vec, Perm,
};
use proptest::prelude::*;
use wreath_core::search::{automorphisms, automorphisms_exhaustive};
use wreath_core::{
    automorphism_group, closure, decompose_imprimitive, decompose_product_action, io,
    is_subcoloring, orbital_graph, orbitals, orbits, parallel_multiple, wreath_imprimitive,
    wreath_product_action, AnyStructure, ClosureKind, ColoredDigraph, ColoredGraph,
    ColoredHypergraph, Limits, PermGroup, Permutation,
};

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Perm>()).prop_shuffle()
}

fn group_strategy(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (2..=max_degree)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 0..3)))
        .prop_map(|(n, gens)| {
            PermGroup::from_generators(n, gens.iter().map(to_perm).collect()).unwrap()
        })
}

fn graph_strategy(max_n: usize, colors: u32) -> impl Strategy<Value = ColoredGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..colors, n * (n - 1) / 2)
            .prop_map(move |c| ColoredGraph::new(n, c).unwrap())
    })
}

fn digraph_strategy(max_n: usize, colors: u32) -> impl Strategy<Value = ColoredDigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(0..colors, n * n),
            prop::collection::vec(0..2u32, n),
        )
            .prop_map(move |(c, v)| ColoredDigraph::new(n, c, v).unwrap())
    })
}

fn hypergraph_strategy(max_n: usize, colors: u32) -> impl Strategy<Value = ColoredHypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..colors, 1 << n)
            .prop_map(move |c| ColoredHypergraph::new(n, c).unwrap())
    })
}

fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(group in group_strategy(6)) {
        let elems = group.elements().unwrap();
        let set: BTreeSet<Perm> = elems.iter().map(to_vec).collect();
        let n = group.degree();
        prop_assert!(set.contains(&(0..n).collect::<Perm>()));
        for x in &set {
            let inv = to_vec(&to_perm(x).inverse());
            prop_assert!(set.contains(&inv));
            for y in &set {
                prop_assert!(set.contains(&compose(x, y)));
            }
        }
        let factorial: usize = (1..=n).product();
        prop_assert_eq!(factorial % set.len(), 0);
        let gens: Vec<Perm> = group.generators().iter().map(to_vec).collect();
        prop_assert_eq!(set, elements(n, &gens));
    }

    #[test]
    fn random_closures_match_oracles(group in group_strategy(5)) {
        let n = group.degree();
        let elems = set_of(&group);
        prop_assert_eq!(set_of(&closure(&group, ClosureKind::Gr).unwrap()), star_closure(n, &elems));
        prop_assert_eq!(set_of(&closure(&group, ClosureKind::Dgr).unwrap()), arc_closure(n, &elems));
    }

    #[test]
    fn graph_search_matches_exhaustive(graph in graph_strategy(8, 3)) {
        let (gens, order) = automorphisms(&graph, &Limits::default()).unwrap();
        let all = automorphisms_exhaustive(&graph).unwrap();
        prop_assert_eq!(order, all.len().into());
        for g in gens {
            prop_assert!(graph.preserved_by(&g));
        }
    }

    #[test]
    fn digraph_search_matches_exhaustive(digraph in digraph_strategy(7, 2)) {
        let (_, order) = automorphisms(&digraph, &Limits::default()).unwrap();
        prop_assert_eq!(order, automorphisms_exhaustive(&digraph).unwrap().len().into());
    }

    #[test]
    fn hypergraph_search_matches_exhaustive(h in hypergraph_strategy(5, 2)) {
        let (_, order) = automorphisms(&h, &Limits::default()).unwrap();
        prop_assert_eq!(order, automorphisms_exhaustive(&h).unwrap().len().into());
    }

    #[test]
    fn refinement_never_enlarges_automorphisms(graph in graph_strategy(6, 2), extra in 0usize..15) {
        let mut fine = graph.clone();
        let pairs: Vec<(usize, usize)> =
            (0..graph.n()).flat_map(|u| (u + 1..graph.n()).map(move |v| (u, v))).collect();
        let (u, v) = pairs[extra % pairs.len()];
        fine.set_color(u, v, 99);
        prop_assert!(is_subcoloring(&fine, &graph).unwrap());
        let limits = Limits::default();
        let small = automorphism_group(&AnyStructure::Graph(fine), &limits).unwrap();
        let large = automorphism_group(&AnyStructure::Graph(graph.clone()), &limits).unwrap();
        prop_assert!(small.is_subgroup_of(&large).unwrap());
        let aut_graph = orbital_graph(&large).unwrap();
        prop_assert!(is_subcoloring(&aut_graph, &graph).unwrap());
    }

    #[test]
    fn imprimitive_decomposition_round_trips(a in 0usize..5, b in 0usize..5, pick in any::<prop::sample::Index>()) {
        let names = ["S2", "C3", "I2", "K4", "S3"];
        let (ga, gb) = (wreath_core::parse_group_spec(names[a]).unwrap(), wreath_core::parse_group_spec(names[b]).unwrap());
        let w = wreath_imprimitive(&ga, &gb).unwrap();
        let elems = w.elements().unwrap();
        let phi = &elems[pick.index(elems.len())];
        let d = decompose_imprimitive(phi, ga.degree(), gb.degree()).unwrap().unwrap();
        prop_assert_eq!(&d.assemble_imprimitive(), phi);
        prop_assert!(d.lies_in(&ga, &gb).unwrap());
    }

    #[test]
    fn product_action_decomposition_round_trips(a in 0usize..4, b in 0usize..3, pick in any::<prop::sample::Index>()) {
        let fibres = ["S2", "C3", "I2", "S3"];
        let bases = ["S2", "C3", "I3"];
        let ga = wreath_core::parse_group_spec(fibres[a]).unwrap();
        let gb = wreath_core::parse_group_spec(bases[b]).unwrap();
        let w = wreath_product_action(&ga, &gb).unwrap();
        let elems = w.elements().unwrap();
        let phi = &elems[pick.index(elems.len())];
        let d = decompose_product_action(phi, ga.degree(), gb.degree()).unwrap().unwrap();
        prop_assert_eq!(&d.assemble_product_action(), phi);
        prop_assert!(d.lies_in(&ga, &gb).unwrap());
    }

    #[test]
    fn structure_json_round_trips(graph in graph_strategy(7, 4), digraph in digraph_strategy(5, 3), h in hypergraph_strategy(4, 3)) {
        prop_assert_eq!(io::graph_from_json(&io::graph_to_json(&graph).unwrap()).unwrap(), graph);
        prop_assert_eq!(io::digraph_from_json(&io::digraph_to_json(&digraph).unwrap()).unwrap(), digraph);
        prop_assert_eq!(io::hypergraph_from_json(&io::hypergraph_to_json(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn group_json_round_trips(group in group_strategy(6)) {
        let back = io::group_from_json(&io::group_to_json(&group).unwrap()).unwrap();
        prop_assert_eq!(back.generators(), group.generators());
    }
}

#[test]
fn galois_laws_over_catalog() {
    let groups = catalog();
    for kind in [ClosureKind::Gr, ClosureKind::Dgr, ClosureKind::Bgr] {
        for (name, a) in &groups {
            let cl = closure(a, kind).unwrap();
            assert!(a.is_subgroup_of(&cl).unwrap(), "extensive {name} {kind:?}");
            let cl2 = closure(&cl, kind).unwrap();
            assert!(
                cl2.same_elements(&cl).unwrap(),
                "idempotent {name} {kind:?}"
            );
            for (other, b) in &groups {
                if a.degree() == b.degree() && a.is_subgroup_of(b).unwrap() {
                    let clb = closure(b, kind).unwrap();
                    assert!(
                        cl.is_subgroup_of(&clb).unwrap(),
                        "monotone {name} <= {other} {kind:?}"
                    );
                }
            }
        }
    }
    for (name, a) in &groups {
        let dgr = closure(a, ClosureKind::Dgr).unwrap();
        let gr = closure(a, ClosureKind::Gr).unwrap();
        assert!(dgr.is_subgroup_of(&gr).unwrap(), "chain {name}");
    }
}

/// Any permutation preserving every 2*-orbital of `A != I2` preserves the orbits of `A`.
#[test]
fn star_orbital_preservers_fix_orbits() {
    let mut groups: Vec<PermGroup> = catalog().into_iter().map(|(_, g)| g).collect();
    for spec in [
        "x(S2,I2)",
        "x(I2,C3)",
        "par(S2,2)",
        "perm(5; (0 1 2))",
        "perm(5; (0 1)(2 3))",
        "perm(4; (0 1))",
        "I5",
    ] {
        groups.push(wreath_core::parse_group_spec(spec).unwrap());
    }
    for group in groups.iter().filter(|g| g.degree() <= 5) {
        if group.degree() == 2 && group.is_trivial() {
            continue;
        }
        let data = orbitals(group);
        let parts = orbits(group);
        for p in all_perms(group.degree()) {
            let alpha = to_perm(&p);
            if data.preserves_star_orbitals(&alpha) {
                for (x, &px) in p.iter().enumerate() {
                    assert_eq!(parts.class_of[x], parts.class_of[px], "{group:?} {alpha}");
                }
            }
        }
    }
}

#[test]
fn orbital_data_invariants() {
    for (name, group) in catalog() {
        let n = group.degree();
        let data = orbitals(&group);
        let sizes: usize = data.orbital_pairs().iter().map(Vec::len).sum();
        assert_eq!(sizes, n * n, "{name}");
        for o in 0..data.rank {
            assert_eq!(data.pairing[data.pairing[o]], o, "{name}");
            if data.trivial[o] {
                assert!(data.is_self_paired(o), "{name}");
            }
        }
        assert_eq!(
            data.trivial.iter().filter(|&&t| t).count(),
            orbits(&group).len()
        );
        let non_self = (0..data.rank).filter(|&o| !data.is_self_paired(o)).count();
        assert_eq!(data.nsp * 2, non_self, "{name}");
        assert_eq!(data.star_orbital_of.len(), n * (n - 1) / 2);
    }
}

#[test]
fn wreath_orders_and_parallel_identity() {
    let groups = catalog();
    for (an, a) in groups.iter().filter(|(_, g)| g.degree() <= 3) {
        for (bn, b) in groups.iter().filter(|(_, g)| g.degree() <= 4) {
            let expected = a.order().unwrap().pow(b.degree() as u32) * b.order().unwrap();
            let imp = wreath_imprimitive(a, b).unwrap();
            assert_eq!(imp.order().unwrap(), expected, "{an} wr {bn}");
            if a.degree().pow(b.degree() as u32) <= 81 && expected <= 20_000u32.into() {
                let pa = wreath_product_action(a, b).unwrap();
                assert_eq!(pa.order().unwrap(), expected, "{an} wrp {bn}");
                assert_eq!(pa.elements().unwrap().len() as u64, pa.order_u64().unwrap());
            }
            if expected <= 20_000u32.into() {
                assert_eq!(
                    imp.elements().unwrap().len() as u64,
                    imp.order_u64().unwrap()
                );
            }
        }
    }
    for (bn, b) in &groups {
        let i2 = wreath_core::trivial(2).unwrap();
        let w = wreath_imprimitive(&i2, b).unwrap();
        let p = parallel_multiple(b, 2).unwrap();
        assert_eq!(set_of(&w), set_of(&p), "I2 wr {bn}");
    }
}

#[test]
fn permutation_inverse_and_composition() {
    for p in all_perms(4) {
        let perm = Permutation::new(p.iter().map(|&x| x as u32).collect()).unwrap();
        assert!(perm.compose(&perm.inverse()).unwrap().is_identity());
        for q in all_perms(4).iter().step_by(5) {
            let qp = to_perm(q);
            assert_eq!(to_vec(&perm.compose(&qp).unwrap()), compose(&p, q));
        }
    }
}
