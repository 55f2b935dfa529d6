//! Brute-force computations over all of `S_n`, sharing no code with the
//! library's searches, orbit routines or closure operators.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use wreath_core::{ColoredDigraph, ColoredGraph, ColoredHypergraph, PermGroup, Permutation};

pub type Perm = Vec<usize>;

pub fn all_perms(n: usize) -> impl Iterator<Item = Perm> {
    (0..n).permutations(n)
}

pub fn to_vec(p: &Permutation) -> Perm {
    (0..p.degree()).map(|x| p.apply(x)).collect()
}

pub fn to_perm(p: &Perm) -> Permutation {
    Permutation::new(p.iter().map(|&x| x as u32).collect()).unwrap()
}

/// Closure of the generators under composition, breadth first.
pub fn elements(g: &PermGroup) -> BTreeSet<Perm> {
    let n = g.degree();
    let gens: Vec<Perm> = g.generators().iter().map(to_vec).collect();
    let id: Perm = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y: Perm = x.iter().map(|&i| s[i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn orbit_labels<T: Clone + Ord + std::hash::Hash>(
    items: &[T],
    group: &BTreeSet<Perm>,
    act: impl Fn(&T, &Perm) -> T,
) -> HashMap<T, usize> {
    let mut label = HashMap::new();
    let mut next = 0;
    for x in items {
        if label.contains_key(x) {
            continue;
        }
        for g in group {
            label.insert(act(x, g), next);
        }
        next += 1;
    }
    label
}

fn preserving<T: Clone + Ord + std::hash::Hash>(
    n: usize,
    items: &[T],
    group: &BTreeSet<Perm>,
    act: impl Fn(&T, &Perm) -> T,
) -> BTreeSet<Perm> {
    let label = orbit_labels(items, group, &act);
    all_perms(n)
        .filter(|s| items.iter().all(|x| label[x] == label[&act(x, s)]))
        .collect()
}

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// Permutations keeping every orbit on unordered pairs.
pub fn star_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let act = |&(u, v): &(usize, usize), g: &Perm| (g[u].min(g[v]), g[u].max(g[v]));
    preserving(n, &unordered_pairs(n), group, act)
}

/// Permutations keeping every orbit on ordered pairs, diagonal included.
pub fn arc_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let pairs: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).collect();
    preserving(n, &pairs, group, |&(u, v), g| (g[u], g[v]))
}

fn image_of_set(m: u32, g: &Perm) -> u32 {
    (0..g.len())
        .filter(|&v| m >> v & 1 == 1)
        .map(|v| 1u32 << g[v])
        .sum()
}

/// Permutations keeping every orbit on nonempty subsets.
pub fn subset_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let sets: Vec<u32> = (1u32..1 << n).collect();
    preserving(n, &sets, group, |&m, g| image_of_set(m, g))
}

pub fn graph_automorphisms(g: &ColoredGraph) -> BTreeSet<Perm> {
    let pairs = unordered_pairs(g.n());
    all_perms(g.n())
        .filter(|s| {
            pairs
                .iter()
                .all(|&(u, v)| g.color(u, v) == g.color(s[u], s[v]))
        })
        .collect()
}

pub fn digraph_automorphisms(d: &ColoredDigraph) -> BTreeSet<Perm> {
    let n = d.n();
    all_perms(n)
        .filter(|s| {
            (0..n).all(|v| d.vertex_color(v) == d.vertex_color(s[v]))
                && (0..n)
                    .cartesian_product(0..n)
                    .filter(|(u, v)| u != v)
                    .all(|(u, v)| d.color(u, v) == d.color(s[u], s[v]))
        })
        .collect()
}

pub fn hypergraph_automorphisms(h: &ColoredHypergraph) -> BTreeSet<Perm> {
    let n = h.n();
    all_perms(n)
        .filter(|s| (1u32..1 << n).all(|m| h.color(m) == h.color(image_of_set(m, s))))
        .collect()
}

/// `p` maps every unordered pair into the orbit of that pair.
pub fn keeps_pair_orbits(group: &BTreeSet<Perm>, p: &Perm) -> bool {
    let act = |&(u, v): &(usize, usize), g: &Perm| (g[u].min(g[v]), g[u].max(g[v]));
    let pairs = unordered_pairs(p.len());
    let label = orbit_labels(&pairs, group, act);
    pairs.iter().all(|x| label[x] == label[&act(x, p)])
}

/// `p` maps every ordered pair into the orbit of that pair.
pub fn keeps_arc_orbits(group: &BTreeSet<Perm>, p: &Perm) -> bool {
    let n = p.len();
    let pairs: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).collect();
    let act = |&(u, v): &(usize, usize), g: &Perm| (g[u], g[v]);
    let label = orbit_labels(&pairs, group, act);
    pairs.iter().all(|x| label[x] == label[&act(x, p)])
}

/// `p` maps every nonempty subset into the orbit of that subset.
pub fn keeps_subset_orbits(group: &BTreeSet<Perm>, p: &Perm) -> bool {
    let sets: Vec<u32> = (1u32..1 << p.len()).collect();
    let label = orbit_labels(&sets, group, |&m, g| image_of_set(m, g));
    sets.iter().all(|m| label[m] == label[&image_of_set(*m, p)])
}
