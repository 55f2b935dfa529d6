//! Brute-force reference computations, deliberately independent of the
//! library's search and orbit code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use wreath_core::{PermGroup, Permutation};

pub type Perm = Vec<usize>;

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn to_vec(p: &Permutation) -> Perm {
    (0..p.degree()).map(|x| p.apply(x)).collect()
}

pub fn to_perm(p: &Perm) -> Permutation {
    Permutation::new(p.iter().map(|&x| x as u32).collect()).unwrap()
}

/// All elements generated by `gens`, by breadth-first multiplication.
pub fn elements(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Perm = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn group_elements(g: &PermGroup) -> BTreeSet<Perm> {
    let gens: Vec<Perm> = g.generators().iter().map(to_vec).collect();
    elements(g.degree(), &gens)
}

/// Orbit label of every item under the group action `act`.
fn orbit_labels<T: Clone + Ord + std::hash::Hash>(
    items: &[T],
    group: &BTreeSet<Perm>,
    act: impl Fn(&T, &Perm) -> T,
) -> HashMap<T, usize> {
    let mut label: HashMap<T, usize> = HashMap::new();
    for x in items {
        if label.contains_key(x) {
            continue;
        }
        let id = label.len();
        let orbit: BTreeSet<T> = group.iter().map(|g| act(x, g)).collect();
        for y in orbit {
            label.insert(y, id);
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut out = HashMap::new();
    for x in items {
        let raw = label[x];
        let next = ids.len();
        out.insert(x.clone(), *ids.entry(raw).or_insert(next));
    }
    out
}

/// Permutations of `S_n` preserving each orbit of the group on unordered pairs.
pub fn star_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let act = |&(u, v): &(usize, usize), g: &Perm| (g[u].min(g[v]), g[u].max(g[v]));
    let label = orbit_labels(&pairs, group, act);
    all_perms(n)
        .into_iter()
        .filter(|s| pairs.iter().all(|p| label[p] == label[&act(p, s)]))
        .collect()
}

/// Permutations preserving each orbit on ordered pairs, the diagonal included.
pub fn arc_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let act = |&(u, v): &(usize, usize), g: &Perm| (g[u], g[v]);
    let label = orbit_labels(&pairs, group, act);
    all_perms(n)
        .into_iter()
        .filter(|s| pairs.iter().all(|p| label[p] == label[&act(p, s)]))
        .collect()
}

/// Permutations preserving each orbit on nonempty subsets.
pub fn subset_closure(n: usize, group: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    let sets: Vec<u32> = (1u32..1 << n).collect();
    let act = |&m: &u32, g: &Perm| {
        (0..n)
            .filter(|&v| m >> v & 1 == 1)
            .map(|v| 1u32 << g[v])
            .sum()
    };
    let label = orbit_labels(&sets, group, act);
    all_perms(n)
        .into_iter()
        .filter(|s| sets.iter().all(|m| label[m] == label[&act(m, s)]))
        .collect()
}

pub fn set_of(g: &PermGroup) -> BTreeSet<Perm> {
    g.elements().unwrap().iter().map(to_vec).collect()
}

/// Small catalog used across tests: every named group of degree at most 6.
pub fn catalog() -> Vec<(&'static str, PermGroup)> {
    [
        "I2", "S2", "I3", "C3", "S3", "I4", "C4", "K4", "D4", "A4", "S4", "C5", "D5", "A5", "C6",
        "D6",
    ]
    .into_iter()
    .map(|name| (name, wreath_core::parse_group_spec(name).unwrap()))
    .collect()
}
