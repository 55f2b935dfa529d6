//! Backtracking automorphism and isomorphism search with color refinement.
//!
//! Vertices are colored by an invariant labeling, the coloring is refined
//! until stable, and a vertex of the smallest nontrivial cell is
//! individualized. Automorphism groups are built level by level along the
//! chain of point stabilizers of the individualized vertices, so the group
//! order comes out as a product of orbit lengths without enumerating the
//! group.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::Limits;
use crate::perm::{for_each_permutation, Permutation};

/// Isomorphism-invariant labels fed into the refinement.
pub struct Invariants {
    pub vertex: Vec<u64>,
    /// Row-major `n x n` arc labels; the diagonal is ignored.
    pub arcs: Vec<u64>,
}

pub trait Structure {
    fn size(&self) -> usize;
    /// Labels must be comparable between two structures of the same type.
    fn invariants(&self) -> Invariants;
    /// Exact test that `perm` carries `self` onto `other`.
    fn maps_onto(&self, other: &Self, perm: &Permutation) -> bool;
}

struct Side {
    n: usize,
    arcs: Vec<u64>,
}

struct Budget {
    deadline: Option<Instant>,
    timeout: Duration,
    nodes: u64,
}

impl Budget {
    fn new(limits: &Limits) -> Self {
        Self {
            deadline: limits.timeout.map(|t| Instant::now() + t),
            timeout: limits.timeout.unwrap_or_default(),
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(64) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::Timeout(self.timeout));
                }
            }
        }
        Ok(())
    }
}

type Signature = (u32, Vec<(u64, u64, u32)>);

fn signature(side: &Side, colors: &[u32], v: usize) -> Signature {
    let n = side.n;
    let mut nbrs: Vec<(u64, u64, u32)> = (0..n)
        .filter(|&u| u != v)
        .map(|u| (side.arcs[v * n + u], side.arcs[u * n + v], colors[u]))
        .collect();
    nbrs.sort_unstable();
    (colors[v], nbrs)
}

fn histogram(colors: &[u32]) -> Vec<u32> {
    let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut h = vec![0; k];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

/// Relabels both colorings jointly by sorted rank of their keys.
fn rank_jointly<K: Ord + Clone>(left: &[K], right: &[K]) -> (Vec<u32>, Vec<u32>) {
    let mut keys: Vec<K> = left.iter().chain(right).cloned().collect();
    keys.sort();
    keys.dedup();
    let rank = |k: &K| keys.binary_search(k).expect("key present") as u32;
    (
        left.iter().map(rank).collect(),
        right.iter().map(rank).collect(),
    )
}

fn cell_count(colors: &[u32]) -> usize {
    histogram(colors).iter().filter(|&&c| c > 0).count()
}

/// Refines both colorings to a common stable coloring. Returns `false` as
/// soon as the two color histograms differ.
fn refine(left: &Side, lc: &mut Vec<u32>, right: &Side, rc: &mut Vec<u32>) -> bool {
    let (l, r) = rank_jointly(lc, rc);
    *lc = l;
    *rc = r;
    if histogram(lc) != histogram(rc) {
        return false;
    }
    let mut cells = cell_count(lc);
    loop {
        let ls: Vec<Signature> = (0..left.n).map(|v| signature(left, lc, v)).collect();
        let rs: Vec<Signature> = (0..right.n).map(|v| signature(right, rc, v)).collect();
        let (l, r) = rank_jointly(&ls, &rs);
        if histogram(&l) != histogram(&r) {
            return false;
        }
        let new_cells = cell_count(&l);
        *lc = l;
        *rc = r;
        if new_cells == cells {
            return true;
        }
        cells = new_cells;
    }
}

/// Smallest color with more than one vertex, if any.
fn target_cell(colors: &[u32]) -> Option<u32> {
    histogram(colors)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 1)
        .min_by_key(|(i, &c)| (c, *i))
        .map(|(i, _)| i as u32)
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
    let mut out = colors.to_vec();
    out[v] = fresh;
    out
}

struct Searcher<'a, S: Structure> {
    left: &'a S,
    right: &'a S,
    lside: Side,
    rside: Side,
    budget: Budget,
}

impl<'a, S: Structure> Searcher<'a, S> {
    fn new(left: &'a S, right: &'a S, limits: &Limits) -> (Self, Vec<u64>, Vec<u64>) {
        let li = left.invariants();
        let ri = right.invariants();
        let searcher = Self {
            left,
            right,
            lside: Side {
                n: left.size(),
                arcs: li.arcs,
            },
            rside: Side {
                n: right.size(),
                arcs: ri.arcs,
            },
            budget: Budget::new(limits),
        };
        (searcher, li.vertex, ri.vertex)
    }

    fn find(&mut self, mut lc: Vec<u32>, mut rc: Vec<u32>) -> Result<Option<Permutation>> {
        self.budget.tick()?;
        if !refine(&self.lside, &mut lc, &self.rside, &mut rc) {
            return Ok(None);
        }
        let Some(cell) = target_cell(&lc) else {
            let mut position = vec![0usize; lc.len()];
            for (u, &c) in rc.iter().enumerate() {
                position[c as usize] = u;
            }
            let images = lc.iter().map(|&c| position[c as usize] as u32).collect();
            let p = Permutation::from_images_unchecked(images);
            return Ok(self.left.maps_onto(self.right, &p).then_some(p));
        };
        let x = lc.iter().position(|&c| c == cell).expect("cell nonempty");
        let lc2 = individualize(&lc, x);
        for y in (0..rc.len()).filter(|&y| rc[y] == cell) {
            let rc2 = individualize(&rc, y);
            if let Some(p) = self.find(lc2.clone(), rc2)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

fn check_size(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.graph_cap {
        return Err(Error::StructureTooLarge {
            n,
            cap: limits.graph_cap,
        });
    }
    Ok(())
}

/// Some isomorphism from `left` onto `right`, if one exists.
pub fn find_isomorphism<S: Structure>(
    left: &S,
    right: &S,
    limits: &Limits,
) -> Result<Option<Permutation>> {
    if left.size() != right.size() {
        return Ok(None);
    }
    check_size(left.size(), limits)?;
    let (mut s, lv, rv) = Searcher::new(left, right, limits);
    let (lc, rc) = rank_jointly(&lv, &rv);
    s.find(lc, rc)
}

/// Generators and exact order of the automorphism group of `s`.
pub fn automorphisms<S: Structure>(s: &S, limits: &Limits) -> Result<(Vec<Permutation>, BigUint)> {
    let n = s.size();
    check_size(n, limits)?;
    let (mut searcher, lv, _) = Searcher::new(s, s, limits);
    let (mut colors, _) = rank_jointly(&lv, &lv);
    let mut scratch = colors.clone();
    refine(&searcher.lside, &mut colors, &searcher.rside, &mut scratch);

    // base points with the stable coloring in force when each was chosen
    let mut levels: Vec<(Vec<u32>, usize)> = Vec::new();
    while let Some(cell) = target_cell(&colors) {
        let b = colors
            .iter()
            .position(|&c| c == cell)
            .expect("cell nonempty");
        levels.push((colors.clone(), b));
        let mut next = individualize(&colors, b);
        let mut scratch = next.clone();
        refine(&searcher.lside, &mut next, &searcher.rside, &mut scratch);
        colors = next;
    }

    let mut gens: Vec<Permutation> = Vec::new();
    let mut order = BigUint::one();
    for (colors, b) in levels.iter().rev() {
        let candidates: Vec<usize> = (0..n).filter(|&y| colors[y] == colors[*b]).collect();
        let mut orbit = orbit_of(*b, &gens, n);
        let lc = individualize(colors, *b);
        for &y in &candidates {
            if orbit[y] {
                continue;
            }
            if let Some(p) = searcher.find(lc.clone(), individualize(colors, y))? {
                gens.push(p);
                orbit = orbit_of(*b, &gens, n);
            }
        }
        order *= BigUint::from(orbit.iter().filter(|&&x| x).count());
    }
    Ok((gens, order))
}

fn orbit_of(x: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

/// Every automorphism, by scanning all of `S_n`. Only for `n <= 8`.
pub fn automorphisms_exhaustive<S: Structure>(s: &S) -> Result<Vec<Permutation>> {
    let n = s.size();
    if n > 8 {
        return Err(Error::StructureTooLarge { n, cap: 8 });
    }
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        if s.maps_onto(s, p) {
            out.push(p.clone());
        }
        true
    });
    Ok(out)
}

/// Deterministic hash of a histogram, used to compress invariants.
pub(crate) fn histogram_label<K: Ord + std::hash::Hash + Copy>(
    items: impl Iterator<Item = K>,
) -> u64 {
    use std::hash::{DefaultHasher, Hasher};
    let mut counts: HashMap<K, u64> = HashMap::new();
    for k in items {
        *counts.entry(k).or_default() += 1;
    }
    let mut sorted: Vec<(K, u64)> = counts.into_iter().collect();
    sorted.sort_unstable();
    let mut h = DefaultHasher::new();
    for (k, c) in sorted {
        k.hash(&mut h);
        h.write_u64(c);
    }
    h.finish()
}
