//! Orbits, orbitals, 2*-orbitals and the pairing of orbitals.
//!
//! Everything here is computed from the generators alone, so it works for
//! groups far too large to enumerate.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::{for_each_permutation, Permutation};
use crate::search;

pub(crate) struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

/// Numbers the classes of `dsu` over `0..n` by first occurrence.
fn label_classes(dsu: &mut DisjointSets, n: usize) -> (Vec<usize>, usize) {
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let labels = (0..n)
        .map(|x| {
            let r = dsu.find(x);
            let next = ids.len();
            *ids.entry(r).or_insert(next)
        })
        .collect();
    (labels, ids.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    /// Classes sorted by their least element; each class is sorted.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_transitive(&self) -> bool {
        self.classes.len() == 1
    }
}

pub fn orbits(g: &PermGroup) -> OrbitPartition {
    let n = g.degree();
    let mut dsu = DisjointSets::new(n);
    for p in g.generators() {
        for x in 0..n {
            dsu.union(x, p.apply(x));
        }
    }
    let (class_of, count) = label_classes(&mut dsu, n);
    let mut classes = vec![Vec::new(); count];
    for (x, &c) in class_of.iter().enumerate() {
        classes[c].push(x);
    }
    OrbitPartition { classes, class_of }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalData {
    pub degree: usize,
    pub orbits: OrbitPartition,
    /// Orbital index of the ordered pair `(u, v)` at `u * degree + v`.
    /// Orbitals are numbered by their least pair in row-major order.
    pub orbital_of: Vec<usize>,
    pub trivial: Vec<bool>,
    /// `pairing[o]` is the orbital of the reversed pairs of `o`.
    pub pairing: Vec<usize>,
    /// 2*-orbital of `{u, v}`, `u < v`, in upper-triangular row-major order.
    pub star_orbital_of: Vec<u32>,
    pub star_count: usize,
    pub rank: usize,
    pub nsp: usize,
}

impl OrbitalData {
    pub fn orbital(&self, u: usize, v: usize) -> usize {
        self.orbital_of[u * self.degree + v]
    }

    pub fn is_self_paired(&self, o: usize) -> bool {
        self.pairing[o] == o
    }

    pub fn all_self_paired(&self) -> bool {
        (0..self.rank).all(|o| self.is_self_paired(o))
    }

    /// Pairs of each orbital, in row-major order.
    pub fn orbital_pairs(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.degree;
        let mut out = vec![Vec::new(); self.rank];
        for u in 0..n {
            for v in 0..n {
                out[self.orbital(u, v)].push((u, v));
            }
        }
        out
    }

    /// `true` iff `alpha` maps every nontrivial orbital onto its paired orbital.
    pub fn is_transposing(&self, alpha: &Permutation) -> bool {
        let n = self.degree;
        alpha.degree() == n
            && (0..n).all(|u| {
                (0..n).filter(|&v| v != u).all(|v| {
                    self.orbital(alpha.apply(u), alpha.apply(v)) == self.pairing[self.orbital(u, v)]
                })
            })
    }

    /// `true` iff `alpha` maps every 2*-orbital onto itself.
    pub fn preserves_star_orbitals(&self, alpha: &Permutation) -> bool {
        let n = self.degree;
        let idx = |u: usize, v: usize| crate::structures::pair_index(n, u, v);
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                self.star_orbital_of[idx(u, v)]
                    == self.star_orbital_of[idx(alpha.apply(u), alpha.apply(v))]
            })
        })
    }
}

pub fn orbitals(g: &PermGroup) -> OrbitalData {
    let n = g.degree();
    let mut dsu = DisjointSets::new(n * n);
    for p in g.generators() {
        for u in 0..n {
            for v in 0..n {
                dsu.union(u * n + v, p.apply(u) * n + p.apply(v));
            }
        }
    }
    let (orbital_of, rank) = label_classes(&mut dsu, n * n);
    let mut trivial = vec![false; rank];
    let mut pairing = vec![usize::MAX; rank];
    for u in 0..n {
        for v in 0..n {
            let o = orbital_of[u * n + v];
            trivial[o] = u == v;
            pairing[o] = orbital_of[v * n + u];
        }
    }
    let mut star_ids: HashMap<(usize, usize), u32> = HashMap::new();
    let mut star_orbital_of = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let o = orbital_of[u * n + v];
            let key = (o.min(pairing[o]), o.max(pairing[o]));
            let next = star_ids.len() as u32;
            star_orbital_of.push(*star_ids.entry(key).or_insert(next));
        }
    }
    let nsp = (0..rank).filter(|&o| pairing[o] > o).count();
    OrbitalData {
        degree: n,
        orbits: orbits(g),
        orbital_of,
        trivial,
        pairing,
        star_orbital_of,
        star_count: star_ids.len(),
        rank,
        nsp,
    }
}

/// A permutation of the points mapping every nontrivial orbital onto its
/// paired orbital, found as an isomorphism from the orbital digraph (without
/// vertex colors) onto its reversal. When all orbitals are self-paired the
/// identity is returned.
pub fn transposing_permutation(g: &PermGroup) -> Result<Option<Permutation>> {
    let data = orbitals(g);
    if data.all_self_paired() {
        return Ok(Some(g.identity()));
    }
    let digraph = crate::structures::orbital_digraph(g)?.with_vertex_colors(vec![0; g.degree()])?;
    let reversed = digraph.reversed();
    let found = search::find_isomorphism(&digraph, &reversed, &g.limits())?;
    debug_assert!(found.as_ref().is_none_or(|a| data.is_transposing(a)));
    Ok(found)
}

/// Finest block system in which `0` and `x` share a block.
fn minimal_blocks(g: &PermGroup, x: usize) -> DisjointSets {
    let mut dsu = DisjointSets::new(g.degree());
    let mut pending = vec![(0, x)];
    dsu.union(0, x);
    while let Some((a, b)) = pending.pop() {
        for p in g.generators() {
            let (c, d) = (p.apply(a), p.apply(b));
            if dsu.find(c) != dsu.find(d) {
                dsu.union(c, d);
                pending.push((c, d));
            }
        }
    }
    dsu
}

/// Transitive with no block systems other than the trivial ones.
pub fn is_primitive(g: &PermGroup) -> bool {
    if !orbits(g).is_transitive() {
        return false;
    }
    let n = g.degree();
    (1..n).all(|x| {
        let mut dsu = minimal_blocks(g, x);
        (0..n).all(|y| dsu.find(y) == 0)
    })
}

/// Exhaustive scan of `S_n` for a transposing permutation; `n <= 8`.
pub fn transposing_exhaustive(g: &PermGroup) -> Option<Permutation> {
    let data = orbitals(g);
    let mut found = None;
    for_each_permutation(g.degree(), |p| {
        if data.is_transposing(p) {
            found = Some(p.clone());
            false
        } else {
            true
        }
    });
    found
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitalReport {
    pub rank: usize,
    pub nsp: usize,
    pub orbitals: Vec<Vec<[usize; 2]>>,
    pub trivial: Vec<bool>,
    pub pairing: Vec<usize>,
    pub transposable: bool,
}

pub fn orbital_report(g: &PermGroup) -> Result<OrbitalReport> {
    let data = orbitals(g);
    Ok(OrbitalReport {
        rank: data.rank,
        nsp: data.nsp,
        orbitals: data
            .orbital_pairs()
            .into_iter()
            .map(|ps| ps.into_iter().map(|(u, v)| [u, v]).collect())
            .collect(),
        trivial: data.trivial.clone(),
        pairing: data.pairing.clone(),
        transposable: transposing_permutation(g)?.is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::product::parallel_multiple;

    fn g(name: &str) -> PermGroup {
        catalog_group(name).unwrap()
    }

    #[test]
    fn primitivity_examples() {
        for name in ["S2", "C3", "S4", "A4", "C5", "D5"] {
            assert!(is_primitive(&g(name)), "{name}");
        }
        for name in ["I2", "C4", "D4", "K4", "C6"] {
            assert!(!is_primitive(&g(name)), "{name}");
        }
        let wr = crate::product::wreath_imprimitive(&g("S2"), &g("S3")).unwrap();
        assert!(!is_primitive(&wr));
        let pa = crate::product::wreath_product_action(&g("S3"), &g("S2")).unwrap();
        assert!(is_primitive(&pa));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&g("K4")).classes, vec![vec![0, 1, 2, 3]]);
        assert_eq!(orbits(&g("I3")).classes, vec![vec![0], vec![1], vec![2]]);
        let p = parallel_multiple(&g("C3"), 2).unwrap();
        assert_eq!(orbits(&p).classes, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn orbital_examples() {
        let s3 = orbitals(&g("S3"));
        assert_eq!((s3.rank, s3.nsp), (2, 0));
        let i2 = orbitals(&g("I2"));
        assert_eq!((i2.rank, i2.nsp), (4, 1));
    }

    #[test]
    fn cyclic_four_orbitals_by_enumeration() {
        // oracle: the orbital of (u, v) under C4 is determined by v - u mod 4
        let data = orbitals(&g("C4"));
        assert_eq!((data.rank, data.nsp), (4, 1));
        for u in 0..4 {
            for v in 0..4 {
                for x in 0..4 {
                    for y in 0..4 {
                        let same = (v + 4 - u) % 4 == (y + 4 - x) % 4;
                        assert_eq!(data.orbital(u, v) == data.orbital(x, y), same);
                    }
                }
            }
        }
        let step = |d: usize| data.orbital(0, d);
        assert_eq!(data.pairing[step(1)], step(3));
        assert_eq!(data.pairing[step(2)], step(2));
        assert!(data.trivial[step(0)]);
    }

    #[test]
    fn transposing_examples() {
        assert!(transposing_permutation(&g("I2")).unwrap().is_some());
        assert_eq!(
            transposing_permutation(&g("S3")).unwrap(),
            Some(Permutation::identity(3))
        );
        let data = orbitals(&g("C3"));
        let reflection = Permutation::from_cycles(3, &[[1, 2]]).unwrap();
        assert!(data.is_transposing(&reflection));
        let found = transposing_permutation(&g("C3")).unwrap().unwrap();
        assert!(data.is_transposing(&found));
    }

    #[test]
    fn transposing_search_agrees_with_scan() {
        for name in ["I2", "I3", "C3", "C4", "C5", "C6", "D4", "A4", "K4", "S4"] {
            let group = g(name);
            let found = transposing_permutation(&group).unwrap();
            assert_eq!(
                found.is_some(),
                transposing_exhaustive(&group).is_some(),
                "{name}"
            );
        }
    }

    #[test]
    fn star_orbitals_fuse_paired_orbitals() {
        let data = orbitals(&g("C5"));
        assert_eq!(data.rank, 5);
        assert_eq!(data.nsp, 2);
        assert_eq!(data.star_count, 2);
    }
}
