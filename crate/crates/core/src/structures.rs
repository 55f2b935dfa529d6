//! Complete edge-colored graphs, digraphs and hypergraphs, and the
//! constructions built from them.

use std::collections::HashMap;
use std::hash::Hash;

use crate::closure::{automorphism_group, AnyStructure};
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::orbits::{orbitals, orbits, OrbitPartition};
use crate::perm::Permutation;

pub type Color = u32;

#[inline]
pub(crate) fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Complete graph with a color on every unordered pair of distinct vertices.
/// Colors are stored upper-triangular, row-major: `{0,1}, {0,2}, .., {1,2}, ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<Color>,
}

impl ColoredGraph {
    pub fn new(n: usize, colors: Vec<Color>) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        if colors.len() != n * (n - 1) / 2 {
            return Err(Error::SizeMismatch {
                left: n * (n - 1) / 2,
                right: colors.len(),
            });
        }
        Ok(Self { n, colors })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                colors.push(f(u, v));
            }
        }
        Self::new(n, colors)
    }

    pub fn monochromatic(n: usize, color: Color) -> Result<Self> {
        Self::from_fn(n, |_, _| color)
    }

    pub fn rainbow(n: usize) -> Result<Self> {
        let mut next = 0;
        Self::from_fn(n, |_, _| {
            next += 1;
            next - 1
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert_ne!(u, v);
        self.colors[pair_index(self.n, u, v)]
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: Color) {
        let i = pair_index(self.n, u, v);
        self.colors[i] = c;
    }

    pub fn num_colors(&self) -> usize {
        distinct(&self.colors)
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|u| {
                (u + 1..self.n).all(|v| self.color(u, v) == self.color(p.apply(u), p.apply(v)))
            })
    }

    /// Shifts every color by `offset`.
    pub fn shifted(&self, offset: Color) -> Self {
        Self {
            n: self.n,
            colors: self.colors.iter().map(|c| c + offset).collect(),
        }
    }
}

/// Complete digraph with a color on every arc `(u, v)`, `u != v`, plus a
/// vertex color. Arc colors are stored row-major in an `n x n` table whose
/// diagonal is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    colors: Vec<Color>,
    vertex_colors: Vec<Color>,
}

impl ColoredDigraph {
    pub fn new(n: usize, mut colors: Vec<Color>, vertex_colors: Vec<Color>) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        if colors.len() != n * n {
            return Err(Error::SizeMismatch {
                left: n * n,
                right: colors.len(),
            });
        }
        if vertex_colors.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: vertex_colors.len(),
            });
        }
        for v in 0..n {
            colors[v * n + v] = 0;
        }
        Ok(Self {
            n,
            colors,
            vertex_colors,
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    colors[u * n + v] = f(u, v);
                }
            }
        }
        Self::new(n, colors, vec![0; n])
    }

    pub fn with_vertex_colors(mut self, vertex_colors: Vec<Color>) -> Result<Self> {
        if vertex_colors.len() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: vertex_colors.len(),
            });
        }
        self.vertex_colors = vertex_colors;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert_ne!(u, v);
        self.colors[u * self.n + v]
    }

    pub fn vertex_color(&self, v: usize) -> Color {
        self.vertex_colors[v]
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    /// Row-major arc table; diagonal entries are zero.
    pub fn arc_table(&self) -> &[Color] {
        &self.colors
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: Color) {
        assert_ne!(u, v);
        self.colors[u * self.n + v] = c;
    }

    /// The same digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        let mut colors = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    colors[v * n + u] = self.colors[u * n + v];
                }
            }
        }
        Self {
            n,
            colors,
            vertex_colors: self.vertex_colors.clone(),
        }
    }

    pub fn num_colors(&self) -> usize {
        distinct(&self.domain())
    }

    fn domain(&self) -> Vec<Color> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .map(|(u, v)| self.color(u, v))
            .collect()
    }
}

/// Colors on all nonempty subsets of `{0, .., n-1}`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredHypergraph {
    n: usize,
    colors: Vec<Color>,
}

impl ColoredHypergraph {
    pub const MAX_VERTICES: usize = 24;

    /// `colors[mask]` for `mask` in `1..2^n`; entry 0 is ignored.
    pub fn new(n: usize, mut colors: Vec<Color>) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall(n));
        }
        if n > Self::MAX_VERTICES {
            return Err(Error::StructureTooLarge {
                n,
                cap: Self::MAX_VERTICES,
            });
        }
        if colors.len() != 1 << n {
            return Err(Error::SizeMismatch {
                left: 1 << n,
                right: colors.len(),
            });
        }
        colors[0] = 0;
        Ok(Self { n, colors })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u32) -> Color) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::StructureTooLarge {
                n,
                cap: Self::MAX_VERTICES,
            });
        }
        let mut colors = vec![0; 1 << n];
        for (mask, c) in colors.iter_mut().enumerate().skip(1) {
            *c = f(mask as u32);
        }
        Self::new(n, colors)
    }

    /// Two-colored hypergraph: color 1 on the members of `family`, 0 elsewhere.
    pub fn from_family(n: usize, family: &[u32]) -> Result<Self> {
        let mut h = Self::from_fn(n, |_| 0)?;
        for &m in family {
            if m == 0 || m as usize >= 1 << n {
                return Err(Error::Invalid(format!("subset mask {m} out of range")));
            }
            h.colors[m as usize] = 1;
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, mask: u32) -> Color {
        self.colors[mask as usize]
    }

    pub fn set_color(&mut self, mask: u32, c: Color) {
        assert!(mask != 0);
        self.colors[mask as usize] = c;
    }

    pub fn num_colors(&self) -> usize {
        distinct(&self.colors[1..])
    }

    pub fn preserved_by(&self, p: &Permutation) -> bool {
        p.degree() == self.n
            && (1..self.colors.len() as u32).all(|m| self.color(m) == self.color(p.apply_mask(m)))
    }
}

fn distinct(colors: &[Color]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// The color function of a structure, listed over its domain in a fixed order.
pub trait Coloring {
    fn kind(&self) -> &'static str;
    fn vertex_count(&self) -> usize;
    fn domain_colors(&self) -> Vec<Color>;
}

impl Coloring for ColoredGraph {
    fn kind(&self) -> &'static str {
        "graph"
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn domain_colors(&self) -> Vec<Color> {
        self.colors.clone()
    }
}

impl Coloring for ColoredDigraph {
    fn kind(&self) -> &'static str {
        "digraph"
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    /// Arc colors followed by the vertex colors, so vertex colors are
    /// compared as a separate part of the domain.
    fn domain_colors(&self) -> Vec<Color> {
        let mut d = self.domain();
        let shift = d.iter().copied().max().map_or(0, |m| m + 1);
        d.extend(self.vertex_colors.iter().map(|c| c + shift));
        d
    }
}

impl Coloring for ColoredHypergraph {
    fn kind(&self) -> &'static str {
        "hypergraph"
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn domain_colors(&self) -> Vec<Color> {
        self.colors[1..].to_vec()
    }
}

fn check_same_size(a: &impl Coloring, b: &impl Coloring) -> Result<()> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::SizeMismatch {
            left: a.vertex_count(),
            right: b.vertex_count(),
        });
    }
    Ok(())
}

/// `true` iff the color partition of `fine` refines that of `coarse`.
pub fn is_subcoloring<C: Coloring>(fine: &C, coarse: &C) -> Result<bool> {
    check_same_size(fine, coarse)?;
    let mut map: HashMap<Color, Color> = HashMap::new();
    for (f, c) in fine.domain_colors().into_iter().zip(coarse.domain_colors()) {
        if *map.entry(f).or_insert(c) != c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `true` iff both color functions induce the same partition of the domain.
pub fn color_equivalent<C: Coloring>(a: &C, b: &C) -> Result<bool> {
    Ok(is_subcoloring(a, b)? && is_subcoloring(b, a)?)
}

/// `G*(A)`: each unordered pair is colored by its 2*-orbital.
pub fn orbital_graph(a: &PermGroup) -> Result<ColoredGraph> {
    let data = orbitals(a);
    ColoredGraph::new(a.degree(), data.star_orbital_of.clone())
}

/// `G(A)`: each arc is colored by its orbital; vertices by their orbit.
pub fn orbital_digraph(a: &PermGroup) -> Result<ColoredDigraph> {
    let data = orbitals(a);
    let n = a.degree();
    let colors = data.orbital_of.iter().map(|&o| o as Color).collect();
    let vertex_colors = data.orbits.class_of.iter().map(|&c| c as Color).collect();
    ColoredDigraph::new(n, colors, vertex_colors)
}

/// Colors each nonempty subset by its orbit under `b`.
pub fn orbit_hypergraph(b: &PermGroup) -> Result<ColoredHypergraph> {
    let n = b.degree();
    let cap = b
        .limits()
        .hypergraph_cap
        .min(ColoredHypergraph::MAX_VERTICES);
    if n > cap {
        return Err(Error::StructureTooLarge { n, cap });
    }
    let size = 1usize << n;
    let mut dsu = crate::orbits::DisjointSets::new(size);
    for g in b.generators() {
        for m in 1..size as u32 {
            dsu.union(m as usize, g.apply_mask(m) as usize);
        }
    }
    let mut index: HashMap<usize, Color> = HashMap::new();
    ColoredHypergraph::from_fn(n, |m| {
        let root = dsu.find(m as usize);
        let next = index.len() as Color;
        *index.entry(root).or_insert(next)
    })
}

/// Lexicographic product `G o H` on `W x V`.
///
/// The vertex `(w, v)` gets index `v * |W| + w`, the same number the
/// imprimitive wreath product gives the point `(v, w)`, so
/// `Aut(G o H)` can be compared directly with `Aut(H) wr Aut(G)`.
pub fn composition(g: &ColoredGraph, h: &ColoredGraph) -> Result<ColoredGraph> {
    let (nw, nv) = (g.n(), h.n());
    ColoredGraph::from_fn(nv * nw, |x, y| {
        let (v1, w1) = (x / nw, x % nw);
        let (v2, w2) = (y / nw, y % nw);
        if w1 != w2 {
            g.color(w1, w2)
        } else {
            h.color(v1, v2)
        }
    })
}

fn flatten<K: Hash + Eq + Clone>(keys: &[Option<K>], start: Color, out: &mut [Color]) -> Color {
    let mut ids: HashMap<K, Color> = HashMap::new();
    for (slot, key) in out.iter_mut().zip(keys) {
        if let Some(k) = key {
            let next = start + ids.len() as Color;
            *slot = *ids.entry(k.clone()).or_insert(next);
        }
    }
    start + ids.len() as Color
}

fn aut_orbits(s: AnyStructure, limits: &Limits) -> Result<OrbitPartition> {
    Ok(orbits(&automorphism_group(&s, limits)?))
}

/// Free composition `G o_f H` on `W x V` (vertex numbering as in [`composition`]).
///
/// A non-vertical edge `{(w1, v1), (w2, v2)}` is colored by the unordered
/// pair of `Aut(H)`-orbits of `v1`, `v2` together with the color of
/// `{w1, w2}` in `G`; a vertical edge in fibre `w` by the `Aut(G)`-orbit of
/// `w` together with the color of `{v1, v2}` in `H`. Non-vertical colors are
/// numbered first, vertical colors follow in a disjoint range.
pub fn free_composition(
    g: &ColoredGraph,
    h: &ColoredGraph,
    limits: &Limits,
) -> Result<ColoredGraph> {
    let (nw, nv) = (g.n(), h.n());
    let h_orbits = aut_orbits(AnyStructure::Graph(h.clone()), limits)?;
    let g_orbits = aut_orbits(AnyStructure::Graph(g.clone()), limits)?;
    free_composition_with(
        nw,
        nv,
        &g_orbits,
        &h_orbits,
        |w1, w2, i, j| (i.min(j), i.max(j), g.color(w1, w2)),
        h,
    )
}

/// Free composition of colored digraphs, `G o_f H` on `W x V`.
///
/// The arc `((w1, v1), (w2, v2))` with `w1 != w2` is colored by the ordered
/// pair of `Aut(H)`-orbits of `v1`, `v2` and the color of `(w1, w2)` in `G`;
/// an arc inside fibre `w` by the `Aut(G)`-orbit of `w` and the color of
/// `(v1, v2)` in `H`. A vertex `(w, v)` is colored by its pair of orbits.
pub fn free_composition_directed(
    g: &ColoredDigraph,
    h: &ColoredDigraph,
    limits: &Limits,
) -> Result<ColoredDigraph> {
    let (nw, nv) = (g.n(), h.n());
    let h_orbits = aut_orbits(AnyStructure::Digraph(h.clone()), limits)?;
    let g_orbits = aut_orbits(AnyStructure::Digraph(g.clone()), limits)?;
    let n = nw * nv;
    let mut cross_keys = vec![None; n * n];
    let mut vertical_keys = vec![None; n * n];
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            let (v1, w1) = (x / nw, x % nw);
            let (v2, w2) = (y / nw, y % nw);
            if w1 != w2 {
                let key = (
                    h_orbits.class_of[v1],
                    h_orbits.class_of[v2],
                    g.color(w1, w2),
                );
                cross_keys[x * n + y] = Some(key);
            } else {
                vertical_keys[x * n + y] = Some((g_orbits.class_of[w1], h.color(v1, v2)));
            }
        }
    }
    let mut colors = vec![0; n * n];
    let next = flatten(&cross_keys, 0, &mut colors);
    flatten(&vertical_keys, next, &mut colors);
    let vertex_keys: Vec<Option<(usize, usize)>> = (0..n)
        .map(|x| Some((g_orbits.class_of[x % nw], h_orbits.class_of[x / nw])))
        .collect();
    let mut vertex_colors = vec![0; n];
    flatten(&vertex_keys, 0, &mut vertex_colors);
    ColoredDigraph::new(n, colors, vertex_colors)
}

fn free_composition_with(
    nw: usize,
    nv: usize,
    g_orbits: &OrbitPartition,
    h_orbits: &OrbitPartition,
    mut cross: impl FnMut(usize, usize, usize, usize) -> (usize, usize, Color),
    h: &ColoredGraph,
) -> Result<ColoredGraph> {
    let n = nw * nv;
    let pairs = n * (n - 1) / 2;
    let mut cross_keys = Vec::with_capacity(pairs);
    let mut vertical_keys = Vec::with_capacity(pairs);
    for x in 0..n {
        for y in x + 1..n {
            let (v1, w1) = (x / nw, x % nw);
            let (v2, w2) = (y / nw, y % nw);
            if w1 != w2 {
                let (i, j) = (h_orbits.class_of[v1], h_orbits.class_of[v2]);
                cross_keys.push(Some(cross(w1, w2, i, j)));
                vertical_keys.push(None);
            } else {
                cross_keys.push(None);
                vertical_keys.push(Some((g_orbits.class_of[w1], h.color(v1, v2))));
            }
        }
    }
    let mut colors = vec![0; pairs];
    let next = flatten(&cross_keys, 0, &mut colors);
    flatten(&vertical_keys, next, &mut colors);
    ColoredGraph::new(n, colors)
}
