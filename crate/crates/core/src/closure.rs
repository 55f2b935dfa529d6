//! Automorphism groups of colored structures and the closure operators built on them.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Limits, Membership, PermGroup};
use crate::orbits::transposing_permutation;
use crate::perm::Permutation;
use crate::search::{self, histogram_label, Invariants, Structure};
use crate::structures::{
    orbit_hypergraph, orbital_digraph, orbital_graph, ColoredDigraph, ColoredGraph,
    ColoredHypergraph,
};

impl Structure for ColoredGraph {
    fn size(&self) -> usize {
        self.n()
    }

    fn invariants(&self) -> Invariants {
        let n = self.n();
        let mut arcs = vec![0u64; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs[u * n + v] = self.color(u, v) as u64;
                }
            }
        }
        Invariants {
            vertex: vec![0; n],
            arcs,
        }
    }

    fn maps_onto(&self, other: &Self, p: &Permutation) -> bool {
        let n = self.n();
        n == other.n()
            && (0..n).all(|u| {
                (u + 1..n).all(|v| self.color(u, v) == other.color(p.apply(u), p.apply(v)))
            })
    }
}

impl Structure for ColoredDigraph {
    fn size(&self) -> usize {
        self.n()
    }

    fn invariants(&self) -> Invariants {
        Invariants {
            vertex: self.vertex_colors().iter().map(|&c| c as u64).collect(),
            arcs: self.arc_table().iter().map(|&c| c as u64).collect(),
        }
    }

    fn maps_onto(&self, other: &Self, p: &Permutation) -> bool {
        let n = self.n();
        n == other.n()
            && (0..n).all(|u| {
                self.vertex_color(u) == other.vertex_color(p.apply(u))
                    && (0..n)
                        .all(|v| u == v || self.color(u, v) == other.color(p.apply(u), p.apply(v)))
            })
    }
}

impl Structure for ColoredHypergraph {
    fn size(&self) -> usize {
        self.n()
    }

    fn invariants(&self) -> Invariants {
        let n = self.n();
        let mut per_vertex: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        let mut per_pair: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n * n];
        for m in 1u32..(1u32 << n) {
            let key = (m.count_ones(), self.color(m));
            let members: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            for (i, &u) in members.iter().enumerate() {
                per_vertex[u].push(key);
                for &v in &members[i + 1..] {
                    per_pair[u * n + v].push(key);
                }
            }
        }
        let vertex = per_vertex
            .iter()
            .enumerate()
            .map(|(v, hist)| histogram_label(hist.iter().copied().chain([(0, self.color(1 << v))])))
            .collect();
        let mut arcs = vec![0u64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let color = self.color((1 << u) | (1 << v));
                let label =
                    histogram_label(per_pair[u * n + v].iter().copied().chain([(0, color)]));
                arcs[u * n + v] = label;
                arcs[v * n + u] = label;
            }
        }
        Invariants { vertex, arcs }
    }

    fn maps_onto(&self, other: &Self, p: &Permutation) -> bool {
        self.n() == other.n()
            && (1u32..(1u32 << self.n())).all(|m| self.color(m) == other.color(p.apply_mask(m)))
    }
}

/// Any of the three colored structure kinds.
#[derive(Clone, Debug)]
pub enum AnyStructure {
    Graph(ColoredGraph),
    Digraph(ColoredDigraph),
    Hypergraph(ColoredHypergraph),
}

impl AnyStructure {
    pub fn n(&self) -> usize {
        match self {
            Self::Graph(g) => g.n(),
            Self::Digraph(d) => d.n(),
            Self::Hypergraph(h) => h.n(),
        }
    }
}

fn group_from_search<S>(s: &S, limits: &Limits) -> Result<PermGroup>
where
    S: Structure + Clone + Send + Sync + 'static,
{
    let n = s.size();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let (gens, order) = search::automorphisms(s, limits)?;
    let owned = s.clone();
    let member = move |p: &Permutation| owned.maps_onto(&owned, p);
    Ok(PermGroup::from_generators(n, gens)?
        .with_limits(*limits)
        .with_structure(Membership::Predicate(Arc::new(member)), Some(order)))
}

/// The full group of color-preserving vertex permutations.
pub fn automorphism_group(s: &AnyStructure, limits: &Limits) -> Result<PermGroup> {
    match s {
        AnyStructure::Graph(g) => group_from_search(g, limits),
        AnyStructure::Digraph(d) => group_from_search(d, limits),
        AnyStructure::Hypergraph(h) => {
            let cap = limits.hypergraph_cap.min(ColoredHypergraph::MAX_VERTICES);
            if h.n() > cap {
                return Err(Error::StructureTooLarge { n: h.n(), cap });
            }
            group_from_search(h, limits)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    /// `Aut(G*(A))`, the 2*-closure.
    Gr,
    /// `Aut(G(A))`, the 2-closure.
    Dgr,
    /// Automorphisms of the subset-orbit coloring.
    Bgr,
}

impl ClosureKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gr => "gr",
            Self::Dgr => "dgr",
            Self::Bgr => "bgr",
        }
    }
}

impl std::str::FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gr" => Ok(Self::Gr),
            "dgr" => Ok(Self::Dgr),
            "bgr" => Ok(Self::Bgr),
            other => Err(Error::Invalid(format!("unknown closure kind '{other}'"))),
        }
    }
}

/// The structure whose automorphism group is the closure of the given kind.
pub fn closure_structure(a: &PermGroup, kind: ClosureKind) -> Result<AnyStructure> {
    Ok(match kind {
        ClosureKind::Gr => AnyStructure::Graph(orbital_graph(a)?),
        ClosureKind::Dgr => AnyStructure::Digraph(orbital_digraph(a)?),
        ClosureKind::Bgr => AnyStructure::Hypergraph(orbit_hypergraph(a)?),
    })
}

pub fn closure(a: &PermGroup, kind: ClosureKind) -> Result<PermGroup> {
    automorphism_group(&closure_structure(a, kind)?, &a.limits())
}

/// Membership of a group in one class, with the certificate for a negative answer.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureVerdict {
    pub member: bool,
    #[serde(serialize_with = "ser_biguint")]
    pub closure_order: BigUint,
    #[serde(serialize_with = "ser_perm_opt")]
    pub witness: Option<Permutation>,
    #[serde(skip)]
    pub closure: PermGroup,
}

fn verdict(a: &PermGroup, kind: ClosureKind) -> Result<ClosureVerdict> {
    let closure = closure(a, kind)?;
    let closure_order = closure.order()?;
    let member = closure_order == a.order()?;
    let witness = if member {
        None
    } else {
        closure.element_outside(a)?
    };
    Ok(ClosureVerdict {
        member,
        closure_order,
        witness,
        closure,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub degree: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub order: BigUint,
    pub in_gr: bool,
    pub in_dgr: bool,
    /// `None` when the degree is beyond the hypergraph cap.
    pub in_bgr: Option<bool>,
    pub in_dgr_plus: bool,
    #[serde(serialize_with = "ser_perm_opt")]
    pub transposing: Option<Permutation>,
    pub gr: ClosureVerdict,
    pub dgr: ClosureVerdict,
    pub bgr: Option<ClosureVerdict>,
}

pub fn classify(a: &PermGroup) -> Result<ClassReport> {
    let gr = verdict(a, ClosureKind::Gr)?;
    let dgr = verdict(a, ClosureKind::Dgr)?;
    let cap = a
        .limits()
        .hypergraph_cap
        .min(ColoredHypergraph::MAX_VERTICES);
    let bgr = if a.degree() <= cap {
        Some(verdict(a, ClosureKind::Bgr)?)
    } else {
        None
    };
    let transposing = transposing_permutation(a)?;
    let is_i2 = a.degree() == 2 && a.is_trivial();
    let in_dgr_plus = dgr.member && (transposing.is_none() || gr.member || is_i2);
    Ok(ClassReport {
        degree: a.degree(),
        order: a.order()?,
        in_gr: gr.member,
        in_dgr: dgr.member,
        in_bgr: bgr.as_ref().map(|v| v.member),
        in_dgr_plus,
        transposing,
        gr,
        dgr,
        bgr,
    })
}

fn ser_biguint<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_perm_opt<S: serde::Serializer>(
    p: &Option<Permutation>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.to_string()),
        None => s.serialize_none(),
    }
}

/// Largest number of subset orbits whose unions are enumerated.
pub const MAX_SUBSET_ORBITS: usize = 22;

/// A family of subsets (as bitmasks) whose automorphism group is exactly `a`.
///
/// Only unions of `a`-orbits on subsets are `a`-invariant, so trying all of
/// them settles the question. A group outside BGR is rejected at once, since
/// every `a`-invariant family is also invariant under the BGR closure.
pub fn uncolored_hypergraph_representable(a: &PermGroup) -> Result<Option<Vec<u32>>> {
    let n = a.degree();
    if n > 12 {
        return Err(Error::StructureTooLarge { n, cap: 12 });
    }
    let limits = a.limits();
    let orbit_graph = orbit_hypergraph(a)?;
    if closure(a, ClosureKind::Bgr)?.order()? != a.order()? {
        return Ok(None);
    }
    let mut orbits: HashMap<u32, Vec<u32>> = HashMap::new();
    for m in 1u32..(1u32 << n) {
        orbits.entry(orbit_graph.color(m)).or_default().push(m);
    }
    let mut orbits: Vec<Vec<u32>> = orbits.into_values().collect();
    orbits.sort();
    if orbits.len() > MAX_SUBSET_ORBITS {
        return Err(Error::SearchTooLarge(format!(
            "{} subset orbits, at most {MAX_SUBSET_ORBITS} supported",
            orbits.len()
        )));
    }
    let target = a.order()?;
    let deadline = limits.timeout.map(|t| (std::time::Instant::now() + t, t));
    for choice in 0u64..(1u64 << orbits.len()) {
        if let Some((d, t)) = deadline {
            if choice % 256 == 0 && std::time::Instant::now() > d {
                return Err(Error::Timeout(t));
            }
        }
        let family: Vec<u32> = orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied())
            .collect();
        let h = ColoredHypergraph::from_family(n, &family)?;
        let aut = automorphism_group(&AnyStructure::Hypergraph(h), &limits)?;
        if aut.order()? == target {
            let mut family = family;
            family.sort_unstable();
            return Ok(Some(family));
        }
    }
    Ok(None)
}
