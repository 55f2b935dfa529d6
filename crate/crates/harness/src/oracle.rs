//! Closure computations used as the observed side of every check, with an
//! optional deliberate corruption for mutation testing.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use wreath_core::{
    automorphism_group, cyclic, factorial, orbit_hypergraph, orbital_digraph, orbital_graph,
    orbitals, orbits, transposing_permutation, wreath_imprimitive, AnyStructure, ClosureKind,
    Color, ColoredGraph, Limits, PermGroup, Permutation, Result,
};

/// Class memberships and orbital statistics of one group.
#[derive(Clone, Debug)]
pub struct Flags {
    pub gr: bool,
    pub dgr: bool,
    pub bgr: Option<bool>,
    pub dgr_plus: bool,
    pub transposable: bool,
    pub transitive: bool,
    pub orbit_count: usize,
    pub rank: usize,
    pub nsp: usize,
    pub all_self_paired: bool,
    pub is_i2: bool,
    pub is_symmetric: bool,
    pub is_alternating: bool,
}

impl Flags {
    /// Membership in `GR ∪ {I2}`.
    pub fn gr_or_i2(&self) -> bool {
        self.gr || self.is_i2
    }
}

#[derive(Clone, Debug)]
struct Corruption {
    target: PermGroup,
    edge: (usize, usize),
}

/// Source of closures and orbital graphs.
#[derive(Debug, Default)]
pub struct Oracle {
    limits: Limits,
    corruption: Option<Corruption>,
    cache: Mutex<HashMap<(usize, Vec<Permutation>), Flags>>,
}

impl Oracle {
    pub fn exact() -> Self {
        Self::default()
    }

    /// Recolors the edge `{u, v}` of `G*(target)` with a fresh color
    /// whenever the orbital graph of a group equal to `target` is requested.
    pub fn with_corrupted_edge(target: PermGroup, u: usize, v: usize) -> Self {
        Self {
            limits: target.limits(),
            corruption: Some(Corruption {
                target,
                edge: (u, v),
            }),
            cache: Mutex::default(),
        }
    }

    /// Caps applied to every group the suite builds.
    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// The standard mutation: one edge of `G*(C2 wr C3)`.
    pub fn mutated() -> Result<Self> {
        let target = wreath_imprimitive(&cyclic(2)?, &cyclic(3)?)?;
        Ok(Self::with_corrupted_edge(target, 0, 1))
    }

    pub fn is_exact(&self) -> bool {
        self.corruption.is_none()
    }

    fn is_target(&self, g: &PermGroup) -> Result<bool> {
        match &self.corruption {
            Some(c) if c.target.degree() == g.degree() => c.target.same_elements(g),
            _ => Ok(false),
        }
    }

    pub fn orbital_graph(&self, g: &PermGroup) -> Result<ColoredGraph> {
        let mut graph = orbital_graph(g)?;
        if self.is_target(g)? {
            let (u, v) = self
                .corruption
                .as_ref()
                .expect("target implies corruption")
                .edge;
            let fresh: Color = graph.max_color() + 1;
            graph.set_color(u, v, fresh);
        }
        Ok(graph)
    }

    pub fn closure(&self, g: &PermGroup, kind: ClosureKind) -> Result<PermGroup> {
        let structure = match kind {
            ClosureKind::Gr => AnyStructure::Graph(self.orbital_graph(g)?),
            ClosureKind::Dgr => AnyStructure::Digraph(orbital_digraph(g)?),
            ClosureKind::Bgr => AnyStructure::Hypergraph(orbit_hypergraph(g)?),
        };
        automorphism_group(&structure, &g.limits())
    }

    /// `g` is closed iff no element of its closure lies outside it; the
    /// witness is such an element.
    pub fn membership(
        &self,
        g: &PermGroup,
        kind: ClosureKind,
    ) -> Result<(bool, Option<Permutation>)> {
        let closure = self.closure(g, kind)?;
        let witness = closure.element_outside(g)?;
        Ok((witness.is_none(), witness))
    }

    pub fn flags(&self, g: &PermGroup) -> Result<Flags> {
        let key = (g.degree(), g.generators().to_vec());
        if let Some(f) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(f.clone());
        }
        let gr = self.membership(g, ClosureKind::Gr)?.0;
        let dgr = self.membership(g, ClosureKind::Dgr)?.0;
        let bgr = if g.degree() <= g.limits().hypergraph_cap {
            Some(self.membership(g, ClosureKind::Bgr)?.0)
        } else {
            None
        };
        let data = orbitals(g);
        let transposable = transposing_permutation(g)?.is_some();
        let is_i2 = g.degree() == 2 && g.is_trivial();
        let n = g.degree();
        let order = g.order()?;
        let flags = Flags {
            gr,
            dgr,
            bgr,
            dgr_plus: dgr && (!transposable || gr || is_i2),
            transposable,
            transitive: orbits(g).is_transitive(),
            orbit_count: data.orbits.len(),
            rank: data.rank,
            nsp: data.nsp,
            all_self_paired: data.all_self_paired(),
            is_i2,
            is_symmetric: order == factorial(n),
            is_alternating: n >= 3 && order * BigUint::from(2u32) == factorial(n),
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, flags.clone());
        Ok(flags)
    }
}
