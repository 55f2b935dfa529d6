//! Permutation groups given by generators, with lazily enumerated elements.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Duration;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Resource ceilings shared by enumeration and search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements materialized when enumerating a group.
    pub order_cap: u64,
    /// Maximum number of points of a constructed permutation group.
    pub point_cap: usize,
    /// Maximum vertex count for graph and digraph automorphism searches.
    pub graph_cap: usize,
    /// Maximum vertex count for hypergraphs (their colors live on `2^n - 1` subsets).
    pub hypergraph_cap: usize,
    /// Wall-clock budget for a single automorphism or isomorphism search.
    pub timeout: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            order_cap: 1_000_000,
            point_cap: 4096,
            graph_cap: 128,
            hypergraph_cap: 16,
            timeout: Some(Duration::from_secs(120)),
        }
    }
}

/// How membership is decided without enumerating the whole group.
#[derive(Clone)]
pub(crate) enum Membership {
    Enumerate,
    Imprimitive {
        fibre: Arc<PermGroup>,
        base: Arc<PermGroup>,
    },
    ProductAction {
        fibre: Arc<PermGroup>,
        base: Arc<PermGroup>,
    },
    Parallel {
        base: Arc<PermGroup>,
        copies: usize,
    },
    Direct {
        left: Arc<PermGroup>,
        right: Arc<PermGroup>,
    },
    Predicate(Arc<dyn Fn(&Permutation) -> bool + Send + Sync>),
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
    membership: Membership,
    order: OnceLock<BigUint>,
    elements: OnceLock<Arc<Vec<Permutation>>>,
}

impl PermGroup {
    /// Lazy group: nothing is enumerated until it is needed.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut generators: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        generators.sort();
        generators.dedup();
        Ok(Self {
            degree,
            generators,
            limits: Limits::default(),
            membership: Membership::Enumerate,
            order: OnceLock::new(),
            elements: OnceLock::new(),
        })
    }

    pub(crate) fn with_structure(mut self, membership: Membership, order: Option<BigUint>) -> Self {
        self.membership = membership;
        if let Some(order) = order {
            let _ = self.order.set(order);
        }
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        let g = Self::from_generators(degree, Vec::new())?;
        let _ = g.order.set(BigUint::one());
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// All elements in sorted order. Fails if the group has more than
    /// `order_cap` elements.
    pub fn elements(&self) -> Result<Arc<Vec<Permutation>>> {
        if let Some(e) = self.elements.get() {
            return Ok(e.clone());
        }
        let list = Arc::new(enumerate(
            self.degree,
            &self.generators,
            self.limits.order_cap,
        )?);
        let _ = self.order.set(BigUint::from(list.len()));
        let _ = self.elements.set(list.clone());
        Ok(self.elements.get().cloned().unwrap_or(list))
    }

    pub fn order(&self) -> Result<BigUint> {
        if let Some(o) = self.order.get() {
            return Ok(o.clone());
        }
        let n = self.elements()?.len();
        Ok(BigUint::from(n))
    }

    pub fn order_u64(&self) -> Result<u64> {
        self.order()?
            .to_u64()
            .ok_or(Error::GroupTooLarge { cap: u64::MAX })
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        if p.is_identity() {
            return Ok(true);
        }
        match &self.membership {
            Membership::Enumerate => Ok(self.elements()?.binary_search(p).is_ok()),
            Membership::Predicate(f) => Ok(f(p)),
            Membership::Imprimitive { fibre, base } => {
                match crate::product::decompose_imprimitive(p, fibre.degree(), base.degree())? {
                    Some(d) => d.lies_in(fibre, base),
                    None => Ok(false),
                }
            }
            Membership::ProductAction { fibre, base } => {
                match crate::product::decompose_product_action(p, fibre.degree(), base.degree())? {
                    Some(d) => d.lies_in(fibre, base),
                    None => Ok(false),
                }
            }
            Membership::Parallel { base, copies } => {
                let w = base.degree();
                let restricted: Vec<u32> = (0..w).map(|x| p.apply(x) as u32).collect();
                if restricted.iter().any(|&x| x as usize >= w) {
                    return Ok(false);
                }
                for i in 1..*copies {
                    for (x, &r) in restricted.iter().enumerate() {
                        if p.apply(i * w + x) != i * w + r as usize {
                            return Ok(false);
                        }
                    }
                }
                base.contains(&Permutation::new(restricted)?)
            }
            Membership::Direct { left, right } => {
                let (nv, nw) = (left.degree(), right.degree());
                let alpha: Vec<u32> = (0..nv).map(|v| (p.apply(v * nw) / nw) as u32).collect();
                let beta: Vec<u32> = (0..nw).map(|w| (p.apply(w) % nw) as u32).collect();
                for (v, &a) in alpha.iter().enumerate() {
                    for (w, &b) in beta.iter().enumerate() {
                        let expected = a as usize * nw + b as usize;
                        if p.apply(v * nw + w) != expected {
                            return Ok(false);
                        }
                    }
                }
                let (Ok(alpha), Ok(beta)) = (Permutation::new(alpha), Permutation::new(beta))
                else {
                    return Ok(false);
                };
                Ok(left.contains(&alpha)? && right.contains(&beta)?)
            }
        }
    }

    /// `true` iff every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as permutation sets.
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree || self.order()? != other.order()? {
            return Ok(false);
        }
        self.is_subgroup_of(other)
    }

    /// Some element of `self` outside `other`, taken from the generators.
    pub fn element_outside(&self, other: &PermGroup) -> Result<Option<Permutation>> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_full_symmetric(&self) -> Result<bool> {
        Ok(self.order()? == factorial(self.degree))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.order.get())
            .finish()
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn enumerate(degree: usize, generators: &[Permutation], cap: u64) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut list: Vec<Permutation> = seen.into_iter().collect();
    list.sort();
    Ok(list)
}

/// Closure of `generators` under composition, enumerated eagerly so that an
/// oversized group is reported immediately.
pub fn generate_group(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
    generate_group_with(degree, generators, Limits::default())
}

pub fn generate_group_with(
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
) -> Result<PermGroup> {
    let g = PermGroup::from_generators(degree, generators)?.with_limits(limits);
    g.elements()?;
    Ok(g)
}
