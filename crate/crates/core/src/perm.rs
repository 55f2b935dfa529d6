//! Permutations of `{0, .., n-1}` acting on the right.
//!
//! `p.compose(&q)` applies `p` first and then `q`, so a point `x` is sent to
//! `q(p(x))`. This matches writing `x p q` for the image of `x`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles. Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Self { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition; panics on a degree mismatch.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Image of a point set given as a bitmask (degree at most 32).
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            out |= 1 << self.images[x];
            m &= m - 1;
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Free-function form of [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
/// Stops early when `f` returns `false`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation) -> bool) {
    let mut images: Vec<u32> = (0..n as u32).collect();
    loop {
        let p = Permutation {
            images: images.clone(),
        };
        if !f(&p) {
            return;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id3 = Permutation::identity(3);
        assert_eq!(compose(&id3, &id3).unwrap(), id3);
        let c = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(compose(&c, &c).unwrap(), cyc(3, &[&[0, 2, 1]]));
        let t = cyc(2, &[&[0, 1]]);
        assert_eq!(compose(&t, &t).unwrap(), Permutation::identity(2));
    }

    #[test]
    fn compose_applies_left_first() {
        let p = cyc(3, &[&[0, 1]]);
        let q = cyc(3, &[&[1, 2]]);
        // 0 -p-> 1 -q-> 2
        assert_eq!(p.then(&q).apply(0), 2);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = compose(&Permutation::identity(2), &Permutation::identity(3));
        assert!(matches!(
            err,
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&Permutation::identity(4)), Permutation::identity(4));
        assert_eq!(inverse(&cyc(3, &[&[0, 1, 2]])), cyc(3, &[&[0, 2, 1]]));
        let inv = cyc(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(inverse(&inv), inv);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[3, 4], &[0, 2, 1]]).to_string(), "(0 2 1)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn enumerates_all_permutations() {
        let mut count = 0;
        for_each_permutation(4, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 24);
    }

    #[test]
    fn parity() {
        assert!(cyc(3, &[&[0, 1, 2]]).is_even());
        assert!(!cyc(3, &[&[0, 1]]).is_even());
    }
}
