//! Direct products, parallel multiples and the two actions of the wreath product.
//!
//! Point numbering:
//! * `V x W` (direct and imprimitive wreath products): `(v, w)` is `v * |W| + w`.
//! * parallel multiple of `B` on `t` copies of `W`: `(w, i)` is `i * |W| + w`.
//! * product action on `V^W`: a function `f` is the base-`|V|` numeral
//!   `f(0) f(1) .. f(|W|-1)`, most significant digit first.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::{Membership, PermGroup};
use crate::perm::Permutation;

/// A certificate `(beta, (alpha_w))` for an element of a wreath product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathDecomposition {
    pub beta: Permutation,
    pub alphas: Vec<Permutation>,
}

impl WreathDecomposition {
    pub fn identity(nv: usize, nw: usize) -> Self {
        Self {
            beta: Permutation::identity(nw),
            alphas: vec![Permutation::identity(nv); nw],
        }
    }

    fn fibre_degree(&self) -> usize {
        self.alphas.first().map_or(0, |a| a.degree())
    }

    /// `(v, w) -> (v alpha_w, w beta)`.
    pub fn assemble_imprimitive(&self) -> Permutation {
        let nv = self.fibre_degree();
        let nw = self.beta.degree();
        let mut images = vec![0u32; nv * nw];
        for v in 0..nv {
            for w in 0..nw {
                let v2 = self.alphas[w].apply(v);
                images[v * nw + w] = (v2 * nw + self.beta.apply(w)) as u32;
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// `(f phi)(w) = f(w beta) alpha_w`.
    pub fn assemble_product_action(&self) -> Permutation {
        let nv = self.fibre_degree();
        let nw = self.beta.degree();
        let space = FunctionSpace::new(nv, nw);
        let mut digits = vec![0usize; nw];
        let mut out = vec![0usize; nw];
        let images = (0..space.size)
            .map(|f| {
                space.decode_into(f, &mut digits);
                for w in 0..nw {
                    out[w] = self.alphas[w].apply(digits[self.beta.apply(w)]);
                }
                space.encode(&out) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// `beta` in `base` and every `alpha_w` in `fibre`.
    pub fn lies_in(&self, fibre: &PermGroup, base: &PermGroup) -> Result<bool> {
        if !base.contains(&self.beta)? {
            return Ok(false);
        }
        for a in &self.alphas {
            if !fibre.contains(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Functions `W -> V` encoded as base-`|V|` numerals.
#[derive(Clone, Debug)]
pub struct FunctionSpace {
    pub nv: usize,
    pub nw: usize,
    pub size: usize,
    place: Vec<usize>,
}

impl FunctionSpace {
    pub fn new(nv: usize, nw: usize) -> Self {
        let place: Vec<usize> = (0..nw).map(|w| nv.pow((nw - 1 - w) as u32)).collect();
        Self {
            nv,
            nw,
            size: nv.pow(nw as u32),
            place,
        }
    }

    #[inline]
    pub fn digit(&self, f: usize, w: usize) -> usize {
        (f / self.place[w]) % self.nv
    }

    pub fn decode_into(&self, f: usize, out: &mut [usize]) {
        for (w, o) in out.iter_mut().enumerate() {
            *o = self.digit(f, w);
        }
    }

    pub fn decode(&self, f: usize) -> Vec<usize> {
        let mut out = vec![0; self.nw];
        self.decode_into(f, &mut out);
        out
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.place).map(|(d, p)| d * p).sum()
    }

    pub fn constant(&self, v: usize) -> usize {
        self.place.iter().map(|p| v * p).sum()
    }
}

fn check_points(points: u128, limits_cap: usize) -> Result<usize> {
    if points > limits_cap as u128 {
        return Err(Error::PointCapExceeded {
            points,
            cap: limits_cap,
        });
    }
    Ok(points as usize)
}

fn check_order(order: &BigUint, cap: u64) -> Result<()> {
    match order.to_u64() {
        Some(o) if o <= cap => Ok(()),
        _ => Err(Error::GroupTooLarge { cap }),
    }
}

/// `A x B` on `V x W`: `(v, w)(alpha, beta) = (v alpha, w beta)`.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let limits = a.limits();
    let (nv, nw) = (a.degree(), b.degree());
    let n = check_points(nv as u128 * nw as u128, limits.point_cap)?;
    let order = a.order()? * b.order()?;
    check_order(&order, limits.order_cap)?;
    let mut gens = Vec::new();
    for alpha in a.generators() {
        let d = WreathDecomposition {
            beta: Permutation::identity(nw),
            alphas: vec![alpha.clone(); nw],
        };
        gens.push(d.assemble_imprimitive());
    }
    for beta in b.generators() {
        let d = WreathDecomposition {
            beta: beta.clone(),
            alphas: vec![Permutation::identity(nv); nw],
        };
        gens.push(d.assemble_imprimitive());
    }
    Ok(PermGroup::from_generators(n, gens)?
        .with_limits(limits)
        .with_structure(
            Membership::Direct {
                left: Arc::new(a.clone()),
                right: Arc::new(b.clone()),
            },
            Some(order),
        ))
}

/// `B` acting simultaneously on `t` disjoint copies of its domain.
pub fn parallel_multiple(b: &PermGroup, t: usize) -> Result<PermGroup> {
    if t == 0 {
        return Err(Error::Invalid("parallel multiple needs t >= 1".into()));
    }
    if t == 1 {
        return Ok(b.clone());
    }
    let limits = b.limits();
    let nw = b.degree();
    let n = check_points(nw as u128 * t as u128, limits.point_cap)?;
    let gens = b
        .generators()
        .iter()
        .map(|beta| {
            let images = (0..n)
                .map(|x| ((x / nw) * nw + beta.apply(x % nw)) as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Ok(PermGroup::from_generators(n, gens)?
        .with_limits(limits)
        .with_structure(
            Membership::Parallel {
                base: Arc::new(b.clone()),
                copies: t,
            },
            Some(b.order()?),
        ))
}

fn wreath_order(a: &PermGroup, b: &PermGroup) -> Result<BigUint> {
    Ok(a.order()?.pow(b.degree() as u32) * b.order()?)
}

fn wreath_generators(a: &PermGroup, b: &PermGroup) -> Vec<WreathDecomposition> {
    let (nv, nw) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for alpha in a.generators() {
        for w in 0..nw {
            let mut d = WreathDecomposition::identity(nv, nw);
            d.alphas[w] = alpha.clone();
            gens.push(d);
        }
    }
    for beta in b.generators() {
        let mut d = WreathDecomposition::identity(nv, nw);
        d.beta = beta.clone();
        gens.push(d);
    }
    gens
}

/// Imprimitive wreath product `A wr B` on `V x W`: `(v, w) -> (v alpha_w, w beta)`.
pub fn wreath_imprimitive(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let limits = a.limits();
    let n = check_points(a.degree() as u128 * b.degree() as u128, limits.point_cap)?;
    let order = wreath_order(a, b)?;
    check_order(&order, limits.order_cap)?;
    let gens = wreath_generators(a, b)
        .iter()
        .map(WreathDecomposition::assemble_imprimitive)
        .collect();
    Ok(PermGroup::from_generators(n, gens)?
        .with_limits(limits)
        .with_structure(
            Membership::Imprimitive {
                fibre: Arc::new(a.clone()),
                base: Arc::new(b.clone()),
            },
            Some(order),
        ))
}

/// Wreath product in product action on `V^W`: `(f phi)(w) = f(w beta) alpha_w`.
pub fn wreath_product_action(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let limits = a.limits();
    let points = (a.degree() as u128)
        .checked_pow(b.degree() as u32)
        .unwrap_or(u128::MAX);
    let n = check_points(points, limits.point_cap)?;
    let order = wreath_order(a, b)?;
    check_order(&order, limits.order_cap)?;
    let gens = wreath_generators(a, b)
        .iter()
        .map(WreathDecomposition::assemble_product_action)
        .collect();
    Ok(PermGroup::from_generators(n, gens)?
        .with_limits(limits)
        .with_structure(
            Membership::ProductAction {
                fibre: Arc::new(a.clone()),
                base: Arc::new(b.clone()),
            },
            Some(order),
        ))
}

/// Inverts the imprimitive assembly; `None` when `phi` does not permute the
/// fibres `V x {w}`.
pub fn decompose_imprimitive(
    phi: &Permutation,
    nv: usize,
    nw: usize,
) -> Result<Option<WreathDecomposition>> {
    if phi.degree() != nv * nw {
        return Err(Error::DegreeMismatch {
            left: nv * nw,
            right: phi.degree(),
        });
    }
    let mut beta = vec![0u32; nw];
    let mut alphas = Vec::with_capacity(nw);
    for (w, slot) in beta.iter_mut().enumerate() {
        let target = phi.apply(w) % nw;
        *slot = target as u32;
        let mut alpha = vec![0u32; nv];
        for (v, a) in alpha.iter_mut().enumerate() {
            let image = phi.apply(v * nw + w);
            if image % nw != target {
                return Ok(None);
            }
            *a = (image / nw) as u32;
        }
        alphas.push(Permutation::new(alpha).expect("fibre image of a bijection"));
    }
    let Ok(beta) = Permutation::new(beta) else {
        return Ok(None);
    };
    Ok(Some(WreathDecomposition { beta, alphas }))
}

/// Inverts the product-action assembly; `None` when `phi` is not of that form.
///
/// `alpha_w` is read off the images of the constant functions, `beta` from
/// functions that differ from a constant in a single coordinate; the candidate
/// is then checked against `phi` on every function.
pub fn decompose_product_action(
    phi: &Permutation,
    nv: usize,
    nw: usize,
) -> Result<Option<WreathDecomposition>> {
    let space = FunctionSpace::new(nv, nw);
    if phi.degree() != space.size {
        return Err(Error::DegreeMismatch {
            left: space.size,
            right: phi.degree(),
        });
    }
    let const_images: Vec<usize> = (0..nv).map(|v| phi.apply(space.constant(v))).collect();
    let mut alphas = Vec::with_capacity(nw);
    for w in 0..nw {
        let images = const_images
            .iter()
            .map(|&g| space.digit(g, w) as u32)
            .collect();
        match Permutation::new(images) {
            Ok(a) => alphas.push(a),
            Err(_) => return Ok(None),
        }
    }
    let base_image = const_images[0];
    let mut beta = vec![u32::MAX; nw];
    for u in 0..nw {
        let mut digits = vec![0usize; nw];
        digits[u] = 1;
        let image = phi.apply(space.encode(&digits));
        let changed: Vec<usize> = (0..nw)
            .filter(|&w| space.digit(image, w) != space.digit(base_image, w))
            .collect();
        let [w] = changed[..] else {
            return Ok(None);
        };
        if beta[w] != u32::MAX {
            return Ok(None);
        }
        beta[w] = u as u32;
    }
    let beta = Permutation::new(beta).expect("beta is injective on a finite set");
    let d = WreathDecomposition { beta, alphas };
    if &d.assemble_product_action() == phi {
        Ok(Some(d))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;

    fn g(name: &str) -> PermGroup {
        catalog_group(name).unwrap()
    }

    fn enumerated_order(grp: &PermGroup) -> usize {
        // recompute from the generators, ignoring any recorded order
        let plain = PermGroup::from_generators(grp.degree(), grp.generators().to_vec()).unwrap();
        plain.elements().unwrap().len()
    }

    #[test]
    fn direct_product_examples() {
        let p = direct_product(&g("C2"), &g("C2")).unwrap();
        assert_eq!((p.degree(), enumerated_order(&p)), (4, 4));
        let p = direct_product(&g("I2"), &g("I3")).unwrap();
        assert_eq!((p.degree(), enumerated_order(&p)), (6, 1));
        let p = direct_product(&g("C3"), &g("S2")).unwrap();
        assert_eq!((p.degree(), enumerated_order(&p)), (6, 6));
    }

    #[test]
    fn parallel_multiple_examples() {
        let c3 = g("C3");
        assert!(parallel_multiple(&c3, 1)
            .unwrap()
            .same_elements(&c3)
            .unwrap());
        let p = parallel_multiple(&c3, 2).unwrap();
        assert_eq!((p.degree(), enumerated_order(&p)), (6, 3));
        let sync = Permutation::from_cycles(6, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!(p.contains(&sync).unwrap());
        let unsync = Permutation::from_cycles(6, &[[0, 1, 2]]).unwrap();
        assert!(!p.contains(&unsync).unwrap());
        let p = parallel_multiple(&g("S2"), 3).unwrap();
        assert_eq!((p.degree(), enumerated_order(&p)), (6, 2));
        assert!(parallel_multiple(&c3, 0).is_err());
    }

    #[test]
    fn imprimitive_examples() {
        let w = wreath_imprimitive(&g("C2"), &g("C3")).unwrap();
        assert_eq!((w.degree(), enumerated_order(&w)), (6, 24));
        assert_eq!(w.order_u64().unwrap(), 24);
        let w = wreath_imprimitive(&g("S2"), &g("I2")).unwrap();
        assert_eq!((w.degree(), enumerated_order(&w)), (4, 4));
    }

    #[test]
    fn trivial_fibre_wreath_is_parallel_multiple() {
        for b in ["C3", "S3", "C4", "K4"] {
            let b = g(b);
            let w = wreath_imprimitive(&g("I2"), &b).unwrap();
            let p = parallel_multiple(&b, 2).unwrap();
            let we = PermGroup::from_generators(w.degree(), w.generators().to_vec()).unwrap();
            let pe = PermGroup::from_generators(p.degree(), p.generators().to_vec()).unwrap();
            assert_eq!(we.elements().unwrap(), pe.elements().unwrap());
        }
    }

    #[test]
    fn product_action_examples() {
        let w = wreath_product_action(&g("C2"), &g("C3")).unwrap();
        assert_eq!((w.degree(), enumerated_order(&w)), (8, 24));
        let w = wreath_product_action(&g("S2"), &g("S3")).unwrap();
        assert_eq!((w.degree(), enumerated_order(&w)), (8, 48));
        let w = wreath_product_action(&g("I2"), &g("C3")).unwrap();
        assert_eq!((w.degree(), enumerated_order(&w)), (8, 3));
    }

    #[test]
    fn caps_are_enforced() {
        let small = Limits {
            point_cap: 10,
            ..Limits::default()
        };
        let a = g("S2").with_limits(small);
        assert!(matches!(
            wreath_product_action(&a, &g("S4")),
            Err(Error::PointCapExceeded {
                points: 16,
                cap: 10
            })
        ));
        let tiny = Limits {
            order_cap: 20,
            ..Limits::default()
        };
        let a = g("C2").with_limits(tiny);
        assert!(matches!(
            wreath_imprimitive(&a, &g("C3")),
            Err(Error::GroupTooLarge { cap: 20 })
        ));
    }

    use crate::group::Limits;

    #[test]
    fn decompose_identity() {
        let id = Permutation::identity(6);
        assert_eq!(
            decompose_imprimitive(&id, 2, 3).unwrap(),
            Some(WreathDecomposition::identity(2, 3))
        );
        let id = Permutation::identity(8);
        assert_eq!(
            decompose_product_action(&id, 2, 3).unwrap(),
            Some(WreathDecomposition::identity(2, 3))
        );
    }

    #[test]
    fn decompose_every_element_round_trips() {
        let (a, b) = (g("C2"), g("C3"));
        let w = wreath_imprimitive(&a, &b).unwrap();
        let plain = PermGroup::from_generators(6, w.generators().to_vec()).unwrap();
        for phi in plain.elements().unwrap().iter() {
            let d = decompose_imprimitive(phi, 2, 3)
                .unwrap()
                .expect("decomposes");
            assert_eq!(&d.assemble_imprimitive(), phi);
            assert!(d.lies_in(&a, &b).unwrap());
        }
        let w = wreath_product_action(&a, &b).unwrap();
        let plain = PermGroup::from_generators(8, w.generators().to_vec()).unwrap();
        for phi in plain.elements().unwrap().iter() {
            let d = decompose_product_action(phi, 2, 3)
                .unwrap()
                .expect("decomposes");
            assert_eq!(&d.assemble_product_action(), phi);
            assert!(d.lies_in(&a, &b).unwrap());
        }
    }

    #[test]
    fn fibre_breaking_permutation_does_not_decompose() {
        // V = W = {0, 1}; (0,0) = 0 and (1,1) = 3 swapped, others fixed
        let phi = Permutation::from_cycles(4, &[[0, 3]]).unwrap();
        assert_eq!(decompose_imprimitive(&phi, 2, 2).unwrap(), None);
    }

    #[test]
    fn three_cycle_is_not_a_product_action_element() {
        // S2 on {0,1}^2 has order 8, so no 3-cycle of the four functions lies in it
        let phi = Permutation::from_cycles(4, &[[0, 1, 2]]).unwrap();
        assert_eq!(decompose_product_action(&phi, 2, 2).unwrap(), None);
        // independent check: none of the 8 assemblies equals phi
        let s2 = [
            Permutation::identity(2),
            Permutation::from_cycles(2, &[[0, 1]]).unwrap(),
        ];
        for beta in &s2 {
            for a0 in &s2 {
                for a1 in &s2 {
                    let d = WreathDecomposition {
                        beta: beta.clone(),
                        alphas: vec![a0.clone(), a1.clone()],
                    };
                    assert_ne!(d.assemble_product_action(), phi);
                }
            }
        }
    }

    #[test]
    fn function_space_numbering() {
        let s = FunctionSpace::new(2, 3);
        assert_eq!(s.encode(&[1, 0, 0]), 4);
        assert_eq!(s.decode(6), vec![1, 1, 0]);
        assert_eq!(s.constant(1), 7);
    }
}
