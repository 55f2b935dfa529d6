//! Named groups: `Sn`, `An`, `Cn`, `Dn`, `In` and `K4`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::{factorial, Membership, PermGroup};
use crate::perm::Permutation;

fn cycle(n: usize) -> Permutation {
    let images = (0..n as u32).map(|x| (x + 1) % n as u32).collect();
    Permutation::from_images_unchecked(images)
}

fn transposition(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::from_cycles(n, &[[a, b]]).expect("valid transposition")
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let mut gens = vec![transposition(n, 0, 1)];
    if n > 2 {
        gens.push(cycle(n));
    }
    let g = PermGroup::from_generators(n, gens)?;
    Ok(g.with_structure(
        Membership::Predicate(std::sync::Arc::new(|_| true)),
        Some(factorial(n)),
    ))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(n, &[[0, 1, i]]).expect("valid 3-cycle"))
        .collect();
    let order = if n == 2 {
        BigUint::from(1u32)
    } else {
        factorial(n) / 2u32
    };
    let g = PermGroup::from_generators(n, gens)?;
    Ok(g.with_structure(
        Membership::Predicate(std::sync::Arc::new(|p: &Permutation| p.is_even())),
        Some(order),
    ))
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let g = PermGroup::from_generators(n, vec![cycle(n)])?;
    Ok(g.with_structure(Membership::Enumerate, Some(BigUint::from(n))))
}

/// Symmetries of the regular `n`-gon on its vertices, order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::Invalid(format!(
            "dihedral group needs n >= 3, got {n}"
        )));
    }
    let reflection = Permutation::from_images_unchecked(
        (0..n as u32).map(|x| (n as u32 - x) % n as u32).collect(),
    );
    let g = PermGroup::from_generators(n, vec![cycle(n), reflection])?;
    Ok(g.with_structure(Membership::Enumerate, Some(BigUint::from(2 * n))))
}

pub fn trivial(n: usize) -> Result<PermGroup> {
    PermGroup::trivial(n)
}

/// The regular Klein four-group on `{0, 1, 2, 3}`.
pub fn klein_four() -> PermGroup {
    let a = Permutation::from_cycles(4, &[[0, 1], [2, 3]]).expect("valid");
    let b = Permutation::from_cycles(4, &[[0, 2], [1, 3]]).expect("valid");
    PermGroup::from_generators(4, vec![a, b])
        .expect("valid")
        .with_structure(Membership::Enumerate, Some(BigUint::from(4u32)))
}

/// Parses a catalog token such as `S3`, `A4`, `C5`, `D4`, `I2` or `K4`.
pub fn catalog_group(name: &str) -> Result<PermGroup> {
    let name = name.trim();
    if name == "K4" {
        return Ok(klein_four());
    }
    let parse_err = |msg: String| Error::Parse { pos: 0, msg };
    let mut chars = name.chars();
    let kind = chars
        .next()
        .ok_or_else(|| parse_err("empty group name".into()))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(parse_err(format!("unknown group `{name}`")));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| parse_err(format!("bad degree in `{name}`")))?;
    match kind {
        'S' => symmetric(n),
        'A' => alternating(n),
        'C' => cyclic(n),
        'D' => dihedral(n),
        'I' => trivial(n),
        _ => Err(parse_err(format!("unknown group `{name}`"))),
    }
}
