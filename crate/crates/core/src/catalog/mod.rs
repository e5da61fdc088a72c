//! Named groups: cyclic, symmetric, dihedral and wreath products, the Suzuki
//! group `Sz(8)`, and the maximal-class 3-groups `B(3,r;0,gamma,0)`.
//!
//! Each constructor has a matching [`GroupSpec`] builder, and [`shorthand`]
//! parses the compact names used on the command line.

mod b3r;

use crate::error::{Error, Result};
use crate::group::gf2k::Gf2k;
use crate::group::spec::{AbelianSpec, Action, FieldSpec, MatrixSpec, PermSpec, SemidirectSpec};
use crate::group::{build_group, is_prime, FiniteGroup, GroupSpec};

pub use b3r::{
    build_b3r, build_b3r_with, b3r_spec, exotic_cellularity_verdict, exotic_pi1_check, order_census,
    order_two_automorphisms, seed_shape, B3rGroup, OrderCensus, SeedShape,
};

pub fn cyclic_spec(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group of order 0".into()));
    }
    Ok(GroupSpec::Abelian(AbelianSpec {
        rank: 1,
        relations: vec![vec![n as i64]],
    }))
}

/// `Z/n`, generated by element `1`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    Ok(build_group(&cyclic_spec(n)?)?.with_label(format!("Z/{n}")))
}

pub fn elementary_abelian_spec(p: u32, k: usize) -> Result<GroupSpec> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not a prime")));
    }
    Ok(GroupSpec::Abelian(AbelianSpec {
        rank: k,
        relations: (0..k)
            .map(|i| (0..k).map(|j| if i == j { p as i64 } else { 0 }).collect())
            .collect(),
    }))
}

/// `(Z/p)^k`.
pub fn elementary_abelian(p: u32, k: usize) -> Result<FiniteGroup> {
    Ok(build_group(&elementary_abelian_spec(p, k)?)?.with_label(format!("(Z/{p})^{k}")))
}

pub fn symmetric_spec(n: usize) -> Result<GroupSpec> {
    if n == 0 {
        return Err(Error::InvalidInput("symmetric group of degree 0".into()));
    }
    let mut generators = Vec::new();
    if n >= 2 {
        let mut t: Vec<u32> = (0..n as u32).collect();
        t.swap(0, 1);
        generators.push(t);
        generators.push((0..n as u32).map(|i| (i + 1) % n as u32).collect());
    }
    Ok(GroupSpec::Perm(PermSpec { degree: n, generators }))
}

/// `Σ_n`, generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    Ok(build_group(&symmetric_spec(n)?)?.with_label(format!("Sym({n})")))
}

/// `A_n`, generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("alternating group of degree 0".into()));
    }
    let generators = (2..n)
        .map(|i| {
            let mut c: Vec<u32> = (0..n as u32).collect();
            c[0] = 1;
            c[1] = i as u32;
            c[i] = 0;
            c
        })
        .collect();
    Ok(build_group(&GroupSpec::Perm(PermSpec { degree: n, generators }))?.with_label(format!("Alt({n})")))
}

/// The dihedral group of the given order (at least 6), acting on `order / 2` points.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::InvalidInput(format!("no dihedral group of order {order} here")));
    }
    let m = order / 2;
    let rotation = (0..m as u32).map(|i| (i + 1) % m as u32).collect();
    let reflection = (0..m as u32).map(|i| (m as u32 - i) % m as u32).collect();
    let spec = GroupSpec::Perm(PermSpec { degree: m, generators: vec![rotation, reflection] });
    Ok(build_group(&spec)?.with_label(format!("D{order}")))
}

/// The quaternion group of order 8 in its regular representation.
pub fn quaternion8() -> Result<FiniteGroup> {
    let spec = GroupSpec::Perm(PermSpec {
        degree: 8,
        generators: vec![vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
    });
    Ok(build_group(&spec)?.with_label("Q8"))
}

pub fn wreath_spec(p: u32, n: u32, q: u32) -> Result<GroupSpec> {
    if !is_prime(p) || !is_prime(q) || p == q || n == 0 {
        return Err(Error::InvalidInput(format!(
            "wreath product needs primes p != q and n >= 1, got p={p}, n={n}, q={q}"
        )));
    }
    let k = q as usize;
    let pn = (p as i64).pow(n);
    let relations = (0..k)
        .map(|i| (0..k).map(|j| if i == j { pn } else { 0 }).collect())
        .collect();
    // e_j -> e_{j+1}: cyclic rotation of the coordinates.
    let rotation = (0..k)
        .map(|j| (0..k).map(|i| i64::from(i == (j + 1) % k)).collect())
        .collect();
    Ok(GroupSpec::Semidirect(SemidirectSpec {
        base: Box::new(GroupSpec::Abelian(AbelianSpec { rank: k, relations })),
        actor: q,
        action: Action::Matrix(rotation),
    }))
}

/// `Z/p^n ≀ Z/q = (Z/p^n)^q ⋊ Z/q` with `Z/q` rotating the factors.
pub fn wreath(p: u32, n: u32, q: u32) -> Result<FiniteGroup> {
    let label = format!("Z/{} wr Z/{q}", p.pow(n));
    Ok(build_group(&wreath_spec(p, n, q)?)?.with_label(label))
}

/// Generators of `Sz(8)` in `GL(4, 8)`: a unipotent `T(1, 0)`, the torus
/// element `M(x)` and the antidiagonal Weyl element.
pub fn suzuki_8_spec() -> GroupSpec {
    let f = Gf2k::new(3).expect("GF(8)");
    let theta = |a: u8| f.pow(a, 4);
    let t = |a: u8, b: u8| -> Vec<Vec<u8>> {
        let a2 = f.mul(a, a);
        vec![
            vec![1, 0, 0, 0],
            vec![a, 1, 0, 0],
            vec![b, theta(a), 1, 0],
            vec![
                f.mul(a2, theta(a)) ^ f.mul(a, b) ^ theta(b),
                f.mul(a, theta(a)) ^ b,
                a,
                1,
            ],
        ]
    };
    let k = 2u8;
    let ki = f.inv(k).expect("nonzero");
    let diag = [f.pow(k, 3), f.pow(k, 2), f.pow(ki, 2), f.pow(ki, 3)];
    let m: Vec<Vec<u8>> = (0..4).map(|i| (0..4).map(|j| if i == j { diag[i] } else { 0 }).collect()).collect();
    let w: Vec<Vec<u8>> = (0..4).map(|i| (0..4).map(|j| u8::from(i + j == 3)).collect()).collect();
    GroupSpec::Matrix(MatrixSpec {
        field: FieldSpec { characteristic: 2, deg: 3 },
        dim: 4,
        generators: vec![t(1, 0), m, w],
    })
}

/// The Suzuki group `Sz(8)` of order 29120.
pub fn build_suzuki_8() -> Result<FiniteGroup> {
    Ok(build_group(&suzuki_8_spec())?.with_label("Sz(8)"))
}

/// Expands a compact group name into a full spec:
/// `cyclic:n`, `elem-abelian:p^k`, `sym:n`, `wreath:p,n,q`, `b3r:r,gamma`, `sz8`.
pub fn shorthand(s: &str) -> Result<GroupSpec> {
    let bad = || Error::Parse(format!("cannot parse group shorthand {s:?}"));
    let (kind, args) = s.split_once(':').unwrap_or((s, ""));
    let nums = |sep: char| -> Result<Vec<u32>> {
        args.split(sep).map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
    };
    match kind {
        "cyclic" => match nums(',')?.as_slice() {
            [n] => cyclic_spec(*n as usize),
            _ => Err(bad()),
        },
        "elem-abelian" => match nums('^')?.as_slice() {
            [p, k] => elementary_abelian_spec(*p, *k as usize),
            _ => Err(bad()),
        },
        "sym" => match nums(',')?.as_slice() {
            [n] => symmetric_spec(*n as usize),
            _ => Err(bad()),
        },
        "wreath" => match nums(',')?.as_slice() {
            [p, n, q] => wreath_spec(*p, *n, *q),
            _ => Err(bad()),
        },
        "b3r" => match nums(',')?.as_slice() {
            [r, gamma] => b3r_spec(*r, *gamma),
            _ => Err(bad()),
        },
        "sz8" if args.is_empty() => Ok(suzuki_8_spec()),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(elementary_abelian(2, 3).unwrap().order(), 8);
    }

    #[test]
    fn wreath_products() {
        let g = wreath(3, 2, 2).unwrap();
        assert_eq!(g.order(), 162);
        let s = g.sylow_subgroup(3);
        assert_eq!(s.order(), 81);
        let (sg, _) = s.to_group(&g).unwrap();
        assert!(sg.is_abelian());
        assert_eq!(sg.exponent(), 9);
        assert_eq!(wreath(2, 1, 3).unwrap().order(), 24);
        let g = wreath(3, 1, 2).unwrap();
        assert_eq!(g.order(), 18);
        assert!(wreath(3, 1, 3).is_err());
    }

    #[test]
    fn shorthand_parsing() {
        assert_eq!(shorthand("cyclic:4").unwrap(), cyclic_spec(4).unwrap());
        assert_eq!(shorthand("elem-abelian:2^3").unwrap(), elementary_abelian_spec(2, 3).unwrap());
        assert_eq!(shorthand("wreath:3,2,2").unwrap(), wreath_spec(3, 2, 2).unwrap());
        assert!(shorthand("sz8").is_ok());
        assert!(matches!(shorthand("cyclic:x"), Err(Error::Parse(_))));
        assert!(matches!(shorthand("nope"), Err(Error::Parse(_))));
    }
}
