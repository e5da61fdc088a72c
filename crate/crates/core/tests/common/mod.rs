//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use fusioncell::catalog;
use fusioncell::fusion::{FusionSystem, Provenance};
use fusioncell::{Elem, FiniteGroup, Subgroup};

pub struct Case {
    pub name: String,
    pub ambient: Option<FiniteGroup>,
    pub f: FusionSystem,
}

fn induced(g: FiniteGroup, p: u32) -> Case {
    let f = FusionSystem::from_group(&g, p).unwrap();
    Case { name: format!("{} at {p}", g.label()), ambient: Some(g), f }
}

/// Group-induced fusion systems of ambient groups of order at most 64, plus
/// two systems given without an ambient group.
pub fn corpus() -> Vec<Case> {
    let mut out = vec![
        induced(catalog::symmetric(3).unwrap(), 3),
        induced(catalog::symmetric(3).unwrap(), 2),
        induced(catalog::symmetric(4).unwrap(), 2),
        induced(catalog::symmetric(4).unwrap(), 3),
        induced(catalog::alternating(4).unwrap(), 2),
        induced(catalog::alternating(5).unwrap(), 2),
        induced(catalog::alternating(5).unwrap(), 3),
        induced(catalog::alternating(5).unwrap(), 5),
        induced(catalog::dihedral(8).unwrap(), 2),
        induced(catalog::dihedral(12).unwrap(), 2),
        induced(catalog::dihedral(12).unwrap(), 3),
        induced(catalog::quaternion8().unwrap(), 2),
        induced(catalog::cyclic(8).unwrap(), 2),
        induced(catalog::elementary_abelian(2, 3).unwrap(), 2),
        induced(catalog::wreath(3, 1, 2).unwrap(), 3),
        induced(catalog::wreath(2, 1, 3).unwrap(), 2),
        induced(catalog::wreath(5, 1, 2).unwrap(), 5),
    ];
    let d8 = catalog::dihedral(8).unwrap();
    out.push(Case {
        name: "inner fusion on D8".into(),
        ambient: None,
        f: FusionSystem::inner(&d8, 2).unwrap(),
    });
    let q8 = catalog::quaternion8().unwrap();
    out.push(Case {
        name: "inner fusion on Q8".into(),
        ambient: None,
        f: FusionSystem::inner(&q8, 2).unwrap(),
    });
    out
}

/// Small `p`-groups to play the role of `P`.
pub fn test_p_groups(p: u32) -> Vec<FiniteGroup> {
    let p = p as usize;
    vec![
        catalog::cyclic(p).unwrap(),
        catalog::cyclic(p * p).unwrap(),
        catalog::cyclic(p * p * p).unwrap(),
        catalog::elementary_abelian(p as u32, 2).unwrap(),
    ]
}

/// Every element of `g` reached from the identity along generator edges,
/// with `map[x]` filled in multiplicatively from `images`.
fn extend_by_edges(p: &FiniteGroup, gens: &[Elem], images: &[Elem], s: &FiniteGroup) -> Vec<Elem> {
    let mut map = vec![u32::MAX; p.order()];
    map[p.identity() as usize] = s.identity();
    let mut stack = vec![p.identity()];
    while let Some(x) = stack.pop() {
        for (&g, &y) in gens.iter().zip(images) {
            let xg = p.mul(x, g);
            if map[xg as usize] == u32::MAX {
                map[xg as usize] = s.mul(map[x as usize], y);
                stack.push(xg);
            }
        }
    }
    map
}

/// All homomorphisms `P -> S`, found by trying every tuple of generator
/// images and checking `f(xy) = f(x) f(y)` on every pair.
pub fn brute_homs(p: &FiniteGroup, s: &FiniteGroup) -> Vec<Vec<Elem>> {
    let gens: Vec<Elem> = p.generators().iter().copied().filter(|&g| g != p.identity()).collect();
    let k = gens.len();
    let n = s.order();
    let mut out = Vec::new();
    for code in 0..n.pow(k as u32) {
        let images: Vec<Elem> = (0..k).map(|i| ((code / n.pow(i as u32)) % n) as Elem).collect();
        let map = extend_by_edges(p, &gens, &images, s);
        let is_hom = p
            .elements()
            .all(|x| p.elements().all(|y| map[p.mul(x, y) as usize] == s.mul(map[x as usize], map[y as usize])));
        if is_hom {
            out.push(map);
        }
    }
    out
}

/// `<f(P) : f in Hom(P, S)>` by brute force.
pub fn brute_image_span(p: &FiniteGroup, s: &FiniteGroup) -> Subgroup {
    let mut images: Vec<Elem> = brute_homs(p, s).into_iter().flatten().collect();
    images.sort_unstable();
    images.dedup();
    s.subgroup_generated(&images)
}

/// Ambient embedding of the Sylow subgroup of a group-induced system.
pub fn embedding(f: &FusionSystem) -> Option<&[Elem]> {
    match f.provenance() {
        Provenance::GroupInduced { embedding, .. } => Some(embedding),
        _ => None,
    }
}

/// Strong closure checked in the ambient group: whenever `g x g^-1` lies in
/// `S` for `x` in `K`, it lies in `K`.
pub fn ambient_strongly_closed(g: &FiniteGroup, f: &FusionSystem, k: &Subgroup) -> bool {
    let emb = embedding(f).expect("group-induced");
    let mut back = vec![None; g.order()];
    for (i, &x) in emb.iter().enumerate() {
        back[x as usize] = Some(i as Elem);
    }
    k.members().iter().all(|&x| {
        g.elements().all(|a| match back[g.conj(a, emb[x as usize]) as usize] {
            Some(y) => k.contains(y),
            None => true,
        })
    })
}

/// Strong closure by the definition: the ambient check when there is an
/// ambient group, otherwise every morphism from every subgroup of `K`.
pub fn oracle_strongly_closed(case: &Case, k: &Subgroup) -> bool {
    match &case.ambient {
        Some(g) => ambient_strongly_closed(g, &case.f, k),
        None => case.f.is_strongly_closed_exhaustive(k).unwrap(),
    }
}

/// Intersection of every strongly closed subgroup containing all images of `P`.
pub fn brute_closure(case: &Case, p: &FiniteGroup) -> Subgroup {
    let s = case.f.sylow();
    let k0 = brute_image_span(p, s);
    case.f
        .subgroups()
        .iter()
        .filter(|k| k0.is_subgroup_of(k) && oracle_strongly_closed(case, k))
        .fold(s.whole(), |acc, k| acc.intersection(k))
}

/// Number of subgroups, counting subsets closed under multiplication.
pub fn brute_subgroup_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 16, "brute force is exponential");
    let e = g.identity();
    let others: Vec<Elem> = g.elements().filter(|&x| x != e).collect();
    (0u32..1 << others.len())
        .filter(|mask| {
            let mut set = vec![false; n];
            set[e as usize] = true;
            for (i, &x) in others.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    set[x as usize] = true;
                }
            }
            g.elements()
                .filter(|&x| set[x as usize])
                .all(|x| g.elements().filter(|&y| set[y as usize]).all(|y| set[g.mul(x, y) as usize]))
        })
        .count()
}

/// `|S / (S ∩ O^p(G))|`, with `O^p(G)` generated by the `p'`-elements.
pub fn ambient_pi1_order(g: &FiniteGroup, f: &FusionSystem) -> usize {
    let p = f.prime() as usize;
    let p_prime: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) % p != 0).collect();
    let op = g.subgroup_generated(&p_prime);
    let emb = embedding(f).expect("group-induced");
    let inside = emb.iter().filter(|&&x| op.contains(x)).count();
    f.sylow().order() / inside
}
