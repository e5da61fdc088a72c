//! Property tests for invariants of the group, closure and catalog layers.

mod common;

use std::sync::OnceLock;

use fusioncell::catalog;
use fusioncell::cellularity::{cl_closure, omega_subgroup, strong_closure};
use fusioncell::group::{build_group, GroupSpec};
use fusioncell::{Elem, FiniteGroup};
use proptest::prelude::*;

fn groups() -> &'static [FiniteGroup] {
    static G: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| {
        vec![
            catalog::symmetric(4).unwrap(),
            catalog::dihedral(12).unwrap(),
            catalog::quaternion8().unwrap(),
            catalog::wreath(3, 1, 2).unwrap(),
            catalog::alternating(5).unwrap(),
        ]
    })
}

fn corpus() -> &'static [common::Case] {
    static C: OnceLock<Vec<common::Case>> = OnceLock::new();
    C.get_or_init(common::corpus)
}

fn b3r(r: u32, gamma: u32) -> &'static catalog::B3rGroup {
    static B: OnceLock<Vec<catalog::B3rGroup>> = OnceLock::new();
    let all = B.get_or_init(|| {
        (4..=6).flat_map(|r| (0..3).map(move |g| catalog::build_b3r(r, g).unwrap())).collect()
    });
    &all[(r as usize - 4) * 3 + gamma as usize]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_subgroup_is_idempotent(gi in 0usize..5, picks in prop::collection::vec(any::<u32>(), 0..4)) {
        let g = &groups()[gi];
        let gens: Vec<Elem> = picks.iter().map(|x| x % g.order() as u32).collect();
        let h = g.subgroup_generated(&gens);
        prop_assert!(gens.iter().all(|&x| h.contains(x)));
        prop_assert_eq!(g.subgroup_generated(h.members()), h.clone());
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn closure_through_omega(ci in 0usize..19, m in 1u32..4) {
        let case = &corpus()[ci % corpus().len()];
        let f = &case.f;
        let p = f.prime();
        let s = f.sylow();
        let omega = omega_subgroup(s, p, m);
        prop_assert!(omega.is_subgroup_of(&omega_subgroup(s, p, m + 1)));
        let direct = cl_closure(f, &catalog::cyclic((p as usize).pow(m)).unwrap()).unwrap();
        prop_assert_eq!(&direct, &strong_closure(f, &omega).unwrap());
        prop_assert!(f.is_strongly_closed(&direct).unwrap());
    }

    #[test]
    fn census_is_monotone_in_l(r in 4u32..=6, gamma in 0u32..3, l in 1u32..4) {
        let g = b3r(r, gamma);
        let c = catalog::order_census(g, l);
        if let Some(w) = c.witness {
            prop_assert!(!g.n.contains(w));
            prop_assert_eq!(g.group.pow(w, 3u64.pow(l)), g.group.identity());
        }
        if c.exists_outside_n {
            prop_assert!(catalog::order_census(g, l + 1).exists_outside_n);
        }
    }

    #[test]
    fn b3r_structure(r in 4u32..=6, gamma in 0u32..3) {
        let g = b3r(r, gamma);
        let z = g.group.center();
        prop_assert_eq!(g.n.order() * 3, g.group.order());
        prop_assert!(g.group.is_normal(&g.n).unwrap());
        prop_assert!(z.is_subgroup_of(&g.n));
        // Every element with a nonzero power of s has order dividing 9.
        let a = g.group.subgroup_generated(&g.s_i);
        prop_assert!(g.group.elements().filter(|&x| !a.contains(x)).all(|x| g.group.pow(x, 9) == g.group.identity()));
    }

    #[test]
    fn shorthand_specs_round_trip(i in 0usize..6) {
        let names = ["cyclic:6", "elem-abelian:3^2", "sym:4", "wreath:3,1,2", "b3r:4,1", "sz8"];
        let spec = catalog::shorthand(names[i]).unwrap();
        prop_assert_eq!(&GroupSpec::from_json(&spec.to_json()).unwrap(), &spec);
        if i < 5 {
            prop_assert_eq!(build_group(&spec).unwrap().table().unwrap(), build_group(&GroupSpec::from_json(&spec.to_json()).unwrap()).unwrap().table().unwrap());
        }
    }
}
