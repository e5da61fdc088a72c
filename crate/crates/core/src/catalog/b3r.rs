//! The 3-groups `B(3,r;0,gamma,0)` of maximal class.
//!
//! `S = A ⋊ <s>` where `A = <s1, ..., s_{r-1}>` is abelian and `s` acts on
//! `A` by `a -> a * [a, s]`. Additively, with `e_i` standing for `s_i`:
//!
//! ```text
//! [e_i, s] = e_{i+1}                 (e_r = 0)
//! 3e_1 + 3e_2 + e_3 = gamma e_{r-1}
//! 3e_i + 3e_{i+1} + e_{i+2} = 0      (i >= 2, e_j = 0 for j >= r)
//! ```

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cellularity::{automorphism_order, report_for, CellularityReport};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::spec::{AbelianSpec, Action, SemidirectSpec};
use crate::group::{is_power_of, Caps, Elem, FiniteGroup, GroupHom, GroupSpec, Subgroup};

fn check_params(r: u32, gamma: u32) -> Result<()> {
    if r < 4 {
        return Err(Error::InvalidInput(format!("B(3,r;0,gamma,0) needs r >= 4, got {r}")));
    }
    if gamma > 2 {
        return Err(Error::InvalidInput(format!("gamma must be 0, 1 or 2, got {gamma}")));
    }
    Ok(())
}

/// Relation rows of the base `A = Z^{r-1} / L`.
fn relations(r: u32, gamma: u32) -> Vec<Vec<i64>> {
    let d = r as usize - 1;
    (0..d)
        .map(|i| {
            let mut row = vec![0i64; d];
            for (off, c) in [(0, 3), (1, 3), (2, 1)] {
                if i + off < d {
                    row[i + off] += c;
                }
            }
            if i == 0 {
                row[d - 1] -= gamma as i64;
            }
            row
        })
        .collect()
}

/// Action of the actor generator `t`, where `t c t^-1 = phi(c)`. With
/// `s = t`, conjugation `s^-1 a s` is `1 + delta`, so `phi = (1 + delta)^2`.
fn action(r: u32) -> Vec<Vec<i64>> {
    let d = r as usize - 1;
    (0..d)
        .map(|j| {
            let mut row = vec![0i64; d];
            for (off, c) in [(0, 1), (1, 2), (2, 1)] {
                if j + off < d {
                    row[j + off] = c;
                }
            }
            row
        })
        .collect()
}

pub fn b3r_spec(r: u32, gamma: u32) -> Result<GroupSpec> {
    check_params(r, gamma)?;
    let base = AbelianSpec {
        rank: r as usize - 1,
        relations: relations(r, gamma),
    };
    Ok(GroupSpec::Semidirect(SemidirectSpec {
        base: Box::new(GroupSpec::Abelian(base)),
        actor: 3,
        action: Action::Matrix(action(r)),
    }))
}

/// `B(3,r;0,gamma,0)` with its named generators.
#[derive(Clone, Debug)]
pub struct B3rGroup {
    pub group: FiniteGroup,
    pub r: u32,
    pub gamma: u32,
    pub s: Elem,
    /// `s_i` for `i = 1 .. r-1`, so `s_i[0]` is `s1`.
    pub s_i: Vec<Elem>,
    /// `N = <s, s2>`, normal of index 3.
    pub n: Subgroup,
}

impl B3rGroup {
    /// `s_i` with `s_j = e` for `j >= r`.
    pub fn named(&self, i: usize) -> Elem {
        self.s_i.get(i - 1).copied().unwrap_or(self.group.identity())
    }

    /// `{"s": i, "s1": j, ...}`.
    pub fn named_elements(&self) -> BTreeMap<String, Elem> {
        let mut out = BTreeMap::new();
        out.insert("s".to_string(), self.s);
        for (i, &x) in self.s_i.iter().enumerate() {
            out.insert(format!("s{}", i + 1), x);
        }
        out
    }

    /// `<s2, ..., s_{r-1}>`.
    pub fn lower_part(&self) -> Subgroup {
        self.group.subgroup_generated(&self.s_i[1..])
    }
}

impl Serialize for B3rGroup {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(None)?;
        m.serialize_entry("label", self.group.label())?;
        m.serialize_entry("r", &self.r)?;
        m.serialize_entry("gamma", &self.gamma)?;
        m.serialize_entry("order", &self.group.order())?;
        m.serialize_entry("named_elements", &self.named_elements())?;
        m.serialize_entry("N", &self.n)?;
        m.end()
    }
}

pub fn build_b3r(r: u32, gamma: u32) -> Result<B3rGroup> {
    build_b3r_with(r, gamma, &Caps::default())
}

pub fn build_b3r_with(r: u32, gamma: u32, caps: &Caps) -> Result<B3rGroup> {
    check_params(r, gamma)?;
    if r > caps.max_b3r_rank {
        return Err(Error::cap("B(3,r;0,gamma,0) rank", caps.max_b3r_rank as usize));
    }
    let base = AbelianSpec {
        rank: r as usize - 1,
        relations: relations(r, gamma),
    }
    .build(caps.max_order)?;
    let phi = crate::group::spec::matrix_action(&base, &action(r))?;
    let closure = crate::group::spec::semidirect_closure(&base.group, 3, &phi, caps.max_order)?;
    let e = base.group.identity();
    let s = closure.index[&(e, 1)];
    let s_i: Vec<Elem> = (0..r as usize - 1)
        .map(|i| closure.index[&(base.index[&base.lattice.unit(i)], 0)])
        .collect();
    let group = closure.group.with_label(format!("B(3,{r};0,{gamma},0)")).with_prime_hint(3);
    let n = group.subgroup_generated(&[s, s_i[1]]);
    let g = B3rGroup { group, r, gamma, s, s_i, n };
    check_relations(&g)?;
    Ok(g)
}

fn check_relations(g: &B3rGroup) -> Result<()> {
    let grp = &g.group;
    let r = g.r as usize;
    let e = grp.identity();
    let fail = |what: String| Err(Error::RelationCheckFailed(what));
    let s = |i: usize| g.named(i);
    for i in 2..r {
        if s(i) != grp.commutator(s(i - 1), g.s) {
            return fail(format!("s{i} != [s{}, s]", i - 1));
        }
    }
    for i in 2..r {
        if grp.commutator(s(1), s(i)) != e {
            return fail(format!("[s1, s{i}] != e"));
        }
    }
    let word = |i: usize| grp.mul(grp.mul(grp.pow(s(i), 3), grp.pow(s(i + 1), 3)), s(i + 2));
    if word(1) != grp.pow(s(r - 1), g.gamma as u64) {
        return fail(format!("s1^3 s2^3 s3 != s{}^{}", r - 1, g.gamma));
    }
    for i in 2..r {
        if word(i) != e {
            return fail(format!("s{i}^3 s{}^3 s{} != e", i + 1, i + 2));
        }
    }
    if grp.pow(g.s, 3) != e {
        return fail("s^3 != e".into());
    }
    if grp.order() != 3usize.pow(g.r) {
        return fail(format!("order {} is not 3^{}", grp.order(), g.r));
    }
    let z = grp.center();
    if z != grp.subgroup_generated(&[s(r - 1)]) || z.order() != 3 {
        return fail("the center is not <s_{r-1}> of order 3".into());
    }
    if g.n.order() * 3 != grp.order() || !grp.is_normal(&g.n)? {
        return fail("N = <s, s2> is not normal of index 3".into());
    }
    Ok(())
}

/// Whether some `x` in `S \ N` has `x^(3^l) = e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCensus {
    pub r: u32,
    pub gamma: u32,
    pub l: u32,
    #[serde(rename = "exists_outside_N")]
    pub exists_outside_n: bool,
    pub witness: Option<Elem>,
}

pub fn order_census(g: &B3rGroup, l: u32) -> OrderCensus {
    let grp = &g.group;
    let q = 3u64.pow(l);
    let witness = grp.elements().find(|&x| !g.n.contains(x) && grp.pow(x, q) == grp.identity());
    OrderCensus {
        r: g.r,
        gamma: g.gamma,
        l,
        exists_outside_n: witness.is_some(),
        witness,
    }
}

/// Cellularity of `BF` with respect to `B(Z/3^l)` for the exotic fusion
/// systems on `B(3,r;0,gamma,0)`.
///
/// The morphism tables of those systems are not available here. The verdict
/// combines the order census with two declared facts: `N` is strongly
/// closed, and it is the only proper strongly closed subgroup that can
/// contain the images of `Z/3^l`. So the closure is `S` when some element
/// outside `N` has order dividing `3^l`, and `N` otherwise.
pub fn exotic_cellularity_verdict(g: &B3rGroup, l: u32) -> Result<CellularityReport> {
    if l == 0 {
        return Err(Error::InvalidInput("l must be positive".into()));
    }
    let f = FusionSystem::axiomatized(
        &g.group,
        3,
        std::slice::from_ref(&g.n),
        "exotic fusion system on B(3,r;0,gamma,0); morphism tables are external",
    )?;
    let census = order_census(g, l);
    let closure = if census.exists_outside_n { g.group.whole() } else { g.n.clone() };
    let inputs = vec![
        "N = <s, s2> is strongly F-closed".to_string(),
        "N is the only proper strongly F-closed subgroup containing the images of Z/3^l".to_string(),
    ];
    report_for(&f, closure, inputs)
}

/// How an automorphism acts on `s1` modulo `<s2, ..., s_{r-1}>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedShape {
    /// `alpha(s1) = s1 * (element of <s2, ...>)`.
    Eta,
    /// `alpha(s1) = s1^-1 * (element of <s2, ...>)`.
    Omega,
}

pub fn seed_shape(g: &B3rGroup, alpha: &GroupHom) -> Option<SeedShape> {
    let grp = &g.group;
    let s1 = g.s_i[0];
    let image = alpha.apply(s1)?;
    let lower = g.lower_part();
    if lower.contains(grp.mul(grp.inv(s1), image)) {
        Some(SeedShape::Eta)
    } else if lower.contains(grp.mul(s1, image)) {
        Some(SeedShape::Omega)
    } else {
        None
    }
}

/// Every automorphism of `S` of order exactly 2.
pub fn order_two_automorphisms(g: &B3rGroup) -> Result<Vec<GroupHom>> {
    let grp = &g.group;
    let s1 = g.s_i[0];
    let (os, os1) = (grp.element_order(g.s), grp.element_order(s1));
    let candidates = |o: usize| grp.elements().filter(move |&x| grp.element_order(x) == o);
    let mut out = Vec::new();
    for a in candidates(os) {
        for b in candidates(os1) {
            let Ok(h) = GroupHom::from_generator_images(grp, grp, &[(g.s, a), (s1, b)]) else {
                continue;
            };
            if h.domain().order() != grp.order() || !h.is_injective() {
                continue;
            }
            if automorphism_order(h.domain(), h.images()) == 2 {
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// Checks that `N` together with `{x^-1 alpha(x)}` generates `S`.
///
/// Only seeds that are automorphisms of `S` of 2-power order, have one of the
/// two expected shapes on `s1` and map `N` into itself are used; `N` is
/// strongly closed, so any morphism of the fusion system preserves it.
pub fn exotic_pi1_check(g: &B3rGroup, seeds: &[GroupHom]) -> Result<bool> {
    let grp = &g.group;
    let valid: Vec<&GroupHom> = seeds
        .iter()
        .filter(|h| {
            h.domain().parent_id() == grp.id()
                && h.codomain_id() == grp.id()
                && h.domain().order() == grp.order()
                && h.is_injective()
                && is_power_of(automorphism_order(h.domain(), h.images()), 2)
                && seed_shape(g, h).is_some()
                && g.n.members().iter().all(|&x| h.apply(x).is_some_and(|y| g.n.contains(y)))
        })
        .collect();
    if valid.is_empty() {
        return Err(Error::ExternalDataRequired(
            "no automorphism seed of 2-power order with eta or omega shape preserving N".into(),
        ));
    }
    let mut gens: Vec<Elem> = g.n.members().to_vec();
    for h in valid {
        gens.extend(grp.elements().map(|x| grp.mul(grp.inv(x), h.apply(x).expect("total"))));
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(grp.subgroup_generated(&gens).order() == grp.order())
}
