use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use log::info;
use serde::Serialize;

use super::{p_part, Elem, ElemSet, FiniteGroup, TABLE_LIMIT};
use crate::error::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as its strictly sorted member list.
///
/// Two subgroups of the same parent are equal iff their member lists are.
/// The canonical order sorts by order first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: u64,
    members: Vec<Elem>,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parent
            .cmp(&other.parent)
            .then(self.members.len().cmp(&other.members.len()))
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serializes as the sorted member list.
impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl Subgroup {
    /// Trusted constructor from an already closed, sorted member list.
    pub(crate) fn from_sorted(parent: &FiniteGroup, members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self {
            parent: parent.id(),
            members,
        }
    }

    /// Validates an arbitrary member list as a subgroup of `parent`.
    pub fn new(parent: &FiniteGroup, mut members: Vec<Elem>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x as usize >= parent.order()) {
            return Err(Error::InvalidInput("subgroup member out of range".into()));
        }
        let set = ElemSet::from_slice(parent.order(), &members);
        if !set.contains(parent.identity()) {
            return Err(Error::InvalidInput("subgroup does not contain the identity".into()));
        }
        for &a in &members {
            if !set.contains(parent.inv(a)) {
                return Err(Error::InvalidInput(format!("subgroup is not closed under inverse at {a}")));
            }
            for &b in &members {
                if !set.contains(parent.mul(a, b)) {
                    return Err(Error::InvalidInput(format!(
                        "subgroup is not closed under multiplication at ({a}, {b})"
                    )));
                }
            }
        }
        if parent.order() % members.len() != 0 {
            return Err(Error::Internal("closed subset violates Lagrange".into()));
        }
        Ok(Self::from_sorted(parent, members))
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the member list.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent
            && self.order() <= other.order()
            && other.order() % self.order() == 0
            && self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.parent, other.parent, "intersection of subgroups of different groups");
        Subgroup {
            parent: self.parent,
            members: self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }

    pub(crate) fn check_parent(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent != g.id() {
            return Err(Error::SubgroupMismatch(format!(
                "subgroup of order {} does not belong to {}",
                self.order(),
                g.label()
            )));
        }
        Ok(())
    }

    /// Materializes the subgroup as a standalone group.
    ///
    /// Element `i` of the returned group is `members()[i]` of the parent; the
    /// returned vector is that embedding.
    pub fn to_group(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<Elem>)> {
        self.check_parent(parent)?;
        let n = self.order();
        if n > TABLE_LIMIT {
            return Err(Error::cap("standalone subgroup", TABLE_LIMIT));
        }
        let pos: HashMap<Elem, Elem> = self
            .members
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as Elem))
            .collect();
        let mut flat = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                flat.push(pos[&parent.mul(a, b)]);
            }
        }
        let identity = pos[&parent.identity()];
        let mut group = FiniteGroup::from_flat_table(
            format!("subgroup of order {n} in {}", parent.label()),
            identity,
            flat,
            Vec::new(),
        );
        group.prime_hint = parent.prime_hint();
        group.generators = group.greedy_generators();
        Ok((group, self.members.clone()))
    }
}

impl FiniteGroup {
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self, self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![self.identity()])
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Subgroup {
        let mut seen = ElemSet::new(self.order());
        seen.insert(self.identity());
        let mut members = vec![self.identity()];
        let mut gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != self.identity()).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        Subgroup::from_sorted(self, members)
    }

    /// `<H, extra>`.
    pub fn join(&self, h: &Subgroup, extra: &[Elem]) -> Subgroup {
        let mut seen = ElemSet::from_slice(self.order(), h.members());
        let mut members = h.members().to_vec();
        let mut gens = self.generating_subset(h);
        gens.extend_from_slice(extra);
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        Subgroup::from_sorted(self, members)
    }

    /// A small generating set of `h`, picked greedily from its members.
    pub fn generating_subset(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = ElemSet::new(self.order());
        span.insert(self.identity());
        let mut span_size = 1;
        for &x in h.members().iter().rev() {
            if span_size == h.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                let sub = self.subgroup_generated(&gens);
                span = ElemSet::from_slice(self.order(), sub.members());
                span_size = sub.order();
            }
        }
        gens
    }

    /// Every subgroup of the group, canonically sorted (by order, then members).
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_capped(super::Caps::default().max_subgroup_enumeration)
    }

    pub fn all_subgroups_capped(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order() > cap {
            return Err(Error::cap(format!("subgroup lattice of {}", self.label()), cap));
        }
        // Each subgroup is a join of cyclic subgroups; grow joins layer by layer.
        let mut cyclic_gens: Vec<Elem> = Vec::new();
        let mut cyclic_seen: HashSet<Vec<Elem>> = HashSet::new();
        for x in self.elements() {
            let c = self.subgroup_generated(&[x]);
            if cyclic_seen.insert(c.members) {
                cyclic_gens.push(x);
            }
        }
        let trivial = self.trivial_subgroup();
        let mut found: HashSet<Vec<Elem>> = HashSet::new();
        found.insert(trivial.members.clone());
        let mut all = vec![trivial.clone()];
        let mut frontier = vec![trivial];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                let h_gens = self.generating_subset(h);
                for &x in &cyclic_gens {
                    if h.contains(x) {
                        continue;
                    }
                    let mut gens = h_gens.clone();
                    gens.push(x);
                    let j = self.subgroup_generated(&gens);
                    if found.insert(j.members.clone()) {
                        next.push(j.clone());
                        all.push(j);
                    }
                }
            }
            if !next.is_empty() {
                info!("{}: {} subgroups so far", self.label(), all.len());
            }
            frontier = next;
        }
        all.sort();
        Ok(all)
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators_or_all();
        let members = self
            .elements()
            .filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Subgroup::from_sorted(self, members)
    }

    /// `C_G(H)`.
    pub fn centralizer(&self, h: &Subgroup) -> Result<Subgroup> {
        h.check_parent(self)?;
        let gens = self.generating_subset(h);
        let members = self
            .elements()
            .filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Ok(Subgroup::from_sorted(self, members))
    }

    /// `N_G(H)`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        h.check_parent(self)?;
        let gens = self.generating_subset(h);
        let members = self
            .elements()
            .filter(|&x| gens.iter().all(|&g| h.contains(self.conj(x, g))))
            .collect();
        Ok(Subgroup::from_sorted(self, members))
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, g: Elem, h: &Subgroup) -> Result<Subgroup> {
        h.check_parent(self)?;
        let mut members: Vec<Elem> = h.members().iter().map(|&x| self.conj(g, x)).collect();
        members.sort_unstable();
        Ok(Subgroup::from_sorted(self, members))
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        h.check_parent(self)?;
        let hg = self.generating_subset(h);
        Ok(self
            .generators_or_all()
            .iter()
            .all(|&g| hg.iter().all(|&x| h.contains(self.conj(g, x)))))
    }

    pub(crate) fn generators_or_all(&self) -> Vec<Elem> {
        if self.generators().is_empty() {
            self.elements().collect()
        } else {
            self.generators().to_vec()
        }
    }

    /// A Sylow `p`-subgroup, found by climbing normalizers from the least
    /// element of order `p`: while `P` is not Sylow, `N_G(P)/P` has an element
    /// of order `p`, and the least such coset representative extends `P`.
    pub fn sylow_subgroup(&self, p: u32) -> Subgroup {
        let target = p_part(self.order(), p as usize);
        let p = p as usize;
        let Some(x) = self.elements().find(|&x| self.element_order(x) == p) else {
            return self.trivial_subgroup();
        };
        let mut sylow = self.subgroup_generated(&[x]);
        while sylow.order() < target {
            let normalizer = self.normalizer(&sylow).expect("same parent");
            let step = normalizer
                .members()
                .iter()
                .filter(|&&y| !sylow.contains(y))
                .find_map(|&y| {
                    // order of y modulo P
                    let mut m = 1u64;
                    let mut z = y;
                    while !sylow.contains(z) {
                        z = self.mul(z, y);
                        m += 1;
                    }
                    super::is_power_of(m as usize, p).then(|| self.pow(y, m / p as u64))
                })
                .expect("a non-Sylow p-subgroup has a p-element in N(P)/P");
            sylow = self.join(&sylow, &[step]);
        }
        info!("Sylow {p}-subgroup of {} has order {}", self.label(), sylow.order());
        sylow
    }
}
