//! Fusion systems over a finite `p`-group `S`, stored as explicit morphism sets.
//!
//! Every morphism is an injective map `P -> S` kept under its domain `P`;
//! `Hom_F(P, Q)` is the subset whose image lies in `Q`. The family always
//! contains the conjugations by elements of `S` and is closed under
//! restriction, composition and inversion onto the image.

mod closed;
mod saturation;
pub mod spec;

use std::collections::{HashMap, HashSet, VecDeque};

use log::info;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Caps, Elem, ElemSet, FiniteGroup, GroupHom, Quotient, Subgroup, NONE};

pub use closed::is_fusion_preserving;
pub use saturation::{Axiom, SaturationReport, SaturationWitness};
pub use spec::{FusionSpec, FusionTables, SeedSpec};

/// A morphism `P -> S` stored under its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub(crate) struct Morphism {
    /// Index of the image subgroup.
    pub(crate) image: usize,
    /// `map[i]` is the image of the `i`-th member of the domain.
    pub(crate) map: Vec<Elem>,
}

/// Where the morphisms of a fusion system came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// `F_S(G)`: conjugations in an ambient group. `embedding[i]` is the
    /// ambient element that is element `i` of `S`.
    GroupInduced {
        ambient: String,
        ambient_order: usize,
        embedding: Vec<Elem>,
    },
    /// Smallest fusion system containing the seed morphisms.
    Generated { seeds: usize },
    /// No morphism tables; only the listed subgroups are declared strongly closed.
    Axiomatized {
        strongly_closed: Vec<Vec<Elem>>,
        note: String,
    },
}

/// A fusion system over a `p`-group `S` (a table group of order at most
/// [`crate::group::TABLE_LIMIT`]).
#[derive(Clone, Debug)]
pub struct FusionSystem {
    sylow: FiniteGroup,
    p: u32,
    subgroups: Vec<Subgroup>,
    index: HashMap<Vec<Elem>, usize>,
    cyclic_of: Vec<usize>,
    /// Maximal subgroups of each subgroup.
    maximal: Vec<Vec<usize>>,
    morphisms: Option<Vec<Vec<Morphism>>>,
    provenance: Provenance,
}

impl FusionSystem {
    fn skeleton(sylow: FiniteGroup, p: u32, provenance: Provenance, caps: &Caps) -> Result<Self> {
        if !crate::group::is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime")));
        }
        if !sylow.is_p_group(p) {
            return Err(Error::InvalidInput(format!(
                "{} has order {}, not a power of {p}",
                sylow.label(),
                sylow.order()
            )));
        }
        if !sylow.has_table() {
            return Err(Error::cap("Sylow subgroup", crate::group::TABLE_LIMIT));
        }
        if let Provenance::Axiomatized { strongly_closed, .. } = &provenance {
            return Ok(Self::declared_skeleton(sylow, p, strongly_closed, provenance.clone()));
        }
        let subgroups = sylow.all_subgroups_capped(caps.max_subgroup_enumeration)?;
        let index: HashMap<Vec<Elem>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().to_vec(), i))
            .collect();
        let cyclic_of = sylow
            .elements()
            .map(|x| index[sylow.subgroup_generated(&[x]).members()])
            .collect();
        let maximal = subgroups
            .iter()
            .map(|h| {
                subgroups
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| k.order() * p as usize == h.order() && k.is_subgroup_of(h))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        info!("{}: {} subgroups", sylow.label(), subgroups.len());
        let sylow = sylow.with_prime_hint(p);
        Ok(Self {
            sylow,
            p,
            subgroups,
            index,
            cyclic_of,
            maximal,
            morphisms: None,
            provenance,
        })
    }

    /// Axiomatized systems only know `1`, `S` and the declared subgroups.
    fn declared_skeleton(sylow: FiniteGroup, p: u32, declared: &[Vec<Elem>], provenance: Provenance) -> Self {
        let mut subgroups = vec![sylow.trivial_subgroup(), sylow.whole()];
        subgroups.extend(declared.iter().map(|m| Subgroup::from_sorted(&sylow, m.clone())));
        subgroups.sort();
        subgroups.dedup();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().to_vec(), i))
            .collect();
        Self {
            sylow: sylow.with_prime_hint(p),
            p,
            subgroups,
            index,
            cyclic_of: Vec::new(),
            maximal: Vec::new(),
            morphisms: None,
            provenance,
        }
    }

    /// `F_S(G)` for a Sylow `p`-subgroup `S` of `G`.
    pub fn from_group(g: &FiniteGroup, p: u32) -> Result<Self> {
        Self::from_group_with(g, p, &Caps::default())
    }

    pub fn from_group_with(g: &FiniteGroup, p: u32, caps: &Caps) -> Result<Self> {
        if !crate::group::is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime")));
        }
        let sylow_in_g = g.sylow_subgroup(p);
        if sylow_in_g.order() > caps.max_subgroup_enumeration {
            return Err(Error::cap("Sylow subgroup", caps.max_subgroup_enumeration));
        }
        let (s, embedding) = sylow_in_g.to_group(g)?;
        let s = s.with_label(format!("Sylow {p}-subgroup of {}", g.label()));
        let provenance = Provenance::GroupInduced {
            ambient: g.label().to_string(),
            ambient_order: g.order(),
            embedding: embedding.clone(),
        };
        let mut f = Self::skeleton(s, p, provenance, caps)?;
        let n = f.sylow.order();
        let mut back = vec![NONE; g.order()];
        for (i, &x) in embedding.iter().enumerate() {
            back[x as usize] = i as Elem;
        }
        // Distinct partial conjugation maps on S.
        let mut rows: HashSet<Vec<Elem>> = HashSet::new();
        for x in g.elements() {
            let xi = g.inv(x);
            let row: Vec<Elem> = embedding
                .iter()
                .map(|&s| back[g.mul(g.mul(x, s), xi) as usize])
                .collect();
            rows.insert(row);
            if x % 10_000 == 9_999 {
                info!("conjugation maps: {} of {} ambient elements", x + 1, g.order());
            }
        }
        let mut rows: Vec<Vec<Elem>> = rows.into_iter().collect();
        rows.sort_unstable();
        let domains: Vec<ElemSet> = rows
            .iter()
            .map(|r| {
                let inside: Vec<Elem> = (0..n as Elem).filter(|&s| r[s as usize] != NONE).collect();
                ElemSet::from_slice(n, &inside)
            })
            .collect();
        info!("{} distinct conjugation maps", rows.len());
        let mut morphisms = Vec::with_capacity(f.subgroups.len());
        for h in &f.subgroups {
            let mut seen: HashSet<Vec<Elem>> = HashSet::new();
            let mut list = Vec::new();
            for (row, dom) in rows.iter().zip(&domains) {
                if !h.members().iter().all(|&x| dom.contains(x)) {
                    continue;
                }
                let map: Vec<Elem> = h.members().iter().map(|&x| row[x as usize]).collect();
                if seen.insert(map.clone()) {
                    let image = f.image_index(&map);
                    list.push(Morphism { image, map });
                }
            }
            list.sort_by(|a, b| a.map.cmp(&b.map));
            morphisms.push(list);
        }
        f.morphisms = Some(morphisms);
        Ok(f)
    }

    /// `F_S(S)`.
    pub fn inner(s: &FiniteGroup, p: u32) -> Result<Self> {
        Self::generated(s, p, &[])
    }

    /// The smallest fusion system over `s` containing every seed.
    pub fn generated(s: &FiniteGroup, p: u32, seeds: &[GroupHom]) -> Result<Self> {
        Self::generated_with(s, p, seeds, &Caps::default())
    }

    pub fn generated_with(s: &FiniteGroup, p: u32, seeds: &[GroupHom], caps: &Caps) -> Result<Self> {
        for (i, seed) in seeds.iter().enumerate() {
            if seed.domain().parent_id() != s.id() || seed.codomain_id() != s.id() {
                return Err(Error::SubgroupMismatch(format!("seed {i} is not a map between subgroups of S")));
            }
            if !seed.is_injective() {
                return Err(Error::InvalidInput(format!("seed {i} is not injective")));
            }
        }
        let provenance = Provenance::Generated { seeds: seeds.len() };
        let mut f = Self::skeleton(s.clone(), p, provenance, caps)?;
        let mut fam = Family::new(f.subgroups.len());
        for (i, h) in f.subgroups.iter().enumerate() {
            for x in f.sylow.elements() {
                let map = h.members().iter().map(|&y| f.sylow.conj(x, y)).collect();
                fam.add(&f, i, map);
            }
        }
        for seed in seeds {
            let dom = f.index[seed.domain().members()];
            fam.add(&f, dom, seed.images().to_vec());
        }
        let mut processed = 0usize;
        while let Some((dom, k)) = fam.queue.pop_front() {
            let phi = fam.lists[dom][k].clone();
            let domain = &f.subgroups[dom];
            let image = &f.subgroups[phi.image];
            // inverse onto the image
            let mut inv = vec![NONE; image.order()];
            for (i, &y) in phi.map.iter().enumerate() {
                inv[image.position(y).expect("image")] = domain.members()[i];
            }
            fam.add(&f, phi.image, inv);
            // restrictions to maximal subgroups
            for &sub in &f.maximal[dom] {
                let map = f.subgroups[sub]
                    .members()
                    .iter()
                    .map(|&x| phi.map[domain.position(x).expect("subgroup")])
                    .collect();
                fam.add(&f, sub, map);
            }
            // psi . phi for psi defined on the image
            for j in 0..fam.lists[phi.image].len() {
                let psi = &fam.lists[phi.image][j];
                let map = phi.map.iter().map(|&y| psi.map[image.position(y).expect("image")]).collect();
                fam.add(&f, dom, map);
            }
            // phi . chi for chi landing on the domain
            for j in 0..fam.into[dom].len() {
                let (src, c) = fam.into[dom][j];
                let map = fam.lists[src][c]
                    .map
                    .iter()
                    .map(|&y| phi.map[domain.position(y).expect("domain")])
                    .collect();
                fam.add(&f, src, map);
            }
            processed += 1;
            if processed % 10_000 == 0 {
                info!("fusion closure: {processed} morphisms processed, {} queued", fam.queue.len());
            }
        }
        let mut lists = fam.lists;
        for list in &mut lists {
            list.sort_by(|a, b| a.map.cmp(&b.map));
        }
        f.morphisms = Some(lists);
        Ok(f)
    }

    /// A fusion system known only through declared facts: the listed
    /// subgroups are strongly closed. Queries needing morphisms fail with
    /// [`Error::ExternalDataRequired`].
    pub fn axiomatized(s: &FiniteGroup, p: u32, strongly_closed: &[Subgroup], note: impl Into<String>) -> Result<Self> {
        for k in strongly_closed {
            k.check_parent(s)?;
            if !s.is_normal(k)? {
                return Err(Error::InvalidInput(
                    "a declared strongly closed subgroup must be normal in S".into(),
                ));
            }
        }
        let mut declared: Vec<Vec<Elem>> = strongly_closed.iter().map(|k| k.members().to_vec()).collect();
        declared.sort();
        declared.dedup();
        let provenance = Provenance::Axiomatized {
            strongly_closed: declared,
            note: note.into(),
        };
        Self::skeleton(s.clone(), p, provenance, &Caps::default())
    }

    pub fn sylow(&self) -> &FiniteGroup {
        &self.sylow
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_axiomatized(&self) -> bool {
        matches!(self.provenance, Provenance::Axiomatized { .. })
    }

    /// All subgroups of `S`, canonically sorted.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// The declared strongly closed subgroups of an axiomatized system.
    pub fn declared_strongly_closed(&self) -> Vec<Subgroup> {
        match &self.provenance {
            Provenance::Axiomatized { strongly_closed, .. } => strongly_closed
                .iter()
                .map(|m| self.subgroups[self.index[m]].clone())
                .collect(),
            _ => Vec::new(),
        }
    }

    pub(crate) fn subgroup_index(&self, h: &Subgroup) -> Result<usize> {
        h.check_parent(&self.sylow)?;
        match self.index.get(h.members()) {
            Some(&i) => Ok(i),
            None if self.is_axiomatized() => Err(Error::ExternalDataRequired(
                "the axiomatized fusion system has no data on this subgroup".into(),
            )),
            None => Err(Error::Internal("subgroup missing from the lattice".into())),
        }
    }

    pub(crate) fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub(crate) fn cyclic_index(&self, x: Elem) -> usize {
        self.cyclic_of[x as usize]
    }

    fn image_index(&self, map: &[Elem]) -> usize {
        let mut members = map.to_vec();
        members.sort_unstable();
        members.dedup();
        self.index[&members]
    }

    pub(crate) fn table(&self) -> Result<&Vec<Vec<Morphism>>> {
        self.morphisms.as_ref().ok_or_else(|| {
            Error::ExternalDataRequired(format!(
                "the fusion system over {} is axiomatized; its morphism tables are not available",
                self.sylow.label()
            ))
        })
    }

    pub(crate) fn morphisms_from(&self, i: usize) -> Result<&[Morphism]> {
        Ok(&self.table()?[i])
    }

    fn to_hom(&self, dom: usize, m: &Morphism) -> GroupHom {
        GroupHom::from_parts(self.subgroups[dom].clone(), self.sylow.id(), m.map.clone())
    }

    /// `Hom_F(P, Q)`.
    pub fn homs(&self, p: &Subgroup, q: &Subgroup) -> Result<Vec<GroupHom>> {
        let dp = self.subgroup_index(p)?;
        q.check_parent(&self.sylow)?;
        Ok(self
            .morphisms_from(dp)?
            .iter()
            .filter(|m| self.subgroups[m.image].is_subgroup_of(q))
            .map(|m| self.to_hom(dp, m))
            .collect())
    }

    /// Total number of stored morphisms.
    pub fn morphism_count(&self) -> Result<usize> {
        Ok(self.table()?.iter().map(Vec::len).sum())
    }

    /// `Aut_F(P)` as a group under composition, `(a * b)(x) = a(b(x))`.
    pub fn aut_f(&self, p: &Subgroup) -> Result<AutomorphismGroup> {
        let dp = self.subgroup_index(p)?;
        let maps: Vec<Vec<Elem>> = self
            .morphisms_from(dp)?
            .iter()
            .filter(|m| m.image == dp)
            .map(|m| m.map.clone())
            .collect();
        AutomorphismGroup::new(p.clone(), maps)
    }

    /// `Out_F(P) = Aut_F(P) / Inn(P)`.
    pub fn out_f(&self, p: &Subgroup) -> Result<OuterAutomorphisms> {
        let aut = self.aut_f(p)?;
        let inner: Vec<Elem> = p
            .members()
            .iter()
            .map(|&x| {
                let map: Vec<Elem> = p.members().iter().map(|&y| self.sylow.conj(x, y)).collect();
                aut.position(&map).expect("inner automorphisms belong to Aut_F(P)")
            })
            .collect();
        let inner = aut.group.subgroup_generated(&inner);
        let quotient = Quotient::new(&aut.group, &inner)?;
        Ok(OuterAutomorphisms { aut, inner, quotient })
    }

    /// Element-level view of the morphisms with domain `P`.
    pub fn morphisms_on(&self, p: &Subgroup) -> Result<Vec<GroupHom>> {
        let dp = self.subgroup_index(p)?;
        Ok(self.morphisms_from(dp)?.iter().map(|m| self.to_hom(dp, m)).collect())
    }

    /// `F`-conjugates of `P` (images of morphisms from `P`), as subgroup indices.
    pub(crate) fn conjugates(&self, dp: usize) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self.morphisms_from(dp)?.iter().map(|m| m.image).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Morphism family under construction, with a work queue of unprocessed entries.
struct Family {
    sets: Vec<HashSet<Vec<Elem>>>,
    lists: Vec<Vec<Morphism>>,
    /// `(domain, position)` of every morphism landing on each subgroup.
    into: Vec<Vec<(usize, usize)>>,
    queue: VecDeque<(usize, usize)>,
}

impl Family {
    fn new(count: usize) -> Self {
        Self {
            sets: vec![HashSet::new(); count],
            lists: vec![Vec::new(); count],
            into: vec![Vec::new(); count],
            queue: VecDeque::new(),
        }
    }

    fn add(&mut self, f: &FusionSystem, dom: usize, map: Vec<Elem>) {
        if self.sets[dom].insert(map.clone()) {
            let image = f.image_index(&map);
            self.lists[dom].push(Morphism { image, map });
            let k = self.lists[dom].len() - 1;
            self.into[image].push((dom, k));
            self.queue.push_back((dom, k));
        }
    }
}

/// `Aut_F(P)` with its elements as explicit maps on `P`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub domain: Subgroup,
    pub group: FiniteGroup,
    /// `maps[a][i]` is the image of the `i`-th member of the domain under `a`.
    pub maps: Vec<Vec<Elem>>,
}

impl AutomorphismGroup {
    fn new(domain: Subgroup, mut maps: Vec<Vec<Elem>>) -> Result<Self> {
        maps.sort();
        let index: HashMap<Vec<Elem>, Elem> = maps.iter().enumerate().map(|(i, m)| (m.clone(), i as Elem)).collect();
        let n = maps.len();
        if n > crate::group::TABLE_LIMIT {
            return Err(Error::cap("automorphism group", crate::group::TABLE_LIMIT));
        }
        let mut table = Vec::with_capacity(n);
        for a in &maps {
            let mut row = Vec::with_capacity(n);
            for b in &maps {
                let ab: Vec<Elem> = b.iter().map(|&y| a[domain.position(y).expect("automorphism")]).collect();
                row.push(*index.get(&ab).ok_or_else(|| Error::Internal("Aut_F(P) not closed under composition".into()))?);
            }
            table.push(row);
        }
        let group = FiniteGroup::from_table(format!("Aut_F of a subgroup of order {}", domain.order()), table)?;
        Ok(Self { domain, group, maps })
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn position(&self, map: &[Elem]) -> Option<Elem> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).ok().map(|i| i as Elem)
    }
}

#[derive(Clone, Debug)]
pub struct OuterAutomorphisms {
    pub aut: AutomorphismGroup,
    /// `Inn(P)` inside `aut.group`.
    pub inner: Subgroup,
    pub quotient: Quotient,
}

impl OuterAutomorphisms {
    pub fn order(&self) -> usize {
        self.quotient.group.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sym3_at_three_has_inverting_automorphism() {
        let g = catalog::symmetric(3).unwrap();
        let f = FusionSystem::from_group(&g, 3).unwrap();
        let s = f.sylow().whole();
        assert_eq!(s.order(), 3);
        assert_eq!(f.aut_f(&s).unwrap().order(), 2);
        assert_eq!(f.out_f(&s).unwrap().order(), 2);
    }

    #[test]
    fn inner_fusion_has_only_inner_automorphisms() {
        let d8 = catalog::dihedral(8).unwrap();
        let f = FusionSystem::inner(&d8, 2).unwrap();
        let s = f.sylow().whole();
        assert_eq!(f.aut_f(&s).unwrap().order(), 4);
        assert_eq!(f.out_f(&s).unwrap().order(), 1);
    }

    #[test]
    fn a4_fusion_matches_generated_from_order_three_automorphism() {
        let a4 = catalog::alternating(4).unwrap();
        let induced = FusionSystem::from_group(&a4, 2).unwrap();
        let v = induced.sylow().clone();
        let aut = induced.aut_f(&v.whole()).unwrap();
        assert_eq!(aut.order(), 3);
        let seed_map = aut.maps.iter().find(|m| m.iter().zip(v.whole().members()).any(|(a, b)| a != b)).unwrap();
        let seed = GroupHom::new(&v, v.whole(), &v, seed_map.clone()).unwrap();
        let generated = FusionSystem::generated(&v, 2, &[seed]).unwrap();
        for p in induced.subgroups() {
            for q in induced.subgroups() {
                assert_eq!(induced.homs(p, q).unwrap(), generated.homs(p, q).unwrap());
            }
        }
    }

    #[test]
    fn generated_fusion_contains_restrictions_of_seeds() {
        let v = catalog::elementary_abelian(2, 2).unwrap();
        let whole = v.whole();
        let swap: Vec<Elem> = {
            let auts = crate::group::enumerate_homs_from(&v, &whole, &v, true).unwrap();
            auts.into_iter().find(|h| h.images().iter().zip(whole.members()).filter(|(a, b)| a != b).count() == 2).unwrap().images().to_vec()
        };
        let seed = GroupHom::new(&v, whole.clone(), &v, swap).unwrap();
        let f = FusionSystem::generated(&v, 2, &[seed.clone()]).unwrap();
        for h in f.subgroups() {
            let restricted: Vec<Elem> = h.members().iter().map(|&x| seed.apply(x).unwrap()).collect();
            assert!(f.morphisms_on(h).unwrap().iter().any(|m| m.images() == restricted));
        }
    }

    #[test]
    fn axiomatized_system_refuses_morphism_queries() {
        let s = catalog::cyclic(9).unwrap();
        let f = FusionSystem::axiomatized(&s, 3, &[], "no tables").unwrap();
        assert!(matches!(f.homs(&s.whole(), &s.whole()), Err(Error::ExternalDataRequired(_))));
    }

    #[test]
    fn wreath_fusion_contains_coordinate_swap() {
        let g = catalog::wreath(3, 2, 2).unwrap();
        let f = FusionSystem::from_group(&g, 3).unwrap();
        let s = f.sylow().whole();
        assert_eq!(s.order(), 81);
        assert_eq!(f.aut_f(&s).unwrap().order(), 2);
    }
}
