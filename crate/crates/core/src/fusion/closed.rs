use std::collections::HashSet;

use super::{FusionSystem, Provenance};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupHom, Subgroup, NONE};

impl FusionSystem {
    /// Whether `K` is strongly closed: every `F`-morphism from a subgroup of
    /// `K` lands in `K`. Checking cyclic subgroups `<x>` of `K` suffices.
    pub fn is_strongly_closed(&self, k: &Subgroup) -> Result<bool> {
        k.check_parent(&self.sylow)?;
        if let Provenance::Axiomatized { strongly_closed, .. } = &self.provenance {
            if k.order() == self.sylow.order() || k.is_trivial() || strongly_closed.iter().any(|m| m == k.members()) {
                return Ok(true);
            }
            if !self.sylow.is_normal(k)? {
                return Ok(false);
            }
        }
        let table = self.table()?;
        Ok(k.members().iter().all(|&x| {
            let c = self.cyclic_index(x);
            let pos = self.subgroup(c).position(x).expect("x generates its cyclic subgroup");
            table[c].iter().all(|m| k.contains(m.map[pos]))
        }))
    }

    /// Strong closure checked on every subgroup of `K`, not just cyclic ones.
    pub fn is_strongly_closed_exhaustive(&self, k: &Subgroup) -> Result<bool> {
        k.check_parent(&self.sylow)?;
        let table = self.table()?;
        Ok(self
            .subgroups
            .iter()
            .enumerate()
            .filter(|(_, h)| h.is_subgroup_of(k))
            .all(|(i, _)| table[i].iter().all(|m| self.subgroup(m.image).is_subgroup_of(k))))
    }

    /// Every strongly closed subgroup, sorted by order.
    pub fn strongly_closed_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.table()?;
        let mut out = Vec::new();
        for h in &self.subgroups {
            if self.is_strongly_closed(h)? {
                out.push(h.clone());
            }
        }
        let members: HashSet<&[Elem]> = out.iter().map(|h| h.members()).collect();
        for a in &out {
            for b in &out {
                if !members.contains(a.intersection(b).members()) {
                    return Err(Error::Internal(
                        "strongly closed subgroups are not closed under intersection".into(),
                    ));
                }
            }
        }
        Ok(out)
    }
}

/// Whether `rho: S -> S'` intertwines `F` with `F'`: for every `phi` in
/// `Hom_F(P, Q)` some `phi'` in `Hom_F'(rho(P), rho(Q))` has
/// `rho . phi = phi' . rho`.
pub fn is_fusion_preserving(rho: &GroupHom, f: &FusionSystem, fp: &FusionSystem) -> Result<bool> {
    let s = f.sylow();
    let sp = fp.sylow();
    if rho.domain().parent_id() != s.id() || rho.domain().order() != s.order() {
        return Err(Error::SubgroupMismatch("rho must be defined on all of S".into()));
    }
    if rho.codomain_id() != sp.id() {
        return Err(Error::SubgroupMismatch("rho must map into the Sylow subgroup of F'".into()));
    }
    let r = |x: Elem| rho.apply(x).expect("total on S");
    let table = f.table()?;
    let table_p = fp.table()?;
    for (i, p) in f.subgroups().iter().enumerate() {
        let rp = sp.subgroup_generated(&p.members().iter().map(|&x| r(x)).collect::<Vec<_>>());
        let di = fp.subgroup_index(&rp)?;
        let known: HashSet<&[Elem]> = table_p[di].iter().map(|m| m.map.as_slice()).collect();
        for phi in &table[i] {
            // phi' is forced: phi'(rho(x)) = rho(phi(x)).
            let mut wanted = vec![NONE; rp.order()];
            let mut consistent = true;
            for (&x, &y) in p.members().iter().zip(&phi.map) {
                let slot = &mut wanted[rp.position(r(x)).expect("rho(P)")];
                if *slot == NONE {
                    *slot = r(y);
                } else if *slot != r(y) {
                    consistent = false;
                    break;
                }
            }
            if !consistent || !known.contains(wanted.as_slice()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
