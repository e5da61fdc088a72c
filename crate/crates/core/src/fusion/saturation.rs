use std::collections::HashSet;

use serde::Serialize;

use super::FusionSystem;
use crate::error::Result;
use crate::group::{p_part, Elem, Subgroup};

/// Which saturation axiom a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    /// A fully normalized subgroup must be fully centralized, with `Out_S(P)`
    /// a Sylow subgroup of `Out_F(P)`.
    Sylow,
    /// A morphism onto a fully centralized subgroup must extend to `N_phi`.
    Extension,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationWitness {
    pub axiom: Axiom,
    pub subgroup: Vec<Elem>,
    /// Image of the offending morphism, for extension failures.
    pub image: Option<Vec<Elem>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub saturated: bool,
    pub witnesses: Vec<SaturationWitness>,
}

impl FusionSystem {
    /// Checks both saturation axioms on every subgroup and every morphism.
    pub fn is_saturated(&self) -> Result<SaturationReport> {
        let table = self.table()?;
        let s = &self.sylow;
        let subs = &self.subgroups;
        let normalizers: Vec<Subgroup> = subs.iter().map(|h| s.normalizer(h).expect("same parent")).collect();
        let centralizers: Vec<Subgroup> = subs.iter().map(|h| s.centralizer(h).expect("same parent")).collect();
        let mut witnesses = Vec::new();

        let fully_centralized = |i: usize| -> Result<bool> {
            let c = centralizers[i].order();
            Ok(self.conjugates(i)?.iter().all(|&j| centralizers[j].order() <= c))
        };

        for (i, h) in subs.iter().enumerate() {
            let n = normalizers[i].order();
            let class = self.conjugates(i)?;
            if class.iter().any(|&j| normalizers[j].order() > n) {
                continue;
            }
            if !fully_centralized(i)? {
                witnesses.push(SaturationWitness {
                    axiom: Axiom::Sylow,
                    subgroup: h.members().to_vec(),
                    image: None,
                    detail: format!(
                        "fully normalized subgroup of order {} is not fully centralized (|C_S(P)| = {})",
                        h.order(),
                        centralizers[i].order()
                    ),
                });
            }
            let aut_f = table[i].iter().filter(|m| m.image == i).count();
            let aut_s = n / centralizers[i].order();
            let sylow = p_part(aut_f, self.p as usize);
            if aut_s != sylow {
                witnesses.push(SaturationWitness {
                    axiom: Axiom::Sylow,
                    subgroup: h.members().to_vec(),
                    image: None,
                    detail: format!(
                        "|Aut_S(P)| = {aut_s} but the Sylow {}-subgroups of Aut_F(P) have order {sylow} (|Aut_F(P)| = {aut_f})",
                        self.p
                    ),
                });
            }
        }

        // Aut_S(Q) as explicit maps, built on demand.
        let mut aut_s_cache: Vec<Option<HashSet<Vec<Elem>>>> = vec![None; subs.len()];
        for (i, h) in subs.iter().enumerate() {
            for phi in &table[i] {
                let q = phi.image;
                if !fully_centralized(q)? {
                    continue;
                }
                let image = &subs[q];
                let aut_s = aut_s_cache[q].get_or_insert_with(|| {
                    normalizers[q]
                        .members()
                        .iter()
                        .map(|&g| image.members().iter().map(|&y| s.conj(g, y)).collect())
                        .collect()
                });
                let phi_at = |x: Elem| phi.map[h.position(x).expect("domain")];
                let mut phi_inv = vec![0; image.order()];
                for (k, &y) in phi.map.iter().enumerate() {
                    phi_inv[image.position(y).expect("image")] = h.members()[k];
                }
                // N_phi = { g in N_S(P) : phi c_g phi^-1 in Aut_S(phi(P)) }
                let n_phi: Vec<Elem> = normalizers[i]
                    .members()
                    .iter()
                    .copied()
                    .filter(|&g| {
                        let twisted: Vec<Elem> = phi_inv.iter().map(|&x| phi_at(s.conj(g, x))).collect();
                        aut_s.contains(&twisted)
                    })
                    .collect();
                let n_phi = Subgroup::new(s, n_phi)?;
                let target = self.index[n_phi.members()];
                let extends = table[target].iter().any(|chi| {
                    h.members()
                        .iter()
                        .zip(&phi.map)
                        .all(|(&x, &y)| chi.map[n_phi.position(x).expect("P <= N_phi")] == y)
                });
                if !extends {
                    witnesses.push(SaturationWitness {
                        axiom: Axiom::Extension,
                        subgroup: h.members().to_vec(),
                        image: Some(image.members().to_vec()),
                        detail: format!(
                            "morphism from a subgroup of order {} has no extension to N_phi of order {}",
                            h.order(),
                            n_phi.order()
                        ),
                    });
                }
            }
        }
        Ok(SaturationReport {
            saturated: witnesses.is_empty(),
            witnesses,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::{enumerate_homs_from, GroupHom};

    #[test]
    fn group_fusion_systems_are_saturated() {
        for (g, p) in [
            (catalog::symmetric(3).unwrap(), 3),
            (catalog::alternating(4).unwrap(), 2),
            (catalog::symmetric(4).unwrap(), 2),
        ] {
            let f = FusionSystem::from_group(&g, p).unwrap();
            let report = f.is_saturated().unwrap();
            assert!(report.saturated, "{}: {:?}", g.label(), report.witnesses);
        }
    }

    #[test]
    fn swap_on_klein_four_is_not_saturated() {
        let v = catalog::elementary_abelian(2, 2).unwrap();
        let whole = v.whole();
        let swap = enumerate_homs_from(&v, &whole, &v, true)
            .unwrap()
            .into_iter()
            .find(|h| h.images().iter().zip(whole.members()).filter(|(a, b)| a != b).count() == 2)
            .unwrap();
        let seed = GroupHom::new(&v, whole, &v, swap.images().to_vec()).unwrap();
        let f = FusionSystem::generated(&v, 2, &[seed]).unwrap();
        let report = f.is_saturated().unwrap();
        assert!(!report.saturated);
        assert!(report.witnesses.iter().any(|w| w.axiom == Axiom::Sylow));
    }
}
