use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::fusion::FusionSystem;
use crate::group::Subgroup;

/// Whether a subgroup is normal in a fusion system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalityVerdict {
    Normal,
    NotNormal,
    /// The morphism data needed to decide is not available.
    Unknown,
}

/// Serializes as `true`, `false` or `"unknown"`.
impl Serialize for NormalityVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            NormalityVerdict::Normal => s.serialize_bool(true),
            NormalityVerdict::NotNormal => s.serialize_bool(false),
            NormalityVerdict::Unknown => s.serialize_str("unknown"),
        }
    }
}

fn is_abelian(f: &FusionSystem, k: &Subgroup) -> bool {
    let s = f.sylow();
    let gens = s.generating_subset(k);
    gens.iter().all(|&a| gens.iter().all(|&b| s.mul(a, b) == s.mul(b, a)))
}

/// `K` is normal in `F` when `K` is normal in `S` and every `phi` in
/// `Hom_F(P, Q)` extends to a morphism `PK -> QK` mapping `K` onto itself.
/// Abelian strongly closed subgroups are normal without a search.
pub fn is_normal_in_f(f: &FusionSystem, k: &Subgroup) -> Result<NormalityVerdict> {
    let s = f.sylow();
    k.check_parent(s)?;
    if !s.is_normal(k)? {
        return Ok(NormalityVerdict::NotNormal);
    }
    if k.is_trivial() || k.order() == s.order() {
        return Ok(NormalityVerdict::Normal);
    }
    if f.is_axiomatized() {
        let declared = f.declared_strongly_closed().contains(k);
        return Ok(if declared && is_abelian(f, k) {
            NormalityVerdict::Normal
        } else {
            NormalityVerdict::Unknown
        });
    }
    if !f.is_strongly_closed(k)? {
        return Ok(NormalityVerdict::NotNormal);
    }
    if is_abelian(f, k) {
        return Ok(NormalityVerdict::Normal);
    }
    for (i, p) in f.subgroups().iter().enumerate() {
        let pk = s.join(p, k.members());
        let j = f.subgroup_index(&pk)?;
        let extensions = f.morphisms_from(j)?;
        for phi in f.morphisms_from(i)? {
            let found = extensions.iter().any(|chi| {
                let at = |x| chi.map[pk.position(x).expect("member of PK")];
                p.members().iter().zip(&phi.map).all(|(&x, &y)| at(x) == y)
                    && k.members().iter().all(|&x| k.contains(at(x)))
            });
            if !found {
                return Ok(NormalityVerdict::NotNormal);
            }
        }
    }
    Ok(NormalityVerdict::Normal)
}
