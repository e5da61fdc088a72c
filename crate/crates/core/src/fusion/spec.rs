//! JSON encodings of fusion systems.
//!
//! ```json
//! {"kind":"group-induced","ambient":{"kind":"perm",...},"p":3}
//! {"kind":"generated","S":{...},"p":2,"seeds":[{"domain":[1,2],"map":{"1":2,"2":3}}]}
//! {"kind":"axiomatized","S":{...},"p":3,"strongly_closed":[[0,4,8]]}
//! ```
//!
//! A seed's `domain` lists generators of its domain subgroup and `map` gives
//! the image of each of them. A fully built system can also be stored as
//! [`FusionTables`], which keeps `S` and every morphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FusionSystem, Morphism, Provenance};
use crate::error::{Error, Result};
use crate::group::{Caps, Elem, FiniteGroup, GroupHom, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FusionSpec {
    GroupInduced {
        ambient: GroupSpec,
        p: u32,
    },
    Generated {
        #[serde(rename = "S")]
        s: GroupSpec,
        p: u32,
        #[serde(default)]
        seeds: Vec<SeedSpec>,
    },
    Axiomatized {
        #[serde(rename = "S")]
        s: GroupSpec,
        #[serde(default)]
        p: Option<u32>,
        strongly_closed: Vec<Vec<Elem>>,
        #[serde(default)]
        note: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub domain: Vec<Elem>,
    #[serde(deserialize_with = "elem_keyed")]
    pub map: BTreeMap<Elem, Elem>,
}

/// JSON object keys are strings; inside a tagged enum serde cannot coerce them.
fn elem_keyed<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Elem, Elem>, D::Error> {
    BTreeMap::<String, Elem>::deserialize(d)?
        .into_iter()
        .map(|(k, v)| k.trim().parse().map(|k| (k, v)).map_err(serde::de::Error::custom))
        .collect()
}

impl SeedSpec {
    pub fn to_hom(&self, s: &FiniteGroup) -> Result<GroupHom> {
        let mut pairs = Vec::with_capacity(self.domain.len());
        for x in &self.domain {
            let y = self.map.get(x).ok_or_else(|| {
                Error::InvalidInput(format!("seed map has no image for domain generator {x}"))
            })?;
            pairs.push((*x, *y));
        }
        GroupHom::from_generator_images(s, s, &pairs)
    }

    pub fn from_hom(h: &GroupHom) -> Self {
        Self {
            domain: h.domain().members().to_vec(),
            map: h.domain().members().iter().copied().zip(h.images().iter().copied()).collect(),
        }
    }
}

impl FusionSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fusion specs always serialize")
    }

    pub fn build(&self, caps: &Caps) -> Result<FusionSystem> {
        match self {
            FusionSpec::GroupInduced { ambient, p } => {
                let g = crate::group::build_group_with(ambient, caps)?;
                FusionSystem::from_group_with(&g, *p, caps)
            }
            FusionSpec::Generated { s, p, seeds } => {
                let s = crate::group::build_group_with(s, caps)?;
                let seeds = seeds.iter().map(|seed| seed.to_hom(&s)).collect::<Result<Vec<_>>>()?;
                FusionSystem::generated_with(&s, *p, &seeds, caps)
            }
            FusionSpec::Axiomatized { s, p, strongly_closed, note } => {
                let s = crate::group::build_group_with(s, caps)?;
                let p = match p {
                    Some(p) => *p,
                    None => smallest_prime_factor(s.order())
                        .ok_or_else(|| Error::InvalidInput("the trivial group needs an explicit p".into()))?,
                };
                let declared = strongly_closed
                    .iter()
                    .map(|m| crate::group::Subgroup::new(&s, m.clone()))
                    .collect::<Result<Vec<_>>>()?;
                FusionSystem::axiomatized(&s, p, &declared, note.clone())
            }
        }
    }
}

fn smallest_prime_factor(n: usize) -> Option<u32> {
    (2..=n).find(|d| n % d == 0).map(|d| d as u32)
}

/// A fusion system with its Sylow table and every morphism, for caching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTables {
    pub label: String,
    pub p: u32,
    pub table: Vec<Vec<Elem>>,
    pub generators: Vec<Elem>,
    pub provenance: Provenance,
    morphisms: Option<Vec<Vec<Morphism>>>,
}

impl FusionSystem {
    pub fn to_tables(&self) -> Result<FusionTables> {
        Ok(FusionTables {
            label: self.sylow.label().to_string(),
            p: self.p,
            table: self.sylow.table()?,
            generators: self.sylow.generators().to_vec(),
            provenance: self.provenance.clone(),
            morphisms: self.morphisms.clone(),
        })
    }

    /// Rebuilds a fusion system from stored tables. The subgroup lattice is
    /// recomputed; it is deterministic, so stored image indices stay valid.
    pub fn from_tables(t: FusionTables, caps: &Caps) -> Result<Self> {
        let s = FiniteGroup::from_table_trusted(t.label, t.table, t.generators)?;
        let mut f = Self::skeleton(s, t.p, t.provenance, caps)?;
        if let Some(m) = &t.morphisms {
            if m.len() != f.subgroups.len() {
                return Err(Error::Parse("stored morphisms do not match the subgroup lattice".into()));
            }
        }
        f.morphisms = t.morphisms;
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_induced_spec_round_trip() {
        let json = r#"{"kind":"group-induced","ambient":{"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]},"p":3}"#;
        let spec = FusionSpec::from_json(json).unwrap();
        assert_eq!(FusionSpec::from_json(&spec.to_json()).unwrap(), spec);
        let f = spec.build(&Caps::default()).unwrap();
        assert_eq!(f.sylow().order(), 3);
    }

    #[test]
    fn generated_spec_with_seed() {
        // V = (Z/2)^2 with an order-3 automorphism as seed.
        let json = r#"{"kind":"generated","S":{"kind":"abelian","rank":2,"relations":[[2,0],[0,2]]},"p":2,
            "seeds":[{"domain":[1,2],"map":{"1":2,"2":3}}]}"#;
        let spec = FusionSpec::from_json(json).unwrap();
        let f = spec.build(&Caps::default()).unwrap();
        let v = f.sylow().whole();
        assert_eq!(v.order(), 4);
        assert_eq!(f.aut_f(&v).unwrap().order(), 3);
        assert!(f.is_saturated().unwrap().saturated);
    }

    #[test]
    fn tables_round_trip() {
        let json = r#"{"kind":"group-induced","ambient":{"kind":"perm","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]},"p":2}"#;
        let f = FusionSpec::from_json(json).unwrap().build(&Caps::default()).unwrap();
        let text = serde_json::to_string(&f.to_tables().unwrap()).unwrap();
        let back = FusionSystem::from_tables(serde_json::from_str(&text).unwrap(), &Caps::default()).unwrap();
        assert_eq!(back.to_tables().unwrap(), f.to_tables().unwrap());
        assert_eq!(back.morphism_count().unwrap(), f.morphism_count().unwrap());
    }

    #[test]
    fn bad_seed_is_rejected() {
        let json = r#"{"kind":"generated","S":{"kind":"abelian","rank":1,"relations":[[4]]},"p":2,
            "seeds":[{"domain":[1],"map":{"1":2}}]}"#;
        let spec = FusionSpec::from_json(json).unwrap();
        assert!(spec.build(&Caps::default()).is_err());
    }
}
