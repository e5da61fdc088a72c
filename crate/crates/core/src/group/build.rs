use std::collections::HashMap;
use std::hash::Hash;

use log::info;

use super::spec::GroupSpec;
use super::{Arena, Compose, Elem, FiniteGroup, TABLE_LIMIT};
use crate::error::{Error, Result};

/// Size limits for the enumerations this crate performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group a closure may enumerate.
    pub max_order: usize,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub max_subgroup_enumeration: usize,
    /// Largest `r` accepted for `B(3,r;0,gamma,0)`.
    pub max_b3r_rank: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_order: 1 << 16,
            max_subgroup_enumeration: 2048,
            max_b3r_rank: 8,
        }
    }
}

/// Result of a breadth-first closure: the group plus its element objects.
pub struct Closure<T> {
    pub group: FiniteGroup,
    pub elements: Vec<T>,
    pub index: HashMap<T, Elem>,
}

impl<T: Clone + Eq + Hash + Send + Sync + 'static> Closure<T> {
    /// Enumerates the group generated by `gens` breadth first from the
    /// identity, multiplying on the right by the generators in the given order.
    pub fn generate(
        label: impl Into<String>,
        identity: T,
        gens: &[T],
        compose: impl Fn(&T, &T) -> T + Send + Sync + 'static,
        cap: usize,
    ) -> Result<Self> {
        let label = label.into();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0 as Elem);
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let y = compose(&elements[head], g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::cap(format!("closure of {label}"), cap));
                    }
                    index.insert(y.clone(), elements.len() as Elem);
                    elements.push(y);
                    if elements.len() % 10_000 == 0 {
                        info!("{label}: {} elements enumerated", elements.len());
                    }
                }
            }
            head += 1;
        }
        let generators: Vec<Elem> = gens.iter().map(|g| index[g]).collect();
        let n = elements.len();
        let group = if n <= TABLE_LIMIT {
            let mut flat = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    flat.push(index[&compose(a, b)]);
                }
            }
            FiniteGroup::from_flat_table(label, 0, flat, generators)
        } else {
            let compose: Compose<T> = Box::new(compose);
            let arena = Arena {
                elements: elements.clone(),
                index: index.clone(),
                compose,
            };
            FiniteGroup::from_arena(label, arena, generators)
        };
        Ok(Self {
            group,
            elements,
            index,
        })
    }
}

/// Builds the group described by `spec` under the default [`Caps`].
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with(spec, &Caps::default())
}

pub fn build_group_with(spec: &GroupSpec, caps: &Caps) -> Result<FiniteGroup> {
    spec.build(caps)
}
