//! JSON input encodings for finite groups.
//!
//! ```json
//! {"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]}
//! {"kind":"table","table":[[0,1],[1,0]]}
//! {"kind":"abelian","rank":2,"relations":[[9,0],[0,9]]}
//! {"kind":"semidirect","base":{...},"actor":3,"action":[[1,1],[0,1]]}
//! {"kind":"matrix","field":{"char":2,"deg":3},"dim":4,"generators":[[[1,0,0,0],...]]}
//! ```
//!
//! Permutations are image lists on `0..degree` and compose left to right:
//! `(x * y)(i) = y(x(i))`. A semidirect product `base ⋊ Z/actor` multiplies
//! pairs `(b, t^i)(c, t^j) = (b * phi^i(c), t^(i+j))`, so the actor generator
//! `t` acts by `t c t^-1 = phi(c)`. The action is either the full image list
//! of `phi` on base element indices, or (for an `abelian` base) an integer
//! matrix whose row `j` is the image of base generator `j`.

use serde::{Deserialize, Serialize};

use super::abelian::Lattice;
use super::build::{Caps, Closure};
use super::gf2k::Gf2k;
use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Perm(PermSpec),
    Table(TableSpec),
    Abelian(AbelianSpec),
    Semidirect(SemidirectSpec),
    Matrix(MatrixSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableSpec {
    pub table: Vec<Vec<Elem>>,
}

/// `Z^rank` modulo the lattice spanned by `relations`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianSpec {
    pub rank: usize,
    pub relations: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemidirectSpec {
    pub base: Box<GroupSpec>,
    /// Order of the acting cyclic group.
    pub actor: u32,
    pub action: Action,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Action {
    /// `images[b] = phi(b)` for every base element index `b`.
    Images(Vec<Elem>),
    /// Row `j` is `phi(e_j)` in the generators of an abelian base.
    Matrix(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub deg: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub field: FieldSpec,
    pub dim: usize,
    /// Each generator is `dim` rows of `dim` field elements.
    pub generators: Vec<Vec<Vec<u8>>>,
}

impl GroupSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group specs always serialize")
    }

    pub(crate) fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Perm(p) => p.build(caps.max_order),
            GroupSpec::Table(t) => FiniteGroup::from_table("table group", t.table.clone()),
            GroupSpec::Abelian(a) => Ok(a.build(caps.max_order)?.group),
            GroupSpec::Semidirect(s) => s.build(caps),
            GroupSpec::Matrix(m) => m.build(caps.max_order),
        }
    }
}

impl PermSpec {
    fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if self.degree == 0 {
            return Err(Error::InvalidSpec("permutation degree must be positive".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(Error::InvalidSpec(format!(
                    "generator {i} has {} images, degree is {}",
                    g.len(),
                    self.degree
                )));
            }
            let mut seen = vec![false; self.degree];
            for &x in g {
                if x as usize >= self.degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidSpec(format!("generator {i} is not a bijection")));
                }
            }
        }
        let identity: Vec<u32> = (0..self.degree as u32).collect();
        let closure = Closure::generate(
            format!("perm group of degree {}", self.degree),
            identity,
            &self.generators,
            |x: &Vec<u32>, y: &Vec<u32>| x.iter().map(|&i| y[i as usize]).collect(),
            cap,
        )?;
        Ok(closure.group)
    }
}

pub(crate) struct AbelianGroup {
    pub(crate) group: FiniteGroup,
    pub(crate) lattice: Lattice,
    pub(crate) elements: Vec<Vec<i64>>,
    pub(crate) index: std::collections::HashMap<Vec<i64>, Elem>,
}

impl AbelianSpec {
    pub(crate) fn build(&self, cap: usize) -> Result<AbelianGroup> {
        let lattice = Lattice::new(self.rank, &self.relations)?;
        if lattice.index() > cap as u128 {
            return Err(Error::cap("abelian group", cap));
        }
        let gens: Vec<Vec<i64>> = (0..self.rank).map(|i| lattice.unit(i)).collect();
        let l = lattice.clone();
        let closure = Closure::generate(
            format!("abelian group of rank {}", self.rank),
            vec![0i64; self.rank],
            &gens,
            move |a: &Vec<i64>, b: &Vec<i64>| l.add(a, b),
            cap,
        )?;
        Ok(AbelianGroup {
            group: closure.group,
            lattice,
            elements: closure.elements,
            index: closure.index,
        })
    }
}

impl SemidirectSpec {
    fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        if self.actor == 0 {
            return Err(Error::InvalidSpec("actor order must be positive".into()));
        }
        let (base, phi) = match (&*self.base, &self.action) {
            (GroupSpec::Abelian(a), Action::Matrix(rows)) => {
                let ab = a.build(caps.max_order)?;
                let phi = matrix_action(&ab, rows)?;
                (ab.group, phi)
            }
            (_, Action::Matrix(_)) => {
                return Err(Error::InvalidSpec(
                    "a matrix action requires an abelian base".into(),
                ))
            }
            (spec, Action::Images(images)) => {
                let base = spec.build(caps)?;
                validate_automorphism(&base, images)?;
                (base, images.clone())
            }
        };
        semidirect(&base, self.actor, &phi, caps.max_order)
    }
}

pub(crate) fn matrix_action(ab: &AbelianGroup, rows: &[Vec<i64>]) -> Result<Vec<Elem>> {
    let rank = ab.lattice.rank();
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(Error::InvalidSpec(format!("action matrix must be {rank} x {rank}")));
    }
    // The matrix descends to the quotient iff it maps the relation lattice into itself.
    for rel in ab.lattice.basis() {
        if !ab.lattice.contains(&ab.lattice.apply(rows, rel)) {
            return Err(Error::InvalidSpec(
                "action matrix does not preserve the relation lattice".into(),
            ));
        }
    }
    let images: Vec<Elem> = ab
        .elements
        .iter()
        .map(|v| ab.index[&ab.lattice.apply(rows, v)])
        .collect();
    validate_automorphism(&ab.group, &images)?;
    Ok(images)
}

fn validate_automorphism(base: &FiniteGroup, images: &[Elem]) -> Result<()> {
    let n = base.order();
    if images.len() != n {
        return Err(Error::InvalidSpec(format!(
            "action has {} images but the base has order {n}",
            images.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in images {
        if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
            return Err(Error::InvalidSpec("action is not a bijection of the base".into()));
        }
    }
    let gens: Vec<Elem> = if base.generators().is_empty() {
        base.elements().collect()
    } else {
        base.generators().to_vec()
    };
    for a in base.elements() {
        for &g in &gens {
            if images[base.mul(a, g) as usize] != base.mul(images[a as usize], images[g as usize]) {
                return Err(Error::InvalidSpec("action is not a homomorphism of the base".into()));
            }
        }
    }
    Ok(())
}

/// `base ⋊ Z/n` where the generator acts through the automorphism `phi`.
pub(crate) fn semidirect(base: &FiniteGroup, n: u32, phi: &[Elem], cap: usize) -> Result<FiniteGroup> {
    Ok(semidirect_closure(base, n, phi, cap)?.group)
}

/// As [`semidirect`], keeping the `(base element, exponent)` pairs.
pub(crate) fn semidirect_closure(base: &FiniteGroup, n: u32, phi: &[Elem], cap: usize) -> Result<Closure<(Elem, u32)>> {
    // phi^n must be the identity for the action to factor through Z/n.
    let mut powers: Vec<Vec<Elem>> = vec![base.elements().collect()];
    for i in 1..=n as usize {
        let prev = &powers[i - 1];
        powers.push(prev.iter().map(|&x| phi[x as usize]).collect());
    }
    if powers[n as usize] != powers[0] {
        return Err(Error::InvalidSpec(format!(
            "the action does not have order dividing {n}"
        )));
    }
    powers.truncate(n as usize);
    let base = base.clone();
    let identity = (base.identity(), 0u32);
    let mut gens: Vec<(Elem, u32)> = base.generators().iter().map(|&g| (g, 0)).collect();
    gens.push((base.identity(), 1 % n));
    Closure::generate(
        format!("semidirect product of order {}", base.order() * n as usize),
        identity,
        &gens,
        move |x: &(Elem, u32), y: &(Elem, u32)| {
            let twisted = powers[x.1 as usize][y.0 as usize];
            (base.mul(x.0, twisted), (x.1 + y.1) % n)
        },
        cap,
    )
}

impl MatrixSpec {
    fn build(&self, cap: usize) -> Result<FiniteGroup> {
        if self.field.characteristic != 2 {
            return Err(Error::InvalidSpec("only characteristic 2 fields are supported".into()));
        }
        let field = Gf2k::new(self.field.deg)?;
        let dim = self.dim;
        if dim == 0 {
            return Err(Error::InvalidSpec("matrix dimension must be positive".into()));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, m) in self.generators.iter().enumerate() {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(Error::InvalidSpec(format!("generator {i} is not {dim} x {dim}")));
            }
            let flat: Vec<u8> = m.iter().flatten().copied().collect();
            if flat.iter().any(|&x| !field.contains(x)) {
                return Err(Error::InvalidSpec(format!("generator {i} has entries outside the field")));
            }
            if !field.is_invertible(dim, &flat) {
                return Err(Error::InvalidSpec(format!("generator {i} is singular")));
            }
            gens.push(flat);
        }
        let label = format!("matrix group in GL({dim}, 2^{})", self.field.deg);
        let f = field.clone();
        let closure = Closure::generate(
            label,
            Gf2k::identity_matrix(dim),
            &gens,
            move |a: &Vec<u8>, b: &Vec<u8>| f.mat_mul(dim, a, b),
            cap,
        )?;
        Ok(closure.group)
    }
}
