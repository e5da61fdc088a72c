use super::{Elem, FiniteGroup, Subgroup, NONE, TABLE_LIMIT};
use crate::error::{Error, Result};

/// `G / N` for a normal subgroup `N`, as a table group.
///
/// Quotient element `i` is the coset whose least member is `representatives[i]`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset of `g`.
    pub projection: Vec<Elem>,
    pub representatives: Vec<Elem>,
}

impl Quotient {
    pub fn new(g: &FiniteGroup, n: &Subgroup) -> Result<Self> {
        if !g.is_normal(n)? {
            return Err(Error::InvalidInput("quotient by a non-normal subgroup".into()));
        }
        let k = g.order() / n.order();
        if k > TABLE_LIMIT {
            return Err(Error::cap("quotient group", TABLE_LIMIT));
        }
        let mut projection = vec![NONE; g.order()];
        let mut representatives = Vec::with_capacity(k);
        for x in g.elements() {
            if projection[x as usize] != NONE {
                continue;
            }
            let c = representatives.len() as Elem;
            representatives.push(x);
            for &m in n.members() {
                projection[g.mul(x, m) as usize] = c;
            }
        }
        let mut flat = Vec::with_capacity(k * k);
        for &a in &representatives {
            for &b in &representatives {
                flat.push(projection[g.mul(a, b) as usize]);
            }
        }
        let identity = projection[g.identity() as usize];
        let mut group = FiniteGroup::from_flat_table(
            format!("{} / subgroup of order {}", g.label(), n.order()),
            identity,
            flat,
            Vec::new(),
        );
        group.generators = {
            let mut gens: Vec<Elem> = g.generators().iter().map(|&x| projection[x as usize]).collect();
            gens.retain(|&x| x != identity);
            gens.sort_unstable();
            gens.dedup();
            gens
        };
        if group.generators.is_empty() && k > 1 {
            group.generators = group.greedy_generators();
        }
        Ok(Self { group, projection, representatives })
    }

    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }

    pub fn lift(&self, q: Elem) -> Elem {
        self.representatives[q as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::{GroupSpec, PermSpec};
    use crate::group::Caps;

    #[test]
    fn sym4_modulo_klein_four_is_sym3() {
        let s4 = GroupSpec::Perm(PermSpec { degree: 4, generators: vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]] })
            .build(&Caps::default())
            .unwrap();
        let v4 = s4
            .all_subgroups()
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 4 && s4.is_normal(h).unwrap())
            .unwrap();
        let q = Quotient::new(&s4, &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        for a in s4.elements() {
            for b in s4.elements() {
                assert_eq!(q.project(s4.mul(a, b)), q.group.mul(q.project(a), q.project(b)));
            }
        }
        let t = s4.subgroup_generated(&[s4.generators()[0]]);
        assert!(Quotient::new(&s4, &t).is_err());
    }
}
