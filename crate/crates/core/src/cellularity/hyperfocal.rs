use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{gcd, Elem, FiniteGroup, GroupHom, Quotient, Subgroup};

/// The hyperfocal subgroup and the quotient it defines (the fundamental group
/// of the classifying space).
#[derive(Clone, Debug)]
pub struct HyperfocalResult {
    pub hyperfocal: Subgroup,
    pub pi1: FiniteGroup,
    /// `S -> S / hyperfocal`.
    pub projection: GroupHom,
}

/// Order of an automorphism given as a map on the members of its domain.
pub(crate) fn automorphism_order(domain: &Subgroup, map: &[Elem]) -> usize {
    let n = map.len();
    let mut seen = vec![false; n];
    let mut order = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = domain.position(map[i]).expect("automorphism");
        }
        order = order / gcd(order, len) * len;
    }
    order
}

/// `<q^-1 alpha(q) : Q <= S, q in Q, alpha in Aut_F(Q) of order prime to p>`.
pub fn hyperfocal(f: &FusionSystem) -> Result<HyperfocalResult> {
    let s = f.sylow();
    let p = f.prime() as usize;
    let mut gens: Vec<Elem> = Vec::new();
    for (i, q) in f.subgroups().iter().enumerate() {
        for m in f.morphisms_from(i)?.iter().filter(|m| m.image == i) {
            if automorphism_order(q, &m.map) % p == 0 {
                continue;
            }
            for (&x, &y) in q.members().iter().zip(&m.map) {
                let c = s.mul(s.inv(x), y);
                if c != s.identity() {
                    gens.push(c);
                }
            }
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let hyperfocal = s.subgroup_generated(&gens);
    if !s.is_normal(&hyperfocal)? {
        return Err(Error::Internal("hyperfocal subgroup is not normal in S".into()));
    }
    let quotient = Quotient::new(s, &hyperfocal)?;
    let projection = GroupHom::from_parts(s.whole(), quotient.group.id(), quotient.projection.clone());
    Ok(HyperfocalResult {
        hyperfocal,
        pi1: quotient.group,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn inner_system_has_trivial_hyperfocal() {
        let d8 = catalog::dihedral(8).unwrap();
        let h = hyperfocal(&FusionSystem::inner(&d8, 2).unwrap()).unwrap();
        assert!(h.hyperfocal.is_trivial());
        assert_eq!(h.pi1.order(), 8);
    }

    #[test]
    fn sym3_has_trivial_fundamental_group() {
        let h = hyperfocal(&FusionSystem::from_group(&catalog::symmetric(3).unwrap(), 3).unwrap()).unwrap();
        assert_eq!(h.hyperfocal.order(), 3);
        assert_eq!(h.pi1.order(), 1);
    }
}
