use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{Elem, Quotient, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateViolation {
    pub domain: Vec<Elem>,
    pub image: Vec<Elem>,
    pub detail: String,
}

/// Double-coset bookkeeping for a strongly closed `K`: every `F`-morphism
/// preserves `|P ∩ K|`, and the orbit count of `phi(P)` on `S/K` equals
/// `|S| / |PK|`. Also records the regular action `rho: S -> Sym(S/K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionInvarianceCertificate {
    pub k: Subgroup,
    pub checked_pairs: usize,
    pub violations: Vec<CertificateViolation>,
    /// `|S/K|`.
    pub rho_target_degree: usize,
    /// `rho_images[s]` is the permutation of the cosets induced by `s`.
    pub rho_images: Vec<Vec<u32>>,
    pub rho_kernel: Subgroup,
}

/// Builds the certificate; rejects `K` that is not strongly closed.
pub fn fusion_invariance_certificate(f: &FusionSystem, k: &Subgroup) -> Result<FusionInvarianceCertificate> {
    let s = f.sylow();
    if !f.is_strongly_closed(k)? {
        return Err(Error::InvalidInput(format!(
            "subgroup of order {} is not strongly closed",
            k.order()
        )));
    }
    let quotient = Quotient::new(s, k)?;
    let q = &quotient.group;
    let degree = q.order();
    let rho_images: Vec<Vec<u32>> = s
        .elements()
        .map(|x| {
            let c = quotient.project(x);
            q.elements().map(|y| q.mul(c, y)).collect()
        })
        .collect();
    let identity_perm: Vec<u32> = q.elements().collect();
    let kernel: Vec<Elem> = s.elements().filter(|&x| rho_images[x as usize] == identity_perm).collect();
    let rho_kernel = Subgroup::new(s, kernel)?;
    if rho_kernel != *k {
        return Err(Error::Internal("the regular action on S/K does not have kernel K".into()));
    }

    let mut checked_pairs = 0;
    let mut violations = Vec::new();
    for (i, p) in f.subgroups().iter().enumerate() {
        let pk = s.join(p, k.members());
        let expected = s.order() / pk.order();
        let p_cap_k = p.intersection(k).order();
        for phi in f.morphisms_from(i)? {
            checked_pairs += 1;
            let image = f.subgroups()[phi.image].clone();
            let image_cap_k = image.intersection(k).order();
            if image_cap_k != p_cap_k {
                violations.push(CertificateViolation {
                    domain: p.members().to_vec(),
                    image: image.members().to_vec(),
                    detail: format!("|phi(P) ∩ K| = {image_cap_k} but |P ∩ K| = {p_cap_k}"),
                });
            }
            let orbits = orbit_count(&quotient, &image);
            if orbits != expected {
                violations.push(CertificateViolation {
                    domain: p.members().to_vec(),
                    image: image.members().to_vec(),
                    detail: format!("phi(P) has {orbits} orbits on S/K, expected |S|/|PK| = {expected}"),
                });
            }
        }
    }
    Ok(FusionInvarianceCertificate {
        k: k.clone(),
        checked_pairs,
        violations,
        rho_target_degree: degree,
        rho_images,
        rho_kernel,
    })
}

/// Number of orbits of `h` acting on `S/K` by left multiplication.
fn orbit_count(quotient: &Quotient, h: &Subgroup) -> usize {
    let q = &quotient.group;
    let mut acting: Vec<Elem> = h.members().iter().map(|&x| quotient.project(x)).collect();
    acting.sort_unstable();
    acting.dedup();
    let mut seen = vec![false; q.order()];
    let mut orbits = 0;
    for start in q.elements() {
        if seen[start as usize] {
            continue;
        }
        orbits += 1;
        for &a in &acting {
            seen[q.mul(a, start) as usize] = true;
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn certificate_for_klein_four_in_sym4() {
        let f = FusionSystem::from_group(&catalog::symmetric(4).unwrap(), 2).unwrap();
        let v = f.strongly_closed_subgroups().unwrap().into_iter().find(|k| k.order() == 4).unwrap();
        let cert = fusion_invariance_certificate(&f, &v).unwrap();
        assert_eq!(cert.rho_target_degree, 2);
        assert!(cert.violations.is_empty());
        assert!(cert.checked_pairs > 0);
    }

    #[test]
    fn non_strongly_closed_subgroup_is_rejected() {
        let f = FusionSystem::from_group(&catalog::symmetric(4).unwrap(), 2).unwrap();
        let z = f.sylow().center();
        assert!(matches!(fusion_invariance_certificate(&f, &z), Err(Error::InvalidInput(_))));
    }
}
