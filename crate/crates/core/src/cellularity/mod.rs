//! The cellularity decision procedure.
//!
//! `BF` is `BP`-cellular exactly when `Cl_F(P) = S`, where `Cl_F(P)` is the
//! smallest strongly closed subgroup of `S` containing `f(P)` for every
//! homomorphism `f: P -> S`. Everything here is computed from the morphism
//! tables of a [`FusionSystem`].

mod certificate;
mod hyperfocal;
mod normality;

use log::debug;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::fusion::FusionSystem;
use crate::group::{for_each_hom, Elem, FiniteGroup, Subgroup};

pub use certificate::{fusion_invariance_certificate, CertificateViolation, FusionInvarianceCertificate};
pub use hyperfocal::{hyperfocal, HyperfocalResult};
pub(crate) use hyperfocal::automorphism_order;
pub use normality::{is_normal_in_f, NormalityVerdict};

/// Reference strings attached to reports.
pub mod citations {
    pub const CRITERION: &str = "criterion: BF is BP-cellular iff S = Cl_F(P)";
    pub const ABELIAN_NORMAL: &str = "an abelian strongly closed subgroup is normal in F";
    pub const NORMAL_FIBRE: &str =
        "Cl_F(P) is normal in F: CW_BP(BF) is the homotopy fibre of BF -> B(F/Cl_F(P))";
    pub const NORMALITY_UNKNOWN: &str = "normality of Cl_F(P) in F is not decided by the available data";
    pub const OMEGA: &str = "Cl_F(Z/p^m) = Cl_F(Omega_{p^m}(S))";
}

/// Verdict of the cellularity criterion with the structural data behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellularityReport {
    pub cellular: bool,
    pub closure: Subgroup,
    pub closure_abelian: bool,
    pub closure_normal_in_f: NormalityVerdict,
    /// `|S / Cl_F(P)|`.
    pub quotient_order: usize,
    pub citations: Vec<String>,
    /// Facts taken as given rather than computed (axiomatized systems only).
    pub axiomatized_inputs: Vec<String>,
}

impl Serialize for CellularityReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("cellular", &self.cellular)?;
        m.serialize_entry("closure", &self.closure)?;
        m.serialize_entry("closure_order", &self.closure.order())?;
        m.serialize_entry("abelian", &self.closure_abelian)?;
        m.serialize_entry("normal_in_F", &self.closure_normal_in_f)?;
        m.serialize_entry("quotient_order", &self.quotient_order)?;
        m.serialize_entry("citations", &self.citations)?;
        if !self.axiomatized_inputs.is_empty() {
            m.serialize_entry("axiomatized_inputs", &self.axiomatized_inputs)?;
        }
        m.end()
    }
}

/// `<f(P) : f in Hom(P, S)>`, stopping early once it reaches `S`.
pub fn hom_image_span(p: &FiniteGroup, s: &FiniteGroup) -> Result<Subgroup> {
    if p.generators().len() <= 1 {
        // Images of a cyclic group are the elements of order dividing |P|.
        let n = p.order();
        let gens: Vec<Elem> = s.elements().filter(|&x| n % s.element_order(x) == 0).collect();
        return Ok(s.subgroup_generated(&gens));
    }
    let mut span = s.trivial_subgroup();
    for_each_hom(p, &p.whole(), s, false, |h| {
        let fresh: Vec<Elem> = h.images().iter().copied().filter(|&y| !span.contains(y)).collect();
        if !fresh.is_empty() {
            span = s.join(&span, &fresh);
        }
        span.order() < s.order()
    })?;
    Ok(span)
}

/// Smallest strongly closed subgroup containing `k0`.
///
/// Repeatedly adds `phi(x)` for `x` in the current subgroup and `phi` in
/// `Hom_F(<x>, S)` until nothing new appears.
pub fn strong_closure(f: &FusionSystem, k0: &Subgroup) -> Result<Subgroup> {
    f.table()?;
    let s = f.sylow();
    k0.check_parent(s)?;
    let mut k = k0.clone();
    loop {
        let mut fresh = Vec::new();
        for &x in k.members() {
            let c = f.cyclic_index(x);
            let pos = f.subgroup(c).position(x).expect("x generates its cyclic subgroup");
            for m in f.morphisms_from(c)? {
                let y = m.map[pos];
                if !k.contains(y) {
                    fresh.push(y);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(k);
        }
        fresh.sort_unstable();
        fresh.dedup();
        k = s.join(&k, &fresh);
        debug!("closure grew to order {}", k.order());
    }
}

/// `Cl_F(P)`.
pub fn cl_closure(f: &FusionSystem, p: &FiniteGroup) -> Result<Subgroup> {
    let k0 = hom_image_span(p, f.sylow())?;
    strong_closure(f, &k0)
}

/// Decides whether `BF` is `BP`-cellular and reports the closure data.
pub fn is_bp_cellular(f: &FusionSystem, p: &FiniteGroup) -> Result<CellularityReport> {
    let closure = cl_closure(f, p)?;
    report_for(f, closure, Vec::new())
}

pub(crate) fn report_for(f: &FusionSystem, closure: Subgroup, axiomatized_inputs: Vec<String>) -> Result<CellularityReport> {
    let s = f.sylow();
    let cellular = closure.order() == s.order();
    let (closure_group, _) = closure.to_group(s)?;
    let closure_abelian = closure_group.is_abelian();
    let normal = is_normal_in_f(f, &closure)?;
    let mut citations = vec![citations::CRITERION.to_string()];
    if !cellular {
        if closure_abelian {
            citations.push(citations::ABELIAN_NORMAL.to_string());
        }
        citations.push(
            match normal {
                NormalityVerdict::Normal => citations::NORMAL_FIBRE,
                _ => citations::NORMALITY_UNKNOWN,
            }
            .to_string(),
        );
    }
    Ok(CellularityReport {
        cellular,
        quotient_order: s.order() / closure.order(),
        closure,
        closure_abelian,
        closure_normal_in_f: normal,
        citations,
        axiomatized_inputs,
    })
}

/// `Omega_{p^m}(S)`: the subgroup generated by elements `x` with `x^(p^m) = e`.
pub fn omega_subgroup(s: &FiniteGroup, p: u32, m: u32) -> Subgroup {
    let q = (p as u64).pow(m);
    let gens: Vec<Elem> = s.elements().filter(|&x| s.pow(x, q) == s.identity()).collect();
    s.subgroup_generated(&gens)
}

/// Least `m >= 1` with `Cl_F(Z/p^m) = S`, computed through `Omega_{p^m}(S)`.
pub fn min_cellularity_exponent(f: &FusionSystem) -> Result<u32> {
    let s = f.sylow();
    let mut m = 1;
    loop {
        let k = strong_closure(f, &omega_subgroup(s, f.prime(), m))?;
        if k.order() == s.order() {
            return Ok(m);
        }
        m += 1;
    }
}
