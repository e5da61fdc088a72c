//! Strongly closed subgroups of a fusion system and the invariance
//! certificate for each of them.

use fusioncell::catalog;
use fusioncell::cellularity::{fusion_invariance_certificate, is_normal_in_f};
use fusioncell::fusion::FusionSystem;

fn main() -> fusioncell::Result<()> {
    let f = FusionSystem::from_group(&catalog::symmetric(4)?, 2)?;
    for k in f.strongly_closed_subgroups()? {
        let cert = fusion_invariance_certificate(&f, &k)?;
        println!(
            "K = {:?}: normal in F {:?}, {} pairs checked, {} violations, S acts on {} cosets",
            k.members(),
            is_normal_in_f(&f, &k)?,
            cert.checked_pairs,
            cert.violations.len(),
            cert.rho_target_degree
        );
    }
    let z = f.sylow().center();
    println!("center strongly closed: {}", f.is_strongly_closed(&z)?);
    println!("certificate on the center: {}", fusion_invariance_certificate(&f, &z).unwrap_err());
    Ok(())
}
