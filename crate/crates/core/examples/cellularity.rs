//! The cellularity criterion on the symmetric group and on wreath products.

use fusioncell::catalog;
use fusioncell::cellularity::{is_bp_cellular, min_cellularity_exponent, omega_subgroup};
use fusioncell::fusion::FusionSystem;

fn main() -> fusioncell::Result<()> {
    let f = FusionSystem::from_group(&catalog::symmetric(3)?, 3)?;
    for r in 1..=3 {
        let report = is_bp_cellular(&f, &catalog::cyclic(3usize.pow(r))?)?;
        println!("Sym(3), P = Z/{}: cellular {}", 3usize.pow(r), report.cellular);
    }

    // Z/9 wr Z/2: cellular for Z/3^r exactly when r >= 2.
    let f = FusionSystem::from_group(&catalog::wreath(3, 2, 2)?, 3)?;
    for r in 1..=3 {
        let report = is_bp_cellular(&f, &catalog::cyclic(3usize.pow(r))?)?;
        println!(
            "Z/9 wr Z/2, P = Z/{}: cellular {}, |Cl_F(P)| = {}",
            3usize.pow(r),
            report.cellular,
            report.closure.order()
        );
    }
    println!("m0 = {}", min_cellularity_exponent(&f)?);
    println!("|Omega_3(S)| = {}", omega_subgroup(f.sylow(), 3, 1).order());

    let report = is_bp_cellular(&f, &catalog::cyclic(3)?)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}
