//! Fusion systems induced by a group and generated by seeds, and the
//! saturation check on both.

use fusioncell::catalog;
use fusioncell::fusion::{FusionSpec, FusionSystem};
use fusioncell::group::Caps;

fn main() -> fusioncell::Result<()> {
    for (g, p) in [(catalog::alternating(4)?, 2), (catalog::symmetric(4)?, 2), (catalog::wreath(3, 1, 2)?, 3)] {
        let f = FusionSystem::from_group(&g, p)?;
        let s = f.sylow().whole();
        println!(
            "F_S({}) at p = {p}: |S| = {}, {} morphisms, |Out_F(S)| = {}, saturated: {}",
            g.label(),
            s.order(),
            f.morphism_count()?,
            f.out_f(&s)?.order(),
            f.is_saturated()?.saturated
        );
    }

    // Swapping two generators of (Z/2)^2 gives Aut_F(S) of order 2, which
    // cannot be a Sylow-compatible choice.
    let broken = FusionSpec::from_json(
        r#"{"kind":"generated","S":{"kind":"abelian","rank":2,"relations":[[2,0],[0,2]]},"p":2,
            "seeds":[{"domain":[1,2],"map":{"1":2,"2":1}}]}"#,
    )?
    .build(&Caps::default())?;
    let report = broken.is_saturated()?;
    println!("swap on (Z/2)^2 saturated: {}", report.saturated);
    for w in &report.witnesses {
        println!("  {:?} at {:?}: {}", w.axiom, w.subgroup, w.detail);
    }
    Ok(())
}
