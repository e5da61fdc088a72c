//! Hyperfocal subgroups and the fundamental group `S / O^p_F(S)`.

use fusioncell::catalog;
use fusioncell::cellularity::hyperfocal;
use fusioncell::fusion::FusionSystem;

fn main() -> fusioncell::Result<()> {
    let cases = [
        ("inner fusion on D8", FusionSystem::inner(&catalog::dihedral(8)?, 2)?),
        ("Sym(3) at 3", FusionSystem::from_group(&catalog::symmetric(3)?, 3)?),
        ("Sym(4) at 2", FusionSystem::from_group(&catalog::symmetric(4)?, 2)?),
        ("Z/9 wr Z/2 at 3", FusionSystem::from_group(&catalog::wreath(3, 2, 2)?, 3)?),
    ];
    for (name, f) in &cases {
        let h = hyperfocal(f)?;
        println!(
            "{name}: |S| = {}, |hyperfocal| = {}, |pi1| = {}",
            f.sylow().order(),
            h.hyperfocal.order(),
            h.pi1.order()
        );
    }
    Ok(())
}
