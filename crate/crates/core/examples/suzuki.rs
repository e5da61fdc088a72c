//! Sz(8) as a matrix group over GF(8), and the closure of Z/2 in its
//! 2-fusion system.

use fusioncell::catalog;
use fusioncell::cellularity::cl_closure;
use fusioncell::fusion::FusionSystem;

fn main() -> fusioncell::Result<()> {
    let g = catalog::build_suzuki_8()?;
    println!("{}: order {}", g.label(), g.order());
    let f = FusionSystem::from_group(&g, 2)?;
    let s = f.sylow();
    let involutions = s.elements().filter(|&x| s.element_order(x) == 2).count();
    println!("Sylow 2-subgroup of order {}, {} involutions", s.order(), involutions);
    let k = cl_closure(&f, &catalog::cyclic(2)?)?;
    let (kg, _) = k.to_group(s)?;
    println!("Cl_F(Z/2) has order {}, exponent {}, abelian {}", k.order(), kg.exponent(), kg.is_abelian());
    Ok(())
}
