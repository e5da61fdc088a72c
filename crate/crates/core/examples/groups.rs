//! Building groups from JSON specs and catalog names, then looking at their
//! subgroups, Sylow subgroups and homomorphisms.

use fusioncell::catalog;
use fusioncell::group::{build_group, enumerate_homs, minimal_generating_set, GroupSpec};

fn main() -> fusioncell::Result<()> {
    let spec = GroupSpec::from_json(r#"{"kind":"perm","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]}"#)?;
    let s4 = build_group(&spec)?;
    println!("{}: order {}, exponent {}", s4.label(), s4.order(), s4.exponent());

    let subs = s4.all_subgroups()?;
    println!("{} subgroups", subs.len());
    let sylow = s4.sylow_subgroup(2);
    println!("Sylow 2-subgroup of order {}, normal: {}", sylow.order(), s4.is_normal(&sylow)?);

    let (d8, _) = sylow.to_group(&s4)?;
    println!("center of the Sylow: order {}", d8.center().order());
    println!("minimal generating set: {:?}", minimal_generating_set(&d8, &d8.whole()));

    let homs = enumerate_homs(&catalog::cyclic(4)?, &d8)?;
    println!("|Hom(Z/4, D8)| = {}", homs.len());

    let shorthand = catalog::shorthand("wreath:3,2,2")?;
    println!("wreath:3,2,2 expands to {}", shorthand.to_json());
    Ok(())
}
