//! The 3-groups B(3,r;0,gamma,0): relations, the order census outside
//! N = <s, s2>, the cellularity verdict from declared facts, and the
//! hyperfocal argument with order-two automorphisms as seeds.

use fusioncell::catalog::{
    build_b3r, exotic_cellularity_verdict, exotic_pi1_check, order_census, order_two_automorphisms, seed_shape,
};

fn main() -> fusioncell::Result<()> {
    for r in 4..=6 {
        for gamma in 0..3 {
            let g = build_b3r(r, gamma)?;
            let census: Vec<bool> = (1..=3).map(|l| order_census(&g, l).exists_outside_n).collect();
            let verdict = exotic_cellularity_verdict(&g, 1)?;
            println!(
                "{}: |S| = {}, |Z(S)| = {}, witness outside N for l = 1,2,3: {:?}, cellular for Z/3: {}",
                g.group.label(),
                g.group.order(),
                g.group.center().order(),
                census,
                verdict.cellular
            );
        }
    }

    let g = build_b3r(5, 1)?;
    let seeds = order_two_automorphisms(&g)?;
    let shapes: Vec<_> = seeds.iter().filter_map(|h| seed_shape(&g, h)).collect();
    println!("{} order-two automorphisms, shapes {:?}", seeds.len(), &shapes[..shapes.len().min(3)]);
    println!("<N, x^-1 alpha(x)> = S: {}", exotic_pi1_check(&g, &seeds)?);
    println!("named elements: {:?}", g.named_elements());
    Ok(())
}
