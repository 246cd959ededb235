//! Tabulates the partner potential next to the base well.
//!
//! cargo run --example potential_curve -- -1.1

use shallow_well::darboux::{self, FactorizationEnergy};

fn main() -> shallow_well::Result<()> {
    let eps: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("epsilon must be a number"))
        .unwrap_or(-1.1);
    let eps = FactorizationEnergy::new(eps)?;

    println!("epsilon = {}", eps.value());
    println!("V(0)    = {:?}", darboux::potential(eps, 0.0));
    println!("s       = {:?}", darboux::separatrix_energy(eps));
    println!("V''(0)  = {:?}", darboux::curvature_at_origin(eps));
    println!();
    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "x", "V_eps", "via w", "V_base"
    );
    for k in -8..=8 {
        let x = 0.75 * k as f64;
        println!(
            "{:>6.2} {:>14.9} {:>14.9} {:>14.9}",
            x,
            darboux::potential(eps, x),
            darboux::potential_from_superpotential(eps, x),
            darboux::base_potential(x)
        );
    }
    Ok(())
}
