//! Builds the two bound states of the partner well and checks their shape.

use shallow_well::darboux::{self, FactorizationEnergy};
use shallow_well::wells::count_density_maxima;
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let grid = Grid::default();
    for eps in [-1.1, -1.5, -2.25, -3.5] {
        let e = FactorizationEnergy::new(eps)?;
        let psi0 = darboux::ground_state(e, grid)?;
        let psi1 = darboux::excited_state(e, grid)?;
        println!(
            "eps={eps:<5} |psi0|^2={:.12} |psi1|^2={:.12} <psi0|psi1>={:+.1e} nodes=({}, {}) rho0 maxima={}",
            psi0.norm_squared(),
            psi1.norm_squared(),
            psi0.inner(&psi1),
            psi0.sign_changes(1e-12),
            psi1.sign_changes(1e-12),
            count_density_maxima(&psi0.squared()),
        );
    }

    // close to the threshold the ground state spreads out and needs room
    let e = FactorizationEnergy::new(-1.0 - 1e-6)?;
    match darboux::ground_state(e, grid) {
        Ok(_) => println!("default grid suffices"),
        Err(err) => println!("default grid: {err}"),
    }
    let wide = Grid::new(40.0, 8001)?;
    let psi0 = darboux::ground_state(e, wide)?;
    println!("x_max=40: |psi0|^2={:.12}", psi0.norm_squared());
    Ok(())
}
