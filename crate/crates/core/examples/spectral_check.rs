//! Diagonalizes the discretized Hamiltonian and compares with the closed forms.

use shallow_well::darboux::{FactorizationEnergy, PotentialCurve};
use shallow_well::oracle::{build_hamiltonian, lowest_eigenpairs, verify_spectrum};
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let grid = Grid::default();

    println!(
        "{:>8} {:>12} {:>12} {:>10} {:>10} {:>10}",
        "eps", "E0", "E1", "dE0", "dE1", "gap"
    );
    for eps in [-1.0001, -1.05, -1.5, -2.0, -2.25, -3.0] {
        let r = verify_spectrum(FactorizationEnergy::new(eps)?, grid)?;
        println!(
            "{:>8} {:>12.8} {:>12.8} {:>10.2e} {:>10.2e} {:>10.3e}",
            eps,
            r.e0_numeric,
            r.e1_numeric,
            r.e0_error,
            r.e1_error,
            r.numeric_gap()
        );
    }

    // the base well alone has a single bound level at -1
    let h = build_hamiltonian(&PotentialCurve::base_well(grid));
    println!("bound levels of the base well: {}", h.sturm_count(0.0));
    let pairs = lowest_eigenpairs(&h, 1)?;
    println!("E0 = {:?}", pairs[0].energy);
    Ok(())
}
