//! Checks the factorization identities on a grid.

use shallow_well::cli::{annihilation_residual, gaussian_bumps};
use shallow_well::darboux::{self, FactorizationEnergy};
use shallow_well::oracle::check_intertwining;
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let grid = Grid::default();
    let bumps = gaussian_bumps(grid);
    for eps in [-1.1, -2.25, -4.0] {
        let e = FactorizationEnergy::new(eps)?;
        let worst = bumps
            .iter()
            .map(|f| check_intertwining(e, f))
            .fold(0.0, f64::max);
        let formulas = (0..=200)
            .map(|k| -10.0 + 0.1 * k as f64)
            .map(|x| {
                (darboux::potential(e, x) - darboux::potential_from_superpotential(e, x)).abs()
            })
            .fold(0.0, f64::max);
        println!(
            "eps={eps:<5} annihilation={:.2e} intertwining={:.2e} formula gap={:.1e}",
            annihilation_residual(e, grid),
            worst,
            formulas
        );
    }
    Ok(())
}
