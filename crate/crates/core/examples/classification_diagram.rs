//! Walks epsilon across the family and prints the well type.

use shallow_well::darboux::FactorizationEnergy;
use shallow_well::wells::{check_bimodality_relation, classify_on};
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let grid = Grid::default();
    for k in 0..16 {
        let eps = -4.0 + 0.1875 * k as f64;
        let e = FactorizationEnergy::new(eps)?;
        let c = classify_on(e, grid)?;
        let b = check_bimodality_relation(e, grid)?;
        println!(
            "{eps:>8.4}  {}  (rho0'' rel err {:.1e})",
            c.verdict(),
            b.rel_err
        );
    }
    Ok(())
}
