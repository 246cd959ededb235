//! Writes a CSV of derived quantities over a range of epsilon.

use shallow_well::darboux::{curvature_at_origin, separatrix_energy, FactorizationEnergy};
use shallow_well::format::CsvTable;
use shallow_well::wells::classify_on;
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let grid = Grid::new(20.0, 2001)?;
    let mut table = CsvTable::new(["epsilon", "separatrix", "curvature", "maxima_count"]);
    for k in 0..=20 {
        let eps = -3.0 + 0.095 * k as f64;
        let e = FactorizationEnergy::new(eps)?;
        let maxima = classify_on(e, grid)?.density_maxima_count;
        table.push_row(vec![
            eps,
            separatrix_energy(e),
            curvature_at_origin(e),
            maxima as f64,
        ]);
    }
    print!("{}", table.render());
    Ok(())
}
