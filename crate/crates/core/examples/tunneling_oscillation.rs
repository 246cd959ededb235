//! Follows a state started in the left well as it tunnels back and forth.

use shallow_well::darboux::FactorizationEnergy;
use shallow_well::dynamics::{analytic_period, evolve_series};
use shallow_well::Grid;

fn main() -> shallow_well::Result<()> {
    let e = FactorizationEnergy::new(-1.05)?;
    let period = analytic_period(e);
    let series = evolve_series(e, Grid::default(), 2.0 * period, 41)?;

    for (t, p) in series.times.iter().zip(&series.left_probability) {
        let bar = "#".repeat((p * 50.0).round() as usize);
        println!("{t:>9.3} {p:.6} {bar}");
    }
    let fit = series.fit_sinusoid(1.0 + e.value());
    println!("analytic period {period:.6}");
    if let Some(t) = series.fitted_period() {
        println!("measured period {t:.6}");
    }
    println!(
        "amplitude {:.6}, rms misfit {:.1e}",
        fit.amplitude, fit.rms_residual
    );
    Ok(())
}
