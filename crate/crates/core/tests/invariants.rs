use proptest::prelude::*;

use shallow_well::darboux::{self, separatrix_energy, FactorizationEnergy};
use shallow_well::dynamics::{
    analytic_period, evolve_series, left_well_probability, ComplexWave, TwoLevelState,
};
use shallow_well::oracle::{check_intertwining, verify_spectrum};
use shallow_well::wells::{check_bimodality_relation, classify_on};
use shallow_well::{Error, Grid, RealWave};

fn eps(v: f64) -> FactorizationEnergy {
    FactorizationEnergy::new(v).unwrap()
}

#[test]
fn oracle_matches_closed_forms_across_family() {
    let grid = Grid::default();
    for v in [-1.05, -1.25, -1.5, -1.75, -2.0, -2.25, -2.5, -2.75, -2.95] {
        let r = verify_spectrum(eps(v), grid).unwrap();
        assert!(r.e0_error < 1e-4 && r.e1_error < 1e-4, "{r:?}");
        assert!(1.0 - r.psi0_overlap < 1e-8, "{r:?}");
        assert!(1.0 - r.psi1_overlap < 1e-8, "{r:?}");
    }
}

#[test]
fn near_threshold_needs_wider_grid() {
    let e = eps(-1.0 - 1e-6);
    assert!(matches!(
        darboux::ground_state(e, Grid::default()),
        Err(Error::GridTooNarrow { .. })
    ));
    let wide = Grid::new(40.0, 8001).unwrap();
    let psi0 = darboux::ground_state(e, wide).unwrap();
    assert!((psi0.norm_squared() - 1.0).abs() < 1e-10);
}

#[test]
fn intertwining_across_family() {
    let grid = Grid::default();
    for v in [-1.1, -2.25, -2.95, -4.0] {
        for (c, w) in [(-2.0, 0.5), (0.0, 1.0), (2.5, 2.0)] {
            let f = RealWave::from_fn(grid, |x| (-((x - c) / w).powi(2)).exp());
            assert!(check_intertwining(eps(v), &f) < 1e-4);
        }
    }
}

#[test]
fn stationary_states_do_not_oscillate() {
    let grid = Grid::default();
    let s = TwoLevelState::new(eps(-1.2), grid).unwrap();
    // a lone eigenstate only picks up a global phase, so P_L stays at 1/2
    for state in [s.ground(), s.excited()] {
        let p = left_well_probability(&ComplexWave::from(state.clone()));
        assert!((p - 0.5).abs() < 1e-10);
    }
}

#[test]
fn sinusoidal_law_over_three_periods() {
    let grid = Grid::default();
    for v in [-1.05, -1.3, -1.8] {
        let e = eps(v);
        let series = evolve_series(e, grid, 3.0 * analytic_period(e), 600).unwrap();
        let fit = series.fit_sinusoid(1.0 + v);
        assert!(fit.rms_residual < 1e-8, "ε={v}: {fit:?}");
        assert!((series.time_average() - 0.5).abs() < 1e-6);
    }
}

#[test]
fn maxima_count_law() {
    let grid = Grid::default();
    for k in 1..200 {
        let v = -3.0 + 2.0 * k as f64 / 200.0;
        if (v + 2.0).abs() <= 1e-3 || v >= -1.0 - 1e-9 {
            continue;
        }
        let c = classify_on(eps(v), grid).unwrap();
        let s = separatrix_energy(eps(v));
        assert_eq!(c.density_maxima_count == 2, s > v, "ε={v}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_conserved(t in 0.0..2000.0_f64) {
        let grid = Grid::default();
        let psi = shallow_well::dynamics::lc_state(eps(-1.05), grid, t).unwrap();
        prop_assert!((psi.norm_squared() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mirror_after_half_period(v in -2.9..-1.01_f64, t in 0.0..100.0_f64) {
        let e = eps(v);
        let s = TwoLevelState::new(e, Grid::default()).unwrap();
        let half = analytic_period(e) / 2.0;
        let sum = left_well_probability(&s.at(t)) + left_well_probability(&s.at(t + half));
        prop_assert!((sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn curvature_sign_law(v in -2.99..-1.01_f64) {
        let e = eps(v);
        let s = separatrix_energy(e);
        prop_assume!((s - v).abs() > 1e-3);
        let b = check_bimodality_relation(e, Grid::default()).unwrap();
        prop_assert_eq!(b.lhs.signum(), (s - v).signum());
        prop_assert!(b.rel_err < 1e-5);
    }

    #[test]
    fn parity_of_states(v in -5.0..-1.01_f64) {
        let g = Grid::default();
        let psi0 = darboux::ground_state(eps(v), g).unwrap();
        let psi1 = darboux::excited_state(eps(v), g).unwrap();
        prop_assert!(psi0.parity_defect(false) <= 1e-12);
        prop_assert!(psi1.parity_defect(true) <= 1e-12);
    }
}
