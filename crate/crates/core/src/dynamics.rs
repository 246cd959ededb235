//! Two-level superposition dynamics.
//!
//! `ψ(x,t) = (e^{−iεt} ψ₀(x) + e^{it} ψ₁(x)) / √2` is evolved by exact phase
//! rotation of the analytic eigenstates. Its left-well probability is
//! `P_L(t) = 1/2 + C cos((1+ε)t)` with `C = ∫_{−∞}^0 ψ₀ψ₁ dx`, so the
//! density sloshes between the wells with period `2π/|1+ε|`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::darboux::{excited_state, ground_state, FactorizationEnergy};
use crate::error::Result;
use crate::grid::{Grid, RealWave};
use crate::quadrature::trapezoid;

/// A complex function sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexWave {
    grid: Grid,
    samples: Vec<Complex64>,
}

impl ComplexWave {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn density(&self) -> Vec<f64> {
        self.samples.iter().map(|z| z.norm_sqr()).collect()
    }

    /// Trapezoid `∫|ψ|² dx`.
    pub fn norm_squared(&self) -> f64 {
        trapezoid(&self.density(), self.grid.spacing())
    }
}

impl From<RealWave> for ComplexWave {
    fn from(w: RealWave) -> Self {
        ComplexWave {
            grid: *w.grid(),
            samples: w
                .samples()
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .collect(),
        }
    }
}

/// `2π/|1+ε|`, the period of the inter-well oscillation.
pub fn analytic_period(eps: FactorizationEnergy) -> f64 {
    2.0 * std::f64::consts::PI / (1.0 + eps.value()).abs()
}

/// The pair `(ψ₀, ψ₁)` evaluated once and rotated in time.
#[derive(Debug, Clone)]
pub struct TwoLevelState {
    eps: FactorizationEnergy,
    ground: RealWave,
    excited: RealWave,
}

impl TwoLevelState {
    pub fn new(eps: FactorizationEnergy, grid: Grid) -> Result<Self> {
        Ok(TwoLevelState {
            eps,
            ground: ground_state(eps, grid)?,
            excited: excited_state(eps, grid)?,
        })
    }

    pub fn ground(&self) -> &RealWave {
        &self.ground
    }

    pub fn excited(&self) -> &RealWave {
        &self.excited
    }

    pub fn at(&self, t: f64) -> ComplexWave {
        let a = Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, -self.eps.value() * t);
        let b = Complex64::from_polar(std::f64::consts::FRAC_1_SQRT_2, t);
        ComplexWave {
            grid: *self.ground.grid(),
            samples: self
                .ground
                .samples()
                .iter()
                .zip(self.excited.samples())
                .map(|(&g, &e)| a * g + b * e)
                .collect(),
        }
    }

    /// `C = ∫_{x<0} ψ₀ψ₁ dx`, the oscillation amplitude of `P_L`.
    pub fn left_overlap(&self) -> f64 {
        let grid = self.ground.grid();
        let c = grid.center();
        let prod: Vec<f64> = self.ground.samples()[..=c]
            .iter()
            .zip(&self.excited.samples()[..=c])
            .map(|(a, b)| a * b)
            .collect();
        trapezoid(&prod, grid.spacing())
    }
}

/// `(e^{−iεt} ψ₀ + e^{it} ψ₁) / √2` on the grid.
pub fn lc_state(eps: FactorizationEnergy, grid: Grid, t: f64) -> Result<ComplexWave> {
    Ok(TwoLevelState::new(eps, grid)?.at(t))
}

/// `∫_{x_min}^0 |ψ|² dx`, trapezoid with a half weight at the `x = 0` node.
pub fn left_well_probability(psi: &ComplexWave) -> f64 {
    let c = psi.grid.center();
    let left: Vec<f64> = psi.samples[..=c].iter().map(|z| z.norm_sqr()).collect();
    trapezoid(&left, psi.grid.spacing())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OscillationSeries {
    pub epsilon: f64,
    pub times: Vec<f64>,
    pub left_probability: Vec<f64>,
    pub analytic_period: f64,
}

/// Samples `P_L(t)` at `n_frames` evenly spaced times in `[0, t_max]`.
pub fn evolve_series(
    eps: FactorizationEnergy,
    grid: Grid,
    t_max: f64,
    n_frames: usize,
) -> Result<OscillationSeries> {
    assert!(n_frames >= 2, "need at least two frames");
    let state = TwoLevelState::new(eps, grid)?;
    let times: Vec<f64> = (0..n_frames)
        .map(|k| t_max * k as f64 / (n_frames - 1) as f64)
        .collect();
    let left_probability = times
        .par_iter()
        .map(|&t| left_well_probability(&state.at(t)))
        .collect();
    Ok(OscillationSeries {
        epsilon: eps.value(),
        times,
        left_probability,
        analytic_period: analytic_period(eps),
    })
}

/// Least-squares fit of `P_L(t) − 1/2 = α cos ωt + β sin ωt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinusoidFit {
    pub amplitude: f64,
    pub phase: f64,
    pub rms_residual: f64,
}

impl OscillationSeries {
    /// Times where `P_L − 1/2` changes sign, linearly interpolated.
    pub fn half_crossings(&self) -> Vec<f64> {
        let f: Vec<f64> = self.left_probability.iter().map(|p| p - 0.5).collect();
        let mut out = Vec::new();
        for k in 0..f.len().saturating_sub(1) {
            let (a, b) = (f[k], f[k + 1]);
            if a == 0.0 {
                out.push(self.times[k]);
            } else if a * b < 0.0 {
                let s = a / (a - b);
                out.push(self.times[k] + s * (self.times[k + 1] - self.times[k]));
            }
        }
        out
    }

    /// Period estimated from the mean spacing of half crossings (two per
    /// period). `None` with fewer than two crossings.
    pub fn fitted_period(&self) -> Option<f64> {
        let c = self.half_crossings();
        if c.len() < 2 {
            return None;
        }
        Some(2.0 * (c[c.len() - 1] - c[0]) / (c.len() - 1) as f64)
    }

    /// Fits `1/2 + C cos(ωt + φ)` at a given angular frequency.
    pub fn fit_sinusoid(&self, omega: f64) -> SinusoidFit {
        let (mut cc, mut cs, mut ss, mut yc, mut ys) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for (&t, &p) in self.times.iter().zip(&self.left_probability) {
            let (s, c) = (omega * t).sin_cos();
            let y = p - 0.5;
            cc += c * c;
            cs += c * s;
            ss += s * s;
            yc += y * c;
            ys += y * s;
        }
        let det = cc * ss - cs * cs;
        let alpha = (yc * ss - ys * cs) / det;
        let beta = (ys * cc - yc * cs) / det;
        let n = self.times.len() as f64;
        let sq: f64 = self
            .times
            .iter()
            .zip(&self.left_probability)
            .map(|(&t, &p)| {
                let (s, c) = (omega * t).sin_cos();
                (p - 0.5 - alpha * c - beta * s).powi(2)
            })
            .sum();
        // α cos + β sin = C cos(ωt + φ) with C = √(α²+β²) signed by α
        let amplitude = alpha.hypot(beta).copysign(alpha);
        let phase = (-beta / amplitude).atan2(alpha / amplitude);
        SinusoidFit {
            amplitude,
            phase,
            rms_residual: (sq / n).sqrt(),
        }
    }

    /// Mean of `P_L` by the trapezoid rule in time.
    pub fn time_average(&self) -> f64 {
        let span = self.times[self.times.len() - 1] - self.times[0];
        let dt = span / (self.times.len() - 1) as f64;
        trapezoid(&self.left_probability, dt) / span
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn eps(v: f64) -> FactorizationEnergy {
        FactorizationEnergy::new(v).unwrap()
    }

    #[test]
    fn initial_state_is_real() {
        let psi = lc_state(eps(-1.05), Grid::default(), 0.0).unwrap();
        assert!(psi.samples().iter().all(|z| z.im == 0.0));
        assert!((psi.norm_squared() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn half_period_mirrors_density() {
        let e = eps(-1.5);
        let g = Grid::default();
        let s = TwoLevelState::new(e, g).unwrap();
        let d0 = s.at(0.0).density();
        let d1 = s.at(PI / 0.5).density();
        let n = d0.len();
        for i in 0..n {
            assert!((d0[i] - d1[n - 1 - i]).abs() < 1e-10);
        }
    }

    #[test]
    fn stationary_states_split_evenly() {
        let g = Grid::default();
        let s = TwoLevelState::new(eps(-1.3), g).unwrap();
        let p0 = left_well_probability(&ComplexWave::from(s.ground().clone()));
        let p1 = left_well_probability(&ComplexWave::from(s.excited().clone()));
        assert!((p0 - 0.5).abs() < 1e-10);
        assert!((p1 - 0.5).abs() < 1e-10);
    }

    #[test]
    fn initial_left_probability_from_overlap() {
        let g = Grid::default();
        let e = eps(-1.05);
        let s = TwoLevelState::new(e, g).unwrap();
        let c = s.left_overlap();
        assert!(c < 0.0 && c > -0.5);
        let p = left_well_probability(&s.at(0.0));
        assert!((p - (0.5 + c)).abs() < 1e-12);
    }

    #[test]
    fn cosine_law_at_half_hertz() {
        let g = Grid::default();
        let e = eps(-1.5);
        let s = TwoLevelState::new(e, g).unwrap();
        let series = evolve_series(e, g, 3.0 * analytic_period(e), 301).unwrap();
        let fit = series.fit_sinusoid(0.5);
        assert!((fit.amplitude - s.left_overlap()).abs() < 1e-6);
        assert!(fit.rms_residual < 1e-8);
        assert!(fit.phase.abs() < 1e-6);
        assert!(series
            .left_probability
            .iter()
            .all(|&p| (0.0..=1.0).contains(&p)));
        assert!((series.time_average() - 0.5).abs() < 1e-6);
    }

    #[test]
    fn period_from_crossings() {
        let e = eps(-1.05);
        let g = Grid::default();
        let t = analytic_period(e);
        assert!((t - 2.0 * PI / 0.05).abs() < 1e-9);
        let series = evolve_series(e, g, 2.0 * t, 801).unwrap();
        assert_eq!(series.half_crossings().len(), 4);
        let fitted = series.fitted_period().unwrap();
        assert!((fitted / t - 1.0).abs() < 1e-3, "{fitted}");
    }
}
