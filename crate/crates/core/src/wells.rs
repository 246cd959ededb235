//! Classification of `V_ε` by the factorization energy.
//!
//! | ε                | kind                                  |
//! |------------------|---------------------------------------|
//! | ε < −3           | single well (barrier top is a minimum) |
//! | ε = −3           | boundary, flat barrier top             |
//! | −3 < ε < −2      | double well, ground level above `V(0)` |
//! | ε = −2           | boundary, ground level on `V(0)`       |
//! | −2 < ε < −1      | double well, ground level below `V(0)` |
//!
//! The ground density `ρ₀ = ψ₀²` obeys `ρ₀″(0) = 2(s − ε) ρ₀(0)` for even
//! potentials, with `s = V(0)` the separatrix energy; it is bimodal exactly
//! when the ground level sits below the barrier top.

use serde::Serialize;

use crate::darboux::{self, curvature_at_origin, separatrix_energy, FactorizationEnergy};
use crate::error::Result;
use crate::grid::{Grid, RealWave};

/// First differences smaller than this count as flat.
pub const PLATEAU_TOLERANCE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WellKind {
    SingleWell,
    DoubleWellGroundBelowSeparatrix,
    DoubleWellGroundAboveSeparatrix,
    Boundary,
}

impl WellKind {
    /// Pure function of `ε`.
    pub fn of(eps: FactorizationEnergy) -> Self {
        let e = eps.value();
        if e == -3.0 || e == -2.0 {
            WellKind::Boundary
        } else if e < -3.0 {
            WellKind::SingleWell
        } else if e < -2.0 {
            WellKind::DoubleWellGroundAboveSeparatrix
        } else {
            WellKind::DoubleWellGroundBelowSeparatrix
        }
    }

    pub fn is_double_well(self) -> bool {
        matches!(
            self,
            WellKind::DoubleWellGroundBelowSeparatrix | WellKind::DoubleWellGroundAboveSeparatrix
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WellClassification {
    pub epsilon: f64,
    pub kind: WellKind,
    pub separatrix: f64,
    pub curvature_origin: f64,
    pub density_maxima_count: usize,
}

impl WellClassification {
    /// One-line human-readable verdict.
    pub fn verdict(&self) -> String {
        let s = round_for_display(self.separatrix);
        let c = round_for_display(self.curvature_origin);
        let m = self.density_maxima_count;
        match self.kind {
            WellKind::DoubleWellGroundBelowSeparatrix => {
                format!("double well; ground BELOW separatrix; s={s}; maxima={m}; curvature={c}")
            }
            WellKind::DoubleWellGroundAboveSeparatrix => {
                format!("double well; ground ABOVE separatrix; s={s}; maxima={m}; curvature={c}")
            }
            WellKind::SingleWell => {
                format!("not a double well; s={s}; maxima={m}; curvature={c}")
            }
            WellKind::Boundary if self.epsilon == -2.0 => {
                format!("boundary; ground level AT separatrix; s={s}; maxima={m}; curvature={c}")
            }
            WellKind::Boundary => {
                format!("boundary; flat barrier top; s={s}; maxima={m}; curvature={c}")
            }
        }
    }
}

/// Ten decimals, then shortest representation: `2(−1.1)+2` prints as `-0.2`.
fn round_for_display(v: f64) -> f64 {
    let r = (v * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Classifies `V_ε`, counting density maxima on the default grid.
pub fn classify(eps: f64) -> Result<WellClassification> {
    classify_on(FactorizationEnergy::new(eps)?, Grid::default())
}

pub fn classify_on(eps: FactorizationEnergy, grid: Grid) -> Result<WellClassification> {
    let rho = darboux::ground_state(eps, grid)?.squared();
    Ok(WellClassification {
        epsilon: eps.value(),
        kind: WellKind::of(eps),
        separatrix: separatrix_energy(eps),
        curvature_origin: curvature_at_origin(eps),
        density_maxima_count: count_density_maxima(&rho),
    })
}

/// Strict local maxima of a sampled density: rises followed by falls in the
/// first difference, with steps below [`PLATEAU_TOLERANCE`] ignored.
pub fn count_density_maxima(rho: &RealWave) -> usize {
    let mut rising = None;
    let mut count = 0;
    for pair in rho.samples().windows(2) {
        let d = pair[1] - pair[0];
        if d.abs() <= PLATEAU_TOLERANCE {
            continue;
        }
        let up = d > 0.0;
        if rising == Some(true) && !up {
            count += 1;
        }
        rising = Some(up);
    }
    count
}

/// Both sides of `ρ₀″(0) = 2(s − ε) ρ₀(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BimodalityCheck {
    /// Five-point second difference of `ρ₀` at the center node.
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
}

pub fn check_bimodality_relation(eps: FactorizationEnergy, grid: Grid) -> Result<BimodalityCheck> {
    let rho = darboux::ground_state(eps, grid)?.squared();
    let r = rho.samples();
    let c = grid.center();
    let h = grid.spacing();
    let lhs =
        (-r[c - 2] + 16.0 * r[c - 1] - 30.0 * r[c] + 16.0 * r[c + 1] - r[c + 2]) / (12.0 * h * h);
    let rhs = 2.0 * (separatrix_energy(eps) - eps.value()) * r[c];
    let rel_err = if rhs == 0.0 {
        lhs.abs()
    } else {
        ((lhs - rhs) / rhs).abs()
    };
    Ok(BimodalityCheck { lhs, rhs, rel_err })
}
