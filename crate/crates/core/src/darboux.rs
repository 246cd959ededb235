//! Closed forms for the Darboux-transformed sech² well.
//!
//! Base Hamiltonian: `η = −d²/dx² − 2 sech² x`, with a single bound state
//! `φ₀ = sech(x)/√2` at energy `−1`. For a factorization energy `ε < −1` the
//! seed
//!
//! ```text
//! u_ε(x) = sinh(√|ε| x) tanh(x) − √|ε| cosh(√|ε| x)
//! ```
//!
//! solves `η u = ε u` without nodes, and factorizes `η = A†A + ε` with
//! `A = −d/dx + u′/u`, `A† = d/dx + u′/u`. The partner `Ξ_ε = AA† + ε` has the
//! potential `V_ε = 2(u′/u)² − u″/u + ε` and the two bound states
//! `ψ₀ ∝ 1/u_ε` (energy `ε`) and `ψ₁ ∝ A φ₀` (energy `−1`).
//!
//! `u_ε` grows like `e^{√|ε| |x|}`. Every routine here works with the scaled
//! seed `D(y) = e^{−√|ε| y} u_ε(y)`, `y = |x|`, which stays bounded, and the
//! growth factor is cancelled analytically in ratios.

use crate::diff::{first_derivative, second_derivative};
use crate::error::{Error, Result};
use crate::grid::{Grid, RealWave};

/// Edge-to-peak ratio above which a grid is considered too narrow to hold a
/// bound state. At this ratio the norm lost past the edges is below `1e−10`.
///
/// `ψ₁` decays only like `e^{−|x|}`, and for `ε → −1` the ground state
/// develops a plateau reaching out to `|x| ≈ ½ ln(1/(√|ε| − 1))`.
pub const EDGE_DECAY_LIMIT: f64 = 1e-5;

/// Validated factorization energy, `ε ≤ −1 − 1e−9`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FactorizationEnergy(f64);

impl FactorizationEnergy {
    /// Largest accepted value. Closer to `−1` the seed collapses onto
    /// `−sech x` and the transform becomes trivial.
    pub const UPPER_LIMIT: f64 = -1.0 - 1e-9;

    pub fn new(epsilon: f64) -> Result<Self> {
        if epsilon.is_finite() && epsilon <= Self::UPPER_LIMIT {
            Ok(FactorizationEnergy(epsilon))
        } else {
            Err(Error::InvalidEpsilon(epsilon))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `√|ε|`, the asymptotic growth rate of the seed.
    pub fn kappa(self) -> f64 {
        (-self.0).sqrt()
    }
}

impl TryFrom<f64> for FactorizationEnergy {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Hyperbolic building blocks at `y = |x|`, all scaled by `e^{−κy}` where a
/// factor `e^{κy}` was removed.
struct Scaled {
    kappa: f64,
    /// `e^{−κy} sinh(κy)`
    s: f64,
    /// `e^{−κy} cosh(κy)`
    c: f64,
    /// `e^{−2κy}`
    decay: f64,
    tanh: f64,
    sech2: f64,
}

impl Scaled {
    fn at(eps: FactorizationEnergy, y: f64) -> Self {
        let kappa = eps.kappa();
        let decay = (-2.0 * kappa * y).exp();
        let q = (-2.0 * y).exp();
        Scaled {
            kappa,
            s: -0.5 * (-2.0 * kappa * y).exp_m1(),
            c: 0.5 * (1.0 + decay),
            decay,
            tanh: y.tanh(),
            sech2: 4.0 * q / ((1.0 + q) * (1.0 + q)),
        }
    }

    /// `e^{−κy} u(y)`; strictly negative.
    fn seed(&self) -> f64 {
        self.s * self.tanh - self.kappa * self.c
    }

    /// `e^{−κy} u′(y)`
    fn seed_d1(&self) -> f64 {
        let k = self.kappa;
        k * self.c * self.tanh + self.s * self.sech2 - k * k * self.s
    }

    /// `e^{−κy} u″(y)`
    fn seed_d2(&self) -> f64 {
        let k = self.kappa;
        k * k * self.s * self.tanh + 2.0 * k * self.c * self.sech2
            - 2.0 * self.s * self.sech2 * self.tanh
            - k * k * k * self.c
    }
}

/// The seed `u_ε(x)`. Overflows to `−∞` only once the true value exceeds the
/// `f64` range (`√|ε| |x| ≳ 709`); use [`seed_function_scaled`] beyond that.
pub fn seed_function(eps: FactorizationEnergy, x: f64) -> f64 {
    let (mantissa, log_scale) = seed_function_scaled(eps, x);
    mantissa * log_scale.exp()
}

/// `u_ε(x) = mantissa · e^{log_scale}` with a bounded, strictly negative
/// mantissa and `log_scale = √|ε| |x|`.
pub fn seed_function_scaled(eps: FactorizationEnergy, x: f64) -> (f64, f64) {
    let y = x.abs();
    (Scaled::at(eps, y).seed(), eps.kappa() * y)
}

/// Superpotential `u′/u`, differentiated in closed form. Odd in `x`, tends to
/// `±√|ε|` as `x → ±∞`.
pub fn log_derivative_of_seed(eps: FactorizationEnergy, x: f64) -> f64 {
    let h = Scaled::at(eps, x.abs());
    let w = h.seed_d1() / h.seed();
    if x < 0.0 {
        -w
    } else {
        w
    }
}

/// `u″/u` in closed form (even in `x`).
fn second_log_ratio(eps: FactorizationEnergy, x: f64) -> f64 {
    let h = Scaled::at(eps, x.abs());
    h.seed_d2() / h.seed()
}

/// Explicit closed form of the transformed potential:
///
/// ```text
/// V_ε(x) = 2(1+ε)(−ε + sech²x sinh²(√|ε|x)) / (tanh x sinh(√|ε|x) − √|ε| cosh(√|ε|x))²
/// ```
///
/// At `x = 0` this reduces to `2(1+ε)`, which is returned directly so that
/// `potential(ε, 0) == separatrix_energy(ε)` holds bit for bit.
pub fn potential(eps: FactorizationEnergy, x: f64) -> f64 {
    let e = eps.value();
    if x == 0.0 {
        return 2.0 * (1.0 + e);
    }
    let h = Scaled::at(eps, x.abs());
    let d = h.seed();
    2.0 * (1.0 + e) * (-e * h.decay + h.s * h.s * h.sech2) / (d * d)
}

/// The same potential through the superpotential, `2(u′/u)² − u″/u + ε`.
/// Independent of [`potential`] apart from the shared hyperbolic blocks.
pub fn potential_from_superpotential(eps: FactorizationEnergy, x: f64) -> f64 {
    let w = log_derivative_of_seed(eps, x);
    2.0 * w * w - second_log_ratio(eps, x) + eps.value()
}

/// Barrier top `V_ε(0) = 2ε + 2`.
pub fn separatrix_energy(eps: FactorizationEnergy) -> f64 {
    2.0 * eps.value() + 2.0
}

/// `V_ε″(0) = 4(3 + 4ε + ε²)`; negative exactly on the double-well interval
/// `−3 < ε < −1`.
pub fn curvature_at_origin(eps: FactorizationEnergy) -> f64 {
    let e = eps.value();
    4.0 * (3.0 + 4.0 * e + e * e)
}

/// The base well `−2 sech² x`.
pub fn base_potential(x: f64) -> f64 {
    let s = 1.0 / x.cosh();
    -2.0 * s * s
}

/// `V_ε` (or any other potential) sampled on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialCurve {
    grid: Grid,
    values: Vec<f64>,
    epsilon: Option<FactorizationEnergy>,
}

impl PotentialCurve {
    /// Samples the closed-form `V_ε`.
    pub fn darboux(eps: FactorizationEnergy, grid: Grid) -> Self {
        PotentialCurve {
            values: grid.sample(|x| potential(eps, x)),
            grid,
            epsilon: Some(eps),
        }
    }

    /// The untransformed `−2 sech² x`.
    pub fn base_well(grid: Grid) -> Self {
        Self::from_fn(grid, base_potential)
    }

    /// Arbitrary potential, e.g. for oracle self-tests.
    pub fn from_fn(grid: Grid, v: impl Fn(f64) -> f64) -> Self {
        PotentialCurve {
            values: grid.sample(v),
            grid,
            epsilon: None,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn epsilon(&self) -> Option<FactorizationEnergy> {
        self.epsilon
    }

    pub fn at_center(&self) -> f64 {
        self.values[self.grid.center()]
    }
}

fn check_edges(wave: RealWave) -> Result<RealWave> {
    let ratio = wave.edge_ratio();
    if ratio < EDGE_DECAY_LIMIT {
        Ok(wave)
    } else {
        Err(Error::GridTooNarrow {
            ratio,
            limit: EDGE_DECAY_LIMIT,
        })
    }
}

/// Normalized `ψ₀ ∝ 1/u_ε` at energy `ε`. Even and strictly positive (the
/// seed is negative, so the overall sign is flipped).
pub fn ground_state(eps: FactorizationEnergy, grid: Grid) -> Result<RealWave> {
    let wave = RealWave::from_fn(grid, |x| {
        let (mantissa, log_scale) = seed_function_scaled(eps, x);
        -(-log_scale).exp() / mantissa
    });
    check_edges(wave).map(RealWave::normalized)
}

/// `√(1/2) sech x`, the bound state of the base well at energy `−1`,
/// renormalized on the grid.
pub fn base_ground_state(grid: Grid) -> Result<RealWave> {
    let wave = RealWave::from_fn(grid, |x| std::f64::consts::FRAC_1_SQRT_2 / x.cosh());
    check_edges(wave).map(RealWave::normalized)
}

/// Normalized `ψ₁ ∝ A_ε φ₀` at energy `−1`.
///
/// Uses the exact derivative of `φ₀`, so `A_ε φ₀ = (tanh x + u′/u) sech x / √2`.
/// Odd, with its only node at `x = 0`; the sign is fixed so that `ψ₁ > 0` for
/// `x > 0`.
pub fn excited_state(eps: FactorizationEnergy, grid: Grid) -> Result<RealWave> {
    let wave = RealWave::from_fn(grid, |x| {
        (x.tanh() + log_derivative_of_seed(eps, x)) * std::f64::consts::FRAC_1_SQRT_2 / x.cosh()
    });
    let wave = check_edges(wave)?.normalized();
    let samples = wave.samples();
    let right = &samples[wave.grid().center() + 1..];
    let dominant = right
        .iter()
        .copied()
        .fold(0.0_f64, |m, v| if v.abs() > m.abs() { v } else { m });
    Ok(if dominant < 0.0 {
        wave.scaled(-1.0)
    } else {
        wave
    })
}

fn superpotential_samples(eps: FactorizationEnergy, grid: &Grid) -> Vec<f64> {
    grid.sample(|x| log_derivative_of_seed(eps, x))
}

/// `A_ε f = −f′ + (u′/u) f` on sampled `f`.
pub fn apply_a(eps: FactorizationEnergy, f: &RealWave) -> RealWave {
    let grid = *f.grid();
    let df = first_derivative(f.samples(), grid.spacing());
    let w = superpotential_samples(eps, &grid);
    let out = f
        .samples()
        .iter()
        .zip(df)
        .zip(w)
        .map(|((v, d), w)| -d + w * v)
        .collect();
    RealWave::new(grid, out).expect("same grid")
}

/// `A_ε† f = f′ + (u′/u) f` on sampled `f`.
pub fn apply_a_dagger(eps: FactorizationEnergy, f: &RealWave) -> RealWave {
    let grid = *f.grid();
    let df = first_derivative(f.samples(), grid.spacing());
    let w = superpotential_samples(eps, &grid);
    let out = f
        .samples()
        .iter()
        .zip(df)
        .zip(w)
        .map(|((v, d), w)| d + w * v)
        .collect();
    RealWave::new(grid, out).expect("same grid")
}

fn apply_schrodinger(f: &RealWave, v: impl Fn(f64) -> f64) -> RealWave {
    let grid = *f.grid();
    let d2 = second_derivative(f.samples(), grid.spacing());
    let out = grid
        .nodes()
        .zip(f.samples())
        .zip(d2)
        .map(|((x, val), d2)| -d2 + v(x) * val)
        .collect();
    RealWave::new(grid, out).expect("same grid")
}

/// `η f = −f″ − 2 sech²x f` with fourth-order differences.
pub fn apply_base_hamiltonian(f: &RealWave) -> RealWave {
    apply_schrodinger(f, base_potential)
}

/// `Ξ_ε f = −f″ + V_ε f` with fourth-order differences.
pub fn apply_partner_hamiltonian(eps: FactorizationEnergy, f: &RealWave) -> RealWave {
    apply_schrodinger(f, |x| potential(eps, x))
}
