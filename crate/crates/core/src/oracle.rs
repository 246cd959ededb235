//! Finite-difference spectral oracle.
//!
//! `−d²/dx² + V` is discretized with the three-point Laplacian on a
//! [`Grid`] with Dirichlet walls just outside `±x_max`. The resulting
//! symmetric tridiagonal matrix is diagonalized from scratch: eigenvalues by
//! bisection on the Sturm count, eigenvectors by inverse iteration. None of
//! this uses the closed forms of [`crate::darboux`], so agreement between the
//! two is a real check.

use serde::{Deserialize, Serialize};

use crate::darboux::{
    self, apply_a, apply_base_hamiltonian, apply_partner_hamiltonian, FactorizationEnergy,
    PotentialCurve,
};
use crate::error::{Error, Result};
use crate::grid::{Grid, RealWave};

/// Most eigenpairs worth asking for; higher box states are discretization
/// artifacts of the continuum.
pub const MAX_EIGENPAIRS: usize = 6;

pub const BISECTION_TOLERANCE: f64 = 1e-12;
/// Used when `ε` is within `1e−4` of `−1` and the two levels nearly merge.
pub const NEAR_DEGENERATE_TOLERANCE: f64 = 1e-13;
pub const MAX_BISECTION_STEPS: usize = 200;

/// Nodes excluded at each edge when measuring eigen-equation residuals.
pub const RESIDUAL_EDGE: usize = 3;
/// Nodes excluded at each edge for the intertwining check (reach of two
/// composed five-point stencils).
pub const INTERTWINING_EDGE: usize = 4;

/// Three-point discretization of `−d²/dx² + V`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalHamiltonian {
    grid: Grid,
    diagonal: Vec<f64>,
    off_diagonal: f64,
}

/// Discretizes a sampled potential: `diagonal[i] = 2/h² + V(xᵢ)`,
/// off-diagonal `−1/h²`.
pub fn build_hamiltonian(pot: &PotentialCurve) -> TridiagonalHamiltonian {
    let grid = *pot.grid();
    let h2 = grid.spacing() * grid.spacing();
    TridiagonalHamiltonian {
        grid,
        diagonal: pot.values().iter().map(|v| 2.0 / h2 + v).collect(),
        off_diagonal: -1.0 / h2,
    }
}

impl TridiagonalHamiltonian {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> f64 {
        self.off_diagonal
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.diagonal.len();
        assert_eq!(v.len(), n);
        let e = self.off_diagonal;
        (0..n)
            .map(|i| {
                let mut s = self.diagonal[i] * v[i];
                if i > 0 {
                    s += e * v[i - 1];
                }
                if i + 1 < n {
                    s += e * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// LDLᵀ pivots of `H − λ`.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let e2 = self.off_diagonal * self.off_diagonal;
        let guard = f64::EPSILON * self.off_diagonal.abs().max(1.0);
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diagonal.iter().enumerate() {
            q = if i == 0 {
                d - lambda
            } else {
                d - lambda - e2 / q
            };
            if q == 0.0 {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn spectral_bounds(&self) -> (f64, f64) {
        let r = 2.0 * self.off_diagonal.abs();
        let (lo, hi) = self
            .diagonal
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| {
                (lo.min(d), hi.max(d))
            });
        (lo - r, hi + r)
    }

    /// The `index`-th smallest eigenvalue (0-based) by bisection.
    pub fn eigenvalue(&self, index: usize, tolerance: f64) -> Result<f64> {
        let (mut lo, mut hi) = self.spectral_bounds();
        for _ in 0..MAX_BISECTION_STEPS {
            if hi - lo < tolerance {
                return Ok(0.5 * (lo + hi));
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                // interval is down to adjacent floats
                return Ok(mid);
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if hi - lo < tolerance {
            Ok(0.5 * (lo + hi))
        } else {
            Err(Error::ConvergenceFailure {
                tolerance,
                iterations: MAX_BISECTION_STEPS,
                width: hi - lo,
            })
        }
    }

    /// `‖Hψ − Eψ‖₂ / ‖ψ‖₂` over interior nodes, skipping [`RESIDUAL_EDGE`]
    /// nodes at each side.
    pub fn residual(&self, wave: &RealWave, energy: f64) -> f64 {
        let v = wave.samples();
        let hv = self.apply(v);
        let n = v.len();
        let range = RESIDUAL_EDGE..n - RESIDUAL_EDGE;
        let num: f64 = range.clone().map(|i| (hv[i] - energy * v[i]).powi(2)).sum();
        let den: f64 = range.map(|i| v[i] * v[i]).sum();
        if den == 0.0 {
            0.0
        } else {
            (num / den).sqrt()
        }
    }
}

/// `H − μ` factored as `P L U` with partial pivoting (LAPACK `gttrf` layout).
struct ShiftedLu {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
    upper2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(h: &TridiagonalHamiltonian, shift: f64) -> Self {
        let n = h.diagonal.len();
        let e = h.off_diagonal;
        let mut lower = vec![e; n - 1];
        let mut diag: Vec<f64> = h.diagonal.iter().map(|d| d - shift).collect();
        let mut upper = vec![e; n - 1];
        let mut upper2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n - 1];
        for i in 0..n - 1 {
            if diag[i].abs() >= lower[i].abs() {
                if diag[i] != 0.0 {
                    let fact = lower[i] / diag[i];
                    lower[i] = fact;
                    diag[i + 1] -= fact * upper[i];
                }
            } else {
                let fact = diag[i] / lower[i];
                diag[i] = lower[i];
                lower[i] = fact;
                let temp = upper[i];
                upper[i] = diag[i + 1];
                diag[i + 1] = temp - fact * diag[i + 1];
                if i + 2 < n {
                    upper2[i] = upper[i + 1];
                    upper[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        // exactly singular pivots would stop inverse iteration dead
        let tiny = f64::EPSILON * e.abs();
        for d in diag.iter_mut() {
            if *d == 0.0 {
                *d = tiny;
            }
        }
        ShiftedLu {
            lower,
            diag,
            upper,
            upper2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i] - self.lower[i] * b[i + 1];
                b[i] = b[i + 1];
                b[i + 1] = temp;
            } else {
                b[i + 1] -= self.lower[i] * b[i];
            }
        }
        b[n - 1] /= self.diag[n - 1];
        b[n - 2] = (b[n - 2] - self.upper[n - 2] * b[n - 1]) / self.diag[n - 2];
        for i in (0..n - 2).rev() {
            b[i] = (b[i] - self.upper[i] * b[i + 1] - self.upper2[i] * b[i + 2]) / self.diag[i];
        }
    }
}

fn unit(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

fn inverse_iteration(h: &TridiagonalHamiltonian, shift: f64, previous: &[Vec<f64>]) -> Vec<f64> {
    let n = h.diagonal.len();
    let lu = ShiftedLu::factor(h, shift);
    // asymmetric start so neither parity sector is missed
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 / n as f64).collect();
    unit(&mut v);
    for _ in 0..10 {
        let mut w = v.clone();
        lu.solve(&mut w);
        for p in previous {
            let dot: f64 = w.iter().zip(p).map(|(a, b)| a * b).sum();
            w.iter_mut().zip(p).for_each(|(a, b)| *a -= dot * b);
        }
        unit(&mut w);
        let dot: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        let converged = 1.0 - dot.abs() < 1e-15;
        v = w;
        if converged {
            break;
        }
    }
    v
}

/// A numerically computed eigenpair; `wave` has unit trapezoid norm.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub energy: f64,
    pub wave: RealWave,
}

/// The `k` lowest eigenpairs in ascending order, bisection tolerance
/// [`BISECTION_TOLERANCE`].
pub fn lowest_eigenpairs(h: &TridiagonalHamiltonian, k: usize) -> Result<Vec<Eigenpair>> {
    lowest_eigenpairs_with_tolerance(h, k, BISECTION_TOLERANCE)
}

/// As [`lowest_eigenpairs`] with an explicit bisection tolerance.
///
/// Eigenvectors are signed so that their sum over `x > 0` is positive (over
/// all nodes if that vanishes).
pub fn lowest_eigenpairs_with_tolerance(
    h: &TridiagonalHamiltonian,
    k: usize,
    tolerance: f64,
) -> Result<Vec<Eigenpair>> {
    if k > MAX_EIGENPAIRS {
        return Err(Error::TooManyEigenpairs {
            requested: k,
            max: MAX_EIGENPAIRS,
        });
    }
    let grid = h.grid;
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut pairs = Vec::with_capacity(k);
    for index in 0..k {
        let energy = h.eigenvalue(index, tolerance)?;
        let v = inverse_iteration(h, energy, &vectors);
        vectors.push(v.clone());

        let right: f64 = v[grid.center() + 1..].iter().sum();
        let total: f64 = v.iter().sum();
        let sign = if right.abs() > 1e-12 { right } else { total };
        let wave = RealWave::new(grid, v)?.normalized();
        let wave = if sign < 0.0 { wave.scaled(-1.0) } else { wave };
        pairs.push(Eigenpair { energy, wave });
    }
    Ok(pairs)
}

/// `‖Hψ − Eψ‖₂ / ‖ψ‖₂` on interior nodes.
pub fn eigen_residual(h: &TridiagonalHamiltonian, wave: &RealWave, energy: f64) -> f64 {
    h.residual(wave, energy)
}

/// Relative max-norm of `(Ξ_ε A_ε − A_ε η) f` over interior nodes, all
/// operators applied with finite differences to the samples of `f`.
pub fn check_intertwining(eps: FactorizationEnergy, f: &RealWave) -> f64 {
    let lhs = apply_partner_hamiltonian(eps, &apply_a(eps, f));
    let rhs = apply_a(eps, &apply_base_hamiltonian(f));
    let n = f.samples().len();
    let interior = INTERTWINING_EDGE..n - INTERTWINING_EDGE;
    let (mut diff, mut scale) = (0.0_f64, 0.0_f64);
    for i in interior {
        let (l, r) = (lhs.samples()[i], rhs.samples()[i]);
        diff = diff.max((l - r).abs());
        scale = scale.max(l.abs()).max(r.abs());
    }
    if scale == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

/// Analytic-versus-numeric comparison of the two bound states of `Ξ_ε`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub epsilon: f64,
    pub e0_analytic: f64,
    pub e1_analytic: f64,
    pub e0_numeric: f64,
    pub e1_numeric: f64,
    pub e0_error: f64,
    pub e1_error: f64,
    pub psi0_residual: f64,
    pub psi1_residual: f64,
    pub psi0_overlap: f64,
    pub psi1_overlap: f64,
}

impl SpectrumReport {
    pub fn numeric_gap(&self) -> f64 {
        self.e1_numeric - self.e0_numeric
    }

    pub fn analytic_gap(&self) -> f64 {
        self.e1_analytic - self.e0_analytic
    }
}

/// Solves the discretized `Ξ_ε` and compares its two bound states with the
/// closed forms. Fails with [`Error::BoundStateCountMismatch`] unless exactly
/// two eigenvalues lie below the continuum threshold `0`.
pub fn verify_spectrum(eps: FactorizationEnergy, grid: Grid) -> Result<SpectrumReport> {
    let tolerance = if eps.value() > -1.0 - 1e-4 {
        NEAR_DEGENERATE_TOLERANCE
    } else {
        BISECTION_TOLERANCE
    };
    let h = build_hamiltonian(&PotentialCurve::darboux(eps, grid));
    let bound = h.sturm_count(0.0);
    if bound != 2 {
        return Err(Error::BoundStateCountMismatch {
            expected: 2,
            found: bound,
        });
    }
    let pairs = lowest_eigenpairs_with_tolerance(&h, 2, tolerance)?;
    let psi0 = darboux::ground_state(eps, grid)?;
    let psi1 = darboux::excited_state(eps, grid)?;

    let (e0, e1) = (eps.value(), -1.0);
    Ok(SpectrumReport {
        epsilon: e0,
        e0_analytic: e0,
        e1_analytic: e1,
        e0_numeric: pairs[0].energy,
        e1_numeric: pairs[1].energy,
        e0_error: (pairs[0].energy - e0).abs(),
        e1_error: (pairs[1].energy - e1).abs(),
        psi0_residual: eigen_residual(&h, &psi0, e0),
        psi1_residual: eigen_residual(&h, &psi1, e1),
        psi0_overlap: pairs[0].wave.inner(&psi0).abs(),
        psi1_overlap: pairs[1].wave.inner(&psi1).abs(),
    })
}
