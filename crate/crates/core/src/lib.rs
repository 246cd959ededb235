//! Exactly soluble shallow double wells.
//!
//! The family `V_ε` is obtained by a first-order Darboux transform of the
//! reflectionless well `−2 sech² x` at a factorization energy `ε < −1`. Each
//! member has two bound states, `ψ₀ ∝ 1/u_ε` at energy `ε` and
//! `ψ₁ ∝ A_ε φ₀` at energy `−1`, both known in closed form.
//!
//! Modules:
//!
//! - [`darboux`]: seed function, potentials, analytic bound states and the
//!   first-order operators `A_ε`, `A_ε†`.
//! - [`oracle`]: an independent finite-difference eigensolver (Sturm
//!   bisection plus inverse iteration) used to check the analytic spectrum.
//! - [`wells`]: classification of `V_ε` by `ε` and the ground-density
//!   bimodality test.
//! - [`dynamics`]: the two-level superposition and its inter-well oscillation.
//! - [`cli`]: the `shallow-well` command line (CSV/JSON emission, sweeps).
//!
//! Units are dimensionless with `ħ = 2m = 1`.

pub mod cli;
pub mod darboux;
pub mod diff;
pub mod dynamics;
mod error;
pub mod format;
pub mod grid;
pub mod oracle;
pub mod quadrature;
pub mod wells;

pub use darboux::{FactorizationEnergy, PotentialCurve};
pub use dynamics::{ComplexWave, OscillationSeries};
pub use error::{Error, Result};
pub use grid::{Grid, RealWave};
pub use oracle::{SpectrumReport, TridiagonalHamiltonian};
pub use wells::{WellClassification, WellKind};
