use crate::error::{Error, Result};
use crate::quadrature::trapezoid;

/// Symmetric uniform mesh on `[-x_max, x_max]` with an odd number of nodes,
/// so `x = 0` is always node `n_points / 2`.
///
/// Nodes are generated as `(i - mid) * h`, which makes `x[i] == -x[n-1-i]`
/// hold bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_max: f64,
    n_points: usize,
}

impl Grid {
    pub const DEFAULT_X_MAX: f64 = 20.0;
    pub const DEFAULT_POINTS: usize = 4001;

    pub fn new(x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_max.is_finite() && x_max > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "x_max must be positive and finite, got {x_max}"
            )));
        }
        if n_points < 5 || n_points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "n_points must be odd and at least 5, got {n_points}"
            )));
        }
        Ok(Grid { x_max, n_points })
    }

    pub fn x_min(&self) -> f64 {
        -self.x_max
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.x_max / (self.n_points - 1) as f64
    }

    /// Index of the `x = 0` node.
    pub fn center(&self) -> usize {
        self.n_points / 2
    }

    pub fn x(&self, i: usize) -> f64 {
        let offset = i as f64 - self.center() as f64;
        if i + 1 == self.n_points {
            self.x_max
        } else if i == 0 {
            -self.x_max
        } else {
            offset * self.spacing()
        }
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.x(i))
    }

    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        self.nodes().map(f).collect()
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            x_max: Self::DEFAULT_X_MAX,
            n_points: Self::DEFAULT_POINTS,
        }
    }
}

/// A real function sampled on every node of a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct RealWave {
    grid: Grid,
    samples: Vec<f64>,
}

impl RealWave {
    pub fn new(grid: Grid, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.n_points() {
            return Err(Error::InvalidGrid(format!(
                "{} samples for a grid of {} nodes",
                samples.len(),
                grid.n_points()
            )));
        }
        Ok(RealWave { grid, samples })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        RealWave {
            samples: grid.sample(f),
            grid,
        }
    }

    pub fn zeros(grid: Grid) -> Self {
        RealWave {
            samples: vec![0.0; grid.n_points()],
            grid,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn at_center(&self) -> f64 {
        self.samples[self.grid.center()]
    }

    /// Trapezoid-rule `∫ ψ² dx`.
    pub fn norm_squared(&self) -> f64 {
        let sq: Vec<f64> = self.samples.iter().map(|v| v * v).collect();
        trapezoid(&sq, self.grid.spacing())
    }

    /// Trapezoid-rule `∫ ψ φ dx`.
    pub fn inner(&self, other: &RealWave) -> f64 {
        assert_eq!(
            self.grid, other.grid,
            "inner product across different grids"
        );
        let prod: Vec<f64> = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b)
            .collect();
        trapezoid(&prod, self.grid.spacing())
    }

    pub fn scaled(mut self, factor: f64) -> Self {
        self.samples.iter_mut().for_each(|v| *v *= factor);
        self
    }

    /// Rescales to unit trapezoid norm. A zero wave is returned unchanged.
    pub fn normalized(self) -> Self {
        let norm = self.norm_squared().sqrt();
        if norm == 0.0 {
            self
        } else {
            self.scaled(1.0 / norm)
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Pointwise square, e.g. a probability density from a real amplitude.
    pub fn squared(&self) -> RealWave {
        RealWave {
            grid: self.grid,
            samples: self.samples.iter().map(|v| v * v).collect(),
        }
    }

    /// Largest `|f(x) ∓ f(-x)|` over the grid; `odd = false` measures the
    /// departure from evenness.
    pub fn parity_defect(&self, odd: bool) -> f64 {
        let n = self.samples.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.samples[i], self.samples[n - 1 - i]);
                if odd {
                    (a + b).abs()
                } else {
                    (a - b).abs()
                }
            })
            .fold(0.0, f64::max)
    }

    /// Number of strict sign changes between consecutive nonzero samples.
    /// Samples with magnitude at or below `floor` are skipped.
    pub fn sign_changes(&self, floor: f64) -> usize {
        let mut last = 0.0_f64;
        let mut count = 0;
        for &v in &self.samples {
            if v.abs() <= floor {
                continue;
            }
            if last != 0.0 && last.signum() != v.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// `|ψ(x_max)| / max|ψ|`, the larger of the two edges.
    pub fn edge_ratio(&self) -> f64 {
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let edge = self.samples[0]
            .abs()
            .max(self.samples[self.samples.len() - 1].abs());
        edge / peak
    }
}
