//! Deformed hydrogen toy model.
//!
//! In relative coordinates the two-body Hamiltonian is the textbook one with
//! the reduced mass replaced by `v_f = m_f m'_f / M_f`, so the levels are
//! `E_n = −v_f e⁴ / (2ħ² n²)`. A finite-difference radial solver provides an
//! independent check.

use crate::mass::{self, DeformationParam, MassError, PhysicalMass};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HydrogenError {
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("grid too coarse: refinement changed level {index} by {relative:e} (tolerance {tolerance:e})")]
    GridTooCoarse { index: usize, relative: f64, tolerance: f64 },
    #[error("no bound state with index {0} on the grid")]
    NoBoundState(usize),
    #[error("series diverges: 2v/k = {0} is not below 1")]
    Divergent(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HydrogenConfig {
    pub m_f: f64,
    pub m_f_p: f64,
    pub k: DeformationParam,
    pub e2: f64,
    pub hbar: f64,
}

impl HydrogenConfig {
    /// Unit coupling and `ħ = 1`.
    pub fn new(m_f: f64, m_f_p: f64, k: DeformationParam) -> Self {
        HydrogenConfig { m_f, m_f_p, k, e2: 1.0, hbar: 1.0 }
    }

    pub fn validate(&self) -> Result<(), HydrogenError> {
        if !(self.m_f > 0.0 && self.m_f_p > 0.0) {
            return Err(HydrogenError::InvalidConfig("masses must be positive".into()));
        }
        if !(self.e2 > 0.0 && self.hbar > 0.0 && self.e2.is_finite() && self.hbar.is_finite()) {
            return Err(HydrogenError::InvalidConfig("e² and ħ must be positive".into()));
        }
        Ok(())
    }

    pub fn reduced_mass(&self) -> Result<f64, HydrogenError> {
        self.validate()?;
        Ok(mass::reduced(PhysicalMass(self.m_f), PhysicalMass(self.m_f_p), self.k)?.0)
    }

    /// `ħ² / (v_f e²)`.
    pub fn bohr_radius(&self) -> Result<f64, HydrogenError> {
        Ok(self.hbar * self.hbar / (self.reduced_mass()? * self.e2))
    }
}

/// `E_n = −v_f e⁴ / (2ħ² n²)`.
pub fn bohr_level(cfg: &HydrogenConfig, n: u32) -> Result<f64, HydrogenError> {
    if n == 0 {
        return Err(HydrogenError::InvalidConfig("n starts at 1".into()));
    }
    let v = cfg.reduced_mass()?;
    let n = f64::from(n);
    Ok(-v * cfg.e2 * cfg.e2 / (2.0 * cfg.hbar * cfg.hbar * n * n))
}

pub fn bohr_levels(cfg: &HydrogenConfig, n_max: u32) -> Result<Vec<f64>, HydrogenError> {
    (1..=n_max).map(|n| bohr_level(cfg, n)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Potential {
    /// `−e² / r`
    Coulomb { e2: f64 },
    /// `κ r² / 2`
    Harmonic { kappa: f64 },
}

impl Potential {
    fn at(&self, r: f64) -> f64 {
        match *self {
            Potential::Coulomb { e2 } => -e2 / r,
            Potential::Harmonic { kappa } => 0.5 * kappa * r * r,
        }
    }
}

/// Uniform grid `r_i = i h`, `i = 1..=points`, with `u(0) = u(r_max) = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialGrid {
    pub r_max: f64,
    pub points: usize,
}

impl RadialGrid {
    pub fn spacing(&self) -> f64 {
        self.r_max / (self.points + 1) as f64
    }

    /// Same box, half the spacing.
    pub fn refined(&self) -> RadialGrid {
        RadialGrid { r_max: self.r_max, points: 2 * self.points + 1 }
    }

    /// Box and resolution scaled to the natural length of the problem for
    /// the lowest `count` levels at angular momentum `l`.
    pub fn default_for(v: f64, hbar: f64, potential: Potential, l: u32, count: usize) -> RadialGrid {
        let top = (l as usize + count) as f64;
        let (length, extent) = match potential {
            Potential::Coulomb { e2 } => (hbar * hbar / (v * e2), 24.0 + 8.0 * top * top),
            Potential::Harmonic { kappa } => {
                let omega = (kappa / v).sqrt();
                ((hbar / (v * omega)).sqrt(), 6.0 + 3.0 * (2.0 * top + 2.0).sqrt())
            }
        };
        let per_length = 100.0;
        RadialGrid { r_max: extent * length, points: (extent * per_length).ceil() as usize }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadialSolution {
    /// Richardson-extrapolated levels, lowest first.
    pub energies: Vec<f64>,
    /// `|E_{h/2} − E_h| / 3` per level.
    pub error_estimates: Vec<f64>,
    pub grid: RadialGrid,
}

/// Lowest `count` eigenvalues of `−ħ²/(2v) u'' + (V + ħ² l(l+1)/(2v r²)) u`.
///
/// Solves on `grid` and on its refinement, extrapolates, and fails if the
/// relative change between the two levels exceeds `tolerance`.
pub fn radial_solve(
    v: f64,
    hbar: f64,
    potential: Potential,
    l: u32,
    count: usize,
    grid: RadialGrid,
    tolerance: f64,
) -> Result<RadialSolution, HydrogenError> {
    if !(v > 0.0 && hbar > 0.0) || grid.points < 3 || !(grid.r_max.is_finite() && grid.r_max > 0.0) {
        return Err(HydrogenError::InvalidConfig("radial problem needs v, ħ, r_max > 0 and a grid".into()));
    }
    let coarse = fd_levels(v, hbar, potential, l, count, grid);
    let fine = fd_levels(v, hbar, potential, l, count, grid.refined());
    let mut energies = Vec::with_capacity(count);
    let mut error_estimates = Vec::with_capacity(count);
    for (j, (&a, &b)) in coarse.iter().zip(&fine).enumerate() {
        if matches!(potential, Potential::Coulomb { .. }) && b >= 0.0 {
            return Err(HydrogenError::NoBoundState(j));
        }
        let estimate = (b - a).abs() / 3.0;
        let relative = estimate / b.abs();
        if relative > tolerance {
            return Err(HydrogenError::GridTooCoarse { index: j, relative, tolerance });
        }
        energies.push((4.0 * b - a) / 3.0);
        error_estimates.push(estimate);
    }
    Ok(RadialSolution { energies, error_estimates, grid })
}

fn fd_levels(v: f64, hbar: f64, potential: Potential, l: u32, count: usize, grid: RadialGrid) -> Vec<f64> {
    let h = grid.spacing();
    let kin = hbar * hbar / (2.0 * v * h * h);
    let cent = hbar * hbar * f64::from(l * (l + 1)) / (2.0 * v);
    let diag: Vec<f64> = (1..=grid.points)
        .map(|i| {
            let r = i as f64 * h;
            2.0 * kin + potential.at(r) + cent / (r * r)
        })
        .collect();
    let off = -kin;
    let lo = diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * kin;
    let hi = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 2.0 * kin;
    (0..count.min(grid.points)).map(|j| kth_eigenvalue(&diag, off, j, lo, hi)).collect()
}

/// Number of eigenvalues below `x` of the tridiagonal matrix with constant
/// off-diagonal `off`.
fn sturm_count(diag: &[f64], off: f64, x: f64) -> usize {
    let off2 = off * off;
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        q = if i == 0 { d - x } else { d - x - off2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (d.abs() + off.abs());
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn kth_eigenvalue(diag: &[f64], off: f64, j: usize, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) > j {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Radial Coulomb levels for the configured reduced mass.
pub fn coulomb_levels(cfg: &HydrogenConfig, l: u32, count: usize, tolerance: f64) -> Result<RadialSolution, HydrogenError> {
    let v = cfg.reduced_mass()?;
    let potential = Potential::Coulomb { e2: cfg.e2 };
    let grid = RadialGrid::default_for(v, cfg.hbar, potential, l, count);
    radial_solve(v, cfg.hbar, potential, l, count, grid, tolerance)
}

/// `ħω(2n_r + l + 3/2)` with `ω = √(κ/v)`.
pub fn harmonic_level(v: f64, hbar: f64, kappa: f64, n_r: u32, l: u32) -> f64 {
    hbar * (kappa / v).sqrt() * (2.0 * f64::from(n_r) + f64::from(l) + 1.5)
}

/// Expansion of `v_f / v = 1 / (1 − 2v/k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionSeries {
    /// `(2v/k)^j` for `j = 0..=order`.
    pub coefficients: Vec<f64>,
    pub exact_ratio: f64,
    pub truncated: f64,
    /// `(2v/k)^{order+1} / (1 − 2v/k)`.
    pub truncation_error: f64,
}

pub fn correction_series(v: f64, k: DeformationParam, order: usize) -> Result<CorrectionSeries, HydrogenError> {
    if v.is_nan() || v <= 0.0 {
        return Err(HydrogenError::InvalidConfig("classical reduced mass must be positive".into()));
    }
    let x = 2.0 * v * k.inverse();
    if x >= 1.0 {
        return Err(HydrogenError::Divergent(x));
    }
    let coefficients: Vec<f64> = (0..=order).map(|j| x.powi(j as i32)).collect();
    let truncated = coefficients.iter().sum();
    Ok(CorrectionSeries {
        coefficients,
        exact_ratio: 1.0 / (1.0 - x),
        truncated,
        truncation_error: x.powi(order as i32 + 1) / (1.0 - x),
    })
}
