//! Finite Galilei transformations on sampled momentum-space wavefunctions.
//!
//! An element `g = (τ, a, v, R)` acts by
//!
//! ```text
//! (T(g)Ψ)(p) = exp(i(−p²τ/(2m) + p·a)) Ψ(R⁻¹(p − m v))
//! ```
//!
//! which is a projective representation of the law
//! `(τ, a, v, R)(τ', a', v', R') = (τ + τ', R a' + v τ' + a, R v' + v, R R')`:
//! `T(g)T(g') = exp(−i m(v²τ'/2 + v·R a')) T(gg')`.
//!
//! The boost enters as `R⁻¹(p − m v)` rather than `R⁻¹p − m v`; only the
//! former composes according to the law above once rotations are present.
//! A boost therefore moves a packet centred at `p₀` to `p₀ + m v`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use nalgebra::{Matrix3, Rotation3, Vector3};
use num_complex::Complex64;
use rand::Rng;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GridError {
    #[error("matrix is not a proper rotation (deviation {0:e})")]
    InvalidRotation(f64),
    #[error("boost shift {shift} exceeds the in-grid limit {limit}")]
    OutOfGrid { shift: f64, limit: f64 },
    #[error("composition ratio is not a constant phase (spread {spread:e})")]
    NotProjective { spread: f64 },
    #[error("wavefunction vanishes on the comparison region")]
    Vanishing,
    #[error("grid mismatch")]
    GridMismatch,
}

/// `(τ, a, v, R)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    pub tau: f64,
    pub a: Vector3<f64>,
    pub v: Vector3<f64>,
    pub r: Matrix3<f64>,
}

impl GroupElement {
    pub fn new(tau: f64, a: Vector3<f64>, v: Vector3<f64>, r: Matrix3<f64>) -> Result<Self, GridError> {
        let dev = (r.transpose() * r - Matrix3::identity()).amax().max((r.determinant() - 1.0).abs());
        if dev.is_nan() || dev > 1e-12 {
            return Err(GridError::InvalidRotation(dev));
        }
        Ok(GroupElement { tau, a, v, r })
    }

    pub fn identity() -> Self {
        GroupElement { tau: 0.0, a: Vector3::zeros(), v: Vector3::zeros(), r: Matrix3::identity() }
    }

    pub fn time_shift(tau: f64) -> Self {
        GroupElement { tau, ..Self::identity() }
    }

    pub fn translation(a: Vector3<f64>) -> Self {
        GroupElement { a, ..Self::identity() }
    }

    pub fn boost(v: Vector3<f64>) -> Self {
        GroupElement { v, ..Self::identity() }
    }

    pub fn rotation(r: Matrix3<f64>) -> Result<Self, GridError> {
        Self::new(0.0, Vector3::zeros(), Vector3::zeros(), r)
    }

    pub fn multiply(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            tau: self.tau + rhs.tau,
            a: self.r * rhs.a + self.v * rhs.tau + self.a,
            v: self.r * rhs.v + self.v,
            r: self.r * rhs.r,
        }
    }

    /// `(−τ, −R⁻¹(a − vτ), −R⁻¹v, R⁻¹)`.
    pub fn inverse(&self) -> GroupElement {
        let rt = self.r.transpose();
        GroupElement { tau: -self.tau, a: -(rt * (self.a - self.v * self.tau)), v: -(rt * self.v), r: rt }
    }

    /// Largest difference over all coordinates.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        [
            (self.tau - other.tau).abs(),
            (self.a - other.a).amax(),
            (self.v - other.v).amax(),
            (self.r - other.r).amax(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// The 24 proper rotations mapping coordinate axes onto coordinate axes.
pub fn axis_rotations() -> Vec<Matrix3<f64>> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(24);
    for p in perms {
        for signs in 0..8u8 {
            let mut m = Matrix3::zeros();
            for (row, &col) in p.iter().enumerate() {
                m[(row, col)] = if signs >> row & 1 == 1 { -1.0 } else { 1.0 };
            }
            if m.determinant() > 0.0 {
                out.push(m);
            }
        }
    }
    out
}

/// Regular momentum grid with nodes `p_j = −p_max + (j + ½) h`, `h = 2p_max/N`.
///
/// The node set is symmetric under `p → −p` and under axis permutations, so
/// axis rotations and boosts with `m v` on the lattice `hℤ³` map nodes to
/// nodes and need no interpolation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumGrid {
    pub n: usize,
    pub p_max: f64,
}

impl Default for MomentumGrid {
    fn default() -> Self {
        MomentumGrid { n: 32, p_max: 8.0 }
    }
}

impl MomentumGrid {
    pub fn spacing(&self) -> f64 {
        2.0 * self.p_max / self.n as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        -self.p_max + (j as f64 + 0.5) * self.spacing()
    }

    pub fn point(&self, i: usize, j: usize, k: usize) -> Vector3<f64> {
        Vector3::new(self.node(i), self.node(j), self.node(k))
    }

    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    /// Largest boost shift `m|v|` accepted by [`act`].
    pub fn shift_limit(&self) -> f64 {
        0.25 * self.p_max
    }
}

/// Samples `Ψ(p)` of a spinless particle of physical mass `mass`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridWavefunction {
    pub grid: MomentumGrid,
    pub mass: f64,
    pub data: Vec<Complex64>,
}

impl GridWavefunction {
    pub fn from_fn(grid: MomentumGrid, mass: f64, f: impl Fn(Vector3<f64>) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(grid.len());
        for i in 0..grid.n {
            for j in 0..grid.n {
                for k in 0..grid.n {
                    data.push(f(grid.point(i, j, k)));
                }
            }
        }
        GridWavefunction { grid, mass, data }
    }

    /// `exp(−|p − p₀|²/(2w²) + i p·x₀)`.
    pub fn gaussian(grid: MomentumGrid, mass: f64, center: Vector3<f64>, width: f64, x0: Vector3<f64>) -> Self {
        Self::from_fn(grid, mass, |p| {
            let d = p - center;
            Complex64::from_polar((-d.norm_squared() / (2.0 * width * width)).exp(), p.dot(&x0))
        })
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.data[self.grid.index(i, j, k)]
    }

    /// `Σ|Ψ|² h³`.
    pub fn norm_squared(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.spacing().powi(3)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `|Ψ|²`-weighted mean momentum.
    pub fn mean_momentum(&self) -> Vector3<f64> {
        let mut acc = Vector3::zeros();
        let mut w = 0.0;
        for i in 0..self.grid.n {
            for j in 0..self.grid.n {
                for k in 0..self.grid.n {
                    let q = self.at(i, j, k).norm_sqr();
                    acc += self.grid.point(i, j, k) * q;
                    w += q;
                }
            }
        }
        acc / w
    }

    /// Trilinear interpolation; zero outside the node hull.
    pub fn interpolate(&self, p: Vector3<f64>) -> Complex64 {
        let h = self.grid.spacing();
        let n = self.grid.n;
        let mut base = [0usize; 3];
        let mut frac = [0.0; 3];
        for d in 0..3 {
            let s = (p[d] + self.grid.p_max) / h - 0.5;
            let tol = 1e-9;
            if s < -tol || s > (n - 1) as f64 + tol {
                return Complex64::new(0.0, 0.0);
            }
            let s = s.clamp(0.0, (n - 1) as f64);
            let fl = s.floor();
            let mut b = fl as usize;
            let mut f = s - fl;
            if f < tol {
                f = 0.0;
            } else if f > 1.0 - tol {
                b += 1;
                f = 0.0;
            }
            if b >= n - 1 && f > 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            base[d] = b.min(n - 1);
            frac[d] = f;
        }
        let mut out = Complex64::new(0.0, 0.0);
        for corner in 0..8u8 {
            let mut w = 1.0;
            let mut idx = [0usize; 3];
            for d in 0..3 {
                let up = corner >> d & 1 == 1;
                if up {
                    w *= frac[d];
                    idx[d] = base[d] + 1;
                } else {
                    w *= 1.0 - frac[d];
                    idx[d] = base[d];
                }
            }
            if w != 0.0 {
                out += self.at(idx[0], idx[1], idx[2]) * w;
            }
        }
        out
    }

    /// Lines `i,j,k,re,im`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,k,re,im\n");
        for i in 0..self.grid.n {
            for j in 0..self.grid.n {
                for k in 0..self.grid.n {
                    let z = self.at(i, j, k);
                    let _ = writeln!(s, "{i},{j},{k},{:e},{:e}", z.re, z.im);
                }
            }
        }
        s
    }
}

pub fn act(g: &GroupElement, psi: &GridWavefunction) -> Result<GridWavefunction, GridError> {
    let m = psi.mass;
    let shift = m * g.v.norm();
    let limit = psi.grid.shift_limit();
    if shift > limit + 1e-12 {
        return Err(GridError::OutOfGrid { shift, limit });
    }
    let rt = g.r.transpose();
    let mv = g.v * m;
    Ok(GridWavefunction::from_fn(psi.grid, m, |p| {
        let phase = -p.norm_squared() * g.tau / (2.0 * m) + p.dot(&g.a);
        Complex64::from_polar(1.0, phase) * psi.interpolate(rt * (p - mv))
    }))
}

/// Ratio `[T(g)T(g')Ψ] / [T(gg')Ψ]` extracted on the grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CocycleMeasurement {
    /// Unit-modulus mean of the pointwise ratio.
    pub phase: Complex64,
    /// Largest deviation of the pointwise ratio from its mean.
    pub spread: f64,
    /// Points compared after masking small amplitudes.
    pub points: usize,
}

impl CocycleMeasurement {
    /// `ω(g, g') = −arg(ratio)`, comparable with `m(v²τ'/2 + v·R a')`.
    pub fn angle(&self) -> f64 {
        -self.phase.arg()
    }
}

pub const SPREAD_TOLERANCE: f64 = 1e-6;
const AMPLITUDE_MASK: f64 = 1e-6;

pub fn cocycle_phase(g: &GroupElement, h: &GroupElement, psi: &GridWavefunction) -> Result<CocycleMeasurement, GridError> {
    let lhs = act(g, &act(h, psi)?)?;
    let rhs = act(&g.multiply(h), psi)?;
    let cut = AMPLITUDE_MASK * psi.max_abs();
    let ratios: Vec<Complex64> = lhs
        .data
        .iter()
        .zip(&rhs.data)
        .filter(|(a, b)| a.norm() > cut && b.norm() > cut)
        .map(|(a, b)| a / b)
        .collect();
    if ratios.is_empty() {
        return Err(GridError::Vanishing);
    }
    let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
    let spread = ratios.iter().map(|r| (r - mean).norm()).fold(0.0, f64::max);
    if spread > SPREAD_TOLERANCE {
        return Err(GridError::NotProjective { spread });
    }
    Ok(CocycleMeasurement { phase: mean / mean.norm(), spread, points: ratios.len() })
}

/// `m (v²τ'/2 + v·R a')`.
pub fn cocycle_closed_form(mass: f64, g: &GroupElement, h: &GroupElement) -> f64 {
    mass * (0.5 * g.v.norm_squared() * h.tau + g.v.dot(&(g.r * h.a)))
}

/// Difference of two angles reduced to `(−π, π]`.
pub fn angle_difference(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    if d > PI {
        d - 2.0 * PI
    } else {
        d
    }
}

/// Random element whose rotation is an axis rotation and whose boost shift
/// `m v` lies on the grid lattice with `|m v| ≤ max_shift`; such elements act
/// without interpolation.
pub fn random_lattice_element<R: Rng + ?Sized>(rng: &mut R, mass: f64, grid: &MomentumGrid, max_shift: f64) -> GroupElement {
    let h = grid.spacing();
    let reach = (max_shift / h).floor() as i64;
    let shift = loop {
        let s = Vector3::new(
            rng.random_range(-reach..=reach) as f64,
            rng.random_range(-reach..=reach) as f64,
            rng.random_range(-reach..=reach) as f64,
        ) * h;
        if s.norm() <= max_shift {
            break s;
        }
    };
    let rots = axis_rotations();
    GroupElement {
        tau: rng.random_range(-1.0..1.0),
        a: Vector3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        v: shift / mass,
        r: rots[rng.random_range(0..rots.len())],
    }
}

/// Random element with a generic rotation and a continuous boost of shift at
/// most `max_shift`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, mass: f64, max_shift: f64) -> GroupElement {
    let axis = Vector3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let angle = rng.random_range(-PI..PI);
    let r = Rotation3::from_scaled_axis(axis.normalize() * angle).into_inner();
    let dir = Vector3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let v = dir.normalize() * rng.random_range(0.0..max_shift) / mass;
    GroupElement {
        tau: rng.random_range(-1.0..1.0),
        a: Vector3::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
        v,
        r,
    }
}
