//! The unitary map between the two coproduct orderings, and exchange symmetry.
//!
//! Per axis, every variable of interest is linear in `(p₁, p₂, K₁, K₂)`, so
//! conjugation by `U = exp(iθ G)` with `G = K₁·p₂ − p₁·K₂` acts on coefficient
//! vectors as `exp(θ A)`, `A = i ad_G`:
//!
//! ```text
//! A p₁ = −m p₂    A p₂ = m' p₁    A K₁ = −m K₂    A K₂ = m' K₁
//! ```
//!
//! Matrices act on column coefficient vectors in the basis order above.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

use crate::mass::DeformationParam;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EquivalenceError {
    #[error("masses must be positive, got {0} and {1}")]
    NonPositiveMass(f64, f64),
    #[error("mass {value} is not below k/2 = {bound}")]
    AboveBound { value: f64, bound: f64 },
    #[error("exchange symmetry needs equal masses, got {0} and {1}")]
    MassMismatch(f64, f64),
    #[error("no angle maps the variable sets onto each other (best residual {best_residual:e})")]
    NoTheta { best_residual: f64 },
}

/// Masses of the two particles and the deformation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairParams {
    pub m: f64,
    pub m_p: f64,
    pub k: DeformationParam,
}

impl PairParams {
    pub fn new(m: f64, m_p: f64, k: DeformationParam) -> Result<Self, EquivalenceError> {
        if !(m > 0.0 && m_p > 0.0 && m.is_finite() && m_p.is_finite()) {
            return Err(EquivalenceError::NonPositiveMass(m, m_p));
        }
        if let Some(bound) = k.half() {
            for value in [m, m_p] {
                if value >= bound {
                    return Err(EquivalenceError::AboveBound { value, bound });
                }
            }
        }
        Ok(PairParams { m, m_p, k })
    }

    /// `λ = √(1 − 2m_f/k)` and `λ'`.
    pub fn lambdas(&self) -> (f64, f64) {
        let inv = self.k.inverse();
        ((1.0 - 2.0 * self.m * inv).sqrt(), (1.0 - 2.0 * self.m_p * inv).sqrt())
    }

    pub fn total_mass(&self) -> f64 {
        self.m + self.m_p - 2.0 * self.m * self.m_p * self.k.inverse()
    }

    pub fn omega(&self) -> f64 {
        (self.m * self.m_p).sqrt()
    }
}

/// `A = i ad_G`.
pub fn adjoint_generator(m: f64, m_p: f64) -> Result<Matrix4<f64>, EquivalenceError> {
    if !(m > 0.0 && m_p > 0.0) {
        return Err(EquivalenceError::NonPositiveMass(m, m_p));
    }
    #[rustfmt::skip]
    let a = Matrix4::new(
        0.0, m_p, 0.0, 0.0,
        -m,  0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, m_p,
        0.0, 0.0, -m,  0.0,
    );
    Ok(a)
}

/// Commutator pairing: `[u, w] = i uᵀ Ω w` with `[K_A, p_A] = i m_A`.
pub fn pairing_form(m: f64, m_p: f64) -> Matrix4<f64> {
    let mut o = Matrix4::zeros();
    o[(2, 0)] = m;
    o[(0, 2)] = -m;
    o[(3, 1)] = m_p;
    o[(1, 3)] = -m_p;
    o
}

/// `exp(θ A)` by the matrix exponential.
pub fn flow(m: f64, m_p: f64, theta: f64) -> Result<Matrix4<f64>, EquivalenceError> {
    Ok((adjoint_generator(m, m_p)? * theta).exp())
}

/// `exp(θ A)` from the rotation formula in each block.
pub fn flow_closed_form(m: f64, m_p: f64, theta: f64) -> Matrix4<f64> {
    let w = (m * m_p).sqrt();
    let s = (m_p / m).sqrt();
    let (sn, cs) = (w * theta).sin_cos();
    let block = Matrix2::new(cs, s * sn, -sn / s, cs);
    let mut out = Matrix4::zeros();
    out.fixed_view_mut::<2, 2>(0, 0).copy_from(&block);
    out.fixed_view_mut::<2, 2>(2, 2).copy_from(&block);
    out
}

/// Swaps particle labels.
pub fn exchange_matrix() -> Matrix4<f64> {
    #[rustfmt::skip]
    let s = Matrix4::new(
        0.0, 1.0, 0.0, 0.0,
        1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 1.0, 0.0,
    );
    s
}

/// Coefficient vectors of total momentum, center of mass, relative
/// momentum, and relative position.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VariableSet {
    pub momentum: Vector4<f64>,
    pub center: Vector4<f64>,
    pub relative_momentum: Vector4<f64>,
    pub relative_position: Vector4<f64>,
}

impl VariableSet {
    pub fn as_array(&self) -> [Vector4<f64>; 4] {
        [self.momentum, self.center, self.relative_momentum, self.relative_position]
    }

    pub fn map(&self, t: &Matrix4<f64>) -> VariableSet {
        VariableSet {
            momentum: t * self.momentum,
            center: t * self.center,
            relative_momentum: t * self.relative_momentum,
            relative_position: t * self.relative_position,
        }
    }

    /// Largest componentwise mismatch, each variable scaled by `max(1, |target|∞)`.
    pub fn residual(&self, target: &VariableSet) -> f64 {
        self.as_array()
            .iter()
            .zip(target.as_array().iter())
            .map(|(a, b)| (a - b).amax() / b.amax().max(1.0))
            .fold(0.0, f64::max)
    }
}

/// Variables built from the coproduct.
pub fn untilde_variables(p: &PairParams) -> VariableSet {
    let (_, lp) = p.lambdas();
    let mt = p.total_mass();
    VariableSet {
        momentum: Vector4::new(lp, 1.0, 0.0, 0.0),
        center: Vector4::new(0.0, 0.0, lp, 1.0) / mt,
        relative_momentum: Vector4::new(p.m_p, -p.m * lp, 0.0, 0.0) / mt,
        relative_position: Vector4::new(0.0, 0.0, 1.0 / p.m, -lp / p.m_p),
    }
}

/// Variables built from the transposed coproduct.
pub fn tilde_variables(p: &PairParams) -> VariableSet {
    let (l, _) = p.lambdas();
    let mt = p.total_mass();
    VariableSet {
        momentum: Vector4::new(1.0, l, 0.0, 0.0),
        center: Vector4::new(0.0, 0.0, 1.0, l) / mt,
        relative_momentum: Vector4::new(p.m_p * l, -p.m, 0.0, 0.0) / mt,
        relative_position: Vector4::new(0.0, 0.0, l / p.m, -1.0 / p.m_p),
    }
}

/// Outcome of the angle search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaSolution {
    pub theta: f64,
    /// All-variable residual of `exp(θA)` against the target set.
    pub residual: f64,
    /// `(1/ω) arctan(ω(1 − λλ') / (m λ' + m' λ))`.
    pub closed_form: f64,
    /// The same with `√(1 − m/k) √(1 − m'/k)` in place of `λλ'` in the numerator.
    pub printed_form: f64,
}

impl ThetaSolution {
    pub fn matches_closed_form(&self, tol: f64) -> bool {
        (self.theta - self.closed_form).abs() <= tol * self.theta.abs().max(1.0)
    }

    pub fn matches_printed_form(&self, tol: f64) -> bool {
        (self.theta - self.printed_form).abs() <= tol * self.theta.abs().max(1.0)
    }
}

pub const THETA_TOLERANCE: f64 = 1e-10;

/// Finds `θ ∈ (−π/ω, π/ω]` with `exp(θA)` mapping the untilde variables
/// onto the tilde ones.
///
/// The scalar condition solved is that the image of the total momentum is
/// parallel to `p₁ + λ p₂`; it has simple roots, unlike a single component,
/// which becomes tangent near `m → k/2`. Candidates are validated on all four
/// variables.
pub fn find_theta(p: &PairParams) -> Result<ThetaSolution, EquivalenceError> {
    let (l, lp) = p.lambdas();
    let w = p.omega();
    let source = untilde_variables(p);
    let target = tilde_variables(p);
    let h = |theta: f64| {
        let v = flow_closed_form(p.m, p.m_p, theta) * source.momentum;
        l * v[0] - v[1]
    };

    let (lo, hi) = (-PI / w, PI / w);
    let n = 720;
    let step = (hi - lo) / n as f64;
    let mut roots = Vec::new();
    let mut prev = (lo, h(lo));
    for j in 1..=n {
        let t = lo + step * j as f64;
        let cur = (t, h(t));
        if cur.1 == 0.0 {
            roots.push(t);
        } else if prev.1 != 0.0 && prev.1.signum() != cur.1.signum() {
            roots.push(bisect(&h, prev.0, cur.0));
        }
        prev = cur;
    }

    let mut best: Option<(f64, f64)> = None;
    for theta in roots {
        let res = source.map(&flow(p.m, p.m_p, theta)?).residual(&target);
        if best.is_none_or(|(_, r)| res < r) {
            best = Some((theta, res));
        }
    }
    let (theta, residual) = best.ok_or(EquivalenceError::NoTheta { best_residual: f64::INFINITY })?;
    if residual > THETA_TOLERANCE {
        return Err(EquivalenceError::NoTheta { best_residual: residual });
    }

    let closed_form = (w * (1.0 - l * lp) / (p.m * lp + p.m_p * l)).atan() / w;
    let inv = p.k.inverse();
    let printed = (1.0 - p.m * inv).sqrt() * (1.0 - p.m_p * inv).sqrt();
    let printed_form = (w * (1.0 - printed) / (p.m * lp + p.m_p * l)).atan() / w;
    Ok(ThetaSolution { theta, residual, closed_form, printed_form })
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// `exp(θ*A) · S` for identical particles.
pub fn us_matrix(m: f64, k: DeformationParam) -> Result<Matrix4<f64>, EquivalenceError> {
    let p = PairParams::new(m, m, k)?;
    let theta = find_theta(&p)?.theta;
    Ok(flow(m, m, theta)? * exchange_matrix())
}

/// `‖(US)² − I‖_max`.
pub fn check_involution(m: f64, k: DeformationParam) -> Result<f64, EquivalenceError> {
    let us = us_matrix(m, k)?;
    Ok((us * us - Matrix4::identity()).amax())
}

/// Sampled two-particle wavefunction `Φ_{σσ'}(p₁, p₂)` with momenta packed as
/// `[p₁x, p₁y, p₁z, p₂x, p₂y, p₂z]`.
pub type WaveFn = Arc<dyn Fn(&[f64; 6], usize, usize) -> Complex64 + Send + Sync>;

#[derive(Clone)]
pub struct TwoParticleState {
    /// `2s + 1`.
    pub spin_dim: usize,
    pub f: WaveFn,
}

impl TwoParticleState {
    pub fn scalar(f: impl Fn(&[f64; 6]) -> Complex64 + Send + Sync + 'static) -> Self {
        TwoParticleState { spin_dim: 1, f: Arc::new(move |q, _, _| f(q)) }
    }

    pub fn eval(&self, q: &[f64; 6], s1: usize, s2: usize) -> Complex64 {
        (self.f)(q, s1, s2)
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: Complex64, other: &TwoParticleState, b: Complex64) -> TwoParticleState {
        assert_eq!(self.spin_dim, other.spin_dim, "spin dimension mismatch");
        let (f, g) = (self.f.clone(), other.f.clone());
        TwoParticleState { spin_dim: self.spin_dim, f: Arc::new(move |q, s, t| a * f(q, s, t) + b * g(q, s, t)) }
    }
}

/// `US` on wavefunctions: `(USΦ)_{σσ'}(q) = Φ_{σ'σ}(Mᵀ q)` axis by axis, `M`
/// being the momentum block of `exp(θ*A)·S`.
#[derive(Clone, Copy, Debug)]
pub struct ExchangeOperator {
    momentum_block: Matrix2<f64>,
}

impl ExchangeOperator {
    pub fn new(m: f64, m_p: f64, k: DeformationParam) -> Result<Self, EquivalenceError> {
        if m != m_p {
            return Err(EquivalenceError::MassMismatch(m, m_p));
        }
        let us = us_matrix(m, k)?;
        Ok(ExchangeOperator { momentum_block: us.fixed_view::<2, 2>(0, 0).into_owned() })
    }

    pub fn momentum_block(&self) -> Matrix2<f64> {
        self.momentum_block
    }

    pub fn apply(&self, state: &TwoParticleState) -> TwoParticleState {
        let mt = self.momentum_block.transpose();
        let f = state.f.clone();
        TwoParticleState {
            spin_dim: state.spin_dim,
            f: Arc::new(move |q, s1, s2| {
                let mut r = [0.0; 6];
                for ax in 0..3 {
                    let v = mt * nalgebra::Vector2::new(q[ax], q[ax + 3]);
                    r[ax] = v[0];
                    r[ax + 3] = v[1];
                }
                f(&r, s2, s1)
            }),
        }
    }

    /// `P_± = (1 ± US)/2`.
    pub fn projector(&self, sign: i8, state: &TwoParticleState) -> TwoParticleState {
        let half = Complex64::new(0.5, 0.0);
        let s = if sign >= 0 { half } else { -half };
        state.combine(half, &self.apply(state), s)
    }
}

/// Regular sample of `[-extent, extent]^6` with `n` points per axis.
pub fn sample_points(n: usize, extent: f64) -> Vec<[f64; 6]> {
    let axis: Vec<f64> = (0..n).map(|i| -extent + 2.0 * extent * (i as f64 + 0.5) / n as f64).collect();
    let mut out = Vec::with_capacity(n.pow(6));
    let mut idx = [0usize; 6];
    loop {
        out.push(std::array::from_fn(|d| axis[idx[d]]));
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < n {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == 6 {
                return out;
            }
        }
    }
}

/// Largest `|Φ − Ψ|` over the sample points and spin indices.
pub fn max_difference(a: &TwoParticleState, b: &TwoParticleState, points: &[[f64; 6]]) -> f64 {
    let mut worst = 0.0f64;
    for q in points {
        for s1 in 0..a.spin_dim {
            for s2 in 0..a.spin_dim {
                worst = worst.max((a.eval(q, s1, s2) - b.eval(q, s1, s2)).norm());
            }
        }
    }
    worst
}

pub fn max_norm(a: &TwoParticleState, points: &[[f64; 6]]) -> f64 {
    let zero = TwoParticleState { spin_dim: a.spin_dim, f: Arc::new(|_, _, _| Complex64::new(0.0, 0.0)) };
    max_difference(a, &zero, points)
}
