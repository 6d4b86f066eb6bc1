//! Algebra mass `m` (eigenvalue of `M`) versus physical mass
//! `m_f = (k/2)(1 − e^{-2m/k})`, and the composition law they induce.
//!
//! Physical masses are bounded by `k/2`, which acts as an infinite mass:
//! composing anything with it gives `k/2` back.

use std::fmt;
use std::str::FromStr;

use crate::scalar::{RationalFunction, ScalarError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeformationParam {
    Finite(f64),
    /// The undeformed Galilei group.
    Infinite,
}

impl DeformationParam {
    pub fn finite(k: f64) -> Result<Self, MassError> {
        if k.is_finite() && k > 0.0 {
            Ok(DeformationParam::Finite(k))
        } else {
            Err(MassError::InvalidDeformation(k))
        }
    }

    /// `k/2`, or `None` in the classical limit.
    pub fn half(self) -> Option<f64> {
        match self {
            DeformationParam::Finite(k) => Some(k / 2.0),
            DeformationParam::Infinite => None,
        }
    }

    /// `1/k`, zero in the classical limit.
    pub fn inverse(self) -> f64 {
        match self {
            DeformationParam::Finite(k) => 1.0 / k,
            DeformationParam::Infinite => 0.0,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, DeformationParam::Infinite)
    }
}

impl fmt::Display for DeformationParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformationParam::Finite(k) => write!(f, "{k}"),
            DeformationParam::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for DeformationParam {
    type Err = MassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(DeformationParam::Infinite),
            other => {
                let k: f64 = other.parse().map_err(|_| MassError::Parse(s.to_string()))?;
                DeformationParam::finite(k)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct AlgebraMass(pub f64);

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PhysicalMass(pub f64);

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MassError {
    #[error("mass must be non-negative and finite, got {0}")]
    Negative(f64),
    #[error("physical mass {value} exceeds the bound k/2 = {bound}")]
    AboveBound { value: f64, bound: f64 },
    #[error("infinite mass has no finite algebra coordinate")]
    InfiniteMass,
    #[error("reduced mass is undefined when both masses vanish")]
    ZeroTotal,
    #[error("deformation parameter must be positive, got {0}")]
    InvalidDeformation(f64),
    #[error("cannot parse `{0}` as a deformation parameter")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn check_algebra(m: AlgebraMass) -> Result<f64, MassError> {
    if m.0.is_nan() || m.0 < 0.0 {
        return Err(MassError::Negative(m.0));
    }
    Ok(m.0)
}

fn check_physical(m: PhysicalMass, k: DeformationParam) -> Result<f64, MassError> {
    if !m.0.is_finite() || m.0 < 0.0 {
        return Err(MassError::Negative(m.0));
    }
    if let Some(bound) = k.half() {
        if m.0 > bound {
            return Err(MassError::AboveBound { value: m.0, bound });
        }
    }
    Ok(m.0)
}

/// `m_f = (k/2)(1 − e^{-2m/k})`; `m = ∞` maps to `k/2`.
pub fn to_physical(m: AlgebraMass, k: DeformationParam) -> Result<PhysicalMass, MassError> {
    let m = check_algebra(m)?;
    Ok(PhysicalMass(match k {
        DeformationParam::Infinite => m,
        DeformationParam::Finite(k) => -(k / 2.0) * (-2.0 * m / k).exp_m1(),
    }))
}

/// `m = −(k/2) ln(1 − 2m_f/k)`, defined for `m_f < k/2`.
pub fn to_algebra(m_f: PhysicalMass, k: DeformationParam) -> Result<AlgebraMass, MassError> {
    let x = check_physical(m_f, k)?;
    Ok(AlgebraMass(match k {
        DeformationParam::Infinite => x,
        DeformationParam::Finite(k) => {
            if x >= k / 2.0 {
                return Err(MassError::InfiniteMass);
            }
            -(k / 2.0) * (-2.0 * x / k).ln_1p()
        }
    }))
}

/// `M_f = m_f + m'_f − 2 m_f m'_f / k`.
pub fn compose(a: PhysicalMass, b: PhysicalMass, k: DeformationParam) -> Result<PhysicalMass, MassError> {
    let x = check_physical(a, k)?;
    let y = check_physical(b, k)?;
    let total = match k {
        DeformationParam::Infinite => x + y,
        DeformationParam::Finite(k) => {
            let half = k / 2.0;
            // k/2 − M_f = (2/k)(k/2 − a)(k/2 − b) keeps the fixed point exact.
            if x == half || y == half {
                half
            } else {
                (x + y - 2.0 * x * y / k).clamp(0.0, half)
            }
        }
    };
    Ok(PhysicalMass(total))
}

/// Left fold of [`compose`]; the empty composition is zero.
pub fn compose_many(masses: &[PhysicalMass], k: DeformationParam) -> Result<PhysicalMass, MassError> {
    masses.iter().try_fold(PhysicalMass(0.0), |acc, &m| compose(acc, m, k))
}

/// `v_f = m_f m'_f / M_f`.
pub fn reduced(a: PhysicalMass, b: PhysicalMass, k: DeformationParam) -> Result<PhysicalMass, MassError> {
    let total = compose(a, b, k)?;
    if total.0 == 0.0 {
        return Err(MassError::ZeroTotal);
    }
    Ok(PhysicalMass(a.0 * b.0 / total.0))
}

/// Exact `M_f` over rational functions.
pub fn compose_exact(a: &RationalFunction, b: &RationalFunction, k: &RationalFunction) -> Result<RationalFunction, MassError> {
    let cross = (&RationalFunction::integer(2) * &(a * b)).checked_div(k)?;
    Ok(&(a + b) - &cross)
}

/// Exact `v_f` over rational functions.
pub fn reduced_exact(a: &RationalFunction, b: &RationalFunction, k: &RationalFunction) -> Result<RationalFunction, MassError> {
    let total = compose_exact(a, b, k)?;
    Ok((a * b).checked_div(&total)?)
}
