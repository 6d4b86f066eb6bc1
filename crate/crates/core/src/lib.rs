//! Exact and numeric verification toolkit for the k-deformed, centrally
//! extended Galilei group.
//!
//! The crate is layered bottom-up:
//!
//! * [`scalar`]: exact rational-function coefficients;
//! * [`weyl`]: normal-ordered canonical position/momentum algebra;
//! * [`hopf`]: the deformed Hopf algebra and its axiom checks;
//! * [`mass`]: physical vs. algebra mass and the non-additive composition law;
//! * [`realization`]: one- and two-particle operator realizations;
//! * [`equivalence`]: the unitary map between coproduct orderings and exchange symmetry;
//! * [`hydrogen`]: the deformed hydrogen toy model and a radial solver;
//! * [`grid`]: finite Galilei transformations on sampled momentum wavefunctions.

pub mod equivalence;
pub mod grid;
pub mod hopf;
pub mod hydrogen;
pub mod mass;
pub mod realization;
pub mod scalar;
pub mod weyl;

pub use hopf::{CentralCharge, Generator, GkAlgebra};
pub use mass::{AlgebraMass, DeformationParam, PhysicalMass};
pub use scalar::{Coefficient, ExactComplex, RationalFunction, Symbol};
pub use weyl::{Axis, Particle, WeylExpression};
