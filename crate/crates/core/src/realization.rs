//! Operator realization of the algebra on one and two particles.
//!
//! One particle in slot `A`:
//!
//! ```text
//! P_i ↦ p_{A,i}    K_i ↦ m_f x_{A,i}    H ↦ p_A² / (2 m_f)
//! J_i ↦ ε_ijl x_{A,j} p_{A,l}    M ↦ m    E ↦ λ = e^{-m/k}
//! ```
//!
//! The brackets close only when `m_f = (k/2)(1 − λ²)`. Two-particle
//! generators are images of the coproduct with leg 1 on particle 1, so the
//! twist `E` of leg 2 multiplies particle 1: `P = λ' p + p'`.

use num_traits::One;

use crate::hopf::{Generator, GkAlgebra, Letter, TensorExpression, UeaExpression, Word};
use crate::mass;
use crate::scalar::{symbol, ExactComplex, RationalFunction, ScalarError};
use crate::weyl::{Axis, Particle, WeylExpression};

pub type Operator = WeylExpression<ExactComplex>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RealizationError {
    #[error("physical mass must be nonzero")]
    ZeroMass,
    #[error("both particles occupy the same slot")]
    SameSlot,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn real(r: RationalFunction) -> ExactComplex {
    ExactComplex::real(r)
}

fn half_k() -> RationalFunction {
    &RationalFunction::rational(1, 2) * &RationalFunction::symbol(symbol::k())
}

/// `(k/2)(1 − λ²)`.
pub fn physical_mass_of(lambda: &RationalFunction) -> RationalFunction {
    &half_k() * &(&RationalFunction::one() - &(lambda * lambda))
}

/// One particle's generators as Weyl-algebra operators.
#[derive(Clone, Debug)]
pub struct OneParticleRealization {
    particle: Particle,
    lambda: RationalFunction,
    algebra_mass: RationalFunction,
    physical_mass: RationalFunction,
}

impl OneParticleRealization {
    /// Deformed realization with `λ` (`lambdaP` for slot 2) and the
    /// constrained physical mass.
    pub fn new(particle: Particle) -> Self {
        let (lam, m) = match particle {
            Particle::First => (symbol::lambda(), symbol::algebra_mass()),
            Particle::Second => (symbol::lambda_p(), symbol::algebra_mass_p()),
        };
        let lambda = RationalFunction::symbol(lam);
        let physical_mass = physical_mass_of(&lambda);
        OneParticleRealization { particle, lambda, algebra_mass: RationalFunction::symbol(m), physical_mass }
    }

    /// Undeformed realization: `λ = 1` and a free physical mass (`mf`, `mfP`)
    /// that also serves as the eigenvalue of `M`.
    pub fn classical(particle: Particle) -> Self {
        let m = RationalFunction::var(match particle {
            Particle::First => "mf",
            Particle::Second => "mfP",
        });
        OneParticleRealization {
            particle,
            lambda: RationalFunction::one(),
            algebra_mass: m.clone(),
            physical_mass: m,
        }
    }

    /// Fixes `λ` to a given value, with the constrained physical mass;
    /// `λ = 0` is the infinitely heavy particle `m_f = k/2`.
    pub fn with_lambda(mut self, lambda: RationalFunction) -> Self {
        self.physical_mass = physical_mass_of(&lambda);
        self.lambda = lambda;
        self
    }

    /// Replaces the physical mass, e.g. to break the mass constraint.
    pub fn with_physical_mass(mut self, m_f: RationalFunction) -> Result<Self, RealizationError> {
        if num_traits::Zero::is_zero(&m_f) {
            return Err(RealizationError::ZeroMass);
        }
        self.physical_mass = m_f;
        Ok(self)
    }

    pub fn particle(&self) -> Particle {
        self.particle
    }

    pub fn lambda(&self) -> &RationalFunction {
        &self.lambda
    }

    pub fn physical_mass(&self) -> &RationalFunction {
        &self.physical_mass
    }

    fn x(&self, a: Axis) -> Operator {
        Operator::x(self.particle, a)
    }

    fn p(&self, a: Axis) -> Operator {
        Operator::p(self.particle, a)
    }

    fn letter(&self, l: Letter) -> Result<Operator, RealizationError> {
        Ok(match l {
            Letter::P(a) => self.p(a),
            Letter::K(a) => self.x(a).scale(&real(self.physical_mass.clone())),
            Letter::H => {
                let two_m = &RationalFunction::integer(2) * &self.physical_mass;
                let inv = two_m.inv().map_err(|_| RealizationError::ZeroMass)?;
                let mut sq = Operator::zero();
                for a in Axis::ALL {
                    sq = &sq + &(&self.p(a) * &self.p(a));
                }
                sq.scale(&real(inv))
            }
            Letter::J(a) => {
                let b = Axis::from_index((a.index() + 1) % 3);
                let c = Axis::from_index((a.index() + 2) % 3);
                &(&self.x(b) * &self.p(c)) - &(&self.x(c) * &self.p(b))
            }
            Letter::M => Operator::scalar(real(self.algebra_mass.clone())),
        })
    }

    /// Image of a PBW word.
    pub fn word(&self, w: &Word) -> Result<Operator, RealizationError> {
        let mut acc = Operator::scalar(real(self.lambda.pow(w.e_power)?));
        for l in &w.letters {
            acc = &acc * &self.letter(*l)?;
        }
        Ok(acc)
    }

    pub fn represent(&self, e: &UeaExpression<ExactComplex>) -> Result<Operator, RealizationError> {
        let mut out = Operator::zero();
        for (w, c) in e.terms() {
            out = &out + &self.word(w)?.scale(c);
        }
        Ok(out)
    }

    pub fn generator(&self, g: Generator) -> Result<Operator, RealizationError> {
        self.word(&g.word())
    }
}

/// Residuals `[ρ(g), ρ(h)] − ρ([g, h])` for all unordered pairs of
/// generators (excluding `E⁻¹`, which is a function of `E`).
pub fn verify_one_particle(
    r: &OneParticleRealization,
    alg: &GkAlgebra<ExactComplex>,
) -> Result<Vec<(String, Operator)>, RealizationError> {
    let gens: Vec<Generator> = Generator::all().into_iter().filter(|g| *g != Generator::EInv).collect();
    let images: Vec<Operator> = gens.iter().map(|g| r.generator(*g)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lhs = images[i].commutator(&images[j]);
            let rhs = r.represent(&alg.bracket(gens[i], gens[j]))?;
            out.push((format!("[{}, {}]", gens[i].name(), gens[j].name()), &lhs - &rhs));
        }
    }
    Ok(out)
}

/// Canonical variables of a two-particle system, one entry per axis.
#[derive(Clone, Debug)]
pub struct PhaseVariables {
    pub total_momentum: [Operator; 3],
    pub center: [Operator; 3],
    pub relative_momentum: [Operator; 3],
    pub relative_position: [Operator; 3],
}

impl PhaseVariables {
    /// Every bracket among the four triples minus its canonical value.
    pub fn canonical_residuals(&self) -> Vec<(String, Operator)> {
        let sets = [
            ("P", &self.total_momentum),
            ("R", &self.center),
            ("Pi", &self.relative_momentum),
            ("rho", &self.relative_position),
        ];
        let i = Operator::scalar(ExactComplex::imag(RationalFunction::one()));
        let mut out = Vec::new();
        for (s, (na, a)) in sets.iter().enumerate() {
            for (nb, b) in sets.iter().skip(s) {
                for ai in Axis::ALL {
                    for bi in Axis::ALL {
                        let mut res = a[ai.index()].commutator(&b[bi.index()]);
                        let canonical = matches!((*na, *nb), ("P", "R") | ("Pi", "rho"));
                        if canonical && ai == bi {
                            // [P, R] = [Π, ρ] = −i
                            res = &res + &i;
                        }
                        out.push((format!("[{na}{}, {nb}{}]", ai.index() + 1, bi.index() + 1), res));
                    }
                }
            }
        }
        out
    }
}

/// Two particles composed through the coproduct.
#[derive(Clone, Debug)]
pub struct TwoParticleSystem {
    first: OneParticleRealization,
    second: OneParticleRealization,
    classical: bool,
}

impl TwoParticleSystem {
    pub fn new(first: OneParticleRealization, second: OneParticleRealization) -> Result<Self, RealizationError> {
        if first.particle == second.particle {
            return Err(RealizationError::SameSlot);
        }
        let (first, second) = if first.particle == Particle::First { (first, second) } else { (second, first) };
        let classical = first.lambda == RationalFunction::one() && second.lambda == RationalFunction::one();
        Ok(TwoParticleSystem { first, second, classical })
    }

    pub fn deformed() -> Self {
        Self::new(OneParticleRealization::new(Particle::First), OneParticleRealization::new(Particle::Second))
            .expect("distinct slots")
    }

    pub fn classical() -> Self {
        Self::new(OneParticleRealization::classical(Particle::First), OneParticleRealization::classical(Particle::Second))
            .expect("distinct slots")
    }

    pub fn first(&self) -> &OneParticleRealization {
        &self.first
    }

    pub fn second(&self) -> &OneParticleRealization {
        &self.second
    }

    /// `M_f`: the composition law for deformed particles, the plain sum in
    /// the classical realization.
    pub fn total_mass(&self) -> Result<RationalFunction, RealizationError> {
        let (a, b) = (&self.first.physical_mass, &self.second.physical_mass);
        if self.classical {
            return Ok(a + b);
        }
        mass::compose_exact(a, b, &RationalFunction::symbol(symbol::k())).map_err(|e| match e {
            mass::MassError::Scalar(s) => RealizationError::Scalar(s),
            _ => RealizationError::ZeroMass,
        })
    }

    /// `v_f = m_f m'_f / M_f`.
    pub fn reduced_mass(&self) -> Result<RationalFunction, RealizationError> {
        let prod = &self.first.physical_mass * &self.second.physical_mass;
        prod.checked_div(&self.total_mass()?).map_err(|_| RealizationError::ZeroMass)
    }

    /// Image of a two-leg tensor: leg 1 on particle 1, leg 2 on particle 2.
    pub fn represent_tensor(&self, t: &TensorExpression<ExactComplex>) -> Result<Operator, RealizationError> {
        assert_eq!(t.legs(), 2, "two-particle image needs two legs");
        let mut out = Operator::zero();
        for (ws, c) in t.terms() {
            let a = self.first.word(&ws[0])?;
            let b = self.second.word(&ws[1])?;
            out = &out + &(&a * &b).scale(c);
        }
        Ok(out)
    }

    /// Total generator from `Δg`, or from the transposed coproduct.
    pub fn generator(
        &self,
        alg: &GkAlgebra<ExactComplex>,
        g: Generator,
        transposed: bool,
    ) -> Result<Operator, RealizationError> {
        let d = alg.coproduct(g);
        self.represent_tensor(&if transposed { d.transposed() } else { d })
    }

    /// `[G(g), G(h)] − G([g, h])` for all pairs of composed generators.
    pub fn verify_composed(
        &self,
        alg: &GkAlgebra<ExactComplex>,
        transposed: bool,
    ) -> Result<Vec<(String, Operator)>, RealizationError> {
        let gens: Vec<Generator> = Generator::all().into_iter().filter(|g| *g != Generator::EInv).collect();
        let images: Vec<Operator> =
            gens.iter().map(|g| self.generator(alg, *g, transposed)).collect::<Result<_, _>>()?;
        let mut out = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let lhs = images[i].commutator(&images[j]);
                let mut d = alg.coproduct_expr(&alg.bracket(gens[i], gens[j]));
                if transposed {
                    d = d.transposed();
                }
                let rhs = self.represent_tensor(&d)?;
                out.push((format!("[{}, {}]", gens[i].name(), gens[j].name()), &lhs - &rhs));
            }
        }
        Ok(out)
    }

    /// `P = λ' p + p'`, `R = (λ' K + K')/M_f`, `Π = (m'_f p − m_f λ' p')/M_f`,
    /// `ρ = K/m_f − λ' K'/m'_f`.
    pub fn relative_variables(&self) -> Result<PhaseVariables, RealizationError> {
        let lp = &self.second.lambda;
        self.build(lp, &RationalFunction::one(), &RationalFunction::one(), lp)
    }

    /// Transposed-coproduct variables: `p̃ = p + λ p'`, `R̃ = (K + λK')/M_f`,
    /// `Π̃ = (m'_f λ p − m_f p')/M_f`, `ρ̃ = λK/m_f − K'/m'_f`.
    pub fn tilde_variables(&self) -> Result<PhaseVariables, RealizationError> {
        let l = &self.first.lambda;
        self.build(&RationalFunction::one(), l, l, &RationalFunction::one())
    }

    /// `a` weights particle 1 and `b` particle 2 in `P` and `R`; `c`, `d`
    /// weight them in `Π` and `ρ`.
    fn build(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
        c: &RationalFunction,
        d: &RationalFunction,
    ) -> Result<PhaseVariables, RealizationError> {
        let (m1, m2) = (&self.first.physical_mass, &self.second.physical_mass);
        let total_inv = self.total_mass()?.inv().map_err(|_| RealizationError::ZeroMass)?;
        let m1_inv = m1.inv().map_err(|_| RealizationError::ZeroMass)?;
        let m2_inv = m2.inv().map_err(|_| RealizationError::ZeroMass)?;
        let s = |r: RationalFunction| real(r);
        let per_axis = |f: &dyn Fn(Axis) -> Operator| [f(Axis::X), f(Axis::Y), f(Axis::Z)];
        let p1 = |ax| Operator::p(Particle::First, ax);
        let p2 = |ax| Operator::p(Particle::Second, ax);
        let k1 = |ax| self.first.letter(Letter::K(ax)).expect("K image is total");
        let k2 = |ax| self.second.letter(Letter::K(ax)).expect("K image is total");

        let total_momentum = per_axis(&|ax| &p1(ax).scale(&s(a.clone())) + &p2(ax).scale(&s(b.clone())));
        let center = per_axis(&|ax| {
            (&k1(ax).scale(&s(a.clone())) + &k2(ax).scale(&s(b.clone()))).scale(&s(total_inv.clone()))
        });
        let relative_momentum = per_axis(&|ax| {
            let w1 = &(m2 * c) * &total_inv;
            let w2 = &(m1 * d) * &total_inv;
            &p1(ax).scale(&s(w1)) - &p2(ax).scale(&s(w2))
        });
        let relative_position = per_axis(&|ax| {
            &k1(ax).scale(&s(c * &m1_inv)) - &k2(ax).scale(&s(d * &m2_inv))
        });
        Ok(PhaseVariables { total_momentum, center, relative_momentum, relative_position })
    }

    /// `H − P²/(2M_f) − Π²/(2v_f)` with the untransposed variables.
    pub fn kinetic_split(&self, alg: &GkAlgebra<ExactComplex>) -> Result<Operator, RealizationError> {
        let h = self.generator(alg, Generator::H, false)?;
        let vars = self.relative_variables()?;
        let two = RationalFunction::integer(2);
        let c_total = real((&two * &self.total_mass()?).inv()?);
        let c_rel = real((&two * &self.reduced_mass()?).inv()?);
        let mut out = h;
        for ax in Axis::ALL {
            let big = &vars.total_momentum[ax.index()];
            let rel = &vars.relative_momentum[ax.index()];
            out = &out - &(big * big).scale(&c_total);
            out = &out - &(rel * rel).scale(&c_rel);
        }
        Ok(out)
    }
}
