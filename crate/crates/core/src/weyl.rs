//! Canonical (Weyl) algebra of two particles in three dimensions.
//!
//! Positions act as `x = i d/dp` on momentum wavefunctions, so
//! `[x_{A,i}, p_{B,j}] = i δ_AB δ_ij` with ħ = 1. Every expression is stored
//! normal ordered: all positions to the left of all momenta.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Coefficient;

/// Spatial axis, 1-based in the physics notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i % 3]
    }

    /// Levi-Civita symbol ε_{abc}.
    pub fn epsilon(a: Axis, b: Axis, c: Axis) -> i64 {
        let (a, b, c) = (a.index(), b.index(), c.index());
        if a == b || b == c || a == c {
            return 0;
        }
        if (a + 1) % 3 == b && (b + 1) % 3 == c {
            1
        } else {
            -1
        }
    }

    /// The axis completing `(a, b)` to a permutation, with its ε sign.
    pub fn cross(a: Axis, b: Axis) -> Option<(Axis, i64)> {
        if a == b {
            return None;
        }
        let c = Axis::from_index(3 - a.index() - b.index());
        Some((c, Axis::epsilon(a, b, c)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Particle {
    First,
    Second,
}

impl Particle {
    pub fn index(self) -> usize {
        match self {
            Particle::First => 0,
            Particle::Second => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Position,
    Momentum,
}

/// One of the twelve canonical generators `x_{A,i}`, `p_{A,i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalSymbol {
    pub particle: Particle,
    pub axis: Axis,
    pub kind: Kind,
}

impl CanonicalSymbol {
    pub fn x(particle: Particle, axis: Axis) -> Self {
        CanonicalSymbol { particle, axis, kind: Kind::Position }
    }

    pub fn p(particle: Particle, axis: Axis) -> Self {
        CanonicalSymbol { particle, axis, kind: Kind::Momentum }
    }

    fn mode(self) -> usize {
        self.particle.index() * 3 + self.axis.index()
    }
}

const MODES: usize = 6;

/// `Π x_m^{x[m]} · Π p_m^{p[m]}` with mode `m = 3·particle + axis`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeylMonomial {
    x: [u16; MODES],
    p: [u16; MODES],
}

impl WeylMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(s: CanonicalSymbol) -> Self {
        let mut m = Self::one();
        match s.kind {
            Kind::Position => m.x[s.mode()] = 1,
            Kind::Momentum => m.p[s.mode()] = 1,
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(self.p.iter()).map(|&e| u32::from(e)).sum()
    }

    pub fn position_exponent(&self, particle: Particle, axis: Axis) -> u16 {
        self.x[particle.index() * 3 + axis.index()]
    }

    pub fn momentum_exponent(&self, particle: Particle, axis: Axis) -> u16 {
        self.p[particle.index() * 3 + axis.index()]
    }

    /// Normal-ordered expansion of `self · other`: each term is
    /// `(monomial, integer factor, power of -i)`.
    fn product(&self, other: &WeylMonomial) -> Vec<(WeylMonomial, i64, u32)> {
        let mut base = WeylMonomial::one();
        for m in 0..MODES {
            base.x[m] = self.x[m] + other.x[m];
            base.p[m] = self.p[m] + other.p[m];
        }
        let mut out = vec![(base, 1i64, 0u32)];
        // p^b x^c = Σ_j j! C(b,j) C(c,j) (-i)^j x^{c-j} p^{b-j}, independently per mode.
        for m in 0..MODES {
            let b = u64::from(self.p[m]);
            let c = u64::from(other.x[m]);
            let r = b.min(c);
            if r == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * (r as usize + 1));
            for (mono, coeff, ipow) in &out {
                for j in 0..=r {
                    let mut t = *mono;
                    t.x[m] -= j as u16;
                    t.p[m] -= j as u16;
                    let w = (factorial(j) * binomial(b, j) * binomial(c, j)) as i64;
                    next.push((t, coeff * w, ipow + j as u32));
                }
            }
            out = next;
        }
        out
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn minus_i_pow<C: Coefficient>(pow: u32) -> C {
    let i = C::imaginary_unit();
    match pow % 4 {
        0 => C::one(),
        1 => -i,
        2 => -C::one(),
        _ => i,
    }
}

impl fmt::Debug for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("x", &self.x), ("p", &self.p)] {
            for (m, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let sym = format!("{name}{}_{}", m / 3 + 1, m % 3 + 1);
                parts.push(if e == 1 { sym } else { format!("{sym}^{e}") });
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Finite sum of coefficient × normal-ordered monomial; zero terms pruned.
#[derive(Clone, PartialEq)]
pub struct WeylExpression<C> {
    terms: BTreeMap<WeylMonomial, C>,
}

impl<C: Coefficient> WeylExpression<C> {
    pub fn zero() -> Self {
        WeylExpression { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(WeylMonomial::one(), c)
    }

    pub fn term(m: WeylMonomial, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn symbol(s: CanonicalSymbol) -> Self {
        Self::term(WeylMonomial::single(s), C::one())
    }

    pub fn x(particle: Particle, axis: Axis) -> Self {
        Self::symbol(CanonicalSymbol::x(particle, axis))
    }

    pub fn p(particle: Particle, axis: Axis) -> Self {
        Self::symbol(CanonicalSymbol::p(particle, axis))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(WeylMonomial::degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_part(&self) -> C {
        self.coefficient(&WeylMonomial::one())
    }

    /// Coefficient of a single canonical symbol.
    pub fn linear_coefficient(&self, s: CanonicalSymbol) -> C {
        self.coefficient(&WeylMonomial::single(s))
    }

    fn add_term(&mut self, m: WeylMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x.clone() * c.clone());
        }
        out
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c12 = c1.clone() * c2.clone();
                for (m, n, ipow) in m1.product(m2) {
                    out.add_term(m, c12.clone() * C::from_i64(n) * minus_i_pow::<C>(ipow));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.multiply(rhs) - &rhs.multiply(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// Applies `f` to every coefficient, e.g. to move to the numeric backend.
    pub fn try_map_coefficients<D: Coefficient, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<WeylExpression<D>, E> {
        let mut out = WeylExpression::<D>::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }
}

/// Normal-orders a raw sum of words in the canonical symbols.
pub fn normal_order<C: Coefficient>(raw: &[(C, Vec<CanonicalSymbol>)]) -> WeylExpression<C> {
    let mut out = WeylExpression::zero();
    for (c, word) in raw {
        let mut acc = WeylExpression::scalar(c.clone());
        for s in word {
            acc = acc.multiply(&WeylExpression::symbol(*s));
        }
        out = &out + &acc;
    }
    out
}

impl<C: Coefficient> Add for &WeylExpression<C> {
    type Output = WeylExpression<C>;
    fn add(self, rhs: &WeylExpression<C>) -> WeylExpression<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &WeylExpression<C> {
    type Output = WeylExpression<C>;
    fn sub(self, rhs: &WeylExpression<C>) -> WeylExpression<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &WeylExpression<C> {
    type Output = WeylExpression<C>;
    fn neg(self) -> WeylExpression<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Mul for &WeylExpression<C> {
    type Output = WeylExpression<C>;
    fn mul(self, rhs: &WeylExpression<C>) -> WeylExpression<C> {
        self.multiply(rhs)
    }
}

impl<C: Coefficient> fmt::Debug for WeylExpression<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("[{c:?}]*{m:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}
