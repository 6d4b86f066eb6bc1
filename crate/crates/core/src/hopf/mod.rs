//! The deformed Galilei Hopf algebra.
//!
//! Generators are rotations `J_i`, boosts `K_i`, momenta `P_i`, energy `H`,
//! the mass operator `M`, and the grouplike `E = e^{-M/k}` with its inverse.
//! Nonvanishing brackets:
//!
//! ```text
//! [J_i, J_j] = i ε_ijl J_l     [J_i, K_j] = i ε_ijl K_l     [J_i, P_j] = i ε_ijl P_l
//! [K_i, P_j] = i δ_ij c (1 − E²)                            [K_i, H]   = i P_i
//! ```
//!
//! Coproducts: `ΔP_i = P_i⊗E + 1⊗P_i`, `ΔK_i = K_i⊗E + 1⊗K_i`, `ΔE = E⊗E`,
//! the rest primitive. The printed source writes the `ΔP_i` twist as
//! `a^{-M/K}`; it is read here as `e^{-M/k}`, matching `ΔK_i`.
//!
//! Counit and antipode are not part of the source data. The ones used here,
//! `ε(E) = 1`, `S(P_i) = −P_i E⁻¹`, `S(K_i) = −K_i E⁻¹`, `S(E) = E⁻¹`,
//! `S(X) = −X` otherwise, are a completion that satisfies the axioms.

mod uea;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use crate::weyl::Axis;
pub use uea::{Letter, TensorExpression, UeaExpression, Word};

use crate::scalar::{symbol, Coefficient, ExactComplex, RationalFunction};

/// A single algebra generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    J(Axis),
    K(Axis),
    P(Axis),
    H,
    M,
    E,
    EInv,
}

impl Generator {
    /// All thirteen generators.
    pub fn all() -> Vec<Generator> {
        let mut out = Vec::with_capacity(13);
        for a in Axis::ALL {
            out.push(Generator::J(a));
        }
        for a in Axis::ALL {
            out.push(Generator::K(a));
        }
        for a in Axis::ALL {
            out.push(Generator::P(a));
        }
        out.extend([Generator::H, Generator::M, Generator::E, Generator::EInv]);
        out
    }

    pub fn word(self) -> Word {
        match self {
            Generator::J(a) => Word::letter(Letter::J(a)),
            Generator::K(a) => Word::letter(Letter::K(a)),
            Generator::P(a) => Word::letter(Letter::P(a)),
            Generator::H => Word::letter(Letter::H),
            Generator::M => Word::letter(Letter::M),
            Generator::E => Word::grouplike(1),
            Generator::EInv => Word::grouplike(-1),
        }
    }

    pub fn name(self) -> String {
        match self {
            Generator::J(a) => format!("J{}", a.index() + 1),
            Generator::K(a) => format!("K{}", a.index() + 1),
            Generator::P(a) => format!("P{}", a.index() + 1),
            Generator::H => "H".into(),
            Generator::M => "M".into(),
            Generator::E => "E".into(),
            Generator::EInv => "E^-1".into(),
        }
    }
}

/// Choice of the central constant `c` in `[K_i, P_j] = i δ_ij c (1 − E²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CentralCharge {
    /// `c = k/2`, the normalization under which `m_f = (k/2)(1 − e^{-2m/k})`.
    #[default]
    Normalized,
    /// `c = μ / (1 − e^{-2μ/k})` with formal reference mass `μ` (`muRef`) and
    /// `e^{-μ/k}` adjoined as `lambdaMu`.
    Reference,
}

impl CentralCharge {
    pub fn value(self) -> RationalFunction {
        match self {
            CentralCharge::Normalized => {
                &RationalFunction::rational(1, 2) * &RationalFunction::symbol(symbol::k())
            }
            CentralCharge::Reference => {
                let lm = RationalFunction::symbol(symbol::lambda_mu());
                let denom = &RationalFunction::one() - &(&lm * &lm);
                RationalFunction::symbol(symbol::mu_ref())
                    .checked_div(&denom)
                    .expect("1 - lambdaMu^2 is a nonzero polynomial")
            }
        }
    }
}

/// Result of a normal-ordering pass, with the number of rewrite steps taken.
#[derive(Clone)]
pub struct Rewritten<C> {
    pub expr: UeaExpression<C>,
    pub steps: usize,
}

/// The algebra with a fixed central constant; owns all rewriting.
#[derive(Clone, Debug)]
pub struct GkAlgebra<C> {
    central: C,
}

impl GkAlgebra<ExactComplex> {
    pub fn exact(charge: CentralCharge) -> Self {
        GkAlgebra { central: ExactComplex::real(charge.value()) }
    }
}

impl Default for GkAlgebra<ExactComplex> {
    fn default() -> Self {
        Self::exact(CentralCharge::Normalized)
    }
}

impl<C: Coefficient> GkAlgebra<C> {
    pub fn with_central(central: C) -> Self {
        GkAlgebra { central }
    }

    pub fn central(&self) -> &C {
        &self.central
    }

    pub fn generator(&self, g: Generator) -> UeaExpression<C> {
        UeaExpression::word(g.word(), C::one())
    }

    /// Bracket of two letters on the oriented pairs listed in the table.
    fn bracket_rule(&self, a: Letter, b: Letter) -> Option<Vec<(Word, C)>> {
        let i = C::imaginary_unit();
        let eps = |x: Axis, y: Axis, f: fn(Axis) -> Letter| {
            Axis::cross(x, y).map(|(z, s)| vec![(Word::letter(f(z)), i.clone() * C::from_i64(s))])
        };
        match (a, b) {
            (Letter::J(x), Letter::J(y)) if x < y => eps(x, y, Letter::J),
            (Letter::J(x), Letter::K(y)) => Some(eps(x, y, Letter::K).unwrap_or_default()),
            (Letter::J(x), Letter::P(y)) => Some(eps(x, y, Letter::P).unwrap_or_default()),
            (Letter::K(x), Letter::P(y)) => Some(if x == y {
                let ic = i.clone() * self.central.clone();
                vec![(Word::unit(), ic.clone()), (Word::grouplike(2), -ic)]
            } else {
                Vec::new()
            }),
            (Letter::K(x), Letter::H) => Some(vec![(Word::letter(Letter::P(x)), i)]),
            _ => None,
        }
    }

    fn letter_bracket(&self, a: Letter, b: Letter) -> Vec<(Word, C)> {
        if let Some(r) = self.bracket_rule(a, b) {
            return r;
        }
        if let Some(r) = self.bracket_rule(b, a) {
            return r.into_iter().map(|(w, c)| (w, -c)).collect();
        }
        Vec::new()
    }

    /// The defining bracket `[g, h]`; zero for pairs not in the table.
    pub fn bracket(&self, g: Generator, h: Generator) -> UeaExpression<C> {
        let (a, b) = match (g.word().letters.first(), h.word().letters.first()) {
            (Some(a), Some(b)) => (*a, *b),
            _ => return UeaExpression::zero(),
        };
        let mut out = UeaExpression::zero();
        for (w, c) in self.letter_bracket(a, b) {
            out.add_term(w, c);
        }
        out
    }

    /// Rewrites arbitrary words into normal order with `ab = ba + [a, b]`.
    pub fn normal_order_words(&self, input: impl IntoIterator<Item = (Word, C)>) -> Rewritten<C> {
        let mut pending = UeaExpression::zero();
        for (w, c) in input {
            pending.add_term(w, c);
        }
        let mut done = UeaExpression::zero();
        let mut steps = 0;
        while let Some((w, c)) = pending.terms.pop_last() {
            let Some(pos) = w.letters.windows(2).position(|p| p[0] > p[1]) else {
                done.add_term(w, c);
                continue;
            };
            steps += 1;
            let (a, b) = (w.letters[pos], w.letters[pos + 1]);
            let mut swapped = w.clone();
            swapped.letters.swap(pos, pos + 1);
            pending.add_term(swapped, c.clone());
            for (bw, bc) in self.letter_bracket(a, b) {
                let mut letters = w.letters[..pos].to_vec();
                letters.extend_from_slice(&bw.letters);
                letters.extend_from_slice(&w.letters[pos + 2..]);
                pending.add_term(Word { letters, e_power: w.e_power + bw.e_power }, c.clone() * bc);
            }
        }
        Rewritten { expr: done, steps }
    }

    pub fn multiply_words(&self, a: &Word, b: &Word) -> UeaExpression<C> {
        self.normal_order_words([(a.concat(b), C::one())]).expr
    }

    pub fn multiply(&self, a: &UeaExpression<C>, b: &UeaExpression<C>) -> UeaExpression<C> {
        let mut raw = Vec::with_capacity(a.num_terms() * b.num_terms());
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                raw.push((w1.concat(w2), c1.clone() * c2.clone()));
            }
        }
        self.normal_order_words(raw).expr
    }

    pub fn commutator(&self, a: &UeaExpression<C>, b: &UeaExpression<C>) -> UeaExpression<C> {
        &self.multiply(a, b) - &self.multiply(b, a)
    }

    /// Leg-wise product of tensor expressions with equal leg counts.
    pub fn tensor_multiply(&self, a: &TensorExpression<C>, b: &TensorExpression<C>) -> TensorExpression<C> {
        assert_eq!(a.legs(), b.legs(), "leg count mismatch");
        let mut out = TensorExpression::zero(a.legs());
        for (ws1, c1) in a.terms() {
            for (ws2, c2) in b.terms() {
                let mut acc = TensorExpression::scalar_legs(0, c1.clone() * c2.clone());
                for (x, y) in ws1.iter().zip(ws2) {
                    let leg = TensorExpression::from_uea(&self.multiply_words(x, y));
                    acc = acc.tensor(&leg);
                }
                out = &out + &acc;
            }
        }
        out
    }

    pub fn tensor_commutator(&self, a: &TensorExpression<C>, b: &TensorExpression<C>) -> TensorExpression<C> {
        &self.tensor_multiply(a, b) - &self.tensor_multiply(b, a)
    }

    fn letter_coproduct(&self, l: Letter) -> TensorExpression<C> {
        let x = Word::letter(l);
        let mut out = TensorExpression::zero(2);
        match l {
            Letter::P(_) | Letter::K(_) => out.add_term(vec![x.clone(), Word::grouplike(1)], C::one()),
            Letter::J(_) | Letter::H | Letter::M => out.add_term(vec![x.clone(), Word::unit()], C::one()),
        }
        out.add_term(vec![Word::unit(), x], C::one());
        out
    }

    /// `Δ` on a word, as an algebra map.
    pub fn coproduct_word(&self, w: &Word) -> TensorExpression<C> {
        let mut acc = TensorExpression::monomial(
            vec![Word::grouplike(w.e_power), Word::grouplike(w.e_power)],
            C::one(),
        );
        for l in &w.letters {
            acc = self.tensor_multiply(&acc, &self.letter_coproduct(*l));
        }
        acc
    }

    pub fn coproduct(&self, g: Generator) -> TensorExpression<C> {
        self.coproduct_word(&g.word())
    }

    pub fn coproduct_expr(&self, e: &UeaExpression<C>) -> TensorExpression<C> {
        let mut out = TensorExpression::zero(2);
        for (w, c) in e.terms() {
            out = &out + &self.coproduct_word(w).scale(c);
        }
        out
    }

    /// Applies `Δ` to one leg of a tensor expression, adding a leg.
    pub fn coproduct_on_leg(&self, t: &TensorExpression<C>, leg: usize) -> TensorExpression<C> {
        let mut out = TensorExpression::zero(t.legs() + 1);
        for (ws, c) in t.terms() {
            let split = self.coproduct_word(&ws[leg]);
            for (pair, c2) in split.terms() {
                let mut words = ws[..leg].to_vec();
                words.extend(pair.iter().cloned());
                words.extend(ws[leg + 1..].iter().cloned());
                out.add_term(words, c.clone() * c2.clone());
            }
        }
        out
    }

    pub fn counit_word(&self, w: &Word) -> C {
        if w.letters.is_empty() {
            C::one()
        } else {
            C::zero()
        }
    }

    pub fn counit(&self, g: Generator) -> C {
        self.counit_word(&g.word())
    }

    fn letter_antipode(&self, l: Letter) -> UeaExpression<C> {
        let minus = -C::one();
        match l {
            Letter::P(_) | Letter::K(_) => {
                UeaExpression::word(Word { letters: vec![l], e_power: -1 }, minus)
            }
            Letter::J(_) | Letter::H | Letter::M => UeaExpression::word(Word::letter(l), minus),
        }
    }

    /// `S` on a word, as an anti-homomorphism.
    pub fn antipode_word(&self, w: &Word) -> UeaExpression<C> {
        let mut acc = UeaExpression::word(Word::grouplike(-w.e_power), C::one());
        for l in w.letters.iter().rev() {
            acc = self.multiply(&acc, &self.letter_antipode(*l));
        }
        acc
    }

    pub fn antipode(&self, g: Generator) -> UeaExpression<C> {
        self.antipode_word(&g.word())
    }

    pub fn antipode_expr(&self, e: &UeaExpression<C>) -> UeaExpression<C> {
        let mut out = UeaExpression::zero();
        for (w, c) in e.terms() {
            out = &out + &self.antipode_word(w).scale(c);
        }
        out
    }

    /// Multiplies the two legs together, optionally applying `S` to one of them.
    fn contract(&self, t: &TensorExpression<C>, antipode_leg: Option<usize>) -> UeaExpression<C> {
        assert_eq!(t.legs(), 2);
        let mut out = UeaExpression::zero();
        for (ws, c) in t.terms() {
            let leg = |i: usize| {
                if antipode_leg == Some(i) {
                    self.antipode_word(&ws[i])
                } else {
                    UeaExpression::word(ws[i].clone(), C::one())
                }
            };
            out = &out + &self.multiply(&leg(0), &leg(1)).scale(c);
        }
        out
    }

    /// `[[g1,g2],g3] + [[g2,g3],g1] + [[g3,g1],g2]`.
    pub fn check_jacobi(&self, g1: Generator, g2: Generator, g3: Generator) -> UeaExpression<C> {
        let term = |a: Generator, b: Generator, c: Generator| {
            self.commutator(&self.bracket(a, b), &self.generator(c))
        };
        &(&term(g1, g2, g3) + &term(g2, g3, g1)) + &term(g3, g1, g2)
    }

    /// `Δ([g,h]) − [Δg, Δh]`.
    pub fn check_hom(&self, g: Generator, h: Generator) -> TensorExpression<C> {
        let lhs = self.coproduct_expr(&self.bracket(g, h));
        let rhs = self.tensor_commutator(&self.coproduct(g), &self.coproduct(h));
        &lhs - &rhs
    }

    /// `(Δ⊗id)Δg − (id⊗Δ)Δg`.
    pub fn check_coassoc(&self, g: Generator) -> TensorExpression<C> {
        let d = self.coproduct(g);
        &self.coproduct_on_leg(&d, 0) - &self.coproduct_on_leg(&d, 1)
    }

    /// Antipode axiom residuals `m(S⊗id)Δg − ε(g)1` and `m(id⊗S)Δg − ε(g)1`.
    pub fn check_hopf_axiom(&self, g: Generator) -> (UeaExpression<C>, UeaExpression<C>) {
        let d = self.coproduct(g);
        let unit = UeaExpression::scalar(self.counit(g));
        (&self.contract(&d, Some(0)) - &unit, &self.contract(&d, Some(1)) - &unit)
    }

    /// Counit axiom residuals `(ε⊗id)Δg − g` and `(id⊗ε)Δg − g`.
    pub fn check_counit(&self, g: Generator) -> (UeaExpression<C>, UeaExpression<C>) {
        let d = self.coproduct(g);
        let mut left = UeaExpression::zero();
        let mut right = UeaExpression::zero();
        for (ws, c) in d.terms() {
            left.add_term(ws[1].clone(), c.clone() * self.counit_word(&ws[0]));
            right.add_term(ws[0].clone(), c.clone() * self.counit_word(&ws[1]));
        }
        let g = self.generator(g);
        (&left - &g, &right - &g)
    }

    /// `S([g,h]) − [S(h), S(g)]`; zero because `S` reverses products.
    pub fn check_antipode_antihom(&self, g: Generator, h: Generator) -> UeaExpression<C> {
        let lhs = self.antipode_expr(&self.bracket(g, h));
        let rhs = self.commutator(&self.antipode(h), &self.antipode(g));
        &lhs - &rhs
    }
}

impl<C: Coefficient> TensorExpression<C> {
    /// Scalar with an explicit leg count (0 legs is the multiplicative seed).
    fn scalar_legs(legs: usize, c: C) -> Self {
        Self::monomial(vec![Word::unit(); legs], c)
    }
}

impl GkAlgebra<ExactComplex> {
    /// Replaces every `E^n` by the series of `e^{-nM/k}` and drops terms of
    /// total `M`-degree above `order`.
    pub fn expand_grouplike(&self, e: &UeaExpression<ExactComplex>, order: u32) -> UeaExpression<ExactComplex> {
        let minus_inv_k = -RationalFunction::symbol(symbol::k()).inv().expect("k is nonzero");
        let mut raw = Vec::new();
        for (w, c) in e.terms() {
            let base_m = w.letters.iter().filter(|l| **l == Letter::M).count() as u32;
            for j in 0..=order.saturating_sub(base_m) {
                let coeff = exp_coefficient(w.e_power, j);
                if coeff.is_zero() {
                    continue;
                }
                let scalar = &RationalFunction::constant(coeff) * &minus_inv_k.pow(j as i32).expect("nonzero");
                let mut letters = w.letters.clone();
                letters.extend(std::iter::repeat_n(Letter::M, j as usize));
                raw.push((Word { letters, e_power: 0 }, c.scale(&scalar)));
            }
        }
        self.normal_order_words(raw).expr
    }
}

/// `n^j / j!`.
fn exp_coefficient(n: i32, j: u32) -> BigRational {
    let mut acc = BigRational::one();
    for t in 0..j {
        acc *= BigRational::new(BigInt::from(n), BigInt::from(t + 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    type Alg = GkAlgebra<ExactComplex>;

    fn i() -> ExactComplex {
        ExactComplex::imaginary_unit()
    }

    fn c_half_k() -> ExactComplex {
        ExactComplex::real(CentralCharge::Normalized.value())
    }

    #[test]
    fn bracket_examples() {
        let alg = Alg::default();
        let jp = alg.bracket(Generator::J(Axis::X), Generator::P(Axis::Y));
        assert_eq!(jp, UeaExpression::word(Word::letter(Letter::P(Axis::Z)), i()));

        let kp = alg.bracket(Generator::K(Axis::X), Generator::P(Axis::X));
        let ic = i() * c_half_k();
        let mut expected = UeaExpression::scalar(ic.clone());
        expected.add_term(Word::grouplike(2), -ic);
        assert_eq!(kp, expected);

        assert!(alg.bracket(Generator::M, Generator::H).is_zero());
        assert!(alg.bracket(Generator::K(Axis::X), Generator::P(Axis::Y)).is_zero());
        assert!(alg.bracket(Generator::E, Generator::K(Axis::X)).is_zero());
        let kh = alg.bracket(Generator::K(Axis::Z), Generator::H);
        assert_eq!(kh, UeaExpression::word(Word::letter(Letter::P(Axis::Z)), i()));
        let hk = alg.bracket(Generator::H, Generator::K(Axis::Z));
        assert_eq!(hk, UeaExpression::word(Word::letter(Letter::P(Axis::Z)), -i()));
    }

    #[test]
    fn rewriting_matches_bracket_table() {
        let alg = Alg::default();
        for g in Generator::all() {
            for h in Generator::all() {
                let c = alg.commutator(&alg.generator(g), &alg.generator(h));
                assert_eq!(c, alg.bracket(g, h), "[{}, {}]", g.name(), h.name());
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let alg = Alg::default();
        let dp = alg.coproduct(Generator::P(Axis::X));
        let mut expected = TensorExpression::zero(2);
        expected.add_term(vec![Word::letter(Letter::P(Axis::X)), Word::grouplike(1)], ExactComplex::one());
        expected.add_term(vec![Word::unit(), Word::letter(Letter::P(Axis::X))], ExactComplex::one());
        assert_eq!(dp, expected);

        let dh = alg.coproduct(Generator::H);
        assert_eq!(dh.coefficient(&[Word::letter(Letter::H), Word::unit()]), ExactComplex::one());
        assert_eq!(dh.coefficient(&[Word::unit(), Word::letter(Letter::H)]), ExactComplex::one());
        assert_eq!(dh.num_terms(), 2);

        let de = alg.coproduct(Generator::E);
        assert_eq!(de, TensorExpression::monomial(vec![Word::grouplike(1); 2], ExactComplex::one()));
    }

    /// Series oracle for ΔE = E⊗E: with ΔM = M⊗1 + 1⊗M, the truncated
    /// exponential Σ_j (−ΔM/k)^j / j! agrees with the expansion of E⊗E
    /// through third order in M.
    #[test]
    fn grouplike_coproduct_series_oracle() {
        let alg = Alg::default();
        let order = 3u32;
        let k_inv = RationalFunction::var("k").inv().unwrap();
        let dm = alg.coproduct(Generator::M);
        let mut series = TensorExpression::zero(2);
        let mut power = TensorExpression::one(2);
        let mut fact = 1i64;
        for j in 0..=order {
            if j > 0 {
                power = alg.tensor_multiply(&power, &dm);
                fact *= i64::from(j);
            }
            let s = &(-k_inv.clone()).pow(j as i32).unwrap() * &RationalFunction::rational(1, fact);
            series = &series + &power.scale(&ExactComplex::real(s));
        }
        // Expand each leg of E⊗E to the same order and keep total M-degree ≤ 3.
        let e_leg = alg.expand_grouplike(&alg.generator(Generator::E), order);
        let product = TensorExpression::from_uea(&e_leg).tensor(&TensorExpression::from_uea(&e_leg));
        let mut truncated = TensorExpression::zero(2);
        for (ws, c) in product.terms() {
            let deg: usize = ws.iter().map(|w| w.letters.len()).sum();
            if deg as u32 <= order {
                truncated.add_term(ws.clone(), c.clone());
            }
        }
        assert_eq!(truncated, series);
    }

    #[test]
    fn jacobi_examples() {
        let alg = Alg::default();
        assert!(alg.check_jacobi(Generator::J(Axis::X), Generator::K(Axis::Y), Generator::P(Axis::Z)).is_zero());
        assert!(alg.check_jacobi(Generator::K(Axis::X), Generator::P(Axis::X), Generator::H).is_zero());
        assert!(alg.check_jacobi(Generator::M, Generator::K(Axis::X), Generator::P(Axis::X)).is_zero());
        assert!(alg.check_jacobi(Generator::J(Axis::X), Generator::J(Axis::Y), Generator::P(Axis::X)).is_zero());
    }

    #[test]
    fn hom_examples() {
        let alg = Alg::default();
        assert!(alg.check_hom(Generator::K(Axis::X), Generator::P(Axis::X)).is_zero());
        assert!(alg.check_hom(Generator::K(Axis::X), Generator::H).is_zero());
        assert!(alg.check_hom(Generator::J(Axis::X), Generator::J(Axis::Y)).is_zero());
    }

    #[test]
    fn hom_kp_both_sides_hand_expansion() {
        // Δ[K1,P1] = i c (1⊗1 − E²⊗E²)
        let alg = Alg::default();
        let lhs = alg.coproduct_expr(&alg.bracket(Generator::K(Axis::X), Generator::P(Axis::X)));
        let ic = i() * c_half_k();
        let mut expected = TensorExpression::zero(2);
        expected.add_term(vec![Word::unit(), Word::unit()], ic.clone());
        expected.add_term(vec![Word::grouplike(2), Word::grouplike(2)], -ic);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn coassoc_examples() {
        let alg = Alg::default();
        for g in [Generator::H, Generator::E, Generator::P(Axis::X)] {
            assert!(alg.check_coassoc(g).is_zero(), "{}", g.name());
        }
        // P⊗E⊗E + 1⊗P⊗E + 1⊗1⊗P
        let d = alg.coproduct(Generator::P(Axis::X));
        let left = alg.coproduct_on_leg(&d, 0);
        let p = Word::letter(Letter::P(Axis::X));
        let e = Word::grouplike(1);
        let u = Word::unit();
        let mut expected = TensorExpression::zero(3);
        expected.add_term(vec![p.clone(), e.clone(), e.clone()], ExactComplex::one());
        expected.add_term(vec![u.clone(), p.clone(), e], ExactComplex::one());
        expected.add_term(vec![u.clone(), u, p], ExactComplex::one());
        assert_eq!(left, expected);
    }

    #[test]
    fn hopf_axiom_examples() {
        let alg = Alg::default();
        for g in [Generator::H, Generator::E, Generator::P(Axis::X)] {
            let (l, r) = alg.check_hopf_axiom(g);
            assert!(l.is_zero() && r.is_zero(), "{}", g.name());
        }
        assert_eq!(alg.counit(Generator::E), ExactComplex::one());
        assert!(alg.counit(Generator::P(Axis::Y)).is_zero());
        let sp = alg.antipode(Generator::P(Axis::X));
        assert_eq!(sp, UeaExpression::word(Word { letters: vec![Letter::P(Axis::X)], e_power: -1 }, -ExactComplex::one()));
        assert_eq!(alg.antipode(Generator::E), alg.generator(Generator::EInv));
    }

    #[test]
    fn reference_charge_also_consistent() {
        let alg = Alg::exact(CentralCharge::Reference);
        let all = Generator::all();
        for &g in &all {
            for &h in &all {
                assert!(alg.check_hom(g, h).is_zero());
            }
        }
        assert!(alg.check_jacobi(Generator::K(Axis::Y), Generator::P(Axis::Y), Generator::H).is_zero());
    }

    #[test]
    fn first_order_classical_limit() {
        let alg = Alg::default();
        let kp = alg.bracket(Generator::K(Axis::X), Generator::P(Axis::X));
        let lin = alg.expand_grouplike(&kp, 1);
        // i c (2M/k) = i M when c = k/2
        assert_eq!(lin, UeaExpression::word(Word::letter(Letter::M), i()));

        let alg = Alg::exact(CentralCharge::Reference);
        let kp = alg.bracket(Generator::K(Axis::X), Generator::P(Axis::X));
        let lin = alg.expand_grouplike(&kp, 1);
        let two_c_over_k = CentralCharge::Reference.value().checked_div(&RationalFunction::var("k")).unwrap();
        let expected = ExactComplex::imag(&RationalFunction::integer(2) * &two_c_over_k);
        assert_eq!(lin, UeaExpression::word(Word::letter(Letter::M), expected));
    }

    #[test]
    fn exp_coefficients() {
        assert_eq!(exp_coefficient(-1, 2), BigRational::new(1.into(), 2.into()));
        assert_eq!(exp_coefficient(2, 3), BigRational::new(4.into(), 3.into()));
        assert_eq!(exp_coefficient(0, 2), BigRational::zero());
        assert_eq!(exp_coefficient(5, 0), BigRational::one());
    }
}
