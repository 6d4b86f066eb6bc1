use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Coefficient;
use crate::weyl::Axis;

/// Non-grouplike letters of a PBW word, in normal order `J < K < P < H < M`
/// with axis ties broken by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    J(Axis),
    K(Axis),
    P(Axis),
    H,
    M,
}

/// `letters · E^{e_power}`. The grouplike `E = e^{-M/k}` is central and
/// invertible, so it is carried as an integer exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub e_power: i32,
}

impl Word {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l], e_power: 0 }
    }

    pub fn grouplike(e_power: i32) -> Self {
        Word { letters: Vec::new(), e_power }
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty() && self.e_power == 0
    }

    pub fn is_normal(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, e_power: self.e_power + other.e_power }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::J(a) => format!("J{}", a.index() + 1),
                Letter::K(a) => format!("K{}", a.index() + 1),
                Letter::P(a) => format!("P{}", a.index() + 1),
                Letter::H => "H".into(),
                Letter::M => "M".into(),
            })
            .collect();
        if self.e_power != 0 {
            parts.push(format!("E^{}", self.e_power));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Element of the enveloping algebra as a sum of coefficient × word.
///
/// Expressions produced by [`GkAlgebra`](super::GkAlgebra) operations hold
/// normal-ordered words only; the algebra owns the rewriting.
#[derive(Clone, PartialEq)]
pub struct UeaExpression<C> {
    pub(crate) terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> UeaExpression<C> {
    pub fn zero() -> Self {
        UeaExpression { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::word(Word::unit(), C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::word(Word::unit(), c)
    }

    pub fn word(w: Word, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for &UeaExpression<C> {
    type Output = UeaExpression<C>;
    fn add(self, rhs: &UeaExpression<C>) -> UeaExpression<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &UeaExpression<C> {
    type Output = UeaExpression<C>;
    fn sub(self, rhs: &UeaExpression<C>) -> UeaExpression<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &UeaExpression<C> {
    type Output = UeaExpression<C>;
    fn neg(self) -> UeaExpression<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> fmt::Debug for UeaExpression<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("[{c:?}]*{w:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Sum of tensor monomials with a fixed number of legs (2 or 3).
#[derive(Clone, PartialEq)]
pub struct TensorExpression<C> {
    pub(crate) legs: usize,
    pub(crate) terms: BTreeMap<Vec<Word>, C>,
}

impl<C: Coefficient> TensorExpression<C> {
    pub fn zero(legs: usize) -> Self {
        TensorExpression { legs, terms: BTreeMap::new() }
    }

    pub fn one(legs: usize) -> Self {
        Self::monomial(vec![Word::unit(); legs], C::one())
    }

    pub fn monomial(words: Vec<Word>, c: C) -> Self {
        let mut out = Self::zero(words.len());
        out.add_term(words, c);
        out
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, words: &[Word]) -> C {
        self.terms.get(words).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, words: Vec<Word>, c: C) {
        assert_eq!(words.len(), self.legs, "leg count must be homogeneous");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
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
        let mut out = Self::zero(self.legs);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Swaps the two legs of a two-leg expression.
    pub fn transposed(&self) -> Self {
        assert_eq!(self.legs, 2, "transpose is defined on two legs");
        let mut out = Self::zero(2);
        for (w, c) in &self.terms {
            out.add_term(vec![w[1].clone(), w[0].clone()], c.clone());
        }
        out
    }

    /// Tensor product `self ⊗ rhs`.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.legs + rhs.legs);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut words = w1.clone();
                words.extend(w2.iter().cloned());
                out.add_term(words, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn from_uea(e: &UeaExpression<C>) -> Self {
        let mut out = Self::zero(1);
        for (w, c) in &e.terms {
            out.add_term(vec![w.clone()], c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for &TensorExpression<C> {
    type Output = TensorExpression<C>;
    fn add(self, rhs: &TensorExpression<C>) -> TensorExpression<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &TensorExpression<C> {
    type Output = TensorExpression<C>;
    fn sub(self, rhs: &TensorExpression<C>) -> TensorExpression<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> fmt::Debug for TensorExpression<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(ws, c)| {
                let legs: Vec<String> = ws.iter().map(|w| format!("{w:?}")).collect();
                format!("[{c:?}]*{}", legs.join("⊗"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
