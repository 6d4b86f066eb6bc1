//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in graded lexicographic order over alphabetically sorted
//! symbol names; the leading term is the largest one.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::symbol::Symbol;

/// Product of symbol powers. Exponents are positive, symbols sorted by name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(symbol: Symbol, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial { powers: vec![(symbol, exp)] }
    }

    pub fn from_powers(iter: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut map: BTreeMap<Symbol, u32> = BTreeMap::new();
        for (s, e) in iter {
            *map.entry(s).or_default() += e;
        }
        Monomial { powers: map.into_iter().filter(|(_, e)| *e > 0).collect() }
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, symbol: &Symbol) -> u32 {
        self.powers
            .iter()
            .find(|(s, _)| s == symbol)
            .map_or(0, |(_, e)| *e)
    }

    pub fn powers(&self) -> &[(Symbol, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, b) = (&self.powers[i], &other.powers[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Monomial { powers: out }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for (s, e) in &self.powers {
            let mut sub = 0;
            if j < other.powers.len() {
                match other.powers[j].0.cmp(s) {
                    Ordering::Less => return None,
                    Ordering::Equal => {
                        sub = other.powers[j].1;
                        j += 1;
                    }
                    Ordering::Greater => {}
                }
            }
            if sub > *e {
                return None;
            }
            if *e > sub {
                out.push((s.clone(), e - sub));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { powers: out })
    }

    /// Drops `symbol` from the monomial.
    fn without(&self, symbol: &Symbol) -> Monomial {
        Monomial {
            powers: self.powers.iter().filter(|(s, _)| s != symbol).cloned().collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lex: the alphabetically first symbol whose exponents differ decides.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.powers.get(i), other.powers.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if a.1 != b.1 {
                            return a.1.cmp(&b.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(symbol: Symbol) -> Self {
        Self::term(Monomial::var(symbol, 1), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.leading().map_or_else(BigRational::zero, |(_, c)| c.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn degree_in(&self, symbol: &Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(symbol)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, x)| (n.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `symbol`,
    /// indexed by degree.
    pub fn coefficients_in(&self, symbol: &Symbol) -> Vec<Polynomial> {
        let deg = self.degree_in(symbol) as usize;
        let mut out = vec![Polynomial::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(symbol) as usize].add_term(m.without(symbol), c.clone());
        }
        out
    }

    pub fn from_coefficients(symbol: &Symbol, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (d, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(symbol.clone(), d as u32);
            for (m, x) in &c.terms {
                out.add_term(m.mul(&shift), x.clone());
            }
        }
        out
    }

    /// Replaces `symbol` by `value` everywhere.
    pub fn substitute(&self, symbol: &Symbol, value: &Polynomial) -> Polynomial {
        let coeffs = self.coefficients_in(symbol);
        // Horner.
        let mut out = Polynomial::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    /// Exact evaluation. Symbols missing from `point` are reported by name.
    pub fn evaluate_exact(
        &self,
        point: &HashMap<Symbol, BigRational>,
    ) -> Result<BigRational, Symbol> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, e) in m.powers() {
                let v = point.get(s).ok_or_else(|| s.clone())?;
                t *= num_traits::pow(v.clone(), *e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{mag}*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Monic greatest common divisor over `Q[symbols]`.
///
/// Recursive content / primitive-part scheme: the alphabetically first symbol
/// is the main variable and coefficients live in the ring of the remaining
/// ones. A specialization of the other symbols first bounds the degree of the
/// answer (coprime inputs stop there); otherwise a subresultant
/// pseudo-remainder sequence runs, which needs exact divisions only.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a == b {
        return a.monic();
    }
    let mut vars = a.symbols();
    vars.extend(b.symbols());
    let main = vars.iter().next().cloned().expect("non-constant polynomial has a symbol");
    let da = a.degree_in(&main);
    let db = b.degree_in(&main);
    if da == 0 {
        return gcd(a, &content(b, &main));
    }
    if db == 0 {
        return gcd(&content(a, &main), b);
    }
    let ca = content(a, &main);
    let cb = content(b, &main);
    let g = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides polynomial");
    let pb = b.div_exact(&cb).expect("content divides polynomial");
    if image_degree_bound(&pa, &pb, &main, &vars) == Some(0) {
        return g;
    }
    let (mut r0, mut r1) = if da >= db { (pa, pb) } else { (pb, pa) };
    // Subresultant sequence: r_{i+1} = prem(r_{i-1}, r_i) / (s · h^δ).
    let mut s = Polynomial::one();
    let mut h = Polynomial::one();
    loop {
        let delta = r0.degree_in(&main) - r1.degree_in(&main);
        let r = pseudo_remainder(&r0, &r1, &main);
        if r.is_zero() {
            break;
        }
        if r.degree_in(&main) == 0 {
            return g;
        }
        let divisor = &s * &h.pow(delta);
        let next = r.div_exact(&divisor).expect("subresultant division is exact");
        r0 = std::mem::replace(&mut r1, next);
        s = leading_in(&r0, &main);
        h = if delta == 0 {
            h
        } else {
            s.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
    (&g * &primitive_part(&r1, &main)).monic()
}

fn leading_in(p: &Polynomial, main: &Symbol) -> Polynomial {
    let d = p.degree_in(main) as usize;
    p.coefficients_in(main).swap_remove(d)
}

/// Upper bound on the degree in `main` of `gcd(a, b)` from a univariate
/// image at an integer point where neither leading coefficient vanishes.
fn image_degree_bound(a: &Polynomial, b: &Polynomial, main: &Symbol, vars: &BTreeSet<Symbol>) -> Option<u32> {
    let others: Vec<&Symbol> = vars.iter().filter(|s| *s != main).collect();
    let (la, lb) = (leading_in(a, main), leading_in(b, main));
    for attempt in 0..4i64 {
        let point: HashMap<Symbol, BigRational> = others
            .iter()
            .enumerate()
            .map(|(i, s)| ((*s).clone(), BigRational::from_integer(BigInt::from(3 + 7 * attempt + 2 * i as i64))))
            .collect();
        let nonzero = |p: &Polynomial| p.evaluate_exact(&point).map(|v| !v.is_zero()).unwrap_or(false);
        if !(nonzero(&la) && nonzero(&lb)) {
            continue;
        }
        let image = |p: &Polynomial| {
            others.iter().fold(p.clone(), |acc, s| acc.substitute(s, &Polynomial::constant(point[*s].clone())))
        };
        return Some(univariate_gcd_degree(image(a), image(b), main));
    }
    None
}

fn univariate_gcd_degree(mut a: Polynomial, mut b: Polynomial, main: &Symbol) -> u32 {
    if a.degree_in(main) < b.degree_in(main) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_remainder(&a, &b, main).monic();
        a = std::mem::replace(&mut b, r);
    }
    a.degree_in(main)
}

/// Gcd of the coefficients of `p` as a polynomial in `main`.
fn content(p: &Polynomial, main: &Symbol) -> Polynomial {
    let mut acc = Polynomial::zero();
    for c in p.coefficients_in(main) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &Polynomial, main: &Symbol) -> Polynomial {
    let c = content(p, main);
    p.div_exact(&c).expect("content divides polynomial")
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, treating both as univariate in `main`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, main: &Symbol) -> Polynomial {
    let db = b.degree_in(main);
    let da = a.degree_in(main);
    if da < db {
        return a.clone();
    }
    let lc_b = leading_in(b, main);
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() {
        let dr = r.degree_in(main);
        if dr < db {
            break;
        }
        let lc_r = leading_in(&r, main);
        let shift = Polynomial::term(Monomial::var(main.clone(), dr - db), BigRational::one());
        r = &(&lc_b * &r) - &(&(&lc_r * &shift) * b);
        steps += 1;
    }
    &r * &lc_b.pow(da - db + 1 - steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(Symbol::new("x"))
    }
    fn y() -> Polynomial {
        Polynomial::var(Symbol::new("y"))
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::integer(n)
    }

    #[test]
    fn grlex_orders_by_degree_then_alphabet() {
        let xs = Symbol::new("x");
        let ys = Symbol::new("y");
        let x2 = Monomial::var(xs.clone(), 2);
        let xy = Monomial::from_powers([(xs.clone(), 1), (ys.clone(), 1)]);
        let y2 = Monomial::var(ys.clone(), 2);
        let y1 = Monomial::var(ys, 1);
        assert!(x2 > xy && xy > y2 && y2 > y1 && y1 > Monomial::one());
    }

    #[test]
    fn exact_division() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = p.div_exact(&(&x() - &y())).unwrap();
        assert_eq!(q, &x() + &y());
        assert!(p.div_exact(&(&x() + &c(1))).is_none());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = &(&x() * &y()) - &c(1);
        let a = &f * &(&x() + &c(2));
        let b = &f * &(&y() - &c(3));
        assert_eq!(gcd(&a, &b), f.monic());
        assert!(gcd(&(&x() + &c(1)), &(&x() - &c(1))).is_one());
    }

    #[test]
    fn gcd_without_coefficient_swell() {
        // Coprime pair whose primitive remainder sequence used to blow up.
        let v = |s: &str| Polynomial::var(Symbol::new(s));
        let q = |n: i64, d: i64| Polynomial::constant(BigRational::new(n.into(), d.into()));
        let (a, b, cc) = (v("a"), v("b"), v("c"));
        let n1 = &(&(&q(3, 4) * &(&(&a * &b) * &(&b * &cc))) - &(&q(1, 4) * &(&(&a * &a) * &b))) - &(&q(1, 2) * &cc);
        let d1 = &(&(&(&a * &a) * &(&b * &cc)) - &(&q(1, 4) * &(&b * &b))) - &(&q(1, 4) * &a);
        let n2 = &(&c(-4) * &(&b * &b)) - &c(4);
        let d2 = &(&(&a * &a) * &(&b * &b)) - &(&c(4) * &(&(&a * &a) * &b));
        let num = &(&n1 * &d2) + &(&n2 * &d1);
        let den = &d1 * &d2;
        assert!(gcd(&num, &den).is_one());
        let shared = &(&a * &cc) - &b;
        assert_eq!(gcd(&(&num * &shared), &(&den * &shared)), shared.monic());
    }

    #[test]
    fn substitute_and_evaluate() {
        let p = &(&x() * &x()) + &y();
        let s = p.substitute(&Symbol::new("x"), &(&y() + &c(1)));
        // (y+1)^2 + y
        assert_eq!(s, &(&(&y() * &y()) + &(&y() * &c(3))) + &c(1));
        let mut pt = HashMap::new();
        pt.insert(Symbol::new("y"), BigRational::from_integer(2.into()));
        assert_eq!(s.evaluate_exact(&pt).unwrap(), BigRational::from_integer(11.into()));
    }
}
