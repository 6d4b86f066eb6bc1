use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{gcd, Polynomial};
use super::symbol::Symbol;
use super::ScalarError;

/// Quotient of two polynomials, always held in canonical form: coprime
/// numerator and denominator, denominator with leading coefficient one.
/// Equality of canonical forms is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        normalize(num, den)
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::from_polynomial(Polynomial::var(s))
    }

    pub fn var(name: &str) -> Self {
        Self::symbol(Symbol::new(name))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_polynomial(Polynomial::integer(n))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator in constant");
        Self::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(RationalFunction { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if rhs.is_constant() {
            let c = rhs.as_constant().expect("constant");
            return Ok(self.scale(&c.recip()));
        }
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn substitute(&self, symbol: &Symbol, value: &RationalFunction) -> Result<Self, ScalarError> {
        let num = subst_poly(&self.num, symbol, value)?;
        let den = subst_poly(&self.den, symbol, value)?;
        num.checked_div(&den).map_err(|_| ScalarError::DegenerateInput)
    }

    /// Exact substitution of the (binary, hence rational) values, then one
    /// rounding to double precision.
    pub fn evaluate(&self, assignment: &HashMap<Symbol, f64>) -> Result<f64, ScalarError> {
        let mut point = HashMap::new();
        for s in self.num.symbols().into_iter().chain(self.den.symbols()) {
            if point.contains_key(&s) {
                continue;
            }
            let v = assignment
                .get(&s)
                .ok_or_else(|| ScalarError::MissingSymbol(s.name().to_owned()))?;
            let r = BigRational::from_float(*v).ok_or(ScalarError::NonFinite)?;
            point.insert(s, r);
        }
        let missing = |s: Symbol| ScalarError::MissingSymbol(s.name().to_owned());
        let n = self.num.evaluate_exact(&point).map_err(missing)?;
        let d = self.den.evaluate_exact(&point).map_err(missing)?;
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        (n / d).to_f64().ok_or(ScalarError::NonFinite)
    }

    /// Convenience wrapper over [`evaluate`](Self::evaluate) keyed by symbol name.
    pub fn evaluate_named(&self, assignment: &[(&str, f64)]) -> Result<f64, ScalarError> {
        let map = assignment.iter().map(|(n, v)| (Symbol::new(n), *v)).collect();
        self.evaluate(&map)
    }

    pub fn symbols(&self) -> std::collections::BTreeSet<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s
    }
}

fn subst_poly(p: &Polynomial, symbol: &Symbol, value: &RationalFunction) -> Result<RationalFunction, ScalarError> {
    let mut out = RationalFunction::zero();
    for (d, c) in p.coefficients_in(symbol).into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &(&RationalFunction::from_polynomial(c) * &value.pow(d as i32)?);
    }
    Ok(out)
}

/// Brings `num / den` to canonical form.
pub fn normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction, ScalarError> {
    if den.is_zero() {
        return Err(ScalarError::DegenerateInput);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if let Some(c) = den.as_constant() {
        return Ok(RationalFunction { num: num.scale(&c.recip()), den: Polynomial::one() });
    }
    let g = gcd(&num, &den);
    let (num, den) = if g.is_one() {
        (num, den)
    } else {
        (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        )
    };
    let lc = den.leading_coefficient();
    if lc.is_one() {
        Ok(RationalFunction { num, den })
    } else {
        let inv = lc.recip();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_polynomial(&self.num + &rhs.num);
            }
            return normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_polynomial(&self.num * &rhs.num);
        }
        normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> RationalFunction {
        RationalFunction::var("lambda")
    }
    fn lamp() -> RationalFunction {
        RationalFunction::var("lambdaP")
    }
    fn kk() -> RationalFunction {
        RationalFunction::var("k")
    }
    fn one() -> RationalFunction {
        RationalFunction::one()
    }
    fn half() -> RationalFunction {
        RationalFunction::rational(1, 2)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let l2 = &lam() * &lam();
        let r = RationalFunction::new(
            (&l2 - &one()).numerator().clone(),
            (&lam() - &one()).numerator().clone(),
        )
        .unwrap();
        assert_eq!(r, &lam() + &one());
    }

    #[test]
    fn normalize_two_symbol_factor() {
        // (λ²λ'² − 1)/(λλ' − 1) = λλ' + 1; oracle: multiply back.
        let ll = &lam() * &lamp();
        let num = &(&ll * &ll) - &one();
        let den = &ll - &one();
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r, &ll + &one());
        assert_eq!(&r * &den, num);
    }

    #[test]
    fn already_canonical_is_fixed() {
        let mf = &(&half() * &kk()) * &(&one() - &(&lam() * &lam()));
        let again = RationalFunction::new(mf.numerator().clone(), mf.denominator().clone()).unwrap();
        assert_eq!(again, mf);
        assert!(mf.denominator().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(ScalarError::DegenerateInput)
        );
        assert_eq!(one().checked_div(&RationalFunction::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let r = &lam() + &one();
        assert_eq!(r.evaluate_named(&[("lambda", 0.5)]).unwrap(), 1.5);

        let mf = &(&half() * &kk()) * &(&one() - &(&lam() * &lam()));
        let v = mf.evaluate_named(&[("k", 1.0), ("lambda", (-0.2f64).exp())]).unwrap();
        assert!((v - 0.5 * (1.0 - 0.670_320_046_035_639)).abs() < 1e-12);
        assert!((v - 0.164_840_0).abs() < 1e-7);

        let pole = one().checked_div(&(&lam() - &one())).unwrap();
        assert_eq!(pole.evaluate_named(&[("lambda", 1.0)]), Err(ScalarError::Pole));
        assert!(matches!(
            pole.evaluate_named(&[("k", 1.0)]),
            Err(ScalarError::MissingSymbol(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&lam() + &(&one() - &lam()), one());
        let d = &one() - &(&lam() * &lam());
        assert_eq!(&one().checked_div(&d).unwrap() * &d, one());

        // λ'²·(k/2)(1−λ²) + (k/2)(1−λ'²) − (k/2)(1−λ²λ'²) = 0
        let khalf = &half() * &kk();
        let mf = &khalf * &(&one() - &(&lam() * &lam()));
        let mfp = &khalf * &(&one() - &(&lamp() * &lamp()));
        let total = &khalf * &(&one() - &(&(&lam() * &lam()) * &(&lamp() * &lamp())));
        let lhs = &(&(&lamp() * &lamp()) * &mf) + &mfp;
        assert!((&lhs - &total).is_zero());
    }

    #[test]
    fn substitute_to_constant() {
        let r = one().checked_div(&(&lam() + &one())).unwrap();
        let s = r.substitute(&Symbol::new("lambda"), &RationalFunction::integer(1)).unwrap();
        assert_eq!(s, half());
        let bad = one().checked_div(&(&lam() - &one())).unwrap();
        assert!(bad.substitute(&Symbol::new("lambda"), &one()).is_err());
    }
}
