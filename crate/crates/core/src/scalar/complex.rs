use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::RationalFunction;
use super::symbol::Symbol;
use super::ScalarError;

/// Coefficient ring shared by the operator algebras.
///
/// Two backends implement it: [`ExactComplex`] (rational functions, exact
/// zero test) and [`Complex64`] (double precision). A single expression is
/// generic over one backend, so backends cannot be mixed within it.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn imaginary_unit() -> Self;
    fn from_i64(n: i64) -> Self;
}

impl Coefficient for Complex64 {
    fn imaginary_unit() -> Self {
        Complex64::i()
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

/// `re + i·im` with rational-function parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: RationalFunction,
    pub im: RationalFunction,
}

impl ExactComplex {
    pub fn new(re: RationalFunction, im: RationalFunction) -> Self {
        ExactComplex { re, im }
    }

    pub fn real(re: RationalFunction) -> Self {
        ExactComplex { re, im: RationalFunction::zero() }
    }

    pub fn imag(im: RationalFunction) -> Self {
        ExactComplex { re: RationalFunction::zero(), im }
    }

    pub fn conj(&self) -> Self {
        ExactComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, r: &RationalFunction) -> Self {
        ExactComplex { re: &self.re * r, im: &self.im * r }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv = norm.inv()?;
        Ok(ExactComplex { re: &self.re * &inv, im: -&(&self.im * &inv) })
    }

    pub fn substitute(&self, symbol: &Symbol, value: &RationalFunction) -> Result<Self, ScalarError> {
        Ok(ExactComplex {
            re: self.re.substitute(symbol, value)?,
            im: self.im.substitute(symbol, value)?,
        })
    }

    pub fn evaluate(&self, assignment: &HashMap<Symbol, f64>) -> Result<Complex64, ScalarError> {
        Ok(Complex64::new(self.re.evaluate(assignment)?, self.im.evaluate(assignment)?))
    }
}

impl From<RationalFunction> for ExactComplex {
    fn from(re: RationalFunction) -> Self {
        Self::real(re)
    }
}

impl Zero for ExactComplex {
    fn zero() -> Self {
        Self::real(RationalFunction::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ExactComplex {
    fn one() -> Self {
        Self::real(RationalFunction::one())
    }
}

impl Add for ExactComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExactComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for ExactComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ExactComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for ExactComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // Purely real or purely imaginary factors are the common case.
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        ExactComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for ExactComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ExactComplex { re: -self.re, im: -self.im }
    }
}

impl Coefficient for ExactComplex {
    fn imaginary_unit() -> Self {
        Self::imag(RationalFunction::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::real(RationalFunction::integer(n))
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{:?}", self.re),
            (true, false) => write!(f, "i*({:?})", self.im),
            (false, false) => write!(f, "({:?}) + i*({:?})", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = ExactComplex::imaginary_unit();
        assert_eq!(i.clone() * i, -ExactComplex::one());
    }

    #[test]
    fn inverse_of_symbolic_complex() {
        let z = ExactComplex::new(RationalFunction::var("k"), RationalFunction::integer(1));
        let w = z.inv().unwrap();
        assert_eq!(z * w, ExactComplex::one());
    }
}
