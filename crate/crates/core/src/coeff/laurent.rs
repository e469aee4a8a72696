//! Laurent polynomials in `x` over `Z[a]/(a^4 + 1)`: the generic ground ring
//! in which every representation matrix is written down.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::CycInt;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finite sum of `c_j x^j` with `c_j` in `Z[a]/(a^4+1)`. No zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    terms: BTreeMap<i64, CycInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycInt::one())
    }

    pub fn integer(k: i64) -> Self {
        Self::constant(CycInt::integer(k))
    }

    pub fn constant(c: CycInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        RingElement { terms }
    }

    /// `x^k`.
    pub fn x_pow(k: i64) -> Self {
        Self::monomial(CycInt::one(), k)
    }

    /// `a^k`.
    pub fn a_pow(k: i64) -> Self {
        Self::constant(CycInt::a_pow(k))
    }

    /// `q^k = x^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::x_pow(2 * k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, CycInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> CycInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: i64, c: &CycInt) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&exp) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, sum);
        }
    }

    /// If `self = ±a^i x^j`, return `(i mod 8, j)`.
    pub fn as_unit_monomial(&self) -> Option<(i64, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        c.as_signed_a_power().map(|k| (k, *e))
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit_monomial().is_some()
    }

    /// Inverse of a unit `±a^i x^j`; every other element is rejected.
    pub fn inverse(&self) -> Result<Self> {
        match self.as_unit_monomial() {
            Some((k, e)) => Ok(Self::monomial(CycInt::a_pow(-k), -e)),
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::NotAUnit(self.to_string())),
        }
    }

    /// Exact quotient `self / unit`.
    pub fn div_unit(&self, unit: &Self) -> Result<Self> {
        Ok(self * &unit.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Scalar for RingElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        RingElement::zero()
    }
    fn one_like(&self) -> Self {
        RingElement::one()
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_paren = cs.contains(' ');
            match (*e, cs.as_str()) {
                (0, _) => write!(f, "{cs}")?,
                (_, "1") => write!(f, "x^{e}")?,
                (_, "-1") => write!(f, "-x^{e}")?,
                _ if needs_paren => write!(f, "({cs})x^{e}")?,
                _ => write!(f, "{cs}x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_squared_x_times_a_squared_x_inverse_is_minus_one() {
        let lhs = &(&RingElement::a_pow(2) * &RingElement::x_pow(1))
            * &(&RingElement::a_pow(2) * &RingElement::x_pow(-1));
        assert_eq!(lhs, RingElement::integer(-1));
    }

    #[test]
    fn additive_identity() {
        let e = &RingElement::a_pow(3) + &RingElement::x_pow(-5);
        assert_eq!(&e + &RingElement::zero(), e);
    }

    #[test]
    fn cancellation_removes_terms() {
        let e = &RingElement::x_pow(2) - &RingElement::x_pow(2);
        assert!(e.is_zero());
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn only_monomial_units_invert() {
        let u = &RingElement::a_pow(5) * &RingElement::x_pow(3);
        assert_eq!(&u * &u.inverse().unwrap(), RingElement::one());
        let non_unit = &RingElement::x_pow(1) + &RingElement::x_pow(-1);
        assert!(matches!(non_unit.inverse(), Err(Error::NotAUnit(_))));
        assert_eq!(RingElement::zero().inverse(), Err(Error::DivisionByZero));
        assert!(matches!(
            RingElement::integer(2).inverse(),
            Err(Error::NotAUnit(_))
        ));
    }
}
