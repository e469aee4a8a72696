//! Cyclotomic number fields `Q(zeta_M)` with `8 | M`, in the power basis of
//! `zeta_M` reduced modulo the `M`-th cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Integer polynomial coefficients, lowest degree first.
fn int_poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `m`-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = int_poly_divexact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count()
}

/// `Q(zeta_M)`, shared between elements through an `Arc`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    /// Monic cyclotomic polynomial, lowest degree first, length `degree + 1`.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Result<Arc<Self>> {
        if conductor == 0 || !conductor.is_multiple_of(8) {
            return Err(Error::InvalidSpecialization(format!(
                "conductor {conductor} is not a positive multiple of 8"
            )));
        }
        Ok(Arc::new(CyclotomicField {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.rational(BigRational::one())
    }

    pub fn integer(self: &Arc<Self>, k: i64) -> FieldElement {
        self.rational(BigRational::from_integer(k.into()))
    }

    pub fn rational(self: &Arc<Self>, v: BigRational) -> FieldElement {
        let mut out = self.zero();
        out.coeffs[0] = v;
        out
    }

    /// `zeta_M^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> FieldElement {
        let k = k.rem_euclid(self.conductor as i64) as usize;
        let mut raw = vec![BigRational::zero(); k.max(self.degree()) + 1];
        raw[k] = BigRational::one();
        FieldElement {
            field: Arc::clone(self),
            coeffs: self.reduce(raw),
        }
    }

    /// The image of `a`, a primitive 8th root of unity.
    pub fn a(self: &Arc<Self>) -> FieldElement {
        self.zeta_pow((self.conductor / 8) as i64)
    }

    /// A nonzero element with small random rational coordinates.
    pub fn random_nonzero<R: rand::Rng + ?Sized>(self: &Arc<Self>, rng: &mut R) -> FieldElement {
        loop {
            let coeffs = (0..self.degree())
                .map(|_| BigRational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=5).into()))
                .collect();
            let x = self.from_coeffs(coeffs);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> FieldElement {
        let mut raw = coeffs;
        if raw.len() < self.degree() {
            raw.resize(self.degree(), BigRational::zero());
        }
        FieldElement {
            field: Arc::clone(self),
            coeffs: self.reduce(raw),
        }
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for k in (d..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                let m = &self.modulus[i];
                if !m.is_zero() {
                    raw[k - d + i] -= &c * BigRational::from_integer(m.clone());
                }
            }
        }
        raw.truncate(d);
        raw
    }
}

/// An element of `Q(zeta_M)`.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Power-basis coordinates, length `phi(M)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(v)` when the element is the rational number `v`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixing elements of different cyclotomic fields"
        );
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm over `Q[z]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.rational(r.recip()));
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = ext_gcd(trim(self.coeffs.clone()), modulus);
        // g is a nonzero constant because the modulus is irreducible
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        Ok(self.field.from_coeffs(s.iter().map(|c| c * &ginv).collect()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = self.field.one();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(out)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // a - q*b
    let len = a.len().max(q.len() + b.len().max(1) - 1);
    let mut out = vec![BigRational::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, qi) in q.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

/// Returns `(g, s)` with `s*a = g (mod b)`.
fn ext_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![BigRational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        let d = self.field.degree();
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(raw),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Scalar for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
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
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "({abs})z^{i}")?,
            }
        }
        write!(f, " [Q(z_{})]", self.field.conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), big(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(8), big(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), big(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(24), big(&[1, 0, 0, 0, -1, 0, 0, 0, 1]));
        for m in [8u32, 16, 24, 40, 48] {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m));
        }
    }

    #[test]
    fn conductor_must_be_multiple_of_eight() {
        assert!(CyclotomicField::new(12).is_err());
        assert!(CyclotomicField::new(0).is_err());
        assert!(CyclotomicField::new(24).is_ok());
    }

    #[test]
    fn image_of_a_has_fourth_power_minus_one() {
        for m in [8u32, 16, 24, 40] {
            let k = CyclotomicField::new(m).unwrap();
            let a = k.a();
            assert_eq!(a.pow(4).unwrap(), k.integer(-1));
            assert_eq!(&a.pow(2).unwrap() + &a.pow(-2).unwrap(), k.zero());
        }
    }

    #[test]
    fn inverses_in_q_zeta_24() {
        let k = CyclotomicField::new(24).unwrap();
        let elems = [
            &k.zeta_pow(1) + &k.integer(3),
            &(&k.zeta_pow(5) - &k.zeta_pow(2)) + &k.rational(BigRational::new(2.into(), 7.into())),
            k.zeta_pow(7),
        ];
        for e in elems {
            let inv = e.inverse().unwrap();
            assert_eq!(&e * &inv, k.one());
        }
        assert_eq!(k.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta_has_order_conductor() {
        let k = CyclotomicField::new(16).unwrap();
        assert_eq!(k.zeta_pow(16), k.one());
        assert_eq!(k.zeta_pow(8), k.integer(-1));
        assert_eq!(&k.zeta_pow(3) * &k.zeta_pow(-3), k.one());
    }
}
