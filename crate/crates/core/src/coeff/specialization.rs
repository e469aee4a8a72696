use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{qnum, CyclotomicField, FieldElement, RingElement};
use crate::error::{Error, Result};

/// Value assigned to the generic parameter `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XValue {
    Rational(BigRational),
    /// `zeta_M^k`.
    Root(i64),
}

/// A ring homomorphism `Z[a, x, x^-1] -> Q(zeta_M)` together with the blob
/// parameter `m`. `a` always maps to `zeta_M^{M/8}`.
#[derive(Clone)]
pub struct Specialization {
    field: Arc<CyclotomicField>,
    x: XValue,
    m: i64,
}

impl Specialization {
    pub fn rational(x: BigRational, m: i64) -> Result<Self> {
        Self::new(8, XValue::Rational(x), m)
    }

    pub fn new(conductor: u32, x: XValue, m: i64) -> Result<Self> {
        if let XValue::Rational(v) = &x {
            if v.is_zero() {
                return Err(Error::InvalidSpecialization("x must be invertible".into()));
            }
        }
        Ok(Specialization {
            field: CyclotomicField::new(conductor)?,
            x,
            m,
        })
    }

    /// Rational `x = p/q'` with `1 <= p, q' <= 50` drawn from `rng`,
    /// resampled until the point is valid.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpecialization("[m]_q degenerate for m = 0".into()));
        }
        for _ in 0..1000 {
            let p: i64 = rng.gen_range(1..=50);
            let d: i64 = rng.gen_range(1..=50);
            let spec = Self::rational(BigRational::new(p.into(), d.into()), m)?;
            if spec.is_valid() {
                return Ok(spec);
            }
        }
        Err(Error::InvalidSpecialization(format!("no valid rational point found for m = {m}")))
    }

    pub fn with_m(&self, m: i64) -> Self {
        Specialization {
            field: Arc::clone(&self.field),
            x: self.x.clone(),
            m,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn x(&self) -> &XValue {
        &self.x
    }

    pub fn x_value(&self) -> FieldElement {
        match &self.x {
            XValue::Rational(v) => self.field.rational(v.clone()),
            XValue::Root(k) => self.field.zeta_pow(*k),
        }
    }

    pub fn q_value(&self) -> FieldElement {
        let x = self.x_value();
        &x * &x
    }

    /// `[2]_q != 0` and `[m]_q != 0`.
    pub fn is_valid(&self) -> bool {
        self.degeneracy().is_none()
    }

    /// Reason the specialization leaves the quasihereditary regime, if it does.
    pub fn degeneracy(&self) -> Option<String> {
        let q = self.q_value();
        let q_inv = q.inverse().expect("q is a unit");
        if qnum(2, &q, &q_inv).is_zero() {
            return Some("[2]_q degenerate".into());
        }
        if qnum(self.m, &q, &q_inv).is_zero() {
            return Some("[m]_q degenerate".into());
        }
        None
    }

    pub fn validate(&self) -> Result<()> {
        match self.degeneracy() {
            None => Ok(()),
            Some(why) => Err(Error::InvalidSpecialization(format!("{self}: {why}"))),
        }
    }

    /// Evaluate a generic ring element at this point.
    pub fn eval(&self, e: &RingElement) -> FieldElement {
        let a = self.field.a();
        let x = self.x_value();
        let x_inv = x.inverse().expect("x is a unit");
        let mut out = self.field.zero();
        for (exp, c) in e.terms() {
            let mut coeff = self.field.zero();
            let mut a_pow = self.field.one();
            for ci in c.coeffs() {
                if !ci.is_zero() {
                    coeff = &coeff + &a_pow.scale(&BigRational::from_integer(ci.clone()));
                }
                a_pow = &a_pow * &a;
            }
            let base = if exp < 0 { &x_inv } else { &x };
            let xp = base.pow(exp.abs()).expect("positive power");
            out = &out + &(&coeff * &xp);
        }
        out
    }
}

impl PartialEq for Specialization {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.x == other.x && self.m == other.m
    }
}

impl fmt::Debug for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.x {
            XValue::Rational(v) => write!(f, "x={v}")?,
            XValue::Root(k) => write!(f, "x=zeta_{}^{k}", self.conductor())?,
        }
        write!(f, ",M={},m={}", self.conductor(), self.m)
    }
}

/// Parse `p/q` or `p` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum XRepr {
    Rational(String),
    Root { root: [i64; 2] },
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    #[serde(rename = "M")]
    conductor: u32,
    x: XRepr,
    m: i64,
}

impl Serialize for Specialization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let x = match &self.x {
            XValue::Rational(v) => XRepr::Rational(format_rational(v)),
            XValue::Root(k) => XRepr::Root {
                root: [self.conductor() as i64, *k],
            },
        };
        SpecRepr {
            conductor: self.conductor(),
            x,
            m: self.m,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Specialization {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SpecRepr::deserialize(d)?;
        let x = match repr.x {
            XRepr::Rational(s) => XValue::Rational(parse_rational(&s).map_err(D::Error::custom)?),
            XRepr::Root { root: [m, k] } => {
                if m != repr.conductor as i64 {
                    return Err(D::Error::custom(format!(
                        "root conductor {m} differs from M={}",
                        repr.conductor
                    )));
                }
                XValue::Root(k)
            }
        };
        Specialization::new(repr.conductor, x, repr.m).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingElement;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn q_plus_q_inverse_at_x_one_is_two() {
        let spec = Specialization::rational(rat(1, 1), 2).unwrap();
        let e = &RingElement::q_pow(1) + &RingElement::q_pow(-1);
        assert_eq!(spec.eval(&e), spec.field().integer(2));
    }

    #[test]
    fn a_squared_squares_to_minus_one() {
        let spec = Specialization::rational(rat(3, 5), 2).unwrap();
        let a2 = spec.eval(&RingElement::a_pow(2));
        assert_eq!(&a2 * &a2, spec.field().integer(-1));
    }

    #[test]
    fn delta_at_x_three() {
        // q = 9, delta = q^2 - q^-2
        let spec = Specialization::rational(rat(3, 1), 2).unwrap();
        let delta = &RingElement::q_pow(2) - &RingElement::q_pow(-2);
        assert_eq!(spec.eval(&delta), spec.field().rational(rat(81, 1) - rat(1, 81)));
    }

    #[test]
    fn json_round_trip_and_schema() {
        let spec = Specialization::rational(rat(5, 3), 2).unwrap();
        let js = serde_json::to_string(&spec).unwrap();
        assert_eq!(js, r#"{"M":8,"x":"5/3","m":2}"#);
        let back: Specialization = serde_json::from_str(&js).unwrap();
        assert_eq!(back, spec);

        let root: Specialization = serde_json::from_str(r#"{"M":24,"x":{"root":[24,1]},"m":2}"#).unwrap();
        assert_eq!(root.x(), &XValue::Root(1));
        assert!(serde_json::from_str::<Specialization>(r#"{"M":24,"x":{"root":[16,1]},"m":2}"#).is_err());
        assert!(serde_json::from_str::<Specialization>(r#"{"M":12,"x":"1","m":2}"#).is_err());
    }

    #[test]
    fn validity_flags() {
        // x = zeta_8 gives q = i and [2]_q = 0
        let spec = Specialization::new(8, XValue::Root(1), 2).unwrap();
        assert_eq!(spec.degeneracy().as_deref(), Some("[2]_q degenerate"));
        // q = zeta_24^2 is a primitive 12th root: [6]_q = 0 while [2]_q != 0
        let spec = Specialization::new(24, XValue::Root(1), 6).unwrap();
        assert_eq!(spec.degeneracy().as_deref(), Some("[m]_q degenerate"));
        assert!(spec.with_m(2).is_valid());
        assert!(!Specialization::rational(rat(2, 1), 0).unwrap().is_valid());
        assert!(Specialization::rational(rat(0, 1), 2).is_err());
    }

    #[test]
    fn random_points_are_valid_and_reproducible() {
        use rand::SeedableRng;
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in 1..=4 {
            let x = Specialization::random(&mut a, m).unwrap();
            assert!(x.is_valid());
            assert_eq!(x, Specialization::random(&mut b, m).unwrap());
        }
        assert!(Specialization::random(&mut a, 0).is_err());
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("5/3").unwrap(), rat(5, 3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
