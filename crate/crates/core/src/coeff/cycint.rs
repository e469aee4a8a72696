//! The coefficient ring Z[a]/(a^4 + 1).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `c0 + c1*a + c2*a^2 + c3*a^3` with `a^4 = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycInt {
    c: [BigInt; 4],
}

impl CycInt {
    pub fn new(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        CycInt {
            c: [c0.into(), c1.into(), c2.into(), c3.into()],
        }
    }

    pub fn from_coeffs(c: [BigInt; 4]) -> Self {
        CycInt { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(k: i64) -> Self {
        Self::new(k, 0, 0, 0)
    }

    /// `a^k` for any integer `k`; the powers of `a` have order 8.
    pub fn a_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut out = Self::zero();
        if k < 4 {
            out.c[k] = BigInt::one();
        } else {
            out.c[k - 4] = -BigInt::one();
        }
        out
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// If `self = ±a^k`, return `k` in `0..8`.
    pub fn as_signed_a_power(&self) -> Option<i64> {
        let nz: Vec<usize> = (0..4).filter(|&i| !self.c[i].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        let i = nz[0];
        let v = &self.c[i];
        if v.is_one() {
            Some(i as i64)
        } else if (-v).is_one() {
            Some(i as i64 + 4)
        } else {
            None
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt {
            c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k, &self.c[3] * k],
        }
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        CycInt {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        CycInt {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        let mut out = CycInt::zero();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let p = &self.c[i] * &rhs.c[j];
                let k = i + j;
                if k < 4 {
                    out.c[k] += p;
                } else {
                    out.c[k - 4] -= p;
                }
            }
        }
        out
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            let abs = v.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "a")?,
                (_, true) => write!(f, "a^{i}")?,
                (1, false) => write!(f, "{abs}a")?,
                (_, false) => write!(f, "{abs}a^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_times_a_cubed_is_minus_one() {
        let a = CycInt::a_pow(1);
        let a3 = CycInt::a_pow(3);
        assert_eq!(&a * &a3, CycInt::integer(-1));
    }

    #[test]
    fn a_powers_cycle_with_period_eight() {
        for k in -16..16 {
            assert_eq!(CycInt::a_pow(k), CycInt::a_pow(k + 8));
            assert_eq!(&CycInt::a_pow(k) * &CycInt::a_pow(-k), CycInt::one());
        }
        assert_eq!(CycInt::a_pow(4), CycInt::integer(-1));
    }

    #[test]
    fn signed_power_detection() {
        assert_eq!(CycInt::a_pow(6).as_signed_a_power(), Some(6));
        assert_eq!(CycInt::new(2, 0, 0, 0).as_signed_a_power(), None);
        assert_eq!(CycInt::new(1, 1, 0, 0).as_signed_a_power(), None);
    }

    #[test]
    fn display() {
        assert_eq!(CycInt::new(1, -1, 0, 3).to_string(), "1 - a + 3a^3");
        assert_eq!(CycInt::a_pow(6).to_string(), "-a^2");
    }
}
