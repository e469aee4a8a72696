//! Exact coefficient arithmetic.
//!
//! Two tiers: the generic ring `Z[a, x, x^-1]` with `a^4 = -1`
//! ([`RingElement`]) and its specializations into cyclotomic fields
//! ([`FieldElement`]). Symbolic identities are checked in the first tier;
//! ranks are computed in the second.

mod cycint;
mod field;
mod laurent;
mod specialization;

pub use cycint::CycInt;
pub use field::{cyclotomic_polynomial, euler_phi, CyclotomicField, FieldElement};
pub use laurent::RingElement;
pub use specialization::{parse_rational, Specialization, XValue};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The q-number `[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}`, with `[0] = 0`
/// and `[-k] = -[k]`.
pub fn qnum<C: Scalar>(k: i64, q: &C, q_inv: &C) -> C {
    if k == 0 {
        return q.zero_like();
    }
    if k < 0 {
        return qnum(-k, q, q_inv).neg();
    }
    // q^{k-1} first, then step down by q^-2
    let mut term = q.one_like();
    for _ in 0..k - 1 {
        term = term.mul(q);
    }
    let q_inv2 = q_inv.mul(q_inv);
    let mut sum = q.zero_like();
    for _ in 0..k {
        sum = sum.add(&term);
        term = term.mul(&q_inv2);
    }
    sum
}

fn int_pow<C: Scalar>(base: &C, inv: &C, k: i64) -> C {
    let b = if k < 0 { inv } else { base };
    let mut out = base.one_like();
    for _ in 0..k.unsigned_abs() {
        out = out.mul(b);
    }
    out
}

/// The parameter bundle of the tensor-space representations:
/// `gamma = q^{m-1} - q^{1-m}`, `delta = q^m - q^{-m}`, `r = a^2 q^m`,
/// `s = a^5 x`, `t = a^3 x`. Inverses of the units are carried alongside so
/// that the same bundle works over rings where division is partial.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamBundle<C> {
    pub m: i64,
    pub x: C,
    pub x_inv: C,
    pub q: C,
    pub q_inv: C,
    pub gamma: C,
    pub delta: C,
    pub r: C,
    pub r_inv: C,
    pub s: C,
    pub s_inv: C,
    pub t: C,
    pub t_inv: C,
    /// `a^2`.
    pub a2: C,
    /// `a^-2 = -a^2`.
    pub a2_inv: C,
    /// `[2]_q`.
    pub q2: C,
}

impl<C: Scalar> ParamBundle<C> {
    /// Build the bundle from images of `a`, `a^-1`, `x`, `x^-1`.
    pub fn from_generators(m: i64, a: &C, a_inv: &C, x: &C, x_inv: &C) -> Self {
        let q = x.mul(x);
        let q_inv = x_inv.mul(x_inv);
        let a2 = a.mul(a);
        let a2_inv = a_inv.mul(a_inv);
        let qm = int_pow(&q, &q_inv, m);
        let qm_inv = int_pow(&q, &q_inv, -m);
        let gamma = int_pow(&q, &q_inv, m - 1).sub(&int_pow(&q, &q_inv, 1 - m));
        let delta = qm.sub(&qm_inv);
        let r = a2.mul(&qm);
        let r_inv = a2_inv.mul(&qm_inv);
        let s = int_pow(a, a_inv, 5).mul(x);
        let s_inv = int_pow(a, a_inv, -5).mul(x_inv);
        let t = int_pow(a, a_inv, 3).mul(x);
        let t_inv = int_pow(a, a_inv, -3).mul(x_inv);
        let q2 = qnum(2, &q, &q_inv);
        ParamBundle {
            m,
            x: x.clone(),
            x_inv: x_inv.clone(),
            q,
            q_inv,
            gamma,
            delta,
            r,
            r_inv,
            s,
            s_inv,
            t,
            t_inv,
            a2,
            a2_inv,
            q2,
        }
    }

    pub fn qnum(&self, k: i64) -> C {
        qnum(k, &self.q, &self.q_inv)
    }

    /// The defining identities of the bundle, each as `(name, holds)`.
    pub fn identities(&self) -> Vec<(&'static str, bool)> {
        let st = self.s.mul(&self.t);
        let two_s = self.s.add(&self.s_inv);
        let two_t = self.t.add(&self.t_inv);
        let st_over_r = st.mul(&self.r_inv);
        let r_over_st = self.r.mul(&self.s_inv).mul(&self.t_inv);
        vec![
            ("s*t = q", st == self.q),
            ("[2]_s*[2]_t = [2]_q", two_s.mul(&two_t) == self.q2),
            ("r + r^-1 = a^2*delta", self.r.add(&self.r_inv) == self.a2.mul(&self.delta)),
            ("st/r + r/st = a^2*gamma", st_over_r.add(&r_over_st) == self.a2.mul(&self.gamma)),
            ("a^2 + a^-2 = 0", self.a2.add(&self.a2_inv).is_zero()),
            ("r*r^-1 = 1", self.r.mul(&self.r_inv).is_one()),
            ("s*s^-1 = 1", self.s.mul(&self.s_inv).is_one()),
            ("t*t^-1 = 1", self.t.mul(&self.t_inv).is_one()),
        ]
    }
}

impl ParamBundle<RingElement> {
    pub fn generic(m: i64) -> Self {
        Self::from_generators(
            m,
            &RingElement::a_pow(1),
            &RingElement::a_pow(-1),
            &RingElement::x_pow(1),
            &RingElement::x_pow(-1),
        )
    }

    /// Entrywise image under `spec`; no validity check.
    pub fn specialize_unchecked(&self, spec: &Specialization) -> ParamBundle<FieldElement> {
        let ev = |e: &RingElement| spec.eval(e);
        ParamBundle {
            m: self.m,
            x: ev(&self.x),
            x_inv: ev(&self.x_inv),
            q: ev(&self.q),
            q_inv: ev(&self.q_inv),
            gamma: ev(&self.gamma),
            delta: ev(&self.delta),
            r: ev(&self.r),
            r_inv: ev(&self.r_inv),
            s: ev(&self.s),
            s_inv: ev(&self.s_inv),
            t: ev(&self.t),
            t_inv: ev(&self.t_inv),
            a2: ev(&self.a2),
            a2_inv: ev(&self.a2_inv),
            q2: ev(&self.q2),
        }
    }
}

impl ParamBundle<FieldElement> {
    /// Bundle at a specialization in the quasihereditary regime.
    pub fn specialized(spec: &Specialization) -> Result<Self> {
        spec.validate()?;
        Ok(Self::specialized_unchecked(spec))
    }

    pub fn specialized_unchecked(spec: &Specialization) -> Self {
        let k = spec.field();
        let x = spec.x_value();
        let x_inv = x.inverse().expect("x is a unit");
        Self::from_generators(spec.m(), &k.a(), &k.a().inverse().expect("unit"), &x, &x_inv)
    }

    /// `1 / [2]_q`, or an error when `[2]_q = 0`.
    pub fn q2_inverse(&self) -> Result<FieldElement> {
        self.q2
            .inverse()
            .map_err(|_| Error::DegenerateParameter("[2]_q = 0".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn qnum_small_values() {
        let q = RingElement::q_pow(1);
        let qi = RingElement::q_pow(-1);
        assert_eq!(qnum(2, &q, &qi), &q + &qi);
        assert_eq!(qnum(1, &q, &qi), RingElement::one());
        assert_eq!(qnum(0, &q, &qi), RingElement::zero());
        assert_eq!(qnum(-3, &q, &qi), -&qnum(3, &q, &qi));
    }

    #[test]
    fn qnum_three_at_two_is_twenty_one_quarters() {
        let k = CyclotomicField::new(8).unwrap();
        let two = k.integer(2);
        let half = two.inverse().unwrap();
        assert_eq!(
            qnum(3, &two, &half),
            k.rational(BigRational::new(21.into(), 4.into()))
        );
    }

    #[test]
    fn generic_bundle_for_m_two() {
        let p = ParamBundle::generic(2);
        assert_eq!(p.gamma, &RingElement::q_pow(1) - &RingElement::q_pow(-1));
        assert_eq!(p.delta, &RingElement::q_pow(2) - &RingElement::q_pow(-2));
        assert_eq!(&p.s * &p.t, p.q);
    }

    #[test]
    fn m_one_has_vanishing_gamma() {
        let p = ParamBundle::generic(1);
        assert!(p.gamma.is_zero());
        assert_eq!(p.delta, &RingElement::q_pow(1) - &RingElement::q_pow(-1));
    }

    #[test]
    fn bundle_identities_hold_generically() {
        for m in 1..=5 {
            let p = ParamBundle::generic(m);
            for (name, ok) in p.identities() {
                assert!(ok, "m={m}: {name}");
            }
        }
    }

    #[test]
    fn specialized_bundle_rejects_degenerate_points() {
        let spec = Specialization::new(8, XValue::Root(1), 2).unwrap();
        assert!(matches!(
            ParamBundle::specialized(&spec),
            Err(Error::InvalidSpecialization(_))
        ));
        let p = ParamBundle::specialized_unchecked(&spec);
        assert!(p.q2.is_zero());
        assert!(p.q2_inverse().is_err());
    }

    #[test]
    fn specialized_bundle_matches_entrywise_specialization() {
        let spec = Specialization::rational(BigRational::new(7.into(), 3.into()), 3).unwrap();
        let direct = ParamBundle::specialized(&spec).unwrap();
        let via = ParamBundle::generic(3).specialize_unchecked(&spec);
        assert_eq!(direct, via);
        for (name, ok) in direct.identities() {
            assert!(ok, "{name}");
        }
    }
}
