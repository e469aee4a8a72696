//! Fraction-free row reduction over `Z[zeta_M]`.
//!
//! Vectors over `Q(zeta_M)` are cleared of denominators and reduced with
//! integral cross-multiplication modulo the cyclotomic polynomial. Every
//! pivot row is rescaled so that its leading entry is a rational integer
//! (multiplying by the product of the other Galois conjugates), and each row
//! has its integer content removed after every step, which keeps coefficient
//! growth in check.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SparseVector;
use crate::coeff::{CyclotomicField, FieldElement};
use crate::error::{Error, Result};

/// Element of `Z[zeta_M]` as `degree` integer coefficients, lowest first.
type ZElem = Vec<BigInt>;
/// Sparse row, strictly increasing columns, no zero entries.
type Row = Vec<(usize, ZElem)>;

struct IntRing {
    modulus: Vec<BigInt>,
    degree: usize,
    /// Exponents `k` of the nontrivial automorphisms `zeta -> zeta^k`.
    galois: Vec<usize>,
}

impl IntRing {
    fn new(field: &CyclotomicField) -> Self {
        let m = field.conductor();
        IntRing {
            modulus: field.modulus().to_vec(),
            degree: field.degree(),
            galois: (2..m)
                .filter(|k| k.gcd(&m) == 1)
                .map(|k| k as usize)
                .collect(),
        }
    }

    fn reduce(&self, mut raw: Vec<BigInt>) -> ZElem {
        let d = self.degree;
        for k in (d..raw.len()).rev() {
            let c = std::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                if !self.modulus[i].is_zero() {
                    raw[k - d + i] -= &c * &self.modulus[i];
                }
            }
        }
        raw.truncate(d);
        raw.resize(d, BigInt::zero());
        raw
    }

    fn mul(&self, a: &ZElem, b: &ZElem) -> ZElem {
        let mut raw = vec![BigInt::zero(); 2 * self.degree];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(raw)
    }

    fn conjugate(&self, a: &ZElem, k: usize) -> ZElem {
        let mut raw = vec![BigInt::zero(); (self.degree - 1) * k + 1];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                raw[i * k] += c;
            }
        }
        self.reduce(raw)
    }

    /// `prod_{sigma != id} sigma(a)`, so that `a * cofactor(a)` is the norm.
    fn cofactor(&self, a: &ZElem) -> ZElem {
        let mut out = self.constant(BigInt::one());
        for &k in &self.galois {
            out = self.mul(&out, &self.conjugate(a, k));
        }
        out
    }

    fn constant(&self, c: BigInt) -> ZElem {
        let mut v = vec![BigInt::zero(); self.degree];
        v[0] = c;
        v
    }
}

fn elem_is_zero(a: &ZElem) -> bool {
    a.iter().all(Zero::is_zero)
}

/// The integer `c` if `a = c`.
fn as_integer(a: &ZElem) -> Option<&BigInt> {
    a[1..].iter().all(Zero::is_zero).then_some(&a[0])
}

fn content(row: &Row) -> BigInt {
    let mut g = BigInt::zero();
    for (_, e) in row {
        for c in e {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
    }
    g
}

fn remove_content(row: &mut Row) {
    let g = content(row);
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, e) in row.iter_mut() {
        for c in e.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `alpha * a - beta * b` for integer `alpha` and ring element `beta`.
fn combine(ring: &IntRing, alpha: &BigInt, a: &Row, beta: &ZElem, b: &Row) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let scale_a = |e: &ZElem| -> ZElem { e.iter().map(|c| alpha * c).collect() };
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0);
        let cb = b.get(j).map(|x| x.0);
        let (col, val) = match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let p = ring.mul(beta, &b[j].1);
                let v: ZElem = scale_a(&a[i].1).into_iter().zip(p).map(|(s, t)| s - t).collect();
                i += 1;
                j += 1;
                (x, v)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, scale_a(&a[i - 1].1))
            }
            (Some(x), None) => {
                i += 1;
                (x, scale_a(&a[i - 1].1))
            }
            (_, Some(y)) => {
                let p = ring.mul(beta, &b[j].1);
                j += 1;
                (y, p.into_iter().map(|c| -c).collect())
            }
            (None, None) => unreachable!(),
        };
        if !elem_is_zero(&val) {
            out.push((col, val));
        }
    }
    out
}

/// Incremental echelon form of a set of vectors in `Q(zeta_M)^dim`.
pub struct Echelon {
    field: Arc<CyclotomicField>,
    ring: IntRing,
    dim: usize,
    /// Pivot rows by leading column; each leading entry is a positive integer.
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new(field: &Arc<CyclotomicField>, dim: usize) -> Self {
        Echelon {
            field: Arc::clone(field),
            ring: IntRing::new(field),
            dim,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn to_row(&self, v: &SparseVector<FieldElement>) -> Result<Row> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let mut den = BigInt::one();
        for (_, c) in v.iter() {
            if c.conductor() != self.field.conductor() {
                return Err(Error::FieldMismatch(self.field.conductor(), c.conductor()));
            }
            for q in c.coeffs() {
                den = den.lcm(q.denom());
            }
        }
        let mut row: Row = v
            .iter()
            .map(|(i, c)| {
                let e = c
                    .coeffs()
                    .iter()
                    .map(|q| (q * BigRational::from_integer(den.clone())).to_integer())
                    .collect();
                (i, e)
            })
            .collect();
        remove_content(&mut row);
        Ok(row)
    }

    /// Rescale so the leading entry is a positive integer.
    fn normalize(&self, mut row: Row) -> Row {
        if as_integer(&row[0].1).is_none() {
            let cof = self.ring.cofactor(&row[0].1);
            for (_, e) in row.iter_mut() {
                *e = self.ring.mul(e, &cof);
            }
        }
        if row[0].1[0].is_negative() {
            for (_, e) in row.iter_mut() {
                for c in e.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        remove_content(&mut row);
        row
    }

    /// Cancel the leading entry of `row` against `pivot`.
    fn eliminate(&self, row: &Row, pivot: &Row) -> Row {
        let lead = as_integer(&pivot[0].1).expect("normalized pivot");
        let coeff = &row[0].1;
        let g = coeff.iter().fold(lead.clone(), |g, c| g.gcd(c));
        let alpha = lead / &g;
        let beta: ZElem = coeff.iter().map(|c| c / &g).collect();
        let mut out = combine(&self.ring, &alpha, row, &beta, pivot);
        remove_content(&mut out);
        out
    }

    /// Add `v` to the spanning set; returns whether the rank went up.
    pub fn insert(&mut self, v: &SparseVector<FieldElement>) -> Result<bool> {
        let mut row = self.to_row(v)?;
        while let Some(&(col, _)) = row.first() {
            match self.pivots.get(&col).map(Vec::len) {
                None => {
                    let row = self.normalize(row);
                    self.pivots.insert(col, row);
                    return Ok(true);
                }
                Some(len) if row.len() < len => {
                    // keep the sparser row as pivot and carry on with the old one
                    let new = self.normalize(row);
                    let old = self.pivots.insert(col, new).expect("present");
                    row = self.eliminate(&old, &self.pivots[&col]);
                }
                Some(_) => {
                    row = self.eliminate(&row, &self.pivots[&col]);
                }
            }
        }
        Ok(false)
    }

    /// Is `v` in the span of the inserted vectors?
    pub fn contains(&self, v: &SparseVector<FieldElement>) -> Result<bool> {
        let mut row = self.to_row(v)?;
        while let Some(&(col, _)) = row.first() {
            match self.pivots.get(&col) {
                None => return Ok(false),
                Some(p) => row = self.eliminate(&row, p),
            }
        }
        Ok(true)
    }

    /// Leading columns of the pivot rows, increasing.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }
}

fn common_field(vs: &[SparseVector<FieldElement>]) -> Option<(Arc<CyclotomicField>, usize)> {
    let dim = vs.first()?.dim();
    let field = vs.iter().find_map(|v| v.iter().next().map(|(_, c)| Arc::clone(c.field())))?;
    Some((field, dim))
}

/// Exact rank of a list of vectors over `Q(zeta_M)`.
pub fn rank(vs: &[SparseVector<FieldElement>]) -> Result<usize> {
    let Some((field, dim)) = common_field(vs) else {
        return Ok(0);
    };
    let mut ech = Echelon::new(&field, dim);
    for v in vs {
        ech.insert(v)?;
    }
    Ok(ech.rank())
}

/// Is `v` in the span of `vs`?
pub fn in_span(v: &SparseVector<FieldElement>, vs: &[SparseVector<FieldElement>]) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    let field = Arc::clone(v.iter().next().expect("nonzero").1.field());
    let mut ech = Echelon::new(&field, v.dim());
    for w in vs {
        ech.insert(w)?;
    }
    ech.contains(v)
}
