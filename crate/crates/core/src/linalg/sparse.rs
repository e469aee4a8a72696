use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A vector in a space of fixed dimension, stored by its nonzero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector<C> {
    dim: usize,
    entries: BTreeMap<usize, C>,
}

impl<C: Scalar> SparseVector<C> {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, index: usize, one: C) -> Self {
        let mut v = Self::zero(dim);
        v.add_at(index, &one);
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, C)>>(dim: usize, iter: I) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in iter {
            v.add_at(i, &c);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&C> {
        self.entries.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &C)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn min_index(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn add_at(&mut self, i: usize, c: &C) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        let sum = match self.entries.get(&i) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, c) in &other.entries {
            out.add_at(*i, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (i, c) in &other.entries {
            out.add_at(*i, &c.neg());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.dim);
        if k.is_zero() {
            return out;
        }
        for (i, c) in &self.entries {
            let p = c.mul(k);
            if !p.is_zero() {
                out.entries.insert(*i, p);
            }
        }
        out
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SparseVector<D> {
        SparseVector::from_entries(self.dim, self.entries.iter().map(|(i, c)| (*i, f(c))))
    }

    /// Tensor product `self ⊗ other`, indices as `self_index * other.dim + other_index`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim * other.dim);
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                out.add_at(i * other.dim + j, &a.mul(b));
            }
        }
        out
    }
}

/// A square matrix stored column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator<C> {
    dim: usize,
    cols: Vec<SparseVector<C>>,
}

impl<C: Scalar> SparseOperator<C> {
    pub fn zero(dim: usize) -> Self {
        SparseOperator {
            dim,
            cols: vec![SparseVector::zero(dim); dim],
        }
    }

    pub fn identity(dim: usize, one: &C) -> Self {
        SparseOperator {
            dim,
            cols: (0..dim).map(|j| SparseVector::basis(dim, j, one.clone())).collect(),
        }
    }

    pub fn from_columns(cols: Vec<SparseVector<C>>) -> Self {
        let dim = cols.len();
        assert!(cols.iter().all(|c| c.dim() == dim));
        SparseOperator { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &SparseVector<C> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVector<C>] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&C> {
        self.cols[j].get(i)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVector::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVector::is_zero)
    }

    pub fn apply(&self, v: &SparseVector<C>) -> Result<SparseVector<C>> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        let mut out = SparseVector::zero(self.dim);
        for (j, c) in v.iter() {
            for (i, a) in self.cols[j].iter() {
                out.add_at(i, &a.mul(c));
            }
        }
        Ok(out)
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if rhs.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let cols = rhs
            .cols
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseOperator { dim: self.dim, cols })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        SparseOperator {
            dim: self.dim,
            cols: self.cols.iter().zip(&rhs.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        SparseOperator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        SparseOperator {
            dim: self.dim,
            cols: self.cols.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![SparseVector::zero(self.dim); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                cols[i].add_at(j, c);
            }
        }
        SparseOperator { dim: self.dim, cols }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SparseOperator<D> {
        SparseOperator {
            dim: self.dim,
            cols: self.cols.iter().map(|c| c.map(&f)).collect(),
        }
    }

    /// Does the operator map the span of `indices` into itself?
    pub fn preserves(&self, indices: &[usize]) -> bool {
        let set: std::collections::BTreeSet<usize> = indices.iter().copied().collect();
        indices
            .iter()
            .all(|&j| self.cols[j].iter().all(|(i, _)| set.contains(&i)))
    }

    /// Matrix of the operator on the coordinate subspace spanned by `indices`
    /// (rows and columns relabelled by position in `indices`).
    pub fn block(&self, indices: &[usize]) -> SparseOperator<C> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let cols = indices
            .iter()
            .map(|&j| {
                SparseVector::from_entries(
                    indices.len(),
                    self.cols[j]
                        .iter()
                        .filter_map(|(i, c)| pos.get(&i).map(|&p| (p, c.clone()))),
                )
            })
            .collect();
        SparseOperator {
            dim: indices.len(),
            cols,
        }
    }

    /// Row `i` as a sparse vector.
    pub fn row(&self, i: usize) -> SparseVector<C> {
        SparseVector::from_entries(
            self.dim,
            self.cols
                .iter()
                .enumerate()
                .filter_map(|(j, col)| col.get(i).map(|c| (j, c.clone()))),
        )
    }

    pub fn trace(&self, zero: &C) -> C {
        let mut t = zero.clone();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(c) = col.get(j) {
                t = t.add(c);
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingElement;

    fn r(k: i64) -> RingElement {
        RingElement::integer(k)
    }

    #[test]
    fn identity_and_zero_application() {
        let v = SparseVector::from_entries(4, [(1, r(3)), (3, r(-2))]);
        let id = SparseOperator::identity(4, &r(1));
        assert_eq!(id.apply(&v).unwrap(), v);
        assert!(SparseOperator::zero(4).apply(&v).unwrap().is_zero());
        assert_eq!(
            id.apply(&SparseVector::zero(3)),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        );
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut v = SparseVector::from_entries(4, [(1, r(3))]);
        v.add_at(1, &r(-3));
        assert!(v.is_zero());
        assert_eq!(v.scale(&r(0)).nnz(), 0);
    }

    #[test]
    fn compose_transpose_block() {
        // [[1,2],[0,3]]
        let a = SparseOperator::from_columns(vec![
            SparseVector::from_entries(2, [(0, r(1))]),
            SparseVector::from_entries(2, [(0, r(2)), (1, r(3))]),
        ]);
        let a2 = a.compose(&a).unwrap();
        assert_eq!(a2.entry(0, 1), Some(&r(8)));
        assert_eq!(a2.entry(1, 1), Some(&r(9)));
        assert_eq!(a.transpose().entry(1, 0), Some(&r(2)));
        assert!(!a.is_symmetric());
        assert!(a.preserves(&[0]));
        assert!(!a.preserves(&[1]));
        assert_eq!(a.block(&[1]).entry(0, 0), Some(&r(3)));
        assert_eq!(a.row(0).nnz(), 2);
        assert_eq!(a.trace(&r(0)), r(4));
    }

    #[test]
    fn kron_indices() {
        let a = SparseVector::from_entries(2, [(1, r(2))]);
        let b = SparseVector::from_entries(4, [(0, r(3)), (2, r(1))]);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 8);
        assert_eq!(k.get(4), Some(&r(6)));
        assert_eq!(k.get(6), Some(&r(2)));
    }
}
