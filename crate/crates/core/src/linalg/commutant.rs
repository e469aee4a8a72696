use std::collections::BTreeMap;
use std::sync::Arc;

use super::{rank::Echelon, SparseOperator, SparseVector};
use crate::coeff::{CyclotomicField, FieldElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dimension of `{X : X A = A X for every A in ops}` on a space of
/// dimension `dim`, from the rank of the linear system in the `dim^2`
/// entries of `X` (entry `(i, j)` is unknown number `i * dim + j`).
pub fn commutant_dim(field: &Arc<CyclotomicField>, ops: &[SparseOperator<FieldElement>], dim: usize) -> Result<usize> {
    let nvars = dim * dim;
    let mut ech = Echelon::new(field, nvars);
    for a in ops {
        if a.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a.dim(),
            });
        }
        // equation (i, j): sum_k X[i,k] A[k,j] - sum_k A[i,k] X[k,j]
        let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, FieldElement>> = BTreeMap::new();
        let mut push = |eq: (usize, usize), var: usize, c: FieldElement| {
            let e = eqs.entry(eq).or_default();
            let v = match e.remove(&var) {
                Some(old) => old.add(&c),
                None => c,
            };
            if !v.is_zero() {
                e.insert(var, v);
            }
        };
        for (j, col) in a.columns().iter().enumerate() {
            for (k, c) in col.iter() {
                // A[k, j] = c
                for i in 0..dim {
                    push((i, j), i * dim + k, c.clone());
                }
                // A[i, k'] with i = k, k' = j contributes to equations (k, j2) for all j2
                for j2 in 0..dim {
                    push((k, j2), j * dim + j2, c.neg());
                }
            }
        }
        for (_, e) in eqs {
            if !e.is_empty() {
                ech.insert(&SparseVector::from_entries(nvars, e))?;
            }
        }
    }
    Ok(nvars - ech.rank())
}
