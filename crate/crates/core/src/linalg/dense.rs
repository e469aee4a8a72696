//! Small dense problems over `Q(zeta_M)`: reduced row echelon form, null
//! spaces and characteristic polynomials.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::SparseOperator;
use crate::coeff::{CyclotomicField, FieldElement};
use crate::error::Result;
use crate::scalar::Scalar;

pub type DenseMatrix = Vec<Vec<FieldElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut DenseMatrix) -> Result<Vec<usize>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse()?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&piv) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(pivots)
}

/// A basis of `{v : A v = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(field: &Arc<CyclotomicField>, rows: &DenseMatrix, ncols: usize) -> Result<Vec<Vec<FieldElement>>> {
    let mut m = rows.clone();
    let pivots = rref(&mut m)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[r][f].neg();
            }
            v
        })
        .collect())
}

pub fn to_dense(op: &SparseOperator<FieldElement>, field: &Arc<CyclotomicField>) -> DenseMatrix {
    let d = op.dim();
    let mut out = vec![vec![field.zero(); d]; d];
    for (j, col) in op.columns().iter().enumerate() {
        for (i, c) in col.iter() {
            out[i][j] = c.clone();
        }
    }
    out
}

/// Characteristic polynomial `det(z I - A)`, lowest coefficient first,
/// by the Faddeev-LeVerrier recursion.
pub fn charpoly(field: &Arc<CyclotomicField>, a: &DenseMatrix) -> Vec<FieldElement> {
    let n = a.len();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut m = vec![vec![field.zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(field, a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(field, a, &m);
        let tr = (0..n).fold(field.zero(), |t, i| &t + &am[i][i]);
        let scale = BigRational::new(BigInt::from(-1), BigInt::from(k));
        coeffs[n - k] = tr.scale(&scale);
    }
    coeffs
}

fn matmul(field: &Arc<CyclotomicField>, a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let n = a.len();
    let mut out = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Evaluate a polynomial (lowest coefficient first) at `z`.
pub fn eval_poly(p: &[FieldElement], z: &FieldElement) -> FieldElement {
    p.iter().rev().fold(z.zero_like(), |acc, c| &(&acc * z) + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_two_by_two() {
        let k = CyclotomicField::new(8).unwrap();
        // [[1,2],[3,4]]: z^2 - 5z - 2
        let a = vec![vec![k.integer(1), k.integer(2)], vec![k.integer(3), k.integer(4)]];
        let p = charpoly(&k, &a);
        assert_eq!(p, vec![k.integer(-2), k.integer(-5), k.integer(1)]);
    }

    #[test]
    fn charpoly_vanishes_at_eigenvalue() {
        let k = CyclotomicField::new(8).unwrap();
        let i = k.zeta_pow(2);
        // rotation by i has eigenvalues +-i
        let a = vec![vec![k.zero(), k.integer(-1)], vec![k.integer(1), k.zero()]];
        let p = charpoly(&k, &a);
        assert!(eval_poly(&p, &i).is_zero());
        assert!(eval_poly(&p, &i.neg()).is_zero());
        assert!(!eval_poly(&p, &k.one()).is_zero());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let k = CyclotomicField::new(8).unwrap();
        let z = k.zeta_pow(1);
        let rows = vec![
            vec![k.one(), z.clone(), k.zero()],
            vec![z.clone(), &z * &z, k.zero()],
        ];
        let ns = nullspace(&k, &rows, 3).unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &rows {
                let dot = row.iter().zip(v).fold(k.zero(), |s, (a, b)| &s + &(a * b));
                assert!(dot.is_zero());
            }
        }
    }
}
