//! Dense exact linear algebra over the scalar field: reduced row echelon
//! form and the derived rank, solver and nullspace routines.

use crate::scalar::Scalar;

/// In-place reduced row echelon form; returns the pivot columns in order.
pub fn rref<S: Scalar>(mat: &mut [Vec<S>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = S::one() / mat[r][c].clone();
        for x in &mut mat[r] {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in 0..cols {
                    let delta = factor.clone() * mat[r][j].clone();
                    mat[i][j] = mat[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut mat: Vec<Vec<S>> = rows.to_vec();
    rref(&mut mat).len()
}

/// Basis of `{x in S^n : A·x = 0}`.
pub fn nullspace_basis<S: Scalar>(rows: &[Vec<S>], n: usize) -> Vec<Vec<S>> {
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut mat: Vec<Vec<S>> = rows.to_vec();
    let pivots = rref(&mut mat);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut x = vec![S::zero(); n];
        x[free] = S::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -mat[row][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// One solution of `A·x = b` with free variables set to zero, or `None`
/// when the system is inconsistent.
pub fn solve<S: Scalar>(rows: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    assert_eq!(rows.len(), rhs.len(), "row/rhs length mismatch");
    let n = rows.first().map_or(0, Vec::len);
    let mut mat: Vec<Vec<S>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut mat);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = mat[row][n].clone();
    }
    Some(x)
}

/// Euclidean inner product.
pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}
