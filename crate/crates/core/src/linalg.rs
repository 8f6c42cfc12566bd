//! Exact linear algebra over Q(i): rank, solving, and kernels by
//! Gaussian elimination. No pivot thresholds, no rounding — every
//! elimination step is exact field arithmetic.

use std::collections::BTreeMap;

use crate::arith::GaussianRational;
use crate::poly::{Monomial, Poly};

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, GaussianRational>;

/// Rank of a sparse matrix by exact elimination.
///
/// Pivots are chosen on the shortest remaining row (first nonzero
/// column), which keeps fill-in low on the structurally sparse matrices
/// produced by basis certification.
pub fn rank_sparse(mut rows: Vec<SparseRow>) -> usize {
    let mut rank = 0;
    loop {
        rows.retain(|r| !r.is_empty());
        if rows.is_empty() {
            return rank;
        }
        // Shortest row first, ties broken by its leading column.
        let mut best = 0;
        for (i, r) in rows.iter().enumerate() {
            let better = {
                let (bl, bc) = (rows[best].len(), *rows[best].keys().next().unwrap());
                let (rl, rc) = (r.len(), *r.keys().next().unwrap());
                (rl, rc) < (bl, bc)
            };
            if better {
                best = i;
            }
        }
        let pivot_row = rows.swap_remove(best);
        let (&col, pivot) = pivot_row.iter().next().unwrap();
        let pivot_inv = pivot.inv().expect("pivot entries are nonzero");
        rank += 1;
        for r in rows.iter_mut() {
            if let Some(entry) = r.remove(&col) {
                let factor = &entry * &pivot_inv;
                for (&c, v) in pivot_row.iter() {
                    if c == col {
                        continue;
                    }
                    let delta = v * &factor;
                    match r.entry(c) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            if !delta.is_zero() {
                                e.insert(-&delta);
                            }
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            let nv = e.get() - &delta;
                            if nv.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = nv;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Dense matrix as rows of equal length.
pub type DenseMatrix = Vec<Vec<GaussianRational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row.
fn rref(a: &mut DenseMatrix) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, sel);
        let inv = a[row][col].inv().expect("pivot is nonzero");
        for c in col..cols {
            a[row][c] = &a[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..cols {
                    let delta = &a[row][c] * &factor;
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Solves `A x = b` exactly. `None` when the system is inconsistent.
/// Free variables, if any, are set to zero.
pub fn solve_dense(a: &DenseMatrix, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: DenseMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent if some pivot landed in the augmented column.
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][cols].clone();
    }
    Some(x)
}

/// A basis of the nullspace of `A` (columns = unknowns).
pub fn kernel_dense(a: &DenseMatrix, cols: usize) -> Vec<Vec<GaussianRational>> {
    let mut m = a.clone();
    for row in &m {
        assert_eq!(row.len(), cols);
    }
    let pivots = rref(&mut m);
    let pivot_of_col: BTreeMap<usize, usize> = pivots
        .iter()
        .enumerate()
        .map(|(row, &col)| (col, row))
        .collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col.contains_key(&free) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); cols];
        v[free] = GaussianRational::one();
        for (&col, &row) in &pivot_of_col {
            v[col] = -&m[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Maps a polynomial to its coefficient row over an indexed monomial
/// list (missing monomials are an error in the caller's setup).
pub fn poly_to_sparse_row(p: &Poly, index: &BTreeMap<Monomial, usize>) -> SparseRow {
    let mut row = SparseRow::new();
    for (m, c) in p.terms() {
        let col = *index
            .get(m)
            .expect("every monomial of the polynomial must be indexed");
        row.insert(col, c.clone());
    }
    row
}

/// Dense coefficient vector of `p` over an indexed monomial list.
pub fn poly_to_dense_row(p: &Poly, index: &BTreeMap<Monomial, usize>) -> Vec<GaussianRational> {
    let mut row = vec![GaussianRational::zero(); index.len()];
    for (m, c) in p.terms() {
        row[*index.get(m).expect("monomial must be indexed")] = c.clone();
    }
    row
}

/// Index map for a list of monomials, in their given order.
pub fn monomial_index(monomials: &[Monomial]) -> BTreeMap<Monomial, usize> {
    monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}
