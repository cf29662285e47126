//! Sparse Gaussian elimination over the rationals with Markowitz-style
//! pivoting.
//!
//! At every step the active row with the fewest pivotable entries is chosen
//! (ties: lowest row index) and, within it, the column with the fewest active
//! entries (ties: lowest column index). This minimises the Markowitz cost
//! `(r - 1)(c - 1)` over the sparsest rows and makes the pivot sequence a pure
//! function of the input, so kernels and solutions are reproducible.

use std::collections::BTreeSet;

use super::sparse::{axpy, lookup, SparseVec};
use super::Rational;

/// Result of eliminating a row set.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_limit: usize,
    /// `(pivot column, pivot row as it stood when chosen)` in elimination order.
    steps: Vec<(usize, SparseVec)>,
    /// Rows left with entries only in columns at or beyond `pivot_limit`.
    residual: Vec<SparseVec>,
}

/// Eliminates `rows` over `ncols` columns. Columns `>= pivot_limit` are
/// carried along as right-hand sides and never chosen as pivots.
pub fn eliminate(rows: Vec<SparseVec>, ncols: usize, pivot_limit: usize) -> Echelon {
    assert!(pivot_limit <= ncols);
    let nrows = rows.len();
    let mut rows = rows;
    let mut active = vec![true; nrows];
    let mut col_count = vec![0usize; pivot_limit];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); pivot_limit];
    let pivotable = |row: &SparseVec| row.iter().take_while(|e| e.0 < pivot_limit).count();

    let mut queue = BTreeSet::new();
    let mut residual = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let len = pivotable(row);
        for (c, _) in row.iter().take(len) {
            col_count[*c] += 1;
            col_rows[*c].push(r);
        }
        if len > 0 {
            queue.insert((len, r));
        }
    }
    for (r, row) in rows.iter().enumerate() {
        if pivotable(row) == 0 {
            active[r] = false;
            if !row.is_empty() {
                residual.push(row.clone());
            }
        }
    }

    let mut steps = Vec::new();
    while let Some((_, pr)) = queue.pop_first() {
        active[pr] = false;
        let prow = std::mem::take(&mut rows[pr]);
        let (pc, pval) = prow
            .iter()
            .take_while(|e| e.0 < pivot_limit)
            .min_by_key(|e| (col_count[e.0], e.0))
            .map(|e| (e.0, e.1.clone()))
            .expect("queued rows have a pivotable entry");
        for (c, _) in prow.iter().take_while(|e| e.0 < pivot_limit) {
            col_count[*c] -= 1;
        }

        let mut targets = std::mem::take(&mut col_rows[pc]);
        targets.sort_unstable();
        targets.dedup();
        for r in targets {
            if !active[r] {
                continue;
            }
            let Some(v) = lookup(&rows[r], pc) else { continue };
            let factor = -(v / &pval);
            let old_len = pivotable(&rows[r]);
            let new_row = axpy(&rows[r], &factor, &prow);
            // patch column counts from the symmetric difference of supports
            diff_supports(&rows[r], &new_row, pivot_limit, |c, added| {
                if added {
                    col_count[c] += 1;
                    col_rows[c].push(r);
                } else {
                    col_count[c] -= 1;
                }
            });
            rows[r] = new_row;
            queue.remove(&(old_len, r));
            let len = pivotable(&rows[r]);
            if len > 0 {
                queue.insert((len, r));
            } else {
                active[r] = false;
                if !rows[r].is_empty() {
                    residual.push(std::mem::take(&mut rows[r]));
                }
            }
        }
        steps.push((pc, prow));
    }

    Echelon { ncols, pivot_limit, steps, residual }
}

fn diff_supports(old: &[(usize, Rational)], new: &[(usize, Rational)], limit: usize, mut f: impl FnMut(usize, bool)) {
    let (mut i, mut j) = (0, 0);
    loop {
        let a = old.get(i).map(|e| e.0).filter(|&c| c < limit);
        let b = new.get(j).map(|e| e.0).filter(|&c| c < limit);
        match (a, b) {
            (None, None) => break,
            (Some(x), None) => {
                f(x, false);
                i += 1;
            }
            (None, Some(y)) => {
                f(y, true);
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                f(x, false);
                i += 1;
            }
            (Some(x), Some(y)) if y < x => {
                f(y, true);
                j += 1;
            }
            _ => {
                i += 1;
                j += 1;
            }
        }
    }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.steps.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.steps.iter().map(|s| s.0).collect();
        cols.sort_unstable();
        cols
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.pivot_limit];
        for (c, _) in &self.steps {
            is_pivot[*c] = true;
        }
        (0..self.pivot_limit).filter(|c| !is_pivot[*c]).collect()
    }

    /// Whether right-hand side `k` (column `pivot_limit + k`) is consistent.
    pub fn consistent(&self, k: usize) -> bool {
        let col = self.pivot_limit + k;
        self.residual.iter().all(|row| lookup(row, col).is_none())
    }

    /// Back substitution with the given values on free columns (absent = 0).
    /// `rhs` selects a right-hand side column, or `None` for the homogeneous
    /// system.
    fn back_substitute(&self, rhs: Option<usize>, free: &[(usize, Rational)]) -> SparseVec {
        let mut x: Vec<Option<Rational>> = vec![None; self.pivot_limit];
        for (c, v) in free {
            x[*c] = Some(v.clone());
        }
        let rhs_col = rhs.map(|k| self.pivot_limit + k);
        for (pc, row) in self.steps.iter().rev() {
            let mut acc = match rhs_col {
                Some(c) => lookup(row, c).cloned().unwrap_or(Rational::ZERO),
                None => Rational::ZERO,
            };
            let mut pval = Rational::ZERO;
            for (c, v) in row.iter().take_while(|e| e.0 < self.pivot_limit) {
                if c == pc {
                    pval = v.clone();
                } else if let Some(xc) = &x[*c] {
                    acc = &acc - &(v * xc);
                }
            }
            x[*pc] = Some(&acc / &pval);
        }
        x.into_iter().enumerate().filter_map(|(i, v)| v.filter(|v| !v.is_zero()).map(|v| (i, v))).collect()
    }

    /// One particular solution for right-hand side `k`, free variables zero.
    pub fn solve(&self, k: usize) -> Option<SparseVec> {
        assert!(self.pivot_limit + k < self.ncols, "no such right-hand side");
        self.consistent(k).then(|| self.back_substitute(Some(k), &[]))
    }

    /// Kernel basis of the pivotable block: one vector per free column with
    /// a unit in that column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        self.free_columns().into_iter().map(|f| self.back_substitute(None, &[(f, Rational::ONE)])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseRationalMatrix;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn dense(rows: &[&[i64]]) -> Vec<SparseVec> {
        rows.iter().map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, q(*v))).collect()).collect()
    }

    #[test]
    fn rank_of_singular_matrix() {
        let rows = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(eliminate(rows, 3, 3).rank(), 2);
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let rows = dense(&[&[1, 1, 0, -1], &[0, 1, 1, 0]]);
        let m = SparseRationalMatrix::from_dense(&[vec![q(1), q(1), q(0), q(-1)], vec![q(0), q(1), q(1), q(0)]]);
        let e = eliminate(rows, 4, 4);
        let ker = e.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            for row in m.row_vectors() {
                assert!(crate::linalg::dot(&row, &v).is_zero());
            }
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        // x + y = 3, x - y = 1, plus an inconsistent copy for rhs 1
        let rows = dense(&[&[1, 1, 3, 0], &[1, -1, 1, 0], &[2, 0, 4, 1]]);
        let e = eliminate(rows, 4, 2);
        assert_eq!(e.solve(0).unwrap(), vec![(0, q(2)), (1, q(1))]);
        assert!(e.solve(1).is_none());
    }

    #[test]
    fn pivot_choice_is_deterministic() {
        let rows = dense(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let a = eliminate(rows.clone(), 3, 3);
        let b = eliminate(rows, 3, 3);
        assert_eq!(a.pivot_columns(), b.pivot_columns());
        assert_eq!(a.steps.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 1, 0]);
    }
}
