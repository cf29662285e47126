//! Ordered column reduction (`R = D V`) with the lowest-nonzero-row pivot.
//!
//! Columns are processed left to right; a column is reduced against earlier
//! columns sharing its current lowest row until that row is unclaimed or the
//! column vanishes. Vanishing columns yield cycles `V_j` whose leading entry
//! sits at `j`, so the cycles form an echelon basis of the kernel.

use super::sparse::{axpy, scale, SparseVec};
use super::Rational;

#[derive(Clone, Debug, Default)]
pub struct ColumnReduction {
    /// `low[j]` is the pivot row of reduced column `j`, if nonzero.
    pub low: Vec<Option<usize>>,
    /// Kernel vectors, keyed by the column index where they lead.
    pub cycles: Vec<(usize, SparseVec)>,
}

impl ColumnReduction {
    pub fn rank(&self) -> usize {
        self.low.iter().filter(|l| l.is_some()).count()
    }

    /// Rows claimed as pivots.
    pub fn pivot_rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.low.iter().flatten().copied().collect();
        rows.sort_unstable();
        rows
    }
}

/// Reduces `columns` (each a sparse vector over `nrows` rows).
///
/// Columns flagged in `cleared` are known in advance to reduce to zero and
/// are skipped without producing a cycle. When `track_cycles` is false the
/// transformation matrix is not maintained and `cycles` stays empty.
pub fn reduce_columns(
    columns: &[SparseVec],
    nrows: usize,
    cleared: Option<&[bool]>,
    track_cycles: bool,
) -> ColumnReduction {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; nrows];
    let mut reduced: Vec<SparseVec> = vec![Vec::new(); columns.len()];
    let mut transforms: Vec<SparseVec> = vec![Vec::new(); columns.len()];
    let mut low = vec![None; columns.len()];
    let mut cycles = Vec::new();

    for (j, col) in columns.iter().enumerate() {
        if cleared.is_some_and(|c| c[j]) {
            continue;
        }
        let mut r = col.clone();
        let mut v: SparseVec = if track_cycles { vec![(j, Rational::ONE)] } else { Vec::new() };
        while let Some((l, lv)) = r.last().cloned() {
            match pivot_of_row[l] {
                Some(k) => {
                    // reduced[k] is normalised to a unit pivot
                    let f = -lv;
                    r = axpy(&r, &f, &reduced[k]);
                    if track_cycles {
                        v = axpy(&v, &f, &transforms[k]);
                    }
                }
                None => break,
            }
        }
        match r.last() {
            None => {
                if track_cycles {
                    cycles.push((j, v));
                }
            }
            Some((l, lv)) => {
                let l = *l;
                let inv = lv.recip();
                pivot_of_row[l] = Some(j);
                low[j] = Some(l);
                reduced[j] = scale(&r, &inv);
                if track_cycles {
                    transforms[j] = scale(&v, &inv);
                }
            }
        }
    }
    ColumnReduction { low, cycles }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn triangle_boundary_has_one_cycle() {
        // d1 of a triangle boundary: edges 01, 02, 12 over vertices 0, 1, 2
        let cols = vec![vec![(0, q(-1)), (1, q(1))], vec![(0, q(-1)), (2, q(1))], vec![(1, q(-1)), (2, q(1))]];
        let red = reduce_columns(&cols, 3, None, true);
        assert_eq!(red.rank(), 2);
        assert_eq!(red.cycles.len(), 1);
        let (lead, z) = &red.cycles[0];
        assert_eq!(*lead, 2);
        assert_eq!(z, &vec![(0, q(1)), (1, q(-1)), (2, q(1))]);
    }

    #[test]
    fn cleared_columns_are_skipped() {
        let cols = vec![vec![(0, q(1))], vec![(0, q(2))]];
        let red = reduce_columns(&cols, 1, Some(&[false, true]), true);
        assert_eq!(red.rank(), 1);
        assert!(red.cycles.is_empty());
    }
}
