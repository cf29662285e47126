use rayon::prelude::*;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{eliminate, Rational, SparseRationalMatrix, SparseVec};

/// Columns of the simplicial boundary `d_k`, indexed by the `k`-simplices in
/// lexicographic order; row indices refer to the `(k-1)`-simplices. Omitting
/// vertex `i` carries the sign `(-1)^i`. For `k = 0` every column is empty.
pub fn boundary_columns(k_complex: &SimplicialComplex, k: usize) -> Vec<SparseVec> {
    k_complex
        .simplices(k)
        .iter()
        .map(|s| {
            let mut col: SparseVec = s
                .boundary()
                .map(|(i, f)| {
                    let row = k_complex.index_of(&f).expect("face lattice is closed");
                    (row, Rational::from_int(if i % 2 == 0 { 1 } else { -1 }))
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

impl SimplicialComplex {
    /// Matrix of `d_k : C_k -> C_{k-1}` in the lexicographic simplex bases.
    pub fn boundary_matrix(&self, k: usize) -> Result<SparseRationalMatrix> {
        if k > self.dim() {
            return Err(Error::DegreeOutOfRange { degree: k, max: self.dim() });
        }
        let rows = if k == 0 { 0 } else { self.simplices(k - 1).len() };
        Ok(SparseRationalMatrix::from_columns(rows, &boundary_columns(self, k)))
    }

    /// Ranks of `d_0, ..., d_{n+1}` (the outer two are zero).
    pub fn boundary_ranks(&self) -> Vec<usize> {
        let n = self.dim();
        let mut ranks: Vec<usize> = (0..=n + 1)
            .into_par_iter()
            .map(|k| {
                if k == 0 || k > n {
                    return 0;
                }
                // rank(A) = rank(A^T): feed the columns in as rows
                let cols = boundary_columns(self, k);
                let width = self.simplices(k - 1).len();
                eliminate(cols, width, width).rank()
            })
            .collect();
        ranks.truncate(n + 2);
        ranks
    }
}

/// Rational Betti numbers `b_k = dim ker d_k - rank d_{k+1}`.
pub fn homology_ranks(k_complex: &SimplicialComplex) -> Vec<usize> {
    let ranks = k_complex.boundary_ranks();
    (0..=k_complex.dim()).map(|k| k_complex.simplices(k).len() - ranks[k] - ranks[k + 1]).collect()
}
