use std::collections::BTreeMap;

use super::Rational;

/// Sparse vector as `(index, value)` pairs, strictly increasing in index,
/// never holding a zero.
pub type SparseVec = Vec<(usize, Rational)>;

/// `y + factor * x`, merged in index order with cancellations dropped.
pub fn axpy(y: &[(usize, Rational)], factor: &Rational, x: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j == x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i == y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, factor * &x[j].1));
            j += 1;
        } else {
            let v = &y[i].1 + &(factor * &x[j].1);
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(x: &[(usize, Rational)], factor: &Rational) -> SparseVec {
    if factor.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v * factor)).collect()
}

pub fn lookup(x: &[(usize, Rational)], idx: usize) -> Option<&Rational> {
    x.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &x[p].1)
}

pub fn dot(x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Rational {
    let (mut i, mut j) = (0, 0);
    let mut acc = Rational::ZERO;
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = &acc + &(&x[i].1 * &y[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Exact sparse matrix over the rationals. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn from_dense(data: &[Vec<Rational>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|((r, c), v)| (*r, *c, v))
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols = vec![Vec::new(); self.cols];
        for ((r, c), v) in &self.entries {
            cols[*c].push((*r, v.clone()));
        }
        for col in &mut cols {
            col.sort_by_key(|e| e.0);
        }
        cols
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        // BTreeMap order is row-major, so each row comes out sorted
        let mut rows = vec![Vec::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        rows
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for ((r, c), v) in &self.entries {
            t.entries.insert((*c, *r), v.clone());
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let rows = self.row_vectors();
        let ocols = other.columns();
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            for (c, col) in ocols.iter().enumerate() {
                let v = dot(row, col);
                if !v.is_zero() {
                    out.entries.insert((r, c), v);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        super::eliminate(self.row_vectors(), self.cols, self.cols).rank()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::ZERO; self.cols]; self.rows];
        for ((r, c), v) in &self.entries {
            d[*r][*c] = v.clone();
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn axpy_cancels() {
        let y = vec![(0, q(1)), (2, q(3))];
        let x = vec![(2, q(1)), (5, q(2))];
        assert_eq!(axpy(&y, &q(-3), &x), vec![(0, q(1)), (5, q(-6))]);
    }

    #[test]
    fn set_zero_removes() {
        let mut m = SparseRationalMatrix::zeros(2, 2);
        m.set(0, 1, q(4));
        assert_eq!(m.nnz(), 1);
        m.set(0, 1, q(0));
        assert!(m.is_zero());
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseRationalMatrix::from_dense(&[vec![q(1), q(2)], vec![q(0), q(1)]]);
        let b = a.transpose();
        let p = a.mul(&b);
        assert_eq!(p.to_dense(), vec![vec![q(5), q(2)], vec![q(2), q(1)]]);
    }
}
