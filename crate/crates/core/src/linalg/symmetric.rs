use serde::Serialize;

use super::Rational;

/// Counts of positive, negative and zero squares of a symmetric form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

pub fn is_symmetric(m: &[Vec<Rational>]) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Inertia of a symmetric rational matrix by congruence diagonalisation.
///
/// Pivots on the lowest-index nonzero diagonal entry; when the remaining
/// diagonal vanishes, splits off the first nonzero off-diagonal pair as a
/// hyperbolic 2x2 block, which contributes one square of each sign.
pub fn inertia(m: &[Vec<Rational>]) -> Inertia {
    assert!(is_symmetric(m), "inertia requires a symmetric matrix");
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut active = vec![true; n];
    let mut out = Inertia::default();

    loop {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if live.is_empty() {
            break;
        }
        if let Some(&k) = live.iter().find(|&&k| !a[k][k].is_zero()) {
            let p = a[k][k].clone();
            if p.signum() > 0 {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            active[k] = false;
            let rest: Vec<usize> = live.into_iter().filter(|&i| i != k).collect();
            for &i in &rest {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &p;
                for &j in &rest {
                    if !a[k][j].is_zero() {
                        a[i][j] = &a[i][j] - &(&f * &a[k][j]);
                    }
                }
            }
            continue;
        }
        let pair =
            live.iter().flat_map(|&k| live.iter().map(move |&j| (k, j))).find(|&(k, j)| k < j && !a[k][j].is_zero());
        let Some((k, j)) = pair else {
            out.zero += live.len();
            break;
        };
        let b = a[k][j].clone();
        out.positive += 1;
        out.negative += 1;
        active[k] = false;
        active[j] = false;
        let rest: Vec<usize> = live.into_iter().filter(|&i| i != k && i != j).collect();
        let snapshot: Vec<(Rational, Rational)> = rest.iter().map(|&i| (a[i][k].clone(), a[i][j].clone())).collect();
        for (x, &i) in rest.iter().enumerate() {
            for (y, &l) in rest.iter().enumerate() {
                let (aik, aij) = &snapshot[x];
                let (alk, alj) = &snapshot[y];
                let corr = &(&(aik * alj) + &(aij * alk)) / &b;
                if !corr.is_zero() {
                    a[i][l] = &a[i][l] - &corr;
                }
            }
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan elimination; `None` when singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect()
    }

    #[test]
    fn hyperbolic_form_has_signature_zero() {
        let h = inertia(&mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(h, Inertia { positive: 1, negative: 1, zero: 0 });
    }

    #[test]
    fn diagonal_and_degenerate() {
        let d = inertia(&mat(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]));
        assert_eq!(d, Inertia { positive: 1, negative: 1, zero: 1 });
        assert_eq!(inertia(&[]).signature(), 0);
    }

    #[test]
    fn e8_like_block() {
        // [[2,1],[1,2]] positive definite, plus a hyperbolic plane
        let m = mat(&[&[2, 1, 0, 0], &[1, 2, 0, 0], &[0, 0, 0, 3], &[0, 0, 3, 0]]);
        assert_eq!(inertia(&m).signature(), 2);
    }

    #[test]
    fn zero_diagonal_coupled_to_rest() {
        let m = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        // eigenvalues 2, -1, -1
        assert_eq!(inertia(&m), Inertia { positive: 1, negative: 2, zero: 0 });
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        assert_eq!(inv, mat(&[&[1, -1], &[-1, 2]]));
        assert!(invert(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }
}
