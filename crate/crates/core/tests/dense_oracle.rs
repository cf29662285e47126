//! Intersection homology by brute force over the full allowable chain
//! complex, sharing nothing with the sparse engine except the complex and
//! filtration types.
//!
//! With `A_i` the allowable `i`-simplices, `IC_i` is the kernel of the
//! boundary restricted to `A_i` and projected onto non-allowable faces, so
//! `rank IH_i = (|A_i| - rank ∂|A_i) - (dim IC_{i+1} - dim Z_{i+1})`.
//! Ranks are taken modulo two large primes, which must agree.

use std::collections::{BTreeSet, HashMap};

use wittkit_core::complex::{Simplex, SimplicialComplex};
use wittkit_core::corpus;
use wittkit_core::ih::{ih_ranks, Perversity};
use wittkit_core::strat::{Filtration, StratifiedSpace};

const PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 1_000_000_007];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Rank of a dense integer matrix modulo `p`.
fn rank_mod(rows: &[Vec<i64>], ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p as i64) as u64).collect()).collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pr);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot: Vec<u64> = m[rank].iter().map(|v| mul_mod(*v, inv, p)).collect();
        for (r, row) in m.iter_mut().enumerate() {
            let f = row[c];
            if r != rank && f != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - mul_mod(f, *y, p)) % p;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let ranks: Vec<usize> = PRIMES.iter().map(|p| rank_mod(rows, ncols, *p)).collect();
    assert_eq!(ranks[0], ranks[1], "ranks differ between primes");
    ranks[0]
}

/// Largest dimension of a face of `s` inside `x`.
fn meet_dim(s: &Simplex, x: &BTreeSet<Simplex>) -> Option<i64> {
    let v = s.vertices();
    (1u32..1 << v.len())
        .filter_map(|mask| {
            let face: Vec<_> = (0..v.len()).filter(|i| mask & (1 << i) != 0).map(|i| v[i]).collect();
            let face = Simplex::new(face).unwrap();
            x.contains(&face).then(|| face.dim() as i64)
        })
        .max()
}

fn allowable(s: &Simplex, f: &Filtration, p: &Perversity, n: usize) -> bool {
    (2..=n).all(|k| meet_dim(s, f.skeleton(n - k)).is_none_or(|d| d <= s.dim() as i64 - k as i64 + p.value(k)))
}

/// Dense boundary block: rows indexed by `faces`, columns by `cells`.
fn block(cells: &[Simplex], faces: &[Simplex]) -> Vec<Vec<i64>> {
    let idx: HashMap<&Simplex, usize> = faces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut rows = vec![vec![0i64; cells.len()]; faces.len()];
    for (c, s) in cells.iter().enumerate() {
        for i in 0..s.vertices().len() {
            let mut v = s.vertices().to_vec();
            v.remove(i);
            if let Some(face) = Simplex::new(v) {
                if let Some(&r) = idx.get(&face) {
                    rows[r][c] = if i % 2 == 0 { 1 } else { -1 };
                }
            }
        }
    }
    rows
}

fn brute_force_ih(k: &SimplicialComplex, f: &Filtration, p: &Perversity) -> Vec<usize> {
    let n = k.dim();
    let (good, bad): (Vec<Vec<Simplex>>, Vec<Vec<Simplex>>) =
        (0..=n).map(|i| k.simplices(i).iter().cloned().partition(|s| allowable(s, f, p, n))).unzip();
    // dim IC_i and dim Z_i
    let mut ic = vec![0usize; n + 2];
    let mut z = vec![0usize; n + 2];
    for i in 0..=n {
        if i == 0 {
            ic[0] = good[0].len();
            z[0] = good[0].len();
            continue;
        }
        let all_faces: Vec<Simplex> = k.simplices(i - 1).to_vec();
        z[i] = good[i].len() - rank(&block(&good[i], &all_faces), good[i].len());
        ic[i] = good[i].len() - rank(&block(&good[i], &bad[i - 1]), good[i].len());
    }
    (0..=n).map(|i| z[i] - (ic[i + 1] - z[i + 1])).collect()
}

fn check(space: &StratifiedSpace, perversities: &[Perversity]) {
    for p in perversities {
        let oracle = brute_force_ih(&space.complex, &space.filtration, p);
        let engine = ih_ranks(&space.complex, &space.filtration, p).ranks;
        assert_eq!(engine, oracle, "{} with {p}", space.complex.name());
    }
}

#[test]
fn suspended_torus_once_subdivided() {
    let (k, f) = corpus::sigma_t2();
    let s = StratifiedSpace::new(k, f).subdivide(1);
    let (m, u) = (Perversity::lower_middle(3), Perversity::upper_middle(3));
    assert_eq!(brute_force_ih(&s.complex, &s.filtration, &m), vec![1, 2, 0, 1]);
    assert_eq!(brute_force_ih(&s.complex, &s.filtration, &u), vec![1, 0, 2, 1]);
    check(&s, &[m, u]);
}

#[test]
fn every_perversity_on_small_spaces() {
    let (k, f) = corpus::sigma_s2();
    check(&StratifiedSpace::new(k, f).subdivide(1), &Perversity::all(3));
    let (k, f) = corpus::sigma_sigma_t2();
    check(&StratifiedSpace::new(k, f), &Perversity::all(4));
    check(&StratifiedSpace::manifold(corpus::rp2_6()), &Perversity::all(2));
}

#[test]
fn unsubdivided_suspension_agrees_with_the_engine() {
    let (k, f) = corpus::sigma_t2();
    check(&StratifiedSpace::new(k, f), &Perversity::all(3));
}
