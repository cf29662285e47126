use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::Perversity;
use crate::complex::{boundary_columns, Simplex, SimplicialComplex};
use crate::linalg::{axpy, reduce_columns, Rational, SparseRationalMatrix, SparseVec};
use crate::strat::Filtration;

/// Whether the `i`-simplex `s` satisfies `dim(s ∩ X_{n-k}) <= i - k + p(k)`
/// for every `k` in `2..=n`.
pub fn is_allowable(f: &Filtration, p: &Perversity, s: &Simplex) -> bool {
    let n = f.dim();
    let i = s.dim() as i64;
    (2..=n).all(|k| match f.intersection_dim(n - k, s) {
        None => true,
        Some(d) => d as i64 <= i - k as i64 + p.value(k),
    })
}

/// Indices into `k.simplices(i)` of the allowable `i`-simplices.
pub fn allowable_indices(k: &SimplicialComplex, f: &Filtration, p: &Perversity, i: usize) -> Vec<usize> {
    let n = k.dim();
    assert_eq!(p.dimension(), n, "perversity dimension must match the complex");
    let singular = if n >= 2 { Some(f.skeleton(n - 2)) } else { None };
    let singular_vertex =
        |s: &Simplex| singular.is_some_and(|x| s.vertices().iter().any(|v| x.contains(&Simplex::vertex(*v))));
    k.simplices(i)
        .iter()
        .enumerate()
        .filter(|(_, s)| !singular_vertex(s) || is_allowable(f, p, s))
        .map(|(j, _)| j)
        .collect()
}

pub fn allowable_simplices(k: &SimplicialComplex, f: &Filtration, p: &Perversity, i: usize) -> Vec<Simplex> {
    allowable_indices(k, f, p, i).into_iter().map(|j| k.simplices(i)[j].clone()).collect()
}

/// The allowable chain complex `IC_*` with explicit bases.
///
/// The basis of `IC_i` is the echelon kernel basis of the boundary projected
/// onto the non-allowable `(i-1)`-simplices. Each basis chain is stored in
/// local coordinates over the allowable `i`-simplices and has a unit
/// coefficient at its largest index, which is distinct across the basis.
#[derive(Clone, Debug)]
pub struct IntersectionChainComplex {
    allowable: Vec<Vec<usize>>,
    basis: Vec<Vec<(usize, SparseVec)>>,
    /// Column `b` of `differential[i]` is the boundary of basis chain `b`
    /// of `IC_i` written in the basis of `IC_{i-1}`.
    differential: Vec<Vec<SparseVec>>,
}

impl IntersectionChainComplex {
    pub fn dim(&self) -> usize {
        self.allowable.len() - 1
    }

    /// Dimensions of `IC_0, ..., IC_n`.
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Indices of the allowable `i`-simplices.
    pub fn allowable(&self, i: usize) -> &[usize] {
        &self.allowable[i]
    }

    /// Basis chains of `IC_i` over all `i`-simplices of the complex.
    pub fn basis_chains(&self, i: usize) -> Vec<SparseVec> {
        self.basis[i].iter().map(|(_, v)| self.globalize(i, v)).collect()
    }

    fn globalize(&self, i: usize, local: &SparseVec) -> SparseVec {
        local.iter().map(|(a, c)| (self.allowable[i][*a], c.clone())).collect()
    }

    /// Matrix of `∂_i : IC_i -> IC_{i-1}` in the chosen bases.
    pub fn differential_matrix(&self, i: usize) -> SparseRationalMatrix {
        let rows = if i == 0 { 0 } else { self.basis[i - 1].len() };
        SparseRationalMatrix::from_columns(rows, &self.differential[i])
    }
}

pub fn intersection_chain_complex(k: &SimplicialComplex, f: &Filtration, p: &Perversity) -> IntersectionChainComplex {
    let n = k.dim();
    let allowable: Vec<Vec<usize>> = (0..=n).into_par_iter().map(|i| allowable_indices(k, f, p, i)).collect();

    let basis: Vec<Vec<(usize, SparseVec)>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                return (0..allowable[0].len()).map(|a| (a, vec![(a, Rational::ONE)])).collect();
            }
            let nrows = k.simplices(i - 1).len();
            let mut is_allowed = vec![false; nrows];
            for r in &allowable[i - 1] {
                is_allowed[*r] = true;
            }
            let all = boundary_columns(k, i);
            let projected: Vec<SparseVec> = allowable[i]
                .iter()
                .map(|j| all[*j].iter().filter(|(r, _)| !is_allowed[*r]).cloned().collect())
                .collect();
            reduce_columns(&projected, nrows, None, true).cycles
        })
        .collect();

    let differential: Vec<Vec<SparseVec>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                return vec![Vec::new(); basis[0].len()];
            }
            let all = boundary_columns(k, i);
            let mut local_of = vec![usize::MAX; k.simplices(i - 1).len()];
            for (a, r) in allowable[i - 1].iter().enumerate() {
                local_of[*r] = a;
            }
            let lead_of: BTreeMap<usize, usize> =
                basis[i - 1].iter().enumerate().map(|(b, (lead, _))| (*lead, b)).collect();
            basis[i]
                .iter()
                .map(|(_, chain)| {
                    let mut image: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (a, c) in chain {
                        for (r, e) in &all[allowable[i][*a]] {
                            let slot = image.entry(*r).or_insert(Rational::ZERO);
                            *slot = &*slot + &(c * e);
                        }
                    }
                    let local: BTreeMap<usize, Rational> = image
                        .into_iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(r, v)| {
                            assert_ne!(local_of[r], usize::MAX, "boundary of an allowable chain left IC");
                            (local_of[r], v)
                        })
                        .collect();
                    express_in_basis(local, &basis[i - 1], &lead_of)
                })
                .collect()
        })
        .collect();

    IntersectionChainComplex { allowable, basis, differential }
}

/// Writes a chain lying in the span of `basis` in basis coordinates by
/// repeatedly cancelling its largest index against the basis vector leading there.
fn express_in_basis(
    mut chain: BTreeMap<usize, Rational>,
    basis: &[(usize, SparseVec)],
    lead_of: &BTreeMap<usize, usize>,
) -> SparseVec {
    let mut coords = Vec::new();
    while let Some((top, c)) = chain.pop_last() {
        let b = *lead_of.get(&top).expect("chain lies in the span of the basis");
        for (idx, v) in &basis[b].1 {
            if *idx == top {
                continue;
            }
            let slot = chain.entry(*idx).or_insert(Rational::ZERO);
            *slot = &*slot - &(&c * v);
            if slot.is_zero() {
                chain.remove(idx);
            }
        }
        coords.push((b, c));
    }
    coords.sort_by_key(|(b, _)| *b);
    coords
}

/// Intersection homology ranks and cycle representatives.
#[derive(Clone, Debug, Serialize)]
pub struct IHResult {
    pub perversity: Perversity,
    pub ranks: Vec<usize>,
    /// Per degree, chains over `k.simplices(i)` whose classes form a basis.
    #[serde(skip)]
    pub cycles: Vec<Vec<SparseVec>>,
    /// Dimensions of the allowable chain spaces `IC_i`.
    pub ic_dims: Vec<usize>,
}

/// `IH_i = ker ∂_i / im ∂_{i+1}` on the allowable chain complex.
///
/// Each differential is column-reduced from the top degree down. Columns
/// of `∂_i` whose index is a pivot row of the reduced `∂_{i+1}` are skipped,
/// and the remaining kernel vectors represent a basis of homology.
pub fn ih_ranks(k: &SimplicialComplex, f: &Filtration, p: &Perversity) -> IHResult {
    let ic = intersection_chain_complex(k, f, p);
    let n = k.dim();
    let dims = ic.dims();
    let mut ranks = vec![0usize; n + 1];
    let mut cycles = vec![Vec::new(); n + 1];
    let mut cleared_by_above: Vec<bool> = vec![false; dims[n]];
    let mut rank_above = 0usize;
    for i in (0..=n).rev() {
        let nrows = if i == 0 { 0 } else { dims[i - 1] };
        let red = reduce_columns(&ic.differential[i], nrows, Some(&cleared_by_above), true);
        let rank_here = red.rank();
        ranks[i] = red.cycles.len();
        debug_assert_eq!(ranks[i], dims[i] - rank_here - rank_above);
        cycles[i] = red
            .cycles
            .iter()
            .map(|(_, coords)| {
                let mut local: SparseVec = Vec::new();
                for (b, c) in coords {
                    local = axpy(&local, c, &ic.basis[i][*b].1);
                }
                ic.globalize(i, &local)
            })
            .collect();
        if i > 0 {
            cleared_by_above = vec![false; dims[i - 1]];
            for r in red.low.iter().flatten() {
                cleared_by_above[*r] = true;
            }
        }
        rank_above = rank_here;
    }
    IHResult { perversity: p.clone(), ranks, cycles, ic_dims: dims }
}

/// Per-degree comparison of two intersection homology rank vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IhComparison {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub equal: Vec<bool>,
    pub all_equal: bool,
}

impl IhComparison {
    pub fn from_ranks(first: Vec<usize>, second: Vec<usize>) -> Self {
        let equal: Vec<bool> = first.iter().zip(&second).map(|(a, b)| a == b).collect();
        let all_equal = first.len() == second.len() && equal.iter().all(|e| *e);
        Self { first, second, equal, all_equal }
    }

    /// Degrees where the ranks differ.
    pub fn differing_degrees(&self) -> Vec<usize> {
        self.equal.iter().enumerate().filter(|(_, e)| !**e).map(|(i, _)| i).collect()
    }
}

pub fn ih_compare(k: &SimplicialComplex, f: &Filtration, p: &Perversity, q: &Perversity) -> IhComparison {
    let (a, b) = rayon::join(|| ih_ranks(k, f, p), || ih_ranks(k, f, q));
    IhComparison::from_ranks(a.ranks, b.ranks)
}
