use std::collections::{BTreeSet, HashSet};

use super::{Filtration, StrataPoset};
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::ih::{ih_ranks, Perversity};

/// The link of a singular stratum with its induced filtration.
#[derive(Clone, Debug)]
pub struct StratifiedLink {
    pub stratum: usize,
    /// Vertex of the stratum whose link this is.
    pub sample_vertex: Vertex,
    /// `n - dim Y - 1`.
    pub dim: usize,
    pub complex: SimplicialComplex,
    pub filtration: Filtration,
}

/// Link of `stratum` at vertex `v`: the full subcomplex of `lk(v)` on the
/// vertices of strata above it, filtered by `L ∩ X_{j+d+1}`.
fn link_at(
    k: &SimplicialComplex,
    f: &Filtration,
    poset: &StrataPoset,
    stratum: usize,
    v: Vertex,
) -> Result<StratifiedLink> {
    let n = k.dim();
    let d = poset.strata()[stratum].dim;
    let expected = n - d - 1;
    let upward: HashSet<Vertex> = k
        .vertices()
        .iter()
        .copied()
        .filter(|w| {
            let z = poset.stratum_of(&Simplex::vertex(*w)).expect("every vertex has a stratum");
            poset.less(stratum, z)
        })
        .collect();
    let simplices: Vec<Simplex> =
        k.vertex_link_simplices(v).into_iter().filter(|s| s.vertices().iter().all(|w| upward.contains(w))).collect();
    let mismatch = |found: String| Error::LinkDimensionMismatch { stratum, expected, found };
    if simplices.is_empty() {
        return Err(mismatch("empty".into()));
    }
    let name = format!("lk({}, {v})", k.name());
    let complex =
        SimplicialComplex::from_simplices(name, simplices).map_err(|e| mismatch(format!("not pure ({e})")))?;
    if complex.dim() != expected {
        return Err(mismatch(complex.dim().to_string()));
    }
    let skeleta: Vec<BTreeSet<Simplex>> = (0..expected)
        .map(|j| {
            (0..=j).flat_map(|i| complex.simplices(i).iter()).filter(|s| f.contains(j + d + 1, s)).cloned().collect()
        })
        .collect();
    let filtration = Filtration::from_skeleta(&complex, skeleta)?;
    Ok(StratifiedLink { stratum, sample_vertex: v, dim: expected, complex, filtration })
}

/// Up to three sample vertices: first, middle and last.
fn samples<T: Clone>(items: &[T]) -> Vec<T> {
    let mut idx = vec![0, items.len() / 2, items.len() - 1];
    idx.dedup();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

/// The link of a singular stratum of dimension `d`.
///
/// A vertex of the stratum is usable when the full subcomplex of its link on
/// the vertices of higher strata is pure of dimension `n - d - 1`; after a
/// barycentric subdivision the barycentres of the stratum's `d`-simplices
/// always qualify. Links at up to three usable vertices (first, middle and
/// last) are compared through their lower-middle intersection homology, and
/// the first is returned.
pub fn stratum_link(
    k: &SimplicialComplex,
    f: &Filtration,
    poset: &StrataPoset,
    stratum: usize,
) -> Result<StratifiedLink> {
    let y =
        poset.strata().get(stratum).ok_or_else(|| Error::MalformedInput(format!("no stratum with id {stratum}")))?;
    if poset.is_regular(stratum) {
        return Err(Error::InvalidStratum(stratum));
    }
    if let Some(j) = f.first_non_full(k) {
        return Err(Error::SkeletonNotFull(j));
    }
    if y.vertices.is_empty() {
        return Err(Error::NoVertexInStratum(stratum));
    }
    let mut first_error = None;
    let mut usable = Vec::new();
    for v in &y.vertices {
        match link_at(k, f, poset, stratum, *v) {
            Ok(l) => usable.push(l),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    if usable.is_empty() {
        return Err(first_error.expect("the stratum has a vertex"));
    }
    let chosen = samples(&usable);
    if chosen.len() > 1 {
        let ranks: Vec<Vec<usize>> = chosen
            .iter()
            .map(|l| ih_ranks(&l.complex, &l.filtration, &Perversity::lower_middle(l.dim)).ranks)
            .collect();
        if ranks.iter().any(|r| *r != ranks[0]) {
            return Err(Error::LinkInconsistent(stratum));
        }
    }
    Ok(usable.swap_remove(0))
}
