//! Combinatorial resolution into boundary hypersurfaces with iterated
//! fibration data, and the blowdown back to the strata poset.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::strat::{stratum_link, validate_filtration, Filtration, StrataPoset};

/// The hypersurface over one singular stratum: it fibres over the stratum
/// with the resolved link as fibre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationDatum {
    pub stratum: usize,
    pub base_dim: usize,
    pub fibre_dim: usize,
    /// Depth of the stratum.
    pub depth: usize,
    /// Longest chain of strata below the stratum; zero when the base is closed.
    pub base_depth: usize,
    /// Regular strata whose closure contains the stratum.
    pub adjacent_regular: Vec<usize>,
    pub fibre: ResolutionTree,
}

/// A regular stratum, the interior of one component of the resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InteriorComponent {
    pub stratum: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionTree {
    pub dimension: usize,
    pub interior: Vec<InteriorComponent>,
    /// Ordered by `(depth, stratum)`.
    pub hypersurfaces: Vec<FibrationDatum>,
    /// Index pairs `(a, b)` into `hypersurfaces` whose strata satisfy
    /// `Y_a < Y_b` in the frontier order.
    pub frontier: Vec<(usize, usize)>,
    pub depth: usize,
    pub rho_factors: Vec<usize>,
}

impl ResolutionTree {
    /// `a < b` iff the strata are comparable and `dim F_a < dim F_b`.
    pub fn order(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .frontier
            .iter()
            .flat_map(|&(a, b)| [(a, b), (b, a)])
            .filter(|&(a, b)| self.hypersurfaces[a].fibre_dim < self.hypersurfaces[b].fibre_dim)
            .collect();
        out.sort_unstable();
        out
    }

    /// `1 +` the longest chain of hypersurfaces below `a`.
    pub fn hypersurface_depth(&self, a: usize) -> usize {
        let order = self.order();
        let mut memo = vec![None; self.hypersurfaces.len()];
        chain_depth(a, &order, &mut memo)
    }

    pub fn ledger(&self) -> BoundaryDefiningLedger {
        let symbols: Vec<String> = self.rho_factors.iter().map(|s| format!("x_{s}")).collect();
        let rho = if symbols.is_empty() { "1".to_string() } else { symbols.join("*") };
        BoundaryDefiningLedger { symbols, rho, factors: self.rho_factors.clone() }
    }
}

fn chain_depth(a: usize, order: &[(usize, usize)], memo: &mut Vec<Option<usize>>) -> usize {
    if let Some(d) = memo[a] {
        return d;
    }
    let below: Vec<usize> = order.iter().filter(|(_, b)| *b == a).map(|(x, _)| *x).collect();
    let d = 1 + below.into_iter().map(|x| chain_depth(x, order, memo)).max().unwrap_or(0);
    memo[a] = Some(d);
    d
}

/// One formal boundary defining symbol `x_a` per hypersurface and their
/// product `rho`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryDefiningLedger {
    pub symbols: Vec<String>,
    pub rho: String,
    pub factors: Vec<usize>,
}

fn base_depth(poset: &StrataPoset, y: usize) -> usize {
    (0..poset.len()).filter(|&x| poset.less(x, y)).map(|x| 1 + base_depth(poset, x)).max().unwrap_or(0)
}

/// Resolves a validated stratified space. Links need full skeleta, so
/// unsubdivided inputs report `SkeletonNotFull`.
pub fn resolve(k: &SimplicialComplex, f: &Filtration) -> Result<ResolutionTree> {
    let poset = validate_filtration(k, f)?;
    let n = k.dim();
    let mut singular = poset.singular();
    singular.sort_by_key(|y| (poset.stratum_depth(*y), *y));
    let hypersurfaces = singular
        .par_iter()
        .map(|&y| -> Result<FibrationDatum> {
            let link = stratum_link(k, f, &poset, y)?;
            let fibre = resolve(&link.complex, &link.filtration)?;
            Ok(FibrationDatum {
                stratum: y,
                base_dim: poset.strata()[y].dim,
                fibre_dim: link.dim,
                depth: poset.stratum_depth(y),
                base_depth: base_depth(&poset, y),
                adjacent_regular: (0..poset.len()).filter(|&z| poset.is_regular(z) && poset.less(y, z)).collect(),
                fibre,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let interior =
        (0..poset.len()).filter(|&z| poset.is_regular(z)).map(|z| InteriorComponent { stratum: z, dim: n }).collect();
    let mut frontier = Vec::new();
    for (a, ha) in hypersurfaces.iter().enumerate() {
        for (b, hb) in hypersurfaces.iter().enumerate() {
            if poset.less(ha.stratum, hb.stratum) {
                frontier.push((a, b));
            }
        }
    }
    let rho_factors = hypersurfaces.iter().map(|h| h.stratum).collect();
    Ok(ResolutionTree { dimension: n, interior, hypersurfaces, frontier, depth: poset.depth(), rho_factors })
}

/// Outcome of the iterated-fibration checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IfsReport {
    /// Base and fibre dimensions add to `n - 1`.
    pub bookkeeping: bool,
    /// Comparable hypersurfaces have different fibre dimensions.
    pub distinct_fibre_dims: bool,
    /// Minimal hypersurfaces have closed fibres, maximal ones closed bases.
    pub closed_extremes: bool,
    /// Along the order, fibre dimension and stratum depth grow together,
    /// and each hypersurface's chain depth equals its stratum's depth.
    pub depth_consistent: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn validate_ifs(tree: &ResolutionTree) -> IfsReport {
    let mut failures = Vec::new();
    check_tree(tree, "", &mut failures);
    let has = |tag: &str| failures.iter().any(|f: &String| f.contains(tag));
    IfsReport {
        bookkeeping: !has("(bookkeeping)"),
        distinct_fibre_dims: !has("(fibre dimensions)"),
        closed_extremes: !has("(extremes)"),
        depth_consistent: !has("(depth)"),
        passed: failures.is_empty(),
        failures,
    }
}

fn check_tree(tree: &ResolutionTree, path: &str, failures: &mut Vec<String>) {
    let n = tree.dimension;
    let hs = &tree.hypersurfaces;
    for h in hs {
        if h.base_dim + h.fibre_dim + 1 != n {
            failures.push(format!(
                "{path}stratum {}: base {} + fibre {} != {} (bookkeeping)",
                h.stratum,
                h.base_dim,
                h.fibre_dim,
                n - 1
            ));
        }
    }
    for &(a, b) in &tree.frontier {
        if hs[a].fibre_dim == hs[b].fibre_dim {
            failures.push(format!(
                "{path}strata {} and {} are comparable with equal fibre dimension (fibre dimensions)",
                hs[a].stratum, hs[b].stratum
            ));
        }
    }
    let order = tree.order();
    for (a, h) in hs.iter().enumerate() {
        if !order.iter().any(|(_, b)| *b == a) && h.fibre.depth != 0 {
            failures
                .push(format!("{path}minimal hypersurface over stratum {} has a singular fibre (extremes)", h.stratum));
        }
        if !order.iter().any(|(b, _)| *b == a) && h.base_depth != 0 {
            failures
                .push(format!("{path}maximal hypersurface over stratum {} has a singular base (extremes)", h.stratum));
        }
    }
    for &(a, b) in &order {
        if hs[a].depth >= hs[b].depth {
            failures.push(format!(
                "{path}order {} < {} does not increase stratum depth (depth)",
                hs[a].stratum, hs[b].stratum
            ));
        }
    }
    for (a, h) in hs.iter().enumerate() {
        if tree.hypersurface_depth(a) != h.depth {
            failures.push(format!(
                "{path}hypersurface over stratum {} has chain depth {} but stratum depth {} (depth)",
                h.stratum,
                tree.hypersurface_depth(a),
                h.depth
            ));
        }
    }
    let deepest = hs.iter().map(|h| h.depth).max().unwrap_or(0);
    if deepest != tree.depth {
        failures.push(format!("{path}tree depth {} differs from deepest hypersurface {deepest} (depth)", tree.depth));
    }
    for h in hs {
        check_tree(&h.fibre, &format!("{path}fibre of {}: ", h.stratum), failures);
    }
}

/// A strata poset up to the simplices: stratum dimensions by id, the strict
/// frontier relations and the depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledPoset {
    pub dimension: usize,
    pub dims: Vec<usize>,
    pub relations: Vec<(usize, usize)>,
    pub depth: usize,
}

impl LabelledPoset {
    pub fn of(poset: &StrataPoset) -> Self {
        Self {
            dimension: poset.dim(),
            dims: poset.strata().iter().map(|s| s.dim).collect(),
            relations: poset.relations(),
            depth: poset.depth(),
        }
    }
}

/// Collapses every hypersurface to its base. The frontier relation between
/// singular strata is read off the hypersurface order, reversed: larger
/// fibres sit over smaller strata.
pub fn blowdown(tree: &ResolutionTree) -> Result<LabelledPoset> {
    let n = tree.dimension;
    let count = tree.interior.len() + tree.hypersurfaces.len();
    let mut dims = vec![None; count];
    let mut place = |id: usize, d: usize| -> Result<()> {
        match dims.get_mut(id) {
            Some(slot @ None) => {
                *slot = Some(d);
                Ok(())
            }
            Some(Some(_)) => Err(Error::InvalidTree(format!("stratum {id} appears twice"))),
            None => Err(Error::InvalidTree(format!("stratum id {id} out of range 0..{count}"))),
        }
    };
    for c in &tree.interior {
        if c.dim != n {
            return Err(Error::InvalidTree(format!("interior component {} has dimension {}", c.stratum, c.dim)));
        }
        place(c.stratum, n)?;
    }
    for h in &tree.hypersurfaces {
        if h.base_dim + h.fibre_dim + 1 != n {
            return Err(Error::InvalidTree(format!(
                "stratum {}: base and fibre dimensions do not add to {}",
                h.stratum,
                n - 1
            )));
        }
        place(h.stratum, h.base_dim)?;
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.expect("every slot is filled")).collect();
    let regular: BTreeSet<usize> = tree.interior.iter().map(|c| c.stratum).collect();
    let mut relations = BTreeSet::new();
    for &(a, b) in &tree.frontier {
        let (ha, hb) = (&tree.hypersurfaces[a], &tree.hypersurfaces[b]);
        if ha.fibre_dim == hb.fibre_dim {
            return Err(Error::InvalidTree(format!(
                "comparable strata {} and {} have equal fibre dimension",
                ha.stratum, hb.stratum
            )));
        }
    }
    for (a, b) in tree.order() {
        relations.insert((tree.hypersurfaces[b].stratum, tree.hypersurfaces[a].stratum));
    }
    for h in &tree.hypersurfaces {
        for r in &h.adjacent_regular {
            if !regular.contains(r) {
                return Err(Error::InvalidTree(format!(
                    "stratum {} is adjacent to non-regular stratum {r}",
                    h.stratum
                )));
            }
            relations.insert((h.stratum, *r));
        }
    }
    let depth = tree.hypersurfaces.iter().map(|h| h.depth).max().unwrap_or(0);
    Ok(LabelledPoset { dimension: n, dims, relations: relations.into_iter().collect(), depth })
}
