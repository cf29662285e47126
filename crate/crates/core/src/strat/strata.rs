use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::Filtration;
use crate::complex::{Simplex, SimplicialComplex, UnionFind, Vertex};
use crate::error::{Error, Result};

/// A connected component of some `X_j \ X_{j-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub id: usize,
    pub dim: usize,
    /// Open simplices of the stratum, sorted by dimension then lexicographically.
    pub simplices: Vec<Simplex>,
    pub vertices: Vec<Vertex>,
}

/// Strata with their frontier order and depths.
#[derive(Clone, Debug)]
pub struct StrataPoset {
    dim: usize,
    strata: Vec<Stratum>,
    less: Vec<Vec<bool>>,
    depth: Vec<usize>,
    stratum_of: HashMap<Simplex, usize>,
}

impl StrataPoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// Whether `y < z` in the frontier order, i.e. `y` lies in the closure of `z`.
    pub fn less(&self, y: usize, z: usize) -> bool {
        self.less[y][z]
    }

    /// All pairs `(y, z)` with `y < z`, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let m = self.strata.len();
        (0..m).flat_map(|y| (0..m).filter(move |z| self.less[y][*z]).map(move |z| (y, z))).collect()
    }

    /// Length of the longest chain `y = y_0 < y_1 < ... < y_k`; regular strata
    /// have depth 0.
    pub fn stratum_depth(&self, y: usize) -> usize {
        self.depth[y]
    }

    /// Depth of the space: the largest stratum depth.
    pub fn depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn stratum_of(&self, s: &Simplex) -> Option<usize> {
        self.stratum_of.get(s).copied()
    }

    pub fn is_regular(&self, y: usize) -> bool {
        self.strata[y].dim == self.dim
    }

    /// Ids of the strata of dimension below `n`.
    pub fn singular(&self) -> Vec<usize> {
        (0..self.strata.len()).filter(|y| !self.is_regular(*y)).collect()
    }
}

/// Splits `K` into strata and checks the stratified pseudomanifold axioms
/// the combinatorics can see: density of the regular part, no codimension-one
/// stratum, skeleton dimensions, and the frontier condition.
pub fn validate_filtration(k: &SimplicialComplex, f: &Filtration) -> Result<StrataPoset> {
    let n = k.dim();
    if f.dim() != n {
        return Err(Error::MalformedInput(format!("filtration of dimension {} on a {n}-complex", f.dim())));
    }
    if n >= 2 {
        let singular = f.skeleton(n - 2);
        let mut closure: BTreeSet<Simplex> = BTreeSet::new();
        for fct in k.facets().iter().filter(|s| !singular.contains(*s)) {
            closure.extend(fct.faces());
        }
        if let Some(s) = singular.iter().find(|s| !closure.contains(*s)) {
            return Err(Error::NotDense(format!("{s} is not in the closure of the regular part")));
        }
    }
    if n >= 1 {
        let top = f.skeleton(n - 1);
        let below = if n >= 2 { Some(f.skeleton(n - 2)) } else { None };
        if let Some(s) = top.iter().find(|s| below.is_none_or(|b| !b.contains(*s)) || s.dim() + 1 >= n) {
            return Err(Error::CodimOneStratum(format!(
                "{s} lies in skeleton {} but not in skeleton {}",
                n - 1,
                n.saturating_sub(2)
            )));
        }
    }
    for j in 0..n {
        if let Some(s) = f.skeleton(j).iter().find(|s| s.dim() > j) {
            return Err(Error::MalformedInput(format!("skeleton {j} contains the {}-simplex {s}", s.dim())));
        }
    }

    let level = |s: &Simplex| (0..n).find(|j| f.contains(*j, s)).unwrap_or(n);
    let all: Vec<&Simplex> = (0..=n).flat_map(|d| k.simplices(d).iter()).collect();
    let pos: HashMap<&Simplex, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let levels: Vec<usize> = all.iter().map(|s| level(s)).collect();
    let mut uf = UnionFind::new(all.len());
    for (i, s) in all.iter().enumerate() {
        for (_, face) in s.boundary() {
            let j = pos[&face];
            if levels[j] == levels[i] {
                uf.union(i, j);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..all.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut strata: Vec<Stratum> = groups
        .into_values()
        .map(|members| {
            let dim = levels[members[0]];
            let mut simplices: Vec<Simplex> = members.iter().map(|i| all[*i].clone()).collect();
            simplices.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
            let vertices = simplices.iter().filter(|s| s.dim() == 0).map(|s| s.vertices()[0]).collect();
            Stratum { id: 0, dim, simplices, vertices }
        })
        .collect();
    strata.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.simplices.iter().min().cmp(&b.simplices.iter().min())));
    for (id, s) in strata.iter_mut().enumerate() {
        s.id = id;
        if !s.simplices.iter().any(|t| t.dim() == s.dim) {
            return Err(Error::MalformedInput(format!(
                "stratum of skeleton {} containing {} has no {}-simplex",
                s.dim, s.simplices[0], s.dim
            )));
        }
    }
    let stratum_of: HashMap<Simplex, usize> =
        strata.iter().flat_map(|s| s.simplices.iter().map(move |t| (t.clone(), s.id))).collect();

    // strata whose closure contains each simplex
    let mut above: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); all.len()];
    for s in &all {
        let z = stratum_of[*s];
        for face in s.faces() {
            above[pos[&face]].insert(z);
        }
    }
    let m = strata.len();
    let mut less = vec![vec![false; m]; m];
    for y in &strata {
        let first = &above[pos[&y.simplices[0]]];
        for t in &y.simplices[1..] {
            let here = &above[pos[t]];
            if let Some(z) = first.symmetric_difference(here).next() {
                return Err(Error::FrontierViolation { lower: y.id, upper: *z });
            }
        }
        for z in first.iter().filter(|z| **z != y.id) {
            less[y.id][*z] = true;
        }
    }

    // strata are sorted by decreasing dimension, and y < z forces dim y < dim z
    let mut depth = vec![0usize; m];
    for y in 0..m {
        depth[y] = (0..y).filter(|z| less[y][*z]).map(|z| depth[z] + 1).max().unwrap_or(0);
    }
    Ok(StrataPoset { dim: n, strata, less, depth, stratum_of })
}
