//! Finite pure simplicial complexes and their rational chain complexes.

mod homology;
mod io;
mod orient;
mod pseudomanifold;
mod simplex;
mod subdivide;

use std::collections::{BTreeSet, HashMap};

pub use homology::{boundary_columns, homology_ranks};
pub use io::{load_complex, ComplexDocument, FiltrationDocument};
pub use orient::{orient, OrientedComplex};
pub use pseudomanifold::{check_pseudomanifold, PseudomanifoldReport};
pub use simplex::{Simplex, Vertex};
pub use subdivide::{barycentric_subdivide, Subdivision};

use crate::error::{Error, Result};

/// A pure `n`-dimensional simplicial complex with its full face lattice.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    name: String,
    dim: usize,
    vertices: Vec<Vertex>,
    facets: Vec<Simplex>,
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.facets == other.facets
    }
}

impl SimplicialComplex {
    /// Builds a complex from `n`-simplices. Every facet must have exactly
    /// `n + 1` distinct vertices; duplicates are rejected.
    pub fn from_facets(name: impl Into<String>, dim: usize, facets: Vec<Simplex>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::MalformedInput("complex has no facets".into()));
        }
        if let Some(bad) = facets.iter().find(|f| f.dim() != dim) {
            return Err(Error::MalformedInput(format!(
                "facet {bad} has dimension {} but the complex has dimension {dim}",
                bad.dim()
            )));
        }
        let mut sorted = facets;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!("duplicate facet {}", w[0])));
        }
        Ok(Self::build(name.into(), dim, sorted))
    }

    /// Builds a complex from arbitrary generating simplices, keeping the
    /// maximal ones. Fails with `NonPure` if they differ in dimension.
    pub fn from_simplices(name: impl Into<String>, simplices: Vec<Simplex>) -> Result<Self> {
        let dim = simplices
            .iter()
            .map(Simplex::dim)
            .max()
            .ok_or_else(|| Error::MalformedInput("complex has no simplices".into()))?;
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        let top: Vec<Simplex> = set.iter().filter(|s| s.dim() == dim).cloned().collect();
        let covered: BTreeSet<Simplex> = top.iter().flat_map(|f| f.faces().collect::<Vec<_>>()).collect();
        if let Some(stray) = set.iter().find(|s| !covered.contains(*s)) {
            return Err(Error::NonPure(format!("maximal simplex {stray} has dimension {} < {dim}", stray.dim())));
        }
        Ok(Self::build(name.into(), dim, top))
    }

    fn build(name: String, dim: usize, facets: Vec<Simplex>) -> Self {
        let mut by_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); dim + 1];
        for f in &facets {
            for face in f.faces() {
                by_dim[face.dim()].insert(face);
            }
        }
        let faces: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = faces.iter().map(|fs| fs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let vertices = faces[0].iter().map(|s| s.vertices()[0]).collect();
        Self { name, dim, vertices, facets, faces, index }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// All `k`-simplices in lexicographic order (empty beyond the dimension).
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().enumerate().map(|(k, f)| if k % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) }).sum()
    }

    pub fn num_simplices(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Simplices `tau` with `v` not in `tau` and `tau * v` in the complex.
    pub fn vertex_link_simplices(&self, v: Vertex) -> Vec<Simplex> {
        self.faces
            .iter()
            .skip(1)
            .flatten()
            .filter(|s| s.contains(v))
            .filter_map(|s| s.minus(&Simplex::vertex(v)))
            .collect()
    }

    /// Connected components of the 1-skeleton, each as sorted vertex labels.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let pos: HashMap<Vertex, usize> = self.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for e in self.simplices(1) {
            uf.union(pos[&e.vertices()[0]], pos[&e.vertices()[1]]);
        }
        let mut groups: HashMap<usize, Vec<Vertex>> = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            groups.entry(uf.find(i)).or_default().push(*v);
        }
        let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Relabels every vertex through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        let facets = self
            .facets
            .iter()
            .map(|s| {
                Simplex::new(s.vertices().iter().map(|v| f(*v)).collect())
                    .ok_or_else(|| Error::MalformedInput("relabelling is not injective".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(self.name.clone(), self.dim, facets)
    }
}

/// Plain union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so component representatives are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
