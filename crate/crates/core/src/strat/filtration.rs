use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::complex::{ComplexDocument, FiltrationDocument, Simplex, SimplicialComplex, Subdivision, Vertex};
use crate::error::{Error, Result};

/// Closed skeleta `X_0 ⊆ X_1 ⊆ ... ⊆ X_{n-1}`; `X_n` is the whole complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    dim: usize,
    skeleta: Vec<BTreeSet<Simplex>>,
}

fn close(into: &mut BTreeSet<Simplex>, s: &Simplex) {
    for f in s.faces() {
        into.insert(f);
    }
}

impl Filtration {
    /// All proper skeleta empty.
    pub fn trivial(dim: usize) -> Self {
        Self { dim, skeleta: vec![BTreeSet::new(); dim] }
    }

    /// Builds skeleta from generating simplices. `X_j` is the closure of the
    /// simplices listed for every key `<= j`, so the skeleta nest by
    /// construction. Every simplex must belong to `k`.
    pub fn from_generators(k: &SimplicialComplex, generators: &BTreeMap<usize, Vec<Simplex>>) -> Result<Self> {
        let n = k.dim();
        let mut skeleta = vec![BTreeSet::new(); n];
        let mut acc = BTreeSet::new();
        for (j, skeleton) in skeleta.iter_mut().enumerate() {
            if let Some(gens) = generators.get(&j) {
                for s in gens {
                    if !k.contains(s) {
                        return Err(Error::MalformedInput(format!(
                            "skeleton {j} lists {s}, which is not in the complex"
                        )));
                    }
                    close(&mut acc, s);
                }
            }
            *skeleton = acc.clone();
        }
        if let Some(j) = generators.keys().find(|j| **j >= n) {
            return Err(Error::MalformedInput(format!("skeleton key {j} must be below the dimension {n}")));
        }
        Ok(Self { dim: n, skeleta })
    }

    /// Explicit skeleta, which must be closed, nested and inside `k`.
    pub fn from_skeleta(k: &SimplicialComplex, skeleta: Vec<BTreeSet<Simplex>>) -> Result<Self> {
        let n = k.dim();
        if skeleta.len() != n {
            return Err(Error::MalformedInput(format!("expected {n} proper skeleta, got {}", skeleta.len())));
        }
        for (j, x) in skeleta.iter().enumerate() {
            for s in x {
                if !k.contains(s) {
                    return Err(Error::MalformedInput(format!("skeleton {j} contains {s}, not in the complex")));
                }
                if s.faces().any(|f| !x.contains(&f)) {
                    return Err(Error::MalformedInput(format!("skeleton {j} is not closed at {s}")));
                }
                if j + 1 < n && !skeleta[j + 1].contains(s) {
                    return Err(Error::MalformedInput(format!("skeleton {j} is not contained in skeleton {}", j + 1)));
                }
            }
        }
        Ok(Self { dim: n, skeleta })
    }

    pub fn from_document(k: &SimplicialComplex, doc: &FiltrationDocument) -> Result<Self> {
        let mut generators = BTreeMap::new();
        for (key, list) in &doc.skeleta {
            let j: usize =
                key.parse().map_err(|_| Error::MalformedInput(format!("skeleton key `{key}` is not a dimension")))?;
            let simplices = list
                .iter()
                .map(|raw| {
                    Simplex::new(raw.clone())
                        .ok_or_else(|| Error::MalformedInput(format!("skeleton {j}: bad simplex {raw:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            generators.insert(j, simplices);
        }
        Self::from_generators(k, &generators)
    }

    /// Generators of each nonempty skeleton (its maximal simplices).
    pub fn to_document(&self) -> FiltrationDocument {
        let mut skeleta = BTreeMap::new();
        for (j, x) in self.skeleta.iter().enumerate() {
            let maximal: Vec<Vec<Vertex>> = x
                .iter()
                .filter(|s| !x.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t)))
                .map(|s| s.vertices().to_vec())
                .collect();
            if !maximal.is_empty() {
                skeleta.insert(j.to_string(), maximal);
            }
        }
        FiltrationDocument { skeleta }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `X_j` for `j < n`.
    pub fn skeleton(&self, j: usize) -> &BTreeSet<Simplex> {
        &self.skeleta[j]
    }

    /// Whether `s ∈ X_j`; every simplex lies in `X_j` for `j >= n`.
    pub fn contains(&self, j: usize, s: &Simplex) -> bool {
        j >= self.dim || self.skeleta[j].contains(s)
    }

    pub fn is_trivial(&self) -> bool {
        self.skeleta.iter().all(BTreeSet::is_empty)
    }

    /// The singular set `X_{n-2}` (empty when `n < 2`).
    pub fn singular_set(&self) -> BTreeSet<Simplex> {
        if self.dim >= 2 {
            self.skeleta[self.dim - 2].clone()
        } else {
            BTreeSet::new()
        }
    }

    /// Smallest `j` with `v ∈ X_j`, or `n` for regular vertices.
    pub fn vertex_levels(&self) -> HashMap<Vertex, usize> {
        let mut levels = HashMap::new();
        for (j, x) in self.skeleta.iter().enumerate().rev() {
            for s in x.iter().filter(|s| s.dim() == 0) {
                levels.insert(s.vertices()[0], j);
            }
        }
        levels
    }

    /// Dimension of the closed simplex `s` intersected with `X_j`, i.e. of
    /// its largest face in `X_j`; `None` for the empty intersection.
    pub fn intersection_dim(&self, j: usize, s: &Simplex) -> Option<usize> {
        if j >= self.dim {
            return Some(s.dim());
        }
        let x = &self.skeleta[j];
        let inside: Vec<Vertex> = s.vertices().iter().copied().filter(|v| x.contains(&Simplex::vertex(*v))).collect();
        if inside.is_empty() {
            return None;
        }
        let span = Simplex::new(inside.clone()).expect("distinct vertices");
        if x.contains(&span) {
            return Some(span.dim());
        }
        span.faces().filter(|f| x.contains(f)).map(|f| f.dim()).max()
    }

    /// First skeleton that is not a full subcomplex of `k`, if any.
    pub fn first_non_full(&self, k: &SimplicialComplex) -> Option<usize> {
        (0..self.dim).find(|&j| {
            let x = &self.skeleta[j];
            let verts: HashSet<Vertex> = x.iter().filter(|s| s.dim() == 0).map(|s| s.vertices()[0]).collect();
            if verts.is_empty() {
                return false;
            }
            (1..=k.dim()).any(|d| {
                k.simplices(d).iter().any(|s| s.vertices().iter().all(|v| verts.contains(v)) && !x.contains(s))
            })
        })
    }

    /// Transports the skeleta through a barycentric subdivision: the image
    /// of `X_j` is the full subcomplex on the barycentres of its simplices.
    pub fn subdivide(&self, sub: &Subdivision) -> Filtration {
        let sd = &sub.complex;
        let skeleta = self
            .skeleta
            .iter()
            .map(|x| {
                if x.is_empty() {
                    return BTreeSet::new();
                }
                let labels: HashSet<Vertex> = x.iter().map(|s| sub.barycentre[s]).collect();
                (0..=sd.dim())
                    .flat_map(|d| sd.simplices(d).iter())
                    .filter(|s| s.vertices().iter().all(|v| labels.contains(v)))
                    .cloned()
                    .collect()
            })
            .collect();
        Filtration { dim: self.dim, skeleta }
    }
}

/// A complex paired with a filtration of the same dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct StratifiedSpace {
    pub complex: SimplicialComplex,
    pub filtration: Filtration,
}

impl StratifiedSpace {
    pub fn new(complex: SimplicialComplex, filtration: Filtration) -> Self {
        assert_eq!(complex.dim(), filtration.dim(), "filtration dimension mismatch");
        Self { complex, filtration }
    }

    pub fn manifold(complex: SimplicialComplex) -> Self {
        let n = complex.dim();
        Self { complex, filtration: Filtration::trivial(n) }
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn from_document(doc: &ComplexDocument) -> Result<Self> {
        let complex = crate::complex::load_complex(doc)?;
        let filtration = match &doc.filtration {
            Some(f) => Filtration::from_document(&complex, f)?,
            None => Filtration::trivial(complex.dim()),
        };
        Ok(Self { complex, filtration })
    }

    pub fn to_document(&self) -> ComplexDocument {
        let mut doc = ComplexDocument::from_complex(&self.complex);
        if !self.filtration.is_trivial() {
            doc.filtration = Some(self.filtration.to_document());
        }
        doc
    }

    /// `r`-fold barycentric subdivision with the filtration carried along.
    pub fn subdivide(&self, r: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..r {
            let sub = Subdivision::of(&out.complex);
            out = Self { filtration: out.filtration.subdivide(&sub), complex: sub.complex };
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn generators_accumulate_upward() {
        let (k, f) = corpus::sigma_t2();
        assert_eq!(f.skeleton(0).len(), 2);
        assert_eq!(f.skeleton(1), f.skeleton(0));
        assert_eq!(f.vertex_levels().len(), 2);
        assert!(Filtration::from_generators(&k, &BTreeMap::from([(3, vec![])])).is_err());
    }

    #[test]
    fn foreign_simplex_rejected() {
        let k = corpus::torus7();
        let g = BTreeMap::from([(0, vec![Simplex::vertex(99)])]);
        assert_eq!(Filtration::from_generators(&k, &g).unwrap_err().code(), "MalformedInput");
    }

    #[test]
    fn intersection_dimension_without_fullness() {
        // X_1 = boundary of triangle 012 inside the full triangle: not full
        let k = corpus::simplex(2);
        let edges: Vec<Simplex> = [[0, 1], [0, 2], [1, 2]].iter().map(|e| Simplex::new(e.to_vec()).unwrap()).collect();
        let mut x: BTreeSet<Simplex> = BTreeSet::new();
        for e in &edges {
            x.extend(e.faces());
        }
        let f = Filtration { dim: 2, skeleta: vec![BTreeSet::new(), x] };
        let tri = &k.facets()[0];
        assert_eq!(f.intersection_dim(1, tri), Some(1));
        assert_eq!(f.first_non_full(&k), Some(1));
        let sub = Subdivision::of(&k);
        assert_eq!(f.subdivide(&sub).first_non_full(&sub.complex), None);
    }

    #[test]
    fn document_round_trip() {
        let (k, f) = corpus::sigma_t2();
        let space = StratifiedSpace::new(k, f);
        let back = StratifiedSpace::from_document(&space.to_document()).unwrap();
        assert_eq!(back, space);
    }
}
