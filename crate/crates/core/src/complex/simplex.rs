use std::fmt;

use serde::{Deserialize, Serialize};

/// Vertex label. Labels are arbitrary integers.
pub type Vertex = i64;

/// A simplex as its strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Canonicalises `vertices`; `None` if a vertex repeats or the list is empty.
    pub fn new(mut vertices: Vec<Vertex>) -> Option<Self> {
        if vertices.is_empty() {
            return None;
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Simplex(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Codimension-one faces paired with the index of the omitted vertex.
    pub fn boundary(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |i| {
            let mut f = self.0.clone();
            f.remove(i);
            (i, Simplex(f))
        })
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n))
            .map(move |mask| Simplex((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect()))
    }

    /// Front face on the first `k + 1` vertices.
    pub fn front(&self, k: usize) -> Simplex {
        Simplex(self.0[..=k].to_vec())
    }

    /// Back face on the last `k + 1` vertices.
    pub fn back(&self, k: usize) -> Simplex {
        Simplex(self.0[self.0.len() - 1 - k..].to_vec())
    }

    /// Vertices of `self` not in `other`, as a simplex; `None` if empty.
    pub fn minus(&self, other: &Simplex) -> Option<Simplex> {
        let rest: Vec<Vertex> = self.0.iter().copied().filter(|v| !other.contains(*v)).collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    /// Join with a disjoint simplex.
    pub fn join(&self, other: &Simplex) -> Option<Simplex> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v).filter(|s| s.0.len() == self.0.len() + other.0.len())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_rejects_repeats() {
        assert_eq!(Simplex::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert!(Simplex::new(vec![1, 1]).is_none());
        assert!(Simplex::new(vec![]).is_none());
    }

    #[test]
    fn boundary_omits_in_order() {
        let s = Simplex::new(vec![0, 1, 2]).unwrap();
        let b: Vec<_> = s.boundary().map(|(i, f)| (i, f.vertices().to_vec())).collect();
        assert_eq!(b, vec![(0, vec![1, 2]), (1, vec![0, 2]), (2, vec![0, 1])]);
        assert_eq!(Simplex::vertex(4).boundary().count(), 0);
    }

    #[test]
    fn faces_and_front_back() {
        let s = Simplex::new(vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(s.faces().count(), 31);
        assert_eq!(s.front(2).vertices(), &[0, 1, 2]);
        assert_eq!(s.back(2).vertices(), &[2, 3, 4]);
    }
}
