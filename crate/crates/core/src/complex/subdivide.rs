use std::collections::HashMap;

use itertools::Itertools;

use super::{Simplex, SimplicialComplex, Vertex};

/// One barycentric subdivision together with its vertex map.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// Barycentre label of every simplex of the original complex. Original
    /// vertices keep their labels; new ones are numbered upward from the
    /// largest original label in (dimension, lexicographic) order.
    pub barycentre: HashMap<Simplex, Vertex>,
}

impl Subdivision {
    pub fn of(k: &SimplicialComplex) -> Self {
        let max = *k.vertices().last().expect("complexes are nonempty");
        let mut barycentre = HashMap::with_capacity(k.num_simplices());
        let mut next = max;
        for d in 0..=k.dim() {
            for s in k.simplices(d) {
                let label = if d == 0 {
                    s.vertices()[0]
                } else {
                    next += 1;
                    next
                };
                barycentre.insert(s.clone(), label);
            }
        }
        let mut facets = Vec::with_capacity(k.facets().len() * (1..=k.dim() + 1).product::<usize>());
        for f in k.facets() {
            for perm in f.vertices().iter().copied().permutations(f.vertices().len()) {
                // flag {p0} < {p0,p1} < ... < F
                let chain: Vec<Vertex> = (1..=perm.len())
                    .map(|len| {
                        let mut face = perm[..len].to_vec();
                        face.sort_unstable();
                        barycentre[&Simplex::from_sorted(face)]
                    })
                    .collect();
                facets.push(Simplex::new(chain).expect("flag barycentres are distinct"));
            }
        }
        let complex = SimplicialComplex::from_facets(format!("sd({})", k.name()), k.dim(), facets)
            .expect("subdivision facets are distinct");
        Self { complex, barycentre }
    }
}

/// The `r`-fold barycentric subdivision; `r = 0` returns a copy.
pub fn barycentric_subdivide(k: &SimplicialComplex, r: usize) -> SimplicialComplex {
    let mut out = k.clone();
    for _ in 0..r {
        out = Subdivision::of(&out).complex;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::homology_ranks;
    use crate::corpus;

    /// Number of `i`-simplices of sd(K): ordered set partitions of each
    /// `j`-simplex's vertices into `i + 1` blocks.
    fn flag_count(f: &[usize], i: usize) -> usize {
        fn surj(m: usize, k: usize) -> usize {
            // inclusion-exclusion count of surjections [m] -> [k]
            let mut total: i64 = 0;
            for j in 0..=k {
                let binom = (0..j).fold(1i64, |acc, t| acc * (k - t) as i64 / (t + 1) as i64);
                let term = binom * (k - j).pow(m as u32) as i64;
                total += if j % 2 == 0 { term } else { -term };
            }
            total as usize
        }
        f.iter().enumerate().map(|(j, fj)| fj * surj(j + 1, i + 1)).sum()
    }

    #[test]
    fn zero_fold_is_identity() {
        let k = corpus::torus7();
        assert_eq!(barycentric_subdivide(&k, 0), k);
    }

    #[test]
    fn triangle_subdivides_into_six() {
        let sd = barycentric_subdivide(&corpus::simplex(2), 1);
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn flag_count_formula() {
        for k in [corpus::sphere_boundary(3), corpus::torus7(), corpus::cp2_9()] {
            let f = k.f_vector();
            let sd = barycentric_subdivide(&k, 1);
            let expected: Vec<usize> = (0..=k.dim()).map(|i| flag_count(&f, i)).collect();
            assert_eq!(sd.f_vector(), expected);
            assert_eq!(sd.euler_characteristic(), k.euler_characteristic());
        }
    }

    #[test]
    fn homology_is_subdivision_invariant() {
        for k in [corpus::sphere_boundary(3), corpus::torus7(), corpus::rp2_6()] {
            assert_eq!(homology_ranks(&barycentric_subdivide(&k, 1)), homology_ranks(&k));
        }
    }

    #[test]
    fn original_labels_survive() {
        let sub = Subdivision::of(&corpus::torus7());
        for v in 0..7 {
            assert_eq!(sub.barycentre[&Simplex::vertex(v)], v);
        }
        assert_eq!(sub.complex.vertices().len(), 7 + 21 + 14);
    }
}
