//! Built-in triangulations used by the tests and shipped as JSON examples.

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::strat::{suspension, Filtration, StratifiedSpace};

fn complex(name: &str, dim: usize, facets: &[&[Vertex]]) -> SimplicialComplex {
    let facets = facets.iter().map(|f| Simplex::new(f.to_vec()).expect("valid facet")).collect();
    SimplicialComplex::from_facets(name, dim, facets).expect("built-in complexes are valid")
}

/// A single `n`-simplex on vertices `0..=n` (a ball, not closed).
pub fn simplex(n: usize) -> SimplicialComplex {
    let verts: Vec<Vertex> = (0..=n as Vertex).collect();
    complex(&format!("simplex{n}"), n, &[&verts])
}

/// Boundary of the `n`-simplex on vertices `0..=n`, an `(n-1)`-sphere.
pub fn sphere_boundary(n: usize) -> SimplicialComplex {
    assert!(n >= 1, "the boundary of a point is empty");
    let all: Vec<Vertex> = (0..=n as Vertex).collect();
    let facets: Vec<Simplex> = (0..all.len())
        .map(|skip| {
            let mut v = all.clone();
            v.remove(skip);
            Simplex::new(v).expect("distinct")
        })
        .collect();
    SimplicialComplex::from_facets(format!("S{}", n - 1), n - 1, facets).expect("valid sphere")
}

/// Möbius' 7-vertex torus.
pub fn torus7() -> SimplicialComplex {
    let facets: Vec<Simplex> = (0..7)
        .flat_map(|i| {
            [
                Simplex::new(vec![i, (i + 1) % 7, (i + 3) % 7]).expect("distinct"),
                Simplex::new(vec![i, (i + 2) % 7, (i + 3) % 7]).expect("distinct"),
            ]
        })
        .collect();
    SimplicialComplex::from_facets("T2", 2, facets).expect("valid torus")
}

/// The 6-vertex real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    complex(
        "RP2",
        2,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[2, 4, 5],
            &[2, 4, 6],
            &[3, 4, 6],
            &[3, 5, 6],
        ],
    )
}

/// Kühnel's 9-vertex complex projective plane, labelled so that the
/// orientation with the first facet positive has signature `+1`.
pub fn cp2_9() -> SimplicialComplex {
    complex(
        "CP2",
        4,
        &[
            &[1, 2, 3, 4, 6],
            &[1, 2, 3, 4, 8],
            &[1, 2, 3, 5, 8],
            &[1, 2, 3, 5, 9],
            &[1, 2, 3, 6, 7],
            &[1, 2, 3, 7, 9],
            &[1, 2, 4, 6, 7],
            &[1, 2, 4, 7, 8],
            &[1, 2, 5, 8, 9],
            &[1, 2, 7, 8, 9],
            &[1, 3, 4, 6, 8],
            &[1, 3, 5, 6, 7],
            &[1, 3, 5, 6, 8],
            &[1, 3, 5, 7, 9],
            &[1, 4, 5, 6, 7],
            &[1, 4, 5, 6, 9],
            &[1, 4, 5, 7, 9],
            &[1, 4, 6, 8, 9],
            &[1, 4, 7, 8, 9],
            &[1, 5, 6, 8, 9],
            &[2, 3, 4, 5, 8],
            &[2, 3, 4, 5, 9],
            &[2, 3, 4, 6, 9],
            &[2, 3, 6, 7, 9],
            &[2, 4, 5, 6, 7],
            &[2, 4, 5, 6, 9],
            &[2, 4, 5, 7, 8],
            &[2, 5, 6, 7, 8],
            &[2, 5, 6, 8, 9],
            &[2, 6, 7, 8, 9],
            &[3, 4, 5, 7, 8],
            &[3, 4, 5, 7, 9],
            &[3, 4, 6, 8, 9],
            &[3, 4, 7, 8, 9],
            &[3, 5, 6, 7, 8],
            &[3, 6, 7, 8, 9],
        ],
    )
}

/// Staircase triangulation of `∂Δ³ x ∂Δ³` (16 vertices, 96 facets).
pub fn s2_x_s2() -> SimplicialComplex {
    let s2 = sphere_boundary(3);
    crate::strat::staircase_product(&s2, &s2).0.with_name("S2xS2")
}

/// Disjoint union; `b` is shifted past the labels of `a`.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let shift = a.vertices().last().expect("nonempty") + 1 - b.vertices()[0];
    assert_eq!(a.dim(), b.dim(), "disjoint union of complexes of different dimension");
    let mut facets: Vec<Simplex> = a.facets().to_vec();
    facets.extend(b.relabel(|v| v + shift).expect("shift is injective").facets().iter().cloned());
    SimplicialComplex::from_facets(format!("{}+{}", a.name(), b.name()), a.dim(), facets).expect("disjoint facets")
}

fn suspended(k: SimplicialComplex, name: &str) -> (SimplicialComplex, Filtration) {
    let n = k.dim();
    let (s, f) = suspension(&k, &Filtration::trivial(n));
    (s.with_name(name), f)
}

/// Suspension of the 7-vertex torus with the two poles as the singular set.
pub fn sigma_t2() -> (SimplicialComplex, Filtration) {
    suspended(torus7(), "sigma_T2")
}

pub fn sigma_s2() -> (SimplicialComplex, Filtration) {
    suspended(sphere_boundary(3), "sigma_S2")
}

pub fn sigma_cp2() -> (SimplicialComplex, Filtration) {
    suspended(cp2_9(), "sigma_CP2")
}

/// Double suspension of the torus: the new poles form `X_0` and the
/// suspended old poles form the two arcs of `X_1`.
pub fn sigma_sigma_t2() -> (SimplicialComplex, Filtration) {
    let (k, f) = sigma_t2();
    let (s, g) = suspension(&k, &f);
    (s.with_name("sigma_sigma_T2"), g)
}

/// Every named corpus entry with its filtration.
pub fn all() -> Vec<(&'static str, StratifiedSpace)> {
    let manifold = |k| StratifiedSpace::manifold(k);
    let strat = |(k, f): (SimplicialComplex, Filtration)| StratifiedSpace::new(k, f);
    vec![
        ("s4", manifold(sphere_boundary(5))),
        ("torus", manifold(torus7())),
        ("rp2", manifold(rp2_6())),
        ("cp2", manifold(cp2_9())),
        ("s2xs2", manifold(s2_x_s2())),
        ("sigma_s2", strat(sigma_s2())),
        ("sigma_t2", strat(sigma_t2())),
        ("sigma_cp2", strat(sigma_cp2())),
        ("sigma_sigma_t2", strat(sigma_sigma_t2())),
    ]
}

pub fn by_name(name: &str) -> Option<StratifiedSpace> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::homology_ranks;

    #[test]
    fn face_counts() {
        assert_eq!(torus7().f_vector(), vec![7, 21, 14]);
        assert_eq!(rp2_6().f_vector(), vec![6, 15, 10]);
        assert_eq!(cp2_9().f_vector(), vec![9, 36, 84, 90, 36]);
        assert_eq!(s2_x_s2().f_vector()[0], 16);
        assert_eq!(s2_x_s2().facets().len(), 96);
        assert_eq!(sphere_boundary(5).f_vector(), vec![6, 15, 20, 15, 6]);
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(homology_ranks(&torus7()), vec![1, 2, 1]);
        assert_eq!(homology_ranks(&rp2_6()), vec![1, 0, 0]);
        assert_eq!(homology_ranks(&cp2_9()), vec![1, 0, 1, 0, 1]);
        assert_eq!(homology_ranks(&s2_x_s2()), vec![1, 0, 2, 0, 1]);
        assert_eq!(homology_ranks(&sphere_boundary(5)), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn cp2_vertex_links_are_homology_spheres() {
        let k = cp2_9();
        for v in k.vertices() {
            let link = SimplicialComplex::from_simplices("lk", k.vertex_link_simplices(*v)).unwrap();
            assert_eq!(homology_ranks(&link), vec![1, 0, 0, 1]);
        }
    }

    #[test]
    fn names_are_unique() {
        let names: Vec<&str> = all().iter().map(|(n, _)| *n).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(by_name("sigma_t2").is_some() && by_name("nope").is_none());
    }
}
