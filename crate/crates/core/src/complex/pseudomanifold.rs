use std::collections::HashSet;

use serde::Serialize;

use super::{Simplex, SimplicialComplex};
use crate::strat::Filtration;

/// Outcome of the pseudomanifold conditions; failures are listed, not raised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldReport {
    /// Every simplex is a face of an `n`-simplex.
    pub pure: bool,
    /// Every `(n-1)`-simplex outside `X_{n-2}` lies in exactly two facets.
    pub ridges_in_two_facets: bool,
    /// Every simplex is a face of a simplex of the regular part.
    pub regular_part_dense: bool,
    /// Offending ridges with the number of facets containing them.
    pub bad_ridges: Vec<(Simplex, usize)>,
    /// Simplices not in the closure of the regular part.
    pub not_dense: Vec<Simplex>,
}

impl PseudomanifoldReport {
    pub fn passed(&self) -> bool {
        self.pure && self.ridges_in_two_facets && self.regular_part_dense
    }
}

pub fn check_pseudomanifold(k: &SimplicialComplex, f: &Filtration) -> PseudomanifoldReport {
    let n = k.dim();
    let singular = |s: &Simplex| n >= 2 && f.contains(n - 2, s);

    let mut covered: HashSet<Simplex> = HashSet::new();
    for fct in k.facets() {
        covered.extend(fct.faces());
    }
    let pure = (0..=n).all(|d| k.simplices(d).iter().all(|s| covered.contains(s)));

    let mut bad_ridges = Vec::new();
    if n > 0 {
        let mut count = vec![0usize; k.simplices(n - 1).len()];
        for fct in k.facets() {
            for (_, face) in fct.boundary() {
                count[k.index_of(&face).expect("closed face lattice")] += 1;
            }
        }
        for (r, c) in count.iter().enumerate() {
            let ridge = &k.simplices(n - 1)[r];
            if *c != 2 && !singular(ridge) {
                bad_ridges.push((ridge.clone(), *c));
            }
        }
    }

    // closure of the regular part: all faces of facets outside X_{n-2}
    let mut not_dense = Vec::new();
    if k.facets().iter().any(&singular) {
        let mut closure: HashSet<Simplex> = HashSet::new();
        for fct in k.facets().iter().filter(|s| !singular(s)) {
            closure.extend(fct.faces());
        }
        for d in 0..=n {
            not_dense.extend(k.simplices(d).iter().filter(|s| !closure.contains(*s)).cloned());
        }
    }

    PseudomanifoldReport {
        pure,
        ridges_in_two_facets: bad_ridges.is_empty(),
        regular_part_dense: not_dense.is_empty(),
        bad_ridges,
        not_dense,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn sphere_with_trivial_filtration_passes() {
        let k = corpus::sphere_boundary(4);
        assert!(check_pseudomanifold(&k, &Filtration::trivial(3)).passed());
    }

    #[test]
    fn two_tetrahedra_glued_on_a_triangle() {
        let k = SimplicialComplex::from_facets(
            "glued",
            3,
            vec![Simplex::new(vec![0, 1, 2, 3]).unwrap(), Simplex::new(vec![0, 1, 2, 4]).unwrap()],
        )
        .unwrap();
        let r = check_pseudomanifold(&k, &Filtration::trivial(3));
        assert!(!r.ridges_in_two_facets);
        assert_eq!(r.bad_ridges.len(), 6);
        assert!(r.bad_ridges.iter().all(|(_, c)| *c == 1));
        assert!(r.pure && r.regular_part_dense);
    }

    #[test]
    fn suspension_of_torus_passes() {
        let (k, f) = corpus::sigma_t2();
        let r = check_pseudomanifold(&k, &f);
        assert!(r.passed(), "{r:?}");
    }
}
