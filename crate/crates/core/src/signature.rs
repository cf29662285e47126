//! The middle-dimensional intersection pairing and the signature.
//!
//! Middle lower-middle cycles on a space with isolated singular points avoid
//! the singular set, so they live on the regular part `M`: the complex of
//! simplices that miss every singular vertex, whose boundary is the union
//! of the singular vertices' links. Each cycle `z_i` gets a relative cocycle
//! `a_i` on `(M, ∂M)` with `a_i(z_j) = δ_ij`. The cup products
//! `C_ij = <a_i ∪ a_j, [M, ∂M]>` form the dual form, and the pairing on the
//! cycles is `C^{-1}`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{boundary_columns, homology_ranks, orient, OrientedComplex, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::ih::{ih_ranks, Perversity};
use crate::linalg::{eliminate, inertia, invert, Rational, SparseVec};
use crate::strat::{validate_filtration, StratifiedSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

/// The intersection form on a basis of middle intersection homology.
#[derive(Clone, Debug, Serialize)]
pub struct PairingMatrix {
    pub dimension: usize,
    pub middle_rank: usize,
    pub matrix: Vec<Vec<Rational>>,
    pub form: FormKind,
    /// How the basis was obtained.
    pub basis_source: String,
    /// Basis cycles over the middle simplices of the subdivided complex.
    #[serde(skip)]
    pub basis: Vec<SparseVec>,
}

impl PairingMatrix {
    /// Positive minus negative squares; zero unless the form is symmetric.
    pub fn signature(&self) -> i64 {
        match self.form {
            FormKind::Symmetric => inertia(&self.matrix).signature(),
            FormKind::Skew => 0,
        }
    }
}

fn check_shape(space: &StratifiedSpace) -> Result<()> {
    let n = space.dim();
    if n % 2 == 1 {
        return Err(Error::WrongDimensionParity(n));
    }
    let poset = validate_filtration(&space.complex, &space.filtration)?;
    if let Some(y) = poset.singular().into_iter().find(|y| poset.strata()[*y].dim > 0) {
        return Err(Error::UnsupportedDepth(format!(
            "stratum {y} has dimension {}; the pairing supports isolated singular points only",
            poset.strata()[y].dim
        )));
    }
    Ok(())
}

/// The pairing with the orientation that gives the first facet sign `+1`.
pub fn intersection_pairing(space: &StratifiedSpace, subdivisions: usize) -> Result<PairingMatrix> {
    check_shape(space)?;
    let o = orient(&space.complex)?;
    pairing_with_orientation(space, &o, subdivisions)
}

/// The pairing for a given orientation of `space.complex`, computed on its
/// `subdivisions`-fold barycentric subdivision.
pub fn pairing_with_orientation(
    space: &StratifiedSpace,
    o: &OrientedComplex,
    subdivisions: usize,
) -> Result<PairingMatrix> {
    check_shape(space)?;
    if o.base() != &space.complex {
        return Err(Error::MalformedInput("orientation belongs to a different complex".into()));
    }
    let mut oriented = o.clone();
    let mut filtration = space.filtration.clone();
    for _ in 0..subdivisions {
        let (sub, next) = oriented.subdivide();
        filtration = filtration.subdivide(&sub);
        oriented = next;
    }
    let k = oriented.base();
    let n = k.dim();
    let h = n / 2;
    let ih = ih_ranks(k, &filtration, &Perversity::lower_middle(n));
    let cycles = ih.cycles[h].clone();
    let singular: HashSet<Vertex> =
        filtration.singular_set().iter().filter(|s| s.dim() == 0).map(|s| s.vertices()[0]).collect();
    let cochains = dual_cocycles(k, &singular, &cycles, h)?;
    let cup = cup_form(&oriented, &singular, &cochains, h);
    let form = if n.is_multiple_of(4) { FormKind::Symmetric } else { FormKind::Skew };
    let matrix = if cycles.is_empty() {
        Vec::new()
    } else {
        invert(&cup)
            .ok_or_else(|| Error::MalformedInput("cup-product form on the regular part is degenerate".into()))?
    };
    Ok(PairingMatrix {
        dimension: n,
        middle_rank: cycles.len(),
        matrix,
        form,
        basis_source: format!("lower-middle intersection cycles in degree {h} on the {subdivisions}-fold subdivision"),
        basis: cycles,
    })
}

/// Signature of the pairing; zero when `n` is not a multiple of four.
pub fn signature(space: &StratifiedSpace, subdivisions: usize) -> Result<i64> {
    Ok(intersection_pairing(space, subdivisions)?.signature())
}

fn misses(s: &Simplex, singular: &HashSet<Vertex>) -> bool {
    s.vertices().iter().all(|v| !singular.contains(v))
}

/// Simplices of the regular part lying in the link of a singular vertex.
fn on_boundary(k: &SimplicialComplex, s: &Simplex, singular: &HashSet<Vertex>) -> bool {
    singular.iter().any(|v| s.join(&Simplex::vertex(*v)).is_some_and(|t| k.contains(&t)))
}

/// Relative cocycles `a_j` on `(M, ∂M)` with `a_j(z_i) = δ_ij`, as maps from
/// middle simplices of `k` to values.
fn dual_cocycles(
    k: &SimplicialComplex,
    singular: &HashSet<Vertex>,
    cycles: &[SparseVec],
    h: usize,
) -> Result<Vec<HashMap<usize, Rational>>> {
    if cycles.is_empty() {
        return Ok(Vec::new());
    }
    let variables: Vec<usize> = k
        .simplices(h)
        .par_iter()
        .enumerate()
        .filter(|(_, s)| misses(s, singular) && !on_boundary(k, s, singular))
        .map(|(i, _)| i)
        .collect();
    let var_of: HashMap<usize, usize> = variables.iter().enumerate().map(|(j, i)| (*i, j)).collect();
    let nvars = variables.len();
    let r = cycles.len();
    let mut rows: Vec<SparseVec> = boundary_columns(k, h + 1)
        .into_iter()
        .enumerate()
        .filter(|(t, _)| misses(&k.simplices(h + 1)[*t], singular))
        .map(|(_, col)| restrict(&col, &var_of))
        .filter(|row| !row.is_empty())
        .collect();
    for (i, z) in cycles.iter().enumerate() {
        let mut row = restrict(z, &var_of);
        row.push((nvars + i, Rational::ONE));
        rows.push(row);
    }
    let echelon = eliminate(rows, nvars + r, nvars);
    (0..r)
        .map(|j| {
            let x = echelon.solve(j).ok_or_else(|| {
                Error::MalformedInput("middle cycles are dependent relative to the singular links".into())
            })?;
            Ok(x.into_iter().map(|(v, c)| (variables[v], c)).collect())
        })
        .collect()
}

fn restrict(v: &SparseVec, var_of: &HashMap<usize, usize>) -> SparseVec {
    let mut out: SparseVec = v.iter().filter_map(|(i, c)| var_of.get(i).map(|j| (*j, c.clone()))).collect();
    out.sort_by_key(|e| e.0);
    out
}

/// `C_ij = sum over top simplices F of M of sign(F) a_i(front_h F) a_j(back_h F)`.
fn cup_form(
    o: &OrientedComplex,
    singular: &HashSet<Vertex>,
    cochains: &[HashMap<usize, Rational>],
    h: usize,
) -> Vec<Vec<Rational>> {
    let k = o.base();
    let r = cochains.len();
    let n = k.dim();
    let partial = k
        .facets()
        .par_iter()
        .zip(o.signs().par_iter())
        .filter(|(f, _)| misses(f, singular))
        .map(|(f, sign)| {
            let front = k.index_of(&f.front(h)).expect("faces are in the complex");
            let back = k.index_of(&f.back(n - h)).expect("faces are in the complex");
            let mut acc = vec![vec![Rational::ZERO; r]; r];
            for (i, a) in cochains.iter().enumerate() {
                let Some(x) = a.get(&front) else { continue };
                for (j, b) in cochains.iter().enumerate() {
                    if let Some(y) = b.get(&back) {
                        let term = x * y;
                        acc[i][j] = if *sign > 0 { &acc[i][j] + &term } else { &acc[i][j] - &term };
                    }
                }
            }
            acc
        })
        .reduce(|| vec![vec![Rational::ZERO; r]; r], add_matrices);
    partial
}

fn add_matrices(a: Vec<Vec<Rational>>, b: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    a.into_iter().zip(b).map(|(x, y)| x.into_iter().zip(y).map(|(p, q)| &p + &q).collect()).collect()
}

/// Signature of a closed oriented manifold from the cup product on middle
/// simplicial cohomology of `k` itself, with no intersection homology.
pub fn manifold_signature_oracle(k: &SimplicialComplex) -> Result<i64> {
    manifold_signature_oracle_with(&orient_manifold(k)?)
}

fn orient_manifold(k: &SimplicialComplex) -> Result<OrientedComplex> {
    let n = k.dim();
    for v in k.vertices() {
        let link = SimplicialComplex::from_simplices("lk", k.vertex_link_simplices(*v))
            .map_err(|e| Error::NotManifoldInput(format!("link of vertex {v}: {e}")))?;
        let mut sphere = vec![0; n];
        sphere[0] += 1;
        sphere[n - 1] += 1;
        if link.dim() + 1 != n || homology_ranks(&link) != sphere {
            return Err(Error::NotManifoldInput(format!("link of vertex {v} is not a rational homology sphere")));
        }
    }
    orient(k).map_err(|e| Error::NotManifoldInput(e.to_string()))
}

pub fn manifold_signature_oracle_with(o: &OrientedComplex) -> Result<i64> {
    let k = o.base();
    let n = k.dim();
    if !n.is_multiple_of(4) {
        return Ok(0);
    }
    let h = n / 2;
    let width = k.simplices(h).len();
    // cocycles: kernel of the coboundary, whose rows are the boundaries of (h+1)-simplices
    let cocycles = eliminate(boundary_columns(k, h + 1), width, width).kernel_basis();
    // coboundaries: rows of the h-th boundary matrix
    let mut coboundaries: Vec<SparseVec> = vec![Vec::new(); k.simplices(h - 1).len()];
    for (c, col) in boundary_columns(k, h).into_iter().enumerate() {
        for (r, v) in col {
            coboundaries[r].push((c, v));
        }
    }
    let mut span: Vec<SparseVec> = coboundaries;
    let mut rank = eliminate(span.clone(), width, width).rank();
    let mut basis = Vec::new();
    for z in cocycles {
        span.push(z.clone());
        let next = eliminate(span.clone(), width, width).rank();
        if next > rank {
            rank = next;
            basis.push(z.into_iter().collect::<HashMap<usize, Rational>>());
        } else {
            span.pop();
        }
    }
    let form = cup_form(o, &HashSet::new(), &basis, h);
    Ok(inertia(&form).signature())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn sphere_has_empty_form() {
        let s = StratifiedSpace::manifold(corpus::sphere_boundary(5));
        let p = intersection_pairing(&s, 0).unwrap();
        assert_eq!(p.middle_rank, 0);
        assert!(p.matrix.is_empty());
        assert_eq!(p.signature(), 0);
    }

    #[test]
    fn oracle_on_small_manifolds() {
        assert_eq!(manifold_signature_oracle(&corpus::cp2_9()).unwrap(), 1);
        assert_eq!(manifold_signature_oracle(&corpus::s2_x_s2()).unwrap(), 0);
        assert_eq!(manifold_signature_oracle(&corpus::sphere_boundary(5)).unwrap(), 0);
    }

    #[test]
    fn oracle_rejects_pseudomanifolds() {
        let (k, _) = corpus::sigma_cp2();
        assert_eq!(manifold_signature_oracle(&k).unwrap_err().code(), "NotManifoldInput");
    }

    #[test]
    fn pairing_matches_oracle_without_subdivision() {
        for k in [corpus::cp2_9(), corpus::s2_x_s2()] {
            let s = StratifiedSpace::manifold(k.clone());
            let p = intersection_pairing(&s, 0).unwrap();
            assert_eq!(p.signature(), manifold_signature_oracle(&k).unwrap());
        }
    }

    #[test]
    fn reversal_negates() {
        let k = corpus::cp2_9();
        let o = orient(&k).unwrap();
        let s = StratifiedSpace::manifold(k);
        let a = pairing_with_orientation(&s, &o, 0).unwrap();
        let b = pairing_with_orientation(&s, &o.reversed(), 0).unwrap();
        assert_eq!(a.matrix[0][0], -b.matrix[0][0].clone());
        assert_eq!(manifold_signature_oracle_with(&o.reversed()).unwrap(), -a.signature());
    }

    #[test]
    fn odd_and_deep_inputs_are_rejected() {
        let (k, f) = corpus::sigma_t2();
        let s = StratifiedSpace::new(k, f);
        assert_eq!(intersection_pairing(&s, 1).unwrap_err().code(), "WrongDimensionParity");
        let (k, f) = crate::strat::product_with_manifold(
            &corpus::sigma_s2().0,
            &corpus::sigma_s2().1,
            &corpus::sphere_boundary(2),
        );
        let s = StratifiedSpace::new(k, f);
        assert_eq!(intersection_pairing(&s, 0).unwrap_err().code(), "UnsupportedDepth");
    }

    #[test]
    fn surfaces_give_skew_forms() {
        let s = StratifiedSpace::manifold(corpus::torus7());
        let p = intersection_pairing(&s, 0).unwrap();
        assert_eq!(p.form, FormKind::Skew);
        assert_eq!(p.middle_rank, 2);
        assert!((0..2).all(|i| p.matrix[i][i].is_zero()) && p.matrix[0][1] == -p.matrix[1][0].clone());
        assert_eq!(signature(&s, 0).unwrap(), 0);
    }
}
