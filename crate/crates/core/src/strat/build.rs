use std::collections::{BTreeSet, HashMap};

use super::Filtration;
use crate::complex::{Simplex, SimplicialComplex, Vertex};

fn next_label(k: &SimplicialComplex) -> Vertex {
    k.vertices().last().expect("complexes are nonempty") + 1
}

fn join_all(x: &BTreeSet<Simplex>, apex: Vertex, into: &mut BTreeSet<Simplex>) {
    for s in x {
        into.insert(s.clone());
        into.insert(s.join(&Simplex::vertex(apex)).expect("apex is a new label"));
    }
}

/// The cone on `k` with a new apex; `X'_0 = {apex}` and `X'_{j+1} = C(X_j)`.
pub fn cone(k: &SimplicialComplex, f: &Filtration) -> (SimplicialComplex, Filtration) {
    let apex = next_label(k);
    let facets = k.facets().iter().map(|s| s.join(&Simplex::vertex(apex)).expect("new label")).collect();
    let out =
        SimplicialComplex::from_facets(format!("C({})", k.name()), k.dim() + 1, facets).expect("distinct cone facets");
    let mut skeleta = Vec::with_capacity(k.dim() + 1);
    skeleta.push(BTreeSet::from([Simplex::vertex(apex)]));
    for j in 0..k.dim() {
        let mut x = skeleta[0].clone();
        join_all(f.skeleton(j), apex, &mut x);
        skeleta.push(x);
    }
    let filtration = Filtration::from_skeleta(&out, skeleta).expect("cone skeleta are closed and nested");
    (out, filtration)
}

/// Two cones glued along `k`; `X'_0` holds both poles and `X'_{j+1} = Σ(X_j)`.
pub fn suspension(k: &SimplicialComplex, f: &Filtration) -> (SimplicialComplex, Filtration) {
    let north = next_label(k);
    let south = north + 1;
    let facets = [north, south]
        .iter()
        .flat_map(|p| k.facets().iter().map(move |s| s.join(&Simplex::vertex(*p)).expect("new label")))
        .collect();
    let out = SimplicialComplex::from_facets(format!("S({})", k.name()), k.dim() + 1, facets).expect("distinct facets");
    let mut skeleta = Vec::with_capacity(k.dim() + 1);
    let poles = BTreeSet::from([Simplex::vertex(north), Simplex::vertex(south)]);
    skeleta.push(poles.clone());
    for j in 0..k.dim() {
        let mut x = poles.clone();
        join_all(f.skeleton(j), north, &mut x);
        join_all(f.skeleton(j), south, &mut x);
        skeleta.push(x);
    }
    let filtration = Filtration::from_skeleta(&out, skeleta).expect("suspension skeleta are closed and nested");
    (out, filtration)
}

/// Staircase triangulation of `|K| x |M|`. The product vertex `(a, b)` gets
/// label `i * |V(M)| + j` where `a` and `b` are the `i`-th and `j`-th
/// vertices. Returns the complex and the projection to `K`.
pub fn staircase_product(k: &SimplicialComplex, m: &SimplicialComplex) -> (SimplicialComplex, HashMap<Vertex, Vertex>) {
    let width = m.vertices().len() as Vertex;
    let kpos: HashMap<Vertex, Vertex> = k.vertices().iter().enumerate().map(|(i, v)| (*v, i as Vertex)).collect();
    let mpos: HashMap<Vertex, Vertex> = m.vertices().iter().enumerate().map(|(i, v)| (*v, i as Vertex)).collect();
    let (p, q) = (k.dim(), m.dim());
    let mut facets = Vec::new();
    for s in k.facets() {
        for t in m.facets() {
            // monotone lattice paths from (0, 0) to (p, q): choose which of the
            // p + q steps move in the first factor
            for mask in 0u64..(1u64 << (p + q)) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                let (mut i, mut j) = (0usize, 0usize);
                let mut verts = vec![kpos[&s.vertices()[0]] * width + mpos[&t.vertices()[0]]];
                for step in 0..p + q {
                    if mask & (1 << step) != 0 {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    verts.push(kpos[&s.vertices()[i]] * width + mpos[&t.vertices()[j]]);
                }
                facets.push(Simplex::new(verts).expect("staircase vertices are distinct"));
            }
        }
    }
    let name = format!("{}x{}", k.name(), m.name());
    let out = SimplicialComplex::from_facets(name, p + q, facets).expect("staircase facets are distinct");
    let projection = k
        .vertices()
        .iter()
        .enumerate()
        .flat_map(|(i, a)| (0..width).map(move |j| (i as Vertex * width + j, *a)))
        .collect();
    (out, projection)
}

/// `K x M` for a closed manifold `M` of dimension `m`, with
/// `X'_{j+m} = X_j x M` and lower skeleta empty.
pub fn product_with_manifold(
    k: &SimplicialComplex,
    f: &Filtration,
    m: &SimplicialComplex,
) -> (SimplicialComplex, Filtration) {
    let (out, projection) = staircase_product(k, m);
    let md = m.dim();
    let project = |s: &Simplex| {
        let mut v: Vec<Vertex> = s.vertices().iter().map(|w| projection[w]).collect();
        v.dedup();
        Simplex::new(v).expect("projections of staircase simplices are monotone")
    };
    let skeleta = (0..out.dim())
        .map(|i| {
            if i < md {
                return BTreeSet::new();
            }
            (0..=out.dim())
                .flat_map(|d| out.simplices(d).iter())
                .filter(|s| f.contains(i - md, &project(s)))
                .cloned()
                .collect()
        })
        .collect();
    let filtration = Filtration::from_skeleta(&out, skeleta).expect("product skeleta are closed and nested");
    (out, filtration)
}
