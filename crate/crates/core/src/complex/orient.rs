use std::collections::{HashMap, VecDeque};

use super::{Simplex, SimplicialComplex, Subdivision, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

/// A complex with a coherent sign on every facet.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedComplex {
    base: SimplicialComplex,
    signs: Vec<i8>,
}

impl OrientedComplex {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    /// Sign per facet, in the order of [`SimplicialComplex::facets`].
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn reversed(&self) -> Self {
        Self { base: self.base.clone(), signs: self.signs.iter().map(|s| -s).collect() }
    }

    /// The orientation of the barycentric subdivision carried by the
    /// subdivision chain map, which sends the facet `F` to the sum over
    /// vertex orderings `p` of `sign(p) [b(p0), b(p0 p1), ..., b(F)]`.
    pub fn subdivide(&self) -> (Subdivision, OrientedComplex) {
        let sub = Subdivision::of(&self.base);
        let simplex_of: HashMap<Vertex, &Simplex> = sub.barycentre.iter().map(|(s, b)| (*b, s)).collect();
        let n = self.base.dim();
        let signs = sub
            .complex
            .facets()
            .iter()
            .map(|flag| {
                // sorted labels list the flag in increasing dimension
                let chain: Vec<&Simplex> = flag.vertices().iter().map(|b| simplex_of[b]).collect();
                let top = chain[n];
                let mut order = Vec::with_capacity(n + 1);
                let mut prev: Option<&Simplex> = None;
                for s in &chain {
                    let added = match prev {
                        None => s.vertices()[0],
                        Some(p) => s.minus(p).expect("flags grow by one vertex").vertices()[0],
                    };
                    order.push(top.vertices().binary_search(&added).expect("flag lies in its top simplex"));
                    prev = Some(s);
                }
                let facet = self.base.index_of(top).expect("top of a flag is a facet");
                self.signs[facet] * permutation_sign(&order)
            })
            .collect();
        let oriented = OrientedComplex { base: sub.complex.clone(), signs };
        (sub, oriented)
    }

    /// The fundamental cycle `sum sign(F) F` over the top simplices.
    pub fn fundamental_cycle(&self) -> SparseVec {
        self.signs.iter().enumerate().map(|(i, s)| (i, Rational::from_int(*s as i64))).collect()
    }
}

fn permutation_sign(order: &[usize]) -> i8 {
    let mut sign = 1;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Orients a closed pseudomanifold by breadth-first propagation across
/// codimension-one faces. Each propagation component is seeded with `+1` on
/// its lexicographically first facet.
pub fn orient(k: &SimplicialComplex) -> Result<OrientedComplex> {
    let n = k.dim();
    let facets = k.simplices(n);
    let mut cofaces: Vec<Vec<(usize, i8)>> = vec![Vec::new(); if n > 0 { k.simplices(n - 1).len() } else { 0 }];
    if n > 0 {
        for (fi, f) in facets.iter().enumerate() {
            for (i, face) in f.boundary() {
                let r = k.index_of(&face).expect("face lattice is closed");
                cofaces[r].push((fi, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
    }
    if let Some((r, c)) = cofaces.iter().enumerate().find(|(_, c)| c.len() != 2) {
        return Err(Error::MalformedInput(format!(
            "not a closed pseudomanifold: {} lies in {} facets",
            k.simplices(n - 1)[r],
            c.len()
        )));
    }
    let mut adj: Vec<Vec<(usize, i8, usize)>> = vec![Vec::new(); facets.len()];
    for (r, c) in cofaces.iter().enumerate() {
        let ((a, ca), (b, cb)) = (c[0], c[1]);
        // induced coefficients must cancel: s_b * cb = -s_a * ca
        let rel = -ca * cb;
        adj[a].push((b, rel, r));
        adj[b].push((a, rel, r));
    }

    let mut signs = vec![0i8; facets.len()];
    for seed in 0..facets.len() {
        if signs[seed] != 0 {
            continue;
        }
        signs[seed] = 1;
        let mut queue = VecDeque::from([seed]);
        while let Some(a) = queue.pop_front() {
            for &(b, rel, r) in &adj[a] {
                let want = signs[a] * rel;
                if signs[b] == 0 {
                    signs[b] = want;
                    queue.push_back(b);
                } else if signs[b] != want {
                    return Err(Error::NonOrientable(format!("sign conflict across {}", k.simplices(n - 1)[r])));
                }
            }
        }
    }
    Ok(OrientedComplex { base: k.clone(), signs })
}
