//! The Witt condition and rank-level duality checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::Result;
use crate::ih::{ih_ranks, Perversity};
use crate::strat::{stratum_link, validate_filtration, Filtration};

/// One singular stratum's contribution to the Witt condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WittEntry {
    pub stratum: usize,
    pub stratum_dim: usize,
    pub link_dim: usize,
    pub sample_vertex: Vertex,
    /// `"even"` or `"odd"`.
    pub parity: &'static str,
    /// Lower-middle IH of the link in degree `link_dim / 2`, for even links.
    pub middle_rank: Option<usize>,
    /// The same check on the link's own singular strata.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_report: Option<Box<WittReport>>,
    pub witt: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WittReport {
    pub entries: Vec<WittEntry>,
    pub witt: bool,
}

impl WittReport {
    /// Entries that fail, as `(stratum, middle rank)`.
    pub fn witnesses(&self) -> Vec<(usize, usize)> {
        self.entries.iter().filter(|e| !e.witt).map(|e| (e.stratum, e.middle_rank.unwrap_or(0))).collect()
    }
}

/// Checks that every even-dimensional link `L` of a singular stratum has
/// `IH^m_{dim L / 2}(L) = 0`. Stratified links are checked recursively.
pub fn witt_check(k: &SimplicialComplex, f: &Filtration) -> Result<WittReport> {
    let poset = validate_filtration(k, f)?;
    let entries = poset
        .singular()
        .into_par_iter()
        .map(|y| -> Result<WittEntry> {
            let link = stratum_link(k, f, &poset, y)?;
            let even = link.dim % 2 == 0;
            let middle_rank = even.then(|| {
                let ih = ih_ranks(&link.complex, &link.filtration, &Perversity::lower_middle(link.dim));
                ih.ranks[link.dim / 2]
            });
            let link_report = if link.filtration.is_trivial() {
                None
            } else {
                Some(Box::new(witt_check(&link.complex, &link.filtration)?))
            };
            let witt = middle_rank.unwrap_or(0) == 0 && link_report.as_ref().is_none_or(|r| r.witt);
            Ok(WittEntry {
                stratum: y,
                stratum_dim: poset.strata()[y].dim,
                link_dim: link.dim,
                sample_vertex: link.sample_vertex,
                parity: if even { "even" } else { "odd" },
                middle_rank,
                link_report,
                witt,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let witt = entries.iter().all(|e| e.witt);
    Ok(WittReport { entries, witt })
}

/// Rank-level duality between a perversity and its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub perversity: String,
    pub complement: String,
    pub ranks: Vec<usize>,
    pub complement_ranks: Vec<usize>,
    /// `rank IH^p_k = rank IH^q_{n-k}` for every `k`.
    pub complementary: bool,
    pub witt: bool,
    /// On Witt inputs, `rank IH^m_k = rank IH^m_{n-k}` for every `k`.
    pub middle_symmetric: Option<bool>,
    pub passed: bool,
}

fn reversed_equal(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter().rev()).all(|(x, y)| x == y)
}

pub fn duality_check(k: &SimplicialComplex, f: &Filtration, p: &Perversity) -> Result<DualityReport> {
    let witt = witt_check(k, f)?.witt;
    let n = k.dim();
    let q = p.complement();
    let (a, b) = rayon::join(|| ih_ranks(k, f, p), || ih_ranks(k, f, &q));
    let complementary = reversed_equal(&a.ranks, &b.ranks);
    let middle_symmetric = witt.then(|| {
        let m = Perversity::lower_middle(n);
        let ranks = if *p == m { a.ranks.clone() } else { ih_ranks(k, f, &m).ranks };
        reversed_equal(&ranks, &ranks)
    });
    let passed = complementary && middle_symmetric.unwrap_or(true);
    Ok(DualityReport {
        perversity: p.to_string(),
        complement: q.to_string(),
        ranks: a.ranks,
        complement_ranks: b.ranks,
        complementary,
        witt,
        middle_symmetric,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::strat::StratifiedSpace;

    fn sd(k: SimplicialComplex, f: Filtration) -> StratifiedSpace {
        StratifiedSpace::new(k, f).subdivide(1)
    }

    #[test]
    fn suspended_sphere_is_witt() {
        let (k, f) = corpus::sigma_s2();
        let s = sd(k, f);
        let r = witt_check(&s.complex, &s.filtration).unwrap();
        assert!(r.witt);
        assert_eq!(r.entries.len(), 2);
        assert!(r.entries.iter().all(|e| e.link_dim == 2 && e.middle_rank == Some(0)));
    }

    #[test]
    fn suspended_torus_is_not_witt() {
        let (k, f) = corpus::sigma_t2();
        let s = sd(k, f);
        let r = witt_check(&s.complex, &s.filtration).unwrap();
        assert!(!r.witt);
        assert!(r.witnesses().iter().all(|(_, rank)| *rank == 2));
    }

    #[test]
    fn odd_links_pass() {
        // suspension of a circle: links are circles
        let (k, f) = crate::strat::suspension(&corpus::sphere_boundary(2), &Filtration::trivial(1));
        let s = sd(k, f);
        let r = witt_check(&s.complex, &s.filtration).unwrap();
        assert!(r.witt && r.entries.iter().all(|e| e.parity == "odd" && e.middle_rank.is_none()));
    }

    #[test]
    fn manifolds_are_vacuously_witt() {
        let r = witt_check(&corpus::torus7(), &Filtration::trivial(2)).unwrap();
        assert!(r.witt && r.entries.is_empty());
    }

    #[test]
    fn double_suspension_recurses_into_links() {
        let (k, f) = corpus::sigma_sigma_t2();
        let s = sd(k, f);
        let r = witt_check(&s.complex, &s.filtration).unwrap();
        assert!(!r.witt);
        let nested: Vec<_> = r.entries.iter().filter(|e| e.link_report.is_some()).collect();
        assert_eq!(nested.len(), 2);
        assert!(nested.iter().all(|e| !e.link_report.as_ref().unwrap().witt));
    }

    #[test]
    fn duality_on_suspensions() {
        let (k, f) = corpus::sigma_t2();
        let s = sd(k, f);
        let r = duality_check(&s.complex, &s.filtration, &Perversity::lower_middle(3)).unwrap();
        assert_eq!(r.ranks, vec![1, 2, 0, 1]);
        assert_eq!(r.complement_ranks, vec![1, 0, 2, 1]);
        assert!(r.passed && r.middle_symmetric.is_none());

        let (k, f) = corpus::sigma_s2();
        let s = sd(k, f);
        let r = duality_check(&s.complex, &s.filtration, &Perversity::lower_middle(3)).unwrap();
        assert_eq!(r.ranks, vec![1, 0, 0, 1]);
        assert_eq!(r.middle_symmetric, Some(true));
        assert!(r.passed);
    }

    #[test]
    fn duality_validates_first() {
        let k = corpus::sphere_boundary(4);
        let g = std::collections::BTreeMap::from([(0, vec![k.facets()[0].clone()])]);
        let f = Filtration::from_generators(&k, &g);
        let err = match f {
            Err(e) => e,
            Ok(f) => duality_check(&k, &f, &Perversity::lower_middle(3)).unwrap_err(),
        };
        assert!(matches!(err.code(), "NotDense" | "MalformedInput"), "{err}");
    }
}
