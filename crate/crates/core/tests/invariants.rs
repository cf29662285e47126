use std::path::PathBuf;

use wittkit_core::complex::{homology_ranks, ComplexDocument};
use wittkit_core::corpus;
use wittkit_core::ih::{ih_compare, ih_ranks, Perversity};
use wittkit_core::strat::StratifiedSpace;
use wittkit_core::witt::witt_check;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn sd(name: &str, r: usize) -> StratifiedSpace {
    corpus::by_name(name).unwrap().subdivide(r)
}

#[test]
fn corpus_files_match_the_builders() {
    for (name, space) in corpus::all() {
        let text = std::fs::read_to_string(corpus_dir().join(format!("{name}.json"))).unwrap();
        let loaded = StratifiedSpace::from_document(&ComplexDocument::from_json(&text).unwrap()).unwrap();
        assert_eq!(loaded, space, "{name}");
    }
}

#[test]
fn suspended_torus_ranks_survive_subdivision() {
    let m = Perversity::lower_middle(3);
    for r in 0..=2 {
        let s = sd("sigma_t2", r);
        assert_eq!(ih_ranks(&s.complex, &s.filtration, &m).ranks, vec![1, 2, 0, 1], "{r} subdivisions");
    }
}

#[test]
fn witt_verdicts_survive_subdivision() {
    for (name, witt) in [("sigma_s2", true), ("sigma_t2", false)] {
        let verdicts: Vec<bool> = (1..=2)
            .map(|r| {
                let s = sd(name, r);
                witt_check(&s.complex, &s.filtration).unwrap().witt
            })
            .collect();
        assert_eq!(verdicts, vec![witt; 2], "{name}");
    }
}

#[test]
fn middle_perversities_agree_exactly_where_expected() {
    let s = sd("sigma_s2", 1);
    let c = ih_compare(&s.complex, &s.filtration, &Perversity::lower_middle(3), &Perversity::upper_middle(3));
    assert!(c.all_equal);

    let s = sd("sigma_t2", 1);
    let c = ih_compare(&s.complex, &s.filtration, &Perversity::lower_middle(3), &Perversity::upper_middle(3));
    assert_eq!(c.differing_degrees(), vec![1, 2]);

    for name in ["torus", "cp2"] {
        let s = sd(name, 0);
        let n = s.dim();
        let c = ih_compare(&s.complex, &s.filtration, &Perversity::zero(n), &Perversity::top(n));
        assert!(c.all_equal && c.first == homology_ranks(&s.complex), "{name}");
    }
}
