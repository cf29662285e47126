use std::cmp::Ordering;

use serde::Serialize;
use wittkit_core::{Error, Result};

use crate::number::Number;
use crate::spectrum::LinkSpectrum;

/// A candidate indicial root and the families that produce it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    pub value: Number,
    pub families: Vec<u8>,
}

/// The set that contains the indicial roots at weight `a`. Membership is
/// necessary, not sufficient: the roots lie in this set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndicialRootSet {
    pub dim_link: usize,
    pub weight: Number,
    /// Whether `0 < a < 1`, the range the Bessel injectivity argument needs.
    pub weight_in_range: bool,
    pub roots: Vec<Root>,
    /// `root + f/2 + 1/2` for every root, in the same order.
    pub shifted: Vec<Number>,
    pub tolerance: f64,
    pub cutoff_note: String,
}

impl IndicialRootSet {
    pub fn values(&self) -> Vec<Number> {
        self.roots.iter().map(|r| r.value.clone()).collect()
    }

    pub fn family(&self, f: u8) -> Vec<Number> {
        self.roots.iter().filter(|r| r.families.contains(&f)).map(|r| r.value.clone()).collect()
    }
}

fn half(v: i64) -> Number {
    Number::ratio(v, 2)
}

/// Candidate roots from the three families:
///
/// 1. `-f/2 - a ± |k - f/2 ± 1/2|` for harmonic forms in degree `k != f/2`;
/// 2. `-f/2 - a ± sqrt(λ + (k - f/2 + l/2)^2)` for `λ != 0`, `l ∈ {±1, ±3}`;
/// 3. `1 - f/2 - a ± sqrt(λ + (k - f/2 + l/2)^2)` for `λ != 0`, `l ∈ {±1}`.
///
/// Values within `tol` (exactly equal, for exact inputs) are merged.
pub fn indicial_roots(s: &LinkSpectrum, a: &Number, tol: f64) -> IndicialRootSet {
    let f = s.dim_link as i64;
    let centre = half(-f).sub(a);
    let mut raw: Vec<(Number, u8)> = Vec::new();
    let mut push_pair = |c: &Number, r: &Number, family: u8| {
        raw.push((c.add(r), family));
        raw.push((c.sub(r), family));
    };
    for m in &s.modes {
        // offset k - f/2, doubled to stay in integers
        let twice_offset = 2 * m.degree as i64 - f;
        if LinkSpectrum::is_harmonic(m) {
            if twice_offset == 0 {
                continue;
            }
            for l in [1, -1] {
                push_pair(&centre, &half(twice_offset + l).abs(), 1);
            }
            continue;
        }
        for l in [1, -1, 3, -3] {
            let r = m.lambda.add(&half(twice_offset + l).square()).sqrt().expect("positive radicand");
            push_pair(&centre, &r, 2);
        }
        let centre3 = centre.add(&Number::int(1));
        for l in [1, -1] {
            let r = m.lambda.add(&half(twice_offset + l).square()).sqrt().expect("positive radicand");
            push_pair(&centre3, &r, 3);
        }
    }
    raw.sort_by(|x, y| x.0.compare(&y.0, 0.0).then(x.1.cmp(&y.1)));
    let mut roots: Vec<Root> = Vec::new();
    for (value, family) in raw {
        match roots.last_mut() {
            Some(last) if last.value.compare(&value, tol) == Ordering::Equal => {
                if !last.families.contains(&family) {
                    last.families.push(family);
                    last.families.sort_unstable();
                }
            }
            _ => roots.push(Root { value, families: vec![family] }),
        }
    }
    let shift = half(f + 1);
    let shifted = roots.iter().map(|r| r.value.add(&shift)).collect();
    let zero = Number::int(0);
    let one = Number::int(1);
    IndicialRootSet {
        dim_link: s.dim_link,
        weight: a.clone(),
        weight_in_range: a.compare(&zero, 0.0).is_gt() && a.compare(&one, 0.0).is_lt(),
        roots,
        shifted,
        tolerance: tol,
        cutoff_note: s.cutoff_note.clone(),
    }
}

/// The formal adjoint's reflection `ζ ↦ -(ζ + f + 2a + 1)`.
pub fn adjoint_reflect(zeta: &Number, f: usize, a: &Number) -> Number {
    zeta.add(&Number::int(f as i64 + 1)).add(&a.mul(&Number::int(2))).neg()
}

/// Whether the `K_ν` Bessel mode is outside the weighted `L^2` space, that
/// is `|ν| + a >= 1`.
pub fn bessel_mode_excluded(nu: &Number, a: &Number, tol: f64) -> bool {
    nu.abs().add(a).compare(&Number::int(1), tol).is_ge()
}

/// A weight `alpha` with a window half-width `epsilon` in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightWindow {
    pub alpha: Number,
    pub epsilon: Number,
}

impl WeightWindow {
    pub fn new(alpha: Number, epsilon: Number) -> Result<Self> {
        let ok = epsilon.compare(&Number::int(0), 0.0).is_gt() && epsilon.compare(&Number::int(1), 0.0).is_lt();
        if !ok {
            return Err(Error::MalformedInput(format!("window half-width must lie in (0, 1), got {epsilon}")));
        }
        Ok(Self { alpha, epsilon })
    }

    /// The `L^2` threshold offset `γ - (f + 1)/2`.
    pub fn delta0(gamma: &Number, f: usize) -> Number {
        gamma.sub(&half(f as i64 + 1))
    }

    /// Shifted roots in `[alpha - epsilon, alpha + epsilon]` other than `alpha`.
    pub fn offending(&self, roots: &IndicialRootSet, tol: f64) -> Vec<Number> {
        let lo = self.alpha.sub(&self.epsilon);
        let hi = self.alpha.add(&self.epsilon);
        roots
            .shifted
            .iter()
            .filter(|x| x.compare(&lo, tol).is_ge() && x.compare(&hi, tol).is_le())
            .filter(|x| x.compare(&self.alpha, tol) != Ordering::Equal)
            .cloned()
            .collect()
    }
}

/// Whether the shifted root set meets the window only in `alpha`.
pub fn weight_interval_clear(s: &LinkSpectrum, a: &Number, window: &WeightWindow, tol: f64) -> bool {
    window.offending(&indicial_roots(s, a, tol), tol).is_empty()
}
