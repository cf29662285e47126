use serde::Serialize;

use crate::number::Number;
use crate::spectrum::{LinkSpectrum, Mode};

/// Nonzero de Rham eigenvalues `±sqrt(λ)` avoid `(-1, 1)`: every nonzero
/// `λ` is at least 1.
pub fn check_gap_condition(s: &LinkSpectrum, tol: f64) -> bool {
    gap_witnesses(s, tol).is_empty()
}

fn gap_witnesses(s: &LinkSpectrum, tol: f64) -> Vec<Mode> {
    s.nonzero_modes().filter(|m| m.lambda.compare(&Number::int(1), tol).is_lt()).cloned().collect()
}

/// No harmonic forms in the middle degree of an even-dimensional link.
pub fn witt_spectral_check(s: &LinkSpectrum) -> bool {
    s.dim_link % 2 == 1 || s.harmonic_betti()[s.dim_link / 2] == 0
}

/// The largest metric scale `c` (metric `c^2 g`) for which the gap
/// condition holds, `sqrt(λ_min)`; `None` stands for `+∞` when the
/// spectrum has no nonzero eigenvalue.
pub fn rescale_for_gap(s: &LinkSpectrum, tol: f64) -> Option<Number> {
    let c = s.lambda_min()?.sqrt().expect("eigenvalues are nonnegative");
    assert!(check_gap_condition(&s.scaled(&c), tol), "rescaled spectrum must satisfy the gap condition");
    Some(c)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail { reason: FailReason, witness: Mode },
    Incomplete { missing_degrees: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailReason {
    Gap,
    MiddleHarmonic,
}

/// Whether the normal operator is injective on its maximal domain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub dim_link: usize,
    pub weight: Number,
    pub weight_in_range: bool,
    pub gap_condition: bool,
    pub middle_harmonic_free: bool,
    pub cutoff_note: String,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Passes when every nonzero `λ >= 1` and, for even links, no harmonic form
/// sits in the middle degree. A failure names a violating mode; a spectrum
/// missing some degree cannot pass and reports `INCOMPLETE` instead.
pub fn normal_injectivity_certificate(s: &LinkSpectrum, a: &Number, tol: f64) -> Certificate {
    let gap = gap_witnesses(s, tol);
    let middle: Vec<Mode> = if s.dim_link.is_multiple_of(2) {
        s.modes.iter().filter(|m| m.degree * 2 == s.dim_link && LinkSpectrum::is_harmonic(m)).cloned().collect()
    } else {
        Vec::new()
    };
    let missing = s.missing_degrees();
    let verdict = if let Some(w) = gap.first() {
        Verdict::Fail { reason: FailReason::Gap, witness: w.clone() }
    } else if let Some(w) = middle.first() {
        Verdict::Fail { reason: FailReason::MiddleHarmonic, witness: w.clone() }
    } else if !missing.is_empty() {
        Verdict::Incomplete { missing_degrees: missing }
    } else {
        Verdict::Pass
    };
    Certificate {
        verdict,
        dim_link: s.dim_link,
        weight: a.clone(),
        weight_in_range: a.compare(&Number::int(0), 0.0).is_gt() && a.compare(&Number::int(1), 0.0).is_lt(),
        gap_condition: gap.is_empty(),
        middle_harmonic_free: middle.is_empty(),
        cutoff_note: s.cutoff_note.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::DEFAULT_TOLERANCE as TOL;
    use crate::spectrum::circle_spectrum_pi_multiple;

    fn mode(degree: usize, lambda: Number) -> Mode {
        Mode { degree, lambda, multiplicity: 1 }
    }

    fn spectrum(f: usize, modes: Vec<Mode>) -> LinkSpectrum {
        LinkSpectrum::new(f, modes, "test").unwrap()
    }

    #[test]
    fn gap_examples() {
        let s = spectrum(2, vec![mode(0, Number::int(0)), mode(1, Number::int(1)), mode(2, Number::int(4))]);
        assert!(check_gap_condition(&s, TOL));
        assert!(!check_gap_condition(&spectrum(1, vec![mode(0, Number::ratio(1, 4))]), TOL));
        assert!(check_gap_condition(&spectrum(2, vec![mode(0, Number::int(0))]), TOL));
    }

    #[test]
    fn witt_examples() {
        let betti = |b: [usize; 3]| {
            let modes = b.iter().enumerate().flat_map(|(k, n)| (0..*n).map(move |_| mode(k, Number::int(0)))).collect();
            spectrum(2, modes)
        };
        assert!(witt_spectral_check(&betti([1, 0, 1])));
        assert!(!witt_spectral_check(&betti([1, 2, 1])));
        assert!(witt_spectral_check(&spectrum(3, vec![mode(1, Number::int(0))])));
    }

    #[test]
    fn rescaling() {
        let s = circle_spectrum_pi_multiple(&Number::int(4), 5).unwrap();
        let c = rescale_for_gap(&s, TOL).unwrap();
        assert_eq!(c, Number::ratio(1, 2));
        assert!(check_gap_condition(&s.scaled(&c), TOL));
        assert!(!check_gap_condition(&s, TOL));
        assert_eq!(rescale_for_gap(&spectrum(1, vec![mode(0, Number::int(1))]), TOL), Some(Number::int(1)));
        assert_eq!(rescale_for_gap(&spectrum(2, vec![mode(0, Number::int(0))]), TOL), None);
    }

    #[test]
    fn certificate_truth_table() {
        let a = Number::ratio(1, 2);
        let h = |k| mode(k, Number::int(0));
        let l = Number::ratio(13, 10);
        let pass = spectrum(2, vec![h(0), h(2), mode(0, l.clone()), mode(1, l.clone()), mode(2, l.clone())]);
        assert!(normal_injectivity_certificate(&pass, &a, TOL).passed());
        let middle = spectrum(2, vec![h(0), h(1), h(2)]);
        let c = normal_injectivity_certificate(&middle, &a, TOL);
        assert!(matches!(c.verdict, Verdict::Fail { reason: FailReason::MiddleHarmonic, .. }));
        let gap = spectrum(2, vec![h(0), h(2), mode(1, Number::ratio(1, 2))]);
        match normal_injectivity_certificate(&gap, &a, TOL).verdict {
            Verdict::Fail { reason: FailReason::Gap, witness } => assert_eq!(witness.lambda, Number::ratio(1, 2)),
            other => panic!("{other:?}"),
        }
        let sparse = spectrum(2, vec![h(0), h(2)]);
        assert_eq!(
            normal_injectivity_certificate(&sparse, &a, TOL).verdict,
            Verdict::Incomplete { missing_degrees: vec![1] }
        );
    }

    #[test]
    fn certificate_json_shape() {
        let s = spectrum(1, vec![mode(0, Number::int(0)), mode(1, Number::int(0))]);
        let v = serde_json::to_value(normal_injectivity_certificate(&s, &Number::ratio(1, 2), TOL)).unwrap();
        assert_eq!(v["verdict"], "PASS");
        assert_eq!(v["weight"], "1/2");
    }
}
