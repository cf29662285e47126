use serde::{Deserialize, Serialize};
use wittkit_core::{Error, Result};

use crate::number::{Number, DEFAULT_TOLERANCE};

/// One eigenvalue of the Hodge Laplacian on `degree`-forms of the link.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub degree: usize,
    pub lambda: Number,
    pub multiplicity: usize,
}

/// A finite truncation of the form-Laplacian spectrum of a link of
/// dimension `dim_link`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinkSpectrum {
    pub dim_link: usize,
    pub modes: Vec<Mode>,
    #[serde(default)]
    pub cutoff_note: String,
}

impl LinkSpectrum {
    /// Checks degrees, multiplicities and signs.
    pub fn new(dim_link: usize, modes: Vec<Mode>, cutoff_note: impl Into<String>) -> Result<Self> {
        let s = Self { dim_link, modes, cutoff_note: cutoff_note.into() };
        s.validate()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Self = serde_json::from_str(text).map_err(|e| Error::MalformedInput(format!("spectrum: {e}")))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        for m in &self.modes {
            if m.degree > self.dim_link {
                return Err(Error::MalformedInput(format!(
                    "mode degree {} exceeds link dimension {}",
                    m.degree, self.dim_link
                )));
            }
            if m.multiplicity == 0 {
                return Err(Error::MalformedInput(format!("mode in degree {} has multiplicity 0", m.degree)));
            }
            if m.lambda.compare(&Number::int(0), 0.0).is_lt() {
                return Err(Error::MalformedInput(format!("negative eigenvalue {} in degree {}", m.lambda, m.degree)));
            }
        }
        Ok(())
    }

    pub fn is_harmonic(m: &Mode) -> bool {
        m.lambda.is_zero(DEFAULT_TOLERANCE)
    }

    /// Number of harmonic forms per degree `0..=dim_link`.
    pub fn harmonic_betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.dim_link + 1];
        for m in self.modes.iter().filter(|m| Self::is_harmonic(m)) {
            b[m.degree] += m.multiplicity;
        }
        b
    }

    pub fn nonzero_modes(&self) -> impl Iterator<Item = &Mode> {
        self.modes.iter().filter(|m| !Self::is_harmonic(m))
    }

    /// Degrees in `0..=dim_link` with no mode at all.
    pub fn missing_degrees(&self) -> Vec<usize> {
        (0..=self.dim_link).filter(|k| !self.modes.iter().any(|m| m.degree == *k)).collect()
    }

    /// Smallest nonzero eigenvalue.
    pub fn lambda_min(&self) -> Option<Number> {
        self.nonzero_modes().map(|m| m.lambda.clone()).min_by(|a, b| a.compare(b, 0.0))
    }

    /// The spectrum after scaling the metric by `c^2`: eigenvalues divide by `c^2`.
    pub fn scaled(&self, c: &Number) -> Self {
        let c2 = c.square();
        let modes = self.modes.iter().map(|m| Mode { lambda: m.lambda.div(&c2), ..m.clone() }).collect();
        Self { dim_link: self.dim_link, modes, cutoff_note: format!("{} (metric scaled by {c}^2)", self.cutoff_note) }
    }
}

fn circle_modes(lambda: impl Fn(u32) -> Number, cutoff: u32) -> Vec<Mode> {
    (0..=1)
        .flat_map(|degree| (0..=cutoff).map(move |m| (degree, m)))
        .map(|(degree, m)| Mode { degree, lambda: lambda(m), multiplicity: if m == 0 { 1 } else { 2 } })
        .collect()
}

/// The round circle of the given circumference: `(2 pi m / L)^2` on
/// functions and on 1-forms for `0 <= m <= cutoff`.
pub fn circle_spectrum(circumference: f64, cutoff: u32) -> Result<LinkSpectrum> {
    if !(circumference.is_finite() && circumference > 0.0) {
        return Err(Error::MalformedInput(format!("circumference must be positive, got {circumference}")));
    }
    let modes =
        circle_modes(|m| Number::Approx((2.0 * std::f64::consts::PI * m as f64 / circumference).powi(2)), cutoff);
    LinkSpectrum::new(1, modes, format!("circle of length {circumference}, modes m <= {cutoff}"))
}

/// The circle of circumference `r * pi` for rational `r`, where every
/// eigenvalue `(2m / r)^2` is exact.
pub fn circle_spectrum_pi_multiple(r: &Number, cutoff: u32) -> Result<LinkSpectrum> {
    if r.compare(&Number::int(0), 0.0).is_le() {
        return Err(Error::MalformedInput(format!("circumference multiple must be positive, got {r}")));
    }
    let modes = circle_modes(|m| Number::int(2 * m as i64).div(r).square(), cutoff);
    LinkSpectrum::new(1, modes, format!("circle of length {r}*pi, modes m <= {cutoff}"))
}
