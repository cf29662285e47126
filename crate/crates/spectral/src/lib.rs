//! Spectral conditions on the links of a stratified space: the gap
//! condition and metric rescaling, candidate indicial roots, Bessel-mode
//! admissibility, weight windows and the normal-operator injectivity
//! certificate.

pub mod gap;
pub mod number;
pub mod roots;
pub mod spectrum;

pub use gap::{
    check_gap_condition, normal_injectivity_certificate, rescale_for_gap, witt_spectral_check, Certificate, FailReason,
    Verdict,
};
pub use number::{Number, DEFAULT_TOLERANCE};
pub use roots::{
    adjoint_reflect, bessel_mode_excluded, indicial_roots, weight_interval_clear, IndicialRootSet, Root, WeightWindow,
};
pub use spectrum::{circle_spectrum, circle_spectrum_pi_multiple, LinkSpectrum, Mode};
