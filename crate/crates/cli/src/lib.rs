//! The `wittkit` command line: JSON in, JSON out, stable exit codes.
//!
//! Exit 0 means the computation ran and its condition holds, 2 that it ran
//! and the condition fails, 1 an input or validation error (reported as
//! `{"error": code, "detail": message}`).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use wittkit_core::complex::{check_pseudomanifold, orient, ComplexDocument};
use wittkit_core::ih::{ih_ranks, Perversity};
use wittkit_core::resolution::{blowdown, resolve, validate_ifs, LabelledPoset};
use wittkit_core::signature::intersection_pairing;
use wittkit_core::strat::{validate_filtration, StratifiedSpace};
use wittkit_core::witt::witt_check;
use wittkit_core::Error;
use wittkit_spectral::{
    check_gap_condition, indicial_roots, normal_injectivity_certificate, rescale_for_gap, witt_spectral_check,
    LinkSpectrum, Number, WeightWindow,
};

#[derive(Debug, Parser)]
#[command(name = "wittkit", version, about = "Intersection homology, Witt spaces and cone-link spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Complex-JSON file, optionally with a filtration.
    pub input: PathBuf,
    /// Barycentric subdivisions applied before computing.
    #[arg(long, default_value_t = 1)]
    pub subdivisions: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Spectrum-JSON file.
    pub input: PathBuf,
    /// Weight `a`.
    #[arg(long, default_value = "1/2")]
    pub weight: String,
    /// Absolute tolerance for comparisons involving floats.
    #[arg(long, default_value_t = wittkit_spectral::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a complex and its filtration and list the strata.
    Check {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
    },
    /// Intersection homology ranks for one perversity.
    Ih {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "lower-middle")]
        perversity: String,
    },
    /// Decide the Witt condition.
    Witt {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Middle intersection pairing and signature.
    Signature {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Resolution tree, its checks and the blowdown round trip.
    Resolve {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Candidate indicial roots, with an optional weight window test.
    Indicial {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Gap condition, rescaling and the injectivity certificate.
    Gap {
        #[command(flatten)]
        spectrum: SpectrumArgs,
    },
}

/// Exit code and the text that goes to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn error_json(code: &str, detail: impl Into<String>) -> String {
    pretty(&json!({ "error": code, "detail": detail.into() }))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialise");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string() };
            }
            return Outcome { code: 1, stdout: error_json("UsageError", e.to_string().trim_end()) };
        }
    };
    let result = execute(&cli.command);
    let (code, text) = match result {
        Ok((holds, report)) => (if holds { 0 } else { 2 }, pretty(&report)),
        Err(e) => (1, error_json(e.code(), e.to_string())),
    };
    if let (Some(path), true) = (&cli.out, code != 1) {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome { code: 1, stdout: error_json("IoError", format!("{}: {e}", path.display())) };
        }
        return Outcome { code, stdout: String::new() };
    }
    Outcome { code, stdout: text }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<StratifiedSpace, Error> {
    StratifiedSpace::from_document(&ComplexDocument::from_json(&read(path)?)?)
}

/// Validates the input as given, then subdivides.
fn prepared(args: &SpaceArgs) -> Result<(StratifiedSpace, StratifiedSpace), Error> {
    let space = load_space(&args.input)?;
    validate_filtration(&space.complex, &space.filtration)?;
    let sd = space.subdivide(args.subdivisions);
    Ok((space, sd))
}

fn number(flag: &str, text: &str) -> Result<Number, Error> {
    Number::parse(text).ok_or_else(|| Error::MalformedInput(format!("--{flag}: `{text}` is not a number")))
}

fn execute(command: &Command) -> Result<(bool, Value), Error> {
    match command {
        Command::Check { input, subdivisions } => {
            let space = load_space(input)?.subdivide(*subdivisions);
            let (k, f) = (&space.complex, &space.filtration);
            let poset = validate_filtration(k, f)?;
            let pm = check_pseudomanifold(k, f);
            let strata: Vec<Value> = poset
                .strata()
                .iter()
                .map(|s| {
                    json!({
                        "id": s.id,
                        "dim": s.dim,
                        "depth": poset.stratum_depth(s.id),
                        "regular": poset.is_regular(s.id),
                        "simplices": s.simplices.len(),
                        "vertices": s.vertices.len(),
                    })
                })
                .collect();
            let report = json!({
                "name": k.name(),
                "dimension": k.dim(),
                "subdivisions": subdivisions,
                "f_vector": k.f_vector(),
                "euler_characteristic": k.euler_characteristic(),
                "pseudomanifold": pm,
                "orientable": orient(k).is_ok(),
                "strata": strata,
                "relations": poset.relations(),
                "depth": poset.depth(),
            });
            Ok((pm.passed(), report))
        }
        Command::Ih { space, perversity } => {
            let (input, sd) = prepared(space)?;
            let p = Perversity::parse(perversity, input.dim())?;
            let r = ih_ranks(&sd.complex, &sd.filtration, &p);
            Ok((
                true,
                json!({
                    "name": input.complex.name(),
                    "dimension": input.dim(),
                    "subdivisions": space.subdivisions,
                    "perversity": p.to_string(),
                    "perversity_values": p.values(),
                    "ranks": r.ranks,
                    "ic_dims": r.ic_dims,
                }),
            ))
        }
        Command::Witt { space } => {
            let (input, sd) = prepared(space)?;
            let r = witt_check(&sd.complex, &sd.filtration)?;
            let failing: Vec<Value> = r
                .entries
                .iter()
                .filter(|e| !e.witt)
                .map(|e| json!({ "stratum": e.stratum, "link_dim": e.link_dim, "middle_rank": e.middle_rank }))
                .collect();
            Ok((
                r.witt,
                json!({
                    "name": input.complex.name(),
                    "dimension": input.dim(),
                    "subdivisions": space.subdivisions,
                    "witt": r.witt,
                    "failing_strata": failing,
                    "entries": r.entries,
                }),
            ))
        }
        Command::Signature { space } => {
            let input = load_space(&space.input)?;
            let p = intersection_pairing(&input, space.subdivisions)?;
            Ok((
                true,
                json!({
                    "name": input.complex.name(),
                    "dimension": p.dimension,
                    "subdivisions": space.subdivisions,
                    "middle_rank": p.middle_rank,
                    "form": p.form,
                    "matrix": p.matrix,
                    "signature": p.signature(),
                    "basis_source": p.basis_source,
                }),
            ))
        }
        Command::Resolve { space } => {
            let (input, sd) = prepared(space)?;
            let tree = resolve(&sd.complex, &sd.filtration)?;
            let ifs = validate_ifs(&tree);
            let poset = validate_filtration(&sd.complex, &sd.filtration)?;
            let round_trip = blowdown(&tree).map(|b| b == LabelledPoset::of(&poset)).unwrap_or(false);
            Ok((
                ifs.passed && round_trip,
                json!({
                    "name": input.complex.name(),
                    "dimension": input.dim(),
                    "subdivisions": space.subdivisions,
                    "tree": tree,
                    "ledger": tree.ledger(),
                    "ifs": ifs,
                    "round_trip": round_trip,
                }),
            ))
        }
        Command::Indicial { spectrum, alpha, epsilon } => {
            let s = LinkSpectrum::from_json(&read(&spectrum.input)?)?;
            let a = number("weight", &spectrum.weight)?;
            let roots = indicial_roots(&s, &a, spectrum.tolerance);
            let window = match (alpha, epsilon) {
                (Some(al), Some(ep)) => Some(WeightWindow::new(number("alpha", al)?, number("epsilon", ep)?)?),
                (None, None) => None,
                _ => return Err(Error::MalformedInput("--alpha and --epsilon go together".into())),
            };
            let mut report = serde_json::to_value(&roots).expect("serialisable");
            let mut holds = true;
            if let Some(w) = window {
                let offending = w.offending(&roots, spectrum.tolerance);
                holds = offending.is_empty();
                report["window"] =
                    json!({ "alpha": w.alpha, "epsilon": w.epsilon, "clear": holds, "offending": offending });
            }
            Ok((holds, report))
        }
        Command::Gap { spectrum } => {
            let s = LinkSpectrum::from_json(&read(&spectrum.input)?)?;
            let a = number("weight", &spectrum.weight)?;
            let tol = spectrum.tolerance;
            let certificate = normal_injectivity_certificate(&s, &a, tol);
            let scale = rescale_for_gap(&s, tol);
            Ok((
                certificate.passed(),
                json!({
                    "dim_link": s.dim_link,
                    "harmonic_betti": s.harmonic_betti(),
                    "lambda_min": s.lambda_min(),
                    "gap_condition": check_gap_condition(&s, tol),
                    "witt_spectral": witt_spectral_check(&s),
                    "max_scale": scale.map_or(json!("inf"), |c| json!(c)),
                    "certificate": certificate,
                    "cutoff_note": s.cutoff_note,
                }),
            ))
        }
    }
}
