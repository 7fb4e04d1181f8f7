//! Command implementations and the claim registry behind the `atlas` binary.
//!
//! Every command returns an [`Outcome`]: the text to print and whether the
//! checks it ran passed. The binary maps that to the exit code (0 pass,
//! 1 claim failure, 2 usage error).

use std::fmt;
use std::str::FromStr;

use atlas_core::exactnum::{FieldScalar, Rational};
use atlas_core::hurwitz::HurwitzError;
use atlas_core::jordan::JordanError;
use atlas_core::lie::LieError;
use atlas_core::projection::ProjectionError;
use atlas_core::rootspace::{generate_roots, AlgebraName, RootError, RootVector};
use atlas_core::titslie::{tits_construct, TitsError, VerifyMode};
use atlas_core::lie::LieAlgebra;
use thiserror::Error;

pub mod claims;
pub mod commands;
pub mod svg;

pub use claims::{run_all, CriterionReport, Report, ReportEntry};

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_SAMPLES: usize = 200;
/// Seeded Jacobi triples for algebras checked by sampling.
pub const DEFAULT_TRIPLES: usize = 2000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown claim id prefix `{0}`")]
    UnknownPrefix(String),
    #[error("bad perturbation `{0}`: {1}")]
    BadPerturbation(String, String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
    #[error(transparent)]
    Tits(#[from] TitsError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownPrefix(_) | CliError::BadPerturbation(..) | CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// How Jacobi is checked on the Tits algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JacobiPolicy {
    /// Exhaustive up to dimension 35, seeded triples plus every within-block
    /// triple above.
    #[default]
    Standard,
    Exhaustive,
    Sampled,
}

impl FromStr for JacobiPolicy {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "standard" => Ok(JacobiPolicy::Standard),
            "exhaustive" => Ok(JacobiPolicy::Exhaustive),
            "sampled" => Ok(JacobiPolicy::Sampled),
            _ => Err(CliError::Usage(format!("unknown mode `{s}` (standard, exhaustive or sampled)"))),
        }
    }
}

/// A single change injected into the data the claims are checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Perturbation {
    /// Adds `delta` to coordinate `coord` (1-based, k1..k8) of root `index`
    /// in the sorted root list of `algebra`.
    Root { algebra: AlgebraName, index: usize, coord: usize, delta: FieldScalar },
    /// Adds `delta` to `c_ij^k` of the Tits algebra `T(h, n)`.
    Constant { h: usize, n: usize, i: usize, j: usize, k: usize, delta: Rational },
}

impl FromStr for Perturbation {
    type Err = CliError;

    /// `root:<algebra>:<index>:<coord>:<delta>` or
    /// `const:<h>:<n>:<i>:<j>:<k>:<delta>`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = |why: &str| CliError::BadPerturbation(s.to_string(), why.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad(&format!("`{x}` is not an index")));
        match parts.as_slice() {
            ["root", alg, index, coord, delta] => {
                let algebra: AlgebraName = alg.parse().map_err(|_| bad("unknown algebra"))?;
                let delta: FieldScalar = delta.parse().map_err(|_| bad("delta is not a scalar"))?;
                Ok(Perturbation::Root { algebra, index: num(index)?, coord: num(coord)?, delta })
            }
            ["const", h, n, i, j, k, delta] => {
                let delta: Rational = delta.parse().map_err(|_| bad("delta is not a rational"))?;
                Ok(Perturbation::Constant { h: num(h)?, n: num(n)?, i: num(i)?, j: num(j)?, k: num(k)?, delta })
            }
            _ => Err(bad("expected root:<algebra>:<index>:<coord>:<delta> or const:<h>:<n>:<i>:<j>:<k>:<delta>")),
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Perturbation::Root { algebra, index, coord, delta } => write!(f, "root:{algebra}:{index}:{coord}:{delta}"),
            Perturbation::Constant { h, n, i, j, k, delta } => write!(f, "const:{h}:{n}:{i}:{j}:{k}:{delta}"),
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct Options {
    pub seed: u64,
    pub samples: usize,
    pub triples: usize,
    pub policy: JacobiPolicy,
    pub json: bool,
    pub perturbation: Option<Perturbation>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            triples: DEFAULT_TRIPLES,
            policy: JacobiPolicy::Standard,
            json: false,
            perturbation: None,
        }
    }
}

impl Options {
    pub fn verify_mode(&self) -> VerifyMode {
        match self.policy {
            JacobiPolicy::Standard => VerifyMode::Standard { triples: self.triples, seed: self.seed },
            JacobiPolicy::Exhaustive => VerifyMode::Exhaustive,
            JacobiPolicy::Sampled => VerifyMode::Sampled { triples: self.triples, seed: self.seed },
        }
    }

    /// Checks that the perturbation, if any, points at existing data.
    pub fn validate(&self) -> Result<(), CliError> {
        let Some(p) = &self.perturbation else {
            return Ok(());
        };
        let bad = |why: String| CliError::BadPerturbation(p.to_string(), why);
        match p {
            Perturbation::Root { algebra, index, coord, .. } => {
                let n = generate_roots(*algebra)?.len();
                if *index >= n {
                    return Err(bad(format!("{algebra} has {n} roots")));
                }
                if !(1..=8).contains(coord) {
                    return Err(bad("coordinates are k1..k8".into()));
                }
            }
            Perturbation::Constant { h, n, i, j, k, .. } => {
                let dim = tits_construct(*h, *n).map_err(|e| bad(e.to_string()))?.dim();
                if i == j || *i >= dim || *j >= dim || *k >= dim {
                    return Err(bad(format!("T({h},{n}) has dimension {dim} and needs i != j")));
                }
            }
        }
        Ok(())
    }
}

/// Text to print and whether every check behind it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    pub fn pass(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// The roots of `name`, with the root perturbation applied when it targets
/// this algebra.
pub fn roots_for(name: AlgebraName, opts: &Options) -> Result<Vec<RootVector>, CliError> {
    let mut roots = generate_roots(name)?.roots;
    if let Some(Perturbation::Root { algebra, index, coord, delta }) = &opts.perturbation {
        if *algebra == name {
            let r = roots.get_mut(*index).ok_or_else(|| CliError::BadPerturbation(index.to_string(), "no such root".into()))?;
            r.0[coord - 1] = &r.0[coord - 1] + delta;
        }
    }
    Ok(roots)
}

/// `T(h, n)`, with the constant perturbation applied when it targets it.
pub fn tits_for(h: usize, n: usize, opts: &Options) -> Result<LieAlgebra<Rational>, CliError> {
    let mut l = tits_construct(h, n)?;
    if let Some(Perturbation::Constant { h: ph, n: pn, i, j, k, delta }) = &opts.perturbation {
        if (*ph, *pn) == (h, n) {
            let c = l.structure_constant(*i, *j, *k) + delta;
            l.set_structure_constant(*i, *j, *k, c);
        }
    }
    Ok(l)
}

/// Parses a Hurwitz algebra given as `R`, `C`, `Q`, `O` or its dimension.
pub fn parse_hurwitz(s: &str) -> Result<usize, CliError> {
    match s {
        "R" | "r" | "1" => Ok(1),
        "C" | "c" | "2" => Ok(2),
        "Q" | "q" | "H" | "4" => Ok(4),
        "O" | "o" | "8" => Ok(8),
        _ => Err(CliError::Usage(format!("unknown Hurwitz algebra `{s}` (R, C, Q, O or 1, 2, 4, 8)"))),
    }
}

pub fn parse_algebra(s: &str) -> Result<AlgebraName, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("unknown algebra `{s}`")))
}
