//! Run configuration: JSON schema, preset resolution, and load-time
//! validation. Every violation detected here is a configuration error
//! (process exit code 2), as opposed to a failed verification invariant
//! (exit code 1).

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use kafourier::laguerre::{lambda_param, Branch, LaguerreBasisSpec};
use kafourier::radial::{ExpMonomial, QuadratureConfig, RadialFunctionDocument};
use kafourier::roots::{
    load_document, ConfiguredRoots, MultiplicityEntry, RootSystemDocument, DEFAULT_GROUP_BOUND,
};
use kafourier::scalar::{format_rational, parse_rational};

use crate::presets;

/// Configuration error with the deterministic message shown to the user.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "configuration error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl From<kafourier::Error> for ConfigError {
    fn from(e: kafourier::Error) -> Self {
        ConfigError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, ConfigError>;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RootSystemSource {
    Preset(String),
    Inline(RootSystemDocument),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MultiplicitySource {
    Uniform(String),
    PerOrbit(Vec<MultiplicityEntry>),
}

#[derive(Debug, Clone, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TransformSpec {
    /// `"fourier"` or `"semigroup"`.
    pub kind: String,
    #[serde(default)]
    pub z_re: f64,
    #[serde(default)]
    pub z_im: f64,
    /// `"positive"` (default) or `"negative"`.
    #[serde(default)]
    pub branch: Option<String>,
    /// Sector the input profile lives in; defaults to the first
    /// configured sector.
    #[serde(default)]
    pub m: Option<u32>,
}

/// On-disk configuration document.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub root_system: RootSystemSource,
    #[serde(default)]
    pub k: Option<MultiplicitySource>,
    pub a: String,
    #[serde(default)]
    pub sectors: Option<Vec<u32>>,
    #[serde(default)]
    pub truncation: Option<usize>,
    #[serde(default)]
    pub nodes: Option<usize>,
    #[serde(default)]
    pub out_dir: Option<String>,
    /// Subset of registered check names to run; all when omitted.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
    #[serde(default)]
    pub l_max: Option<u32>,
    #[serde(default)]
    pub r_grid: Option<GridSpec>,
    #[serde(default)]
    pub transform: Option<TransformSpec>,
    #[serde(default)]
    pub input: Option<RadialFunctionDocument>,
}

/// Resolved transform request.
#[derive(Debug, Clone)]
pub enum TransformRequest {
    Fourier { branch: Branch, m: Option<u32> },
    Semigroup { z: Complex64, branch: Branch, m: Option<u32> },
}

/// Fully resolved and validated run configuration.
pub struct RunConfig {
    pub roots: ConfiguredRoots,
    /// Magnitude of the deformation parameter (positive).
    pub a: BigRational,
    pub sectors: Vec<u32>,
    pub truncation: usize,
    pub quadrature: QuadratureConfig,
    pub l_max: u32,
    pub out_dir: PathBuf,
    pub checks: Option<Vec<String>>,
    pub r_grid: Vec<f64>,
    pub transform: Option<TransformRequest>,
    pub input: Option<ExpMonomial<Complex64>>,
    /// Deterministic one-line configuration echo used in reports.
    pub echo: String,
}

impl RunConfig {
    pub fn dimension(&self) -> u32 {
        self.roots.dimension() as u32
    }

    pub fn index(&self) -> &BigRational {
        self.roots.index()
    }

    /// Basis spec for one sector and branch.
    pub fn basis_spec(&self, m: u32, branch: Branch) -> LaguerreBasisSpec {
        LaguerreBasisSpec::new(
            self.dimension(),
            self.index().clone(),
            self.a.clone(),
            m,
            branch,
        )
        .expect("sector hypotheses were validated at load time")
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    let doc: ConfigDocument =
        serde_json::from_str(&text).map_err(|e| ConfigError(format!("invalid JSON: {e}")))?;
    resolve(doc)
}

pub fn resolve(doc: ConfigDocument) -> Result<RunConfig> {
    // Root system: preset or inline document.
    let (system_label, mut root_doc) = match &doc.root_system {
        RootSystemSource::Preset(name) => {
            let built = presets::build(name)
                .ok_or_else(|| ConfigError(format!("unknown root-system preset {name:?}")))?;
            (name.clone(), built)
        }
        RootSystemSource::Inline(inline) => ("inline".to_string(), inline.clone()),
    };

    // Multiplicity: config-level `k` overrides document entries.
    match &doc.k {
        Some(MultiplicitySource::PerOrbit(entries)) => {
            root_doc.multiplicity = entries.clone();
        }
        Some(MultiplicitySource::Uniform(_)) | None => {}
    }
    let uniform_k = match &doc.k {
        Some(MultiplicitySource::Uniform(text)) => Some(
            parse_rational(text).map_err(|_| ConfigError(format!("invalid multiplicity {text:?}")))?,
        ),
        _ => None,
    };
    if uniform_k.is_none() && root_doc.multiplicity.is_empty() {
        return Err(ConfigError(
            "no multiplicity given: set \"k\" or provide per-orbit entries".into(),
        ));
    }

    let roots = if let Some(k) = &uniform_k {
        // Cover every orbit with the same value by listing each root once.
        root_doc.multiplicity = root_doc
            .roots
            .iter()
            .map(|r| MultiplicityEntry {
                orbit_root: r.clone(),
                k: format_rational(k),
            })
            .collect();
        load_document(&root_doc, DEFAULT_GROUP_BOUND)?
    } else {
        load_document(&root_doc, DEFAULT_GROUP_BOUND)?
    };

    // Deformation parameter: nonzero rational; the magnitude drives both
    // branches.
    let a_signed =
        parse_rational(&doc.a).map_err(|_| ConfigError(format!("invalid parameter a={:?}", doc.a)))?;
    if a_signed.is_zero() {
        return Err(ConfigError("deformation parameter a must be nonzero".into()));
    }
    let a = if a_signed.is_negative() {
        -a_signed
    } else {
        a_signed
    };

    let dimension = roots.dimension() as u32;
    let sectors = doc.sectors.clone().unwrap_or_else(|| {
        if dimension == 1 {
            vec![0, 1]
        } else {
            vec![0, 1, 2]
        }
    });
    if sectors.is_empty() {
        return Err(ConfigError("sectors must be nonempty".into()));
    }
    if dimension == 1 {
        if let Some(&bad) = sectors.iter().find(|&&m| m > 1) {
            return Err(ConfigError(format!(
                "sector m={bad} is empty in dimension 1 (harmonic degrees 0 and 1 only)"
            )));
        }
    }

    // Branch hypotheses per sector, checked at load.
    let index = roots.index().clone();
    for &m in &sectors {
        let lambda = lambda_param(dimension, &index, &a, m)
            .map_err(|e| ConfigError(e.to_string()))?;
        if lambda <= -BigRational::from_integer(1.into()) {
            return Err(ConfigError(format!(
                "sector m={m}: spectral parameter {} violates the branch hypothesis (needs > -1)",
                format_rational(&lambda)
            )));
        }
    }

    let truncation = doc.truncation.unwrap_or(32);
    let nodes = doc.nodes.unwrap_or(128);
    if truncation == 0 || nodes == 0 {
        return Err(ConfigError("truncation and nodes must be positive".into()));
    }
    let l_max = doc.l_max.unwrap_or(7);

    let r_grid = match &doc.r_grid {
        None => default_grid(),
        Some(spec) => {
            let well_formed = spec.points >= 2 && spec.start > 0.0 && spec.stop > spec.start;
            if !well_formed {
                return Err(ConfigError(
                    "r_grid needs points >= 2 and 0 < start < stop".into(),
                ));
            }
            (0..spec.points)
                .map(|i| {
                    spec.start
                        + (spec.stop - spec.start) * i as f64 / (spec.points - 1) as f64
                })
                .collect()
        }
    };

    let transform = match &doc.transform {
        None => None,
        Some(spec) => {
            let branch = match spec.branch.as_deref() {
                None | Some("positive") => Branch::Positive,
                Some("negative") => Branch::Negative,
                Some(other) => {
                    return Err(ConfigError(format!("unknown branch {other:?}")));
                }
            };
            match spec.kind.as_str() {
                "fourier" => Some(TransformRequest::Fourier { branch, m: spec.m }),
                "semigroup" => Some(TransformRequest::Semigroup {
                    z: Complex64::new(spec.z_re, spec.z_im),
                    branch,
                    m: spec.m,
                }),
                other => {
                    return Err(ConfigError(format!(
                        "unknown transform kind {other:?} (expected fourier or semigroup)"
                    )))
                }
            }
        }
    };

    let input = match &doc.input {
        None => None,
        Some(document) => Some(
            ExpMonomial::from_document(document)
                .map_err(|e| ConfigError(format!("invalid input function: {e}")))?,
        ),
    };

    let echo = format!(
        "system={system_label} N={dimension} <k>={} a={} sectors={:?} truncation={truncation} nodes={nodes} l_max={l_max}",
        format_rational(&index),
        format_rational(&a),
        sectors,
    );

    Ok(RunConfig {
        roots,
        a,
        sectors,
        truncation,
        quadrature: QuadratureConfig { nodes },
        l_max,
        out_dir: PathBuf::from(doc.out_dir.unwrap_or_else(|| "out".to_string())),
        checks: doc.checks,
        r_grid,
        transform,
        input,
        echo,
    })
}

fn default_grid() -> Vec<f64> {
    // Geometric ladder covering both tails.
    vec![0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0]
}

/// Sample radii used by pointwise checks.
pub const CHECK_RADII: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

