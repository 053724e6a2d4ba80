//! Turning command-line parameters into an enumerator and, when available, its dual.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use codezeta::enumerator::{
    code_dimension, dual_enumerator, golay_enumerator, hamming_enumerator, macwilliams_identity_holds,
    mds_enumerator, simplex_enumerator, EnumeratorJson,
};
use codezeta::zeta::ZetaJson;
use codezeta::{CodeParams, Golay, WeightEnumerator, ZetaPolynomial};
use serde::Serialize;

use crate::error::{malformed, CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Mds,
    Hamming,
    Simplex,
    Golay,
    File,
}

#[derive(Clone, Debug, Default, Args)]
pub struct SourceArgs {
    /// Code family.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Golay code: g23, g11, g23_dual or g11_dual.
    #[arg(long)]
    pub which: Option<String>,
    /// Enumerator JSON for `--family file`.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Enumerator JSON of the dual code, for `--family file`.
    #[arg(long)]
    pub dual: Option<PathBuf>,
    /// Read JSON from standard input.
    #[arg(long)]
    pub stdin: bool,
}

/// Echo of the parameters in reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Inputs {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
}

/// An enumerator with whatever is known about its dual.
pub struct CodeSource {
    pub inputs: Inputs,
    pub family: Option<Family>,
    pub code: WeightEnumerator,
    pub k: Option<usize>,
    /// Parameters and dual enumerator, when a verified pair is available.
    pub pair: Option<(CodeParams, WeightEnumerator)>,
}

/// Input that is either an enumerator or a ready zeta polynomial.
pub enum Source {
    Code(CodeSource),
    Zeta(Inputs, ZetaPolynomial),
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::BadParams(format!("--{flag} is required for family {family}")))
}

fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn parse_enumerator(text: &str, origin: &str) -> CliResult<(WeightEnumerator, Option<usize>)> {
    let json: EnumeratorJson =
        serde_json::from_str(text).map_err(|e| malformed(format!("{origin}: {e}")))?;
    let w = WeightEnumerator::from_json(&json).map_err(|e| malformed(format!("{origin}: {e}")))?;
    Ok((w, json.k))
}

impl Inputs {
    fn new(family: &str) -> Self {
        Inputs {
            family: family.into(),
            n: None,
            d: None,
            q: None,
            r: None,
            which: None,
            file: None,
            dual: None,
        }
    }
}

/// Pairs an enumerator of known dimension with its MacWilliams dual.
fn pair_from_dimension(w: &WeightEnumerator, k: Option<usize>) -> Option<(CodeParams, WeightEnumerator)> {
    let k = k.or_else(|| code_dimension(w))?;
    dual_enumerator(w, k).ok().map(|(dual, params)| (params, dual))
}

fn from_json_text(text: &str, inputs: Inputs) -> CliResult<Source> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("stdin: {e}")))?;
    if value.get("coeffs").is_some() {
        let json: ZetaJson = serde_json::from_value(value).map_err(|e| malformed(format!("stdin: {e}")))?;
        let z = ZetaPolynomial::from_json(&json).map_err(|e| malformed(format!("stdin: {e}")))?;
        return Ok(Source::Zeta(inputs, z));
    }
    let (code, k) = parse_enumerator(text, "stdin")?;
    let pair = pair_from_dimension(&code, k);
    Ok(Source::Code(CodeSource {
        inputs,
        family: None,
        k: k.or_else(|| pair.as_ref().map(|(p, _)| p.k)),
        code,
        pair,
    }))
}

impl SourceArgs {
    pub fn resolve(&self) -> CliResult<Source> {
        if self.stdin {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            return from_json_text(&text, Inputs::new("stdin"));
        }
        let family = self
            .family
            .ok_or_else(|| CliError::BadParams("one of --family or --stdin is required".into()))?;
        let mut inputs = Inputs::new(match family {
            Family::Mds => "mds",
            Family::Hamming => "hamming",
            Family::Simplex => "simplex",
            Family::Golay => "golay",
            Family::File => "file",
        });
        let (code, pair) = match family {
            Family::Mds => {
                let n = need(self.n, "n", "mds")?;
                let d = need(self.d, "d", "mds")?;
                let q = need(self.q, "q", "mds")?;
                (inputs.n, inputs.d, inputs.q) = (Some(n), Some(d), Some(q));
                let (w, params) = mds_enumerator(n, d, q)?;
                let (dual, _) = mds_enumerator(n, n + 2 - d, q)?;
                (w, Some((params, dual)))
            }
            Family::Hamming | Family::Simplex => {
                let r = need(self.r, "r", inputs.family.as_str())?;
                let q = need(self.q, "q", inputs.family.as_str())?;
                (inputs.r, inputs.q) = (Some(r), Some(q));
                let (simplex, sp) = simplex_enumerator(r, q)?;
                let (hamming, hp) = hamming_enumerator(r, q)?;
                if family == Family::Hamming {
                    (hamming, Some((hp, simplex)))
                } else {
                    (simplex, Some((sp, hamming)))
                }
            }
            Family::Golay => {
                let which = need(self.which.clone(), "which", "golay")?;
                let g: Golay = which.parse()?;
                inputs.which = Some(which.to_ascii_lowercase());
                let (w, params) = golay_enumerator(g);
                let (dual, _) = golay_enumerator(g.dual());
                (w, Some((params, dual)))
            }
            Family::File => {
                let path = need(self.file.clone(), "file", "file")?;
                inputs.file = Some(path.display().to_string());
                let (w, k) = parse_enumerator(&read_text(&path)?, &path.display().to_string())?;
                let pair = match &self.dual {
                    Some(dual_path) => {
                        inputs.dual = Some(dual_path.display().to_string());
                        let (dual, kd) = parse_enumerator(&read_text(dual_path)?, &dual_path.display().to_string())?;
                        Some(file_pair(&w, k, &dual, kd)?)
                    }
                    None => None,
                };
                let k = k.or_else(|| pair.as_ref().map(|(p, _)| p.k));
                return Ok(Source::Code(CodeSource {
                    inputs,
                    family: Some(family),
                    code: w,
                    k,
                    pair,
                }));
            }
        };
        let k = pair.as_ref().map(|(p, _)| p.k);
        Ok(Source::Code(CodeSource {
            inputs,
            family: Some(family),
            code,
            k,
            pair,
        }))
    }
}

/// Checks that two enumerator files form a dual pair.
fn file_pair(
    w: &WeightEnumerator,
    k: Option<usize>,
    dual: &WeightEnumerator,
    k_dual: Option<usize>,
) -> CliResult<(CodeParams, WeightEnumerator)> {
    if w.q() != dual.q() || w.n() != dual.n() {
        return Err(CliError::BadParams("enumerator and dual differ in q or n".into()));
    }
    let k = k
        .or_else(|| k_dual.map(|kd| w.n() - kd))
        .or_else(|| code_dimension(w))
        .ok_or_else(|| CliError::BadParams("dimension k is unknown; add \"k\" to the file".into()))?;
    let params = CodeParams::new(w.n(), k, w.min_distance(), dual.min_distance(), w.q())?;
    if !macwilliams_identity_holds(w, dual, &params) {
        return Err(CliError::BadParams("the two enumerators do not satisfy the MacWilliams identity".into()));
    }
    Ok((params, dual.clone()))
}
