//! Input file schemas and the small inline spec languages used by flags.
//!
//! Every file is a JSON object with an optional `"version"` field; only
//! version 1 exists, and a missing field is read as 1.

use std::path::Path;

use anyhow::{bail, Context};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use vanishing_core::{FpMultiset, FpVector, PrimeModulus};

use crate::UsageError;

pub const FORMAT_VERSION: u32 = 1;

fn default_version() -> u32 {
    FORMAT_VERSION
}

/// `{"version", "p", "n", "vectors", "r"?}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultisetFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub p: u64,
    pub n: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default)]
    pub r: Option<u32>,
}

/// `{"version", "p", "n", "bases", "A", "r", "targets"}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub p: u64,
    pub n: usize,
    pub bases: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    pub r: u32,
    pub targets: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetSpec {
    #[serde(default)]
    pub gens: Vec<Vec<i64>>,
    pub rep: Vec<i64>,
}

/// `{"version", "factors", "cosets": [{"gens", "rep"}]}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoversFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub factors: Vec<u32>,
    pub cosets: Vec<CosetSpec>,
}

/// `{"version", "factors"}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub factors: Vec<u32>,
}

/// The allowed sets: the keyword `"nonzero"` or explicit `X[i][j]` lists.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ChoiceSpec {
    Keyword(String),
    Sets(Vec<Vec<Vec<i64>>>),
}

/// `{"version", "p", "n", "matrices", "X"}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AjtFile {
    #[serde(default = "default_version")]
    pub version: u32,
    pub p: u64,
    pub n: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "X")]
    pub x: ChoiceSpec,
}

pub trait Versioned {
    fn version(&self) -> u32;
}

macro_rules! versioned {
    ($($t:ty),*) => {
        $(impl Versioned for $t {
            fn version(&self) -> u32 {
                self.version
            }
        })*
    };
}

versioned!(MultisetFile, DecomposeFile, CoversFile, GroupFile, AjtFile);

pub fn read_file<T: DeserializeOwned + Versioned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    parse_text(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_text<T: DeserializeOwned + Versioned>(text: &str) -> anyhow::Result<T> {
    let value: T =
        serde_json::from_str(text).map_err(|e| UsageError(format!("malformed input: {e}")))?;
    if value.version() != FORMAT_VERSION {
        return Err(UsageError(format!("unsupported input version {}", value.version())).into());
    }
    Ok(value)
}

pub fn prime(p: u64) -> anyhow::Result<PrimeModulus> {
    Ok(PrimeModulus::new(p)?)
}

/// Reduces raw integers mod `p`; negative values are allowed.
pub fn vector(p: PrimeModulus, n: usize, raw: &[i64]) -> anyhow::Result<FpVector> {
    if raw.len() != n {
        return Err(UsageError(format!(
            "vector {raw:?} has {} coordinates, expected {n}",
            raw.len()
        ))
        .into());
    }
    Ok(FpVector::from_ints(p, raw))
}

pub fn multiset(p: PrimeModulus, n: usize, rows: &[Vec<i64>]) -> anyhow::Result<FpMultiset> {
    let entries = rows
        .iter()
        .map(|r| vector(p, n, r))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(FpMultiset::new(p, n, entries)?)
}

/// Residues from a list like `"1..10"`, `"0,2,5"` or `"1..3,7"`; ranges
/// are inclusive.
pub fn residue_list(spec: &str) -> anyhow::Result<Vec<i64>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: i64 = number(lo)?;
            let hi: i64 = number(hi.trim_start_matches('='))?;
            if lo > hi {
                bail!(UsageError(format!("empty range {part}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(number(part)?);
        }
    }
    Ok(out)
}

/// Primes in an inclusive range `"A..B"`, or a comma list.
pub fn prime_list(spec: &str) -> anyhow::Result<Vec<u64>> {
    let all = residue_list(spec)?;
    let primes: Vec<u64> = all
        .into_iter()
        .filter(|&x| x > 1 && vanishing_core::fp::is_prime(x as u64))
        .map(|x| x as u64)
        .collect();
    if primes.is_empty() {
        bail!(UsageError(format!("no primes in {spec}")));
    }
    Ok(primes)
}

/// Vectors separated by `;`, coordinates by `,`: `"1,0;0,1;1,1"`.
pub fn inline_vectors(spec: &str) -> anyhow::Result<Vec<Vec<i64>>> {
    spec.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| v.split(',').map(|c| number(c.trim())).collect())
        .collect()
}

pub fn factor_list(spec: &str) -> anyhow::Result<Vec<u32>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(number)
        .collect()
}

fn number<T: std::str::FromStr>(s: &str) -> anyhow::Result<T> {
    s.trim()
        .parse()
        .map_err(|_| UsageError(format!("not a number: {s:?}")).into())
}
