//! Frozen outputs that the suites compare against. They live under
//! `fixtures/` next to the manifest and are rewritten by `--refreeze`.

use std::fs;
use std::io;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

pub const TILDE_FILE: &str = "heisenberg_tilde.json";
pub const ADELMAN_FILE: &str = "adelman_interpretation.json";

/// One cell `[ã_n, b_m]` of the tilde table, both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TildeRow {
    pub n: usize,
    pub m: usize,
    pub commutator: String,
    /// `[ã_n, b_m] − δ_{nm}`.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TildeFixture {
    pub bound: usize,
    pub table: Vec<TildeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AdelmanFixture {
    pub kernel: Option<String>,
    pub cokernel: Option<String>,
}

pub fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn load<T: for<'de> Deserialize<'de>>(name: &str) -> io::Result<T> {
    let text = fs::read_to_string(dir().join(name))?;
    serde_json::from_str(&text).map_err(io::Error::other)
}

fn store<T: Serialize>(name: &str, value: &T) -> io::Result<PathBuf> {
    let path = dir().join(name);
    fs::create_dir_all(dir())?;
    let mut text = serde_json::to_string_pretty(value).map_err(io::Error::other)?;
    text.push('\n');
    fs::write(&path, text)?;
    Ok(path)
}

pub fn load_tilde() -> io::Result<TildeFixture> {
    load(TILDE_FILE)
}

pub fn load_adelman() -> io::Result<AdelmanFixture> {
    load(ADELMAN_FILE)
}

pub fn store_tilde(f: &TildeFixture) -> io::Result<PathBuf> {
    store(TILDE_FILE, f)
}

pub fn store_adelman(f: &AdelmanFixture) -> io::Result<PathBuf> {
    store(ADELMAN_FILE, f)
}
