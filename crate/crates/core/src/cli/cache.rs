//! On-disk cache of family polynomials in canonical text.

use std::fs;
use std::path::{Path, PathBuf};

use crate::catalog::{family_poly, FamilyName};
use crate::error::Result;
use crate::polynomial::Polynomial;

pub fn cache_path(dir: &Path, name: FamilyName, n: usize) -> PathBuf {
    dir.join(format!("{}_{n}.poly", name.as_str()))
}

/// A cached entry is used only if it parses and re-serializes to the same
/// bytes. Anything else is recomputed and rewritten.
pub fn cached_family_poly(dir: Option<&Path>, name: FamilyName, n: usize) -> Result<Polynomial> {
    let Some(dir) = dir else {
        return family_poly(name, n);
    };
    let path = cache_path(dir, name, n);
    if let Ok(text) = fs::read_to_string(&path) {
        let body = text.strip_suffix('\n').unwrap_or(&text);
        if let Ok(p) = body.parse::<Polynomial>() {
            if p.to_string() == body {
                return Ok(p);
            }
        }
    }
    let p = family_poly(name, n)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, format!("{p}\n"))?;
    fs::rename(&tmp, &path)?;
    Ok(p)
}
