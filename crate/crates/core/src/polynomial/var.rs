use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use crate::error::{Result, SpkError};

/// An interned variable name.
///
/// Names are nonempty ASCII identifiers. Interning leaks one allocation per
/// distinct name for the life of the process; the name registry is small and
/// fixed in practice. Ordering is lexicographic on the name.
#[derive(Clone, Copy)]
pub struct Var(&'static str);

fn registry() -> &'static Mutex<HashSet<&'static str>> {
    static REGISTRY: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashSet::new()))
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Var {
    pub fn new(name: &str) -> Result<Var> {
        if !is_identifier(name) {
            return Err(SpkError::InvalidVariable(name.to_string()));
        }
        let mut reg = registry().lock().expect("variable registry poisoned");
        if let Some(existing) = reg.get(name) {
            return Ok(Var(existing));
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        reg.insert(leaked);
        Ok(Var(leaked))
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

/// Shorthand for [`Var::new`] on names known to be valid.
///
/// Panics on an invalid identifier.
pub fn var(name: &str) -> Var {
    Var::new(name).unwrap_or_else(|e| panic!("{e}"))
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0) || self.0 == other.0
    }
}

impl Eq for Var {}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        if std::ptr::eq(self.0, other.0) {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = var("beta4");
        let b = Var::new("beta4").unwrap();
        assert!(std::ptr::eq(a.name(), b.name()));
        assert!(var("P") < var("P1"));
        assert!(var("x") < var("y"));
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Var::new("").is_err());
        assert!(Var::new("1x").is_err());
        assert!(Var::new("a-b").is_err());
        assert!(Var::new("g2_alpha").is_ok());
    }
}
