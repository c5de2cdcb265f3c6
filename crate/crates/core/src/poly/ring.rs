use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// `Q[x_1, ..., x_n]` described by its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let mut seen = HashSet::new();
        for n in names {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(Error::InvalidRing(format!(
                    "`{n}` is not a valid identifier"
                )));
            }
            if !seen.insert(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(PolyRing {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }))
    }

    /// Variables `x1, ..., xn`.
    pub fn with_arity(n: usize) -> Result<Arc<Self>> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(&names)
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name not used in this ring, built from `base` by appending
    /// underscores.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        name
    }

    /// The ring with one extra variable `name` placed first.
    pub fn prepend(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = vec![name.to_string()];
        names.extend(self.names.iter().cloned());
        Self::new(&names)
    }

    /// The ring with one extra variable `name` placed last.
    pub fn append(&self, name: &str) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Self::new(&names)
    }

    /// The ring without its first variable.
    pub fn drop_first(&self) -> Result<Arc<Self>> {
        Self::new(&self.names[1..])
    }
}
