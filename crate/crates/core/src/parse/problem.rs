//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! ring: x, y
//! J: x^2, y^2
//! f: x*y - 1
//! meta: name=example-2.3-a2, source=hand
//! ```
//!
//! One `ring:` line (before any generator line), one or more `J:` or `f:`
//! lines holding comma-separated generators, and any number of `meta:`
//! lines with comma-separated `key=value` pairs. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::expr::parse_at;
use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

/// A ring with its generator list and free-form metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
    pub metadata: BTreeMap<String, String>,
}

impl ProblemInstance {
    /// Validates and builds an instance.
    pub fn new(
        ring: Arc<PolyRing>,
        generators: Vec<Polynomial>,
        metadata: BTreeMap<String, String>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        for g in &generators {
            if !crate::poly::same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::InvalidInput("zero generator".into()));
            }
        }
        Ok(ProblemInstance {
            ring,
            generators,
            metadata,
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.get("name").map(String::as_str)
    }

    /// Serializes back into the problem-file format.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ring: {}", self.ring.names().join(", "));
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let _ = writeln!(s, "J: {}", gens.join(", "));
        for (k, v) in &self.metadata {
            let _ = writeln!(s, "meta: {k}={v}");
        }
        s
    }
}

fn strip_key<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?;
    rest.trim_start().strip_prefix(':')
}

/// Parses a whole problem file. Errors carry the 1-based line number.
pub fn parse_problem_file(text: &str) -> Result<ProblemInstance> {
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut generators = Vec::new();
    let mut metadata = BTreeMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let indent = raw.len() - raw.trim_start().len();
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = strip_key(line, "ring") {
            if ring.is_some() {
                return Err(Error::syntax(lineno, 1, "second `ring:` line"));
            }
            let names: Vec<&str> = rest.split(',').map(str::trim).collect();
            let r = PolyRing::new(&names).map_err(|e| match e {
                Error::InvalidRing(msg) => Error::syntax(lineno, 1, msg),
                other => other,
            })?;
            ring = Some(r);
        } else if let Some(rest) = strip_key(line, "J").or_else(|| strip_key(line, "f")) {
            let Some(r) = ring.as_ref() else {
                return Err(Error::syntax(
                    lineno,
                    1,
                    "missing `ring:` line before generators",
                ));
            };
            // column where `rest` starts inside the raw line
            let base = indent + (line.len() - rest.len());
            let mut offset = 0;
            for piece in rest.split(',') {
                let col0 = base + offset;
                offset += piece.len() + 1;
                if piece.trim().is_empty() {
                    return Err(Error::syntax(lineno, col0 + 1, "empty generator"));
                }
                let p = parse_at(piece, r)
                    .map_err(|(at, msg)| Error::syntax(lineno, col0 + at + 1, msg))?;
                if p.is_zero() {
                    return Err(Error::syntax(lineno, col0 + 1, "zero generator"));
                }
                generators.push(p);
            }
        } else if let Some(rest) = strip_key(line, "meta") {
            for pair in rest.split(',') {
                let pair = pair.trim();
                if pair.is_empty() {
                    continue;
                }
                let Some((k, v)) = pair.split_once('=') else {
                    return Err(Error::syntax(
                        lineno,
                        1,
                        format!("expected key=value, got `{pair}`"),
                    ));
                };
                metadata.insert(k.trim().to_string(), v.trim().to_string());
            }
        } else {
            return Err(Error::syntax(
                lineno,
                indent + 1,
                "expected a `ring:`, `J:`, `f:` or `meta:` line",
            ));
        }
    }

    let Some(ring) = ring else {
        return Err(Error::syntax(last_line.max(1), 1, "missing `ring:` line"));
    };
    if generators.is_empty() {
        return Err(Error::syntax(last_line.max(1), 1, "empty generator list"));
    }
    ProblemInstance::new(ring, generators, metadata)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_file() {
        let inst = parse_problem_file("ring: x, y\nJ: x^2, y^2").unwrap();
        assert_eq!(inst.generators.len(), 2);
        assert_eq!(inst.ring.names(), &["x", "y"]);
    }

    #[test]
    fn symbolic_exponent_rejected() {
        let e = parse_problem_file("ring: x, y\nJ: x^a, y^a").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 2,
                    column: 6,
                    ..
                }
            ),
            "{e}"
        );
    }

    #[test]
    fn metadata_round_trip() {
        let text = "ring: x, y\nJ: x^2, y^2\nmeta: name=example-2.3-a2\n";
        let inst = parse_problem_file(text).unwrap();
        assert_eq!(inst.name(), Some("example-2.3-a2"));
        let again = parse_problem_file(&inst.to_file_string()).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn structural_errors_have_lines() {
        let cases = [
            ("J: x", 1),
            ("ring: x, x\nJ: x", 1),
            ("ring: x\n\n", 2),
            ("ring: x\nfoo: 1", 2),
            ("# header\nring: x\nJ: x,", 3),
            ("ring: x\nJ: x - x", 2),
        ];
        for (text, line) in cases {
            match parse_problem_file(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
