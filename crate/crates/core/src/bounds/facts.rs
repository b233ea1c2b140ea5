//! Line-oriented fact packs.
//!
//! ```text
//! # comment
//! space torus: group
//! space torus2: power(torus,2)
//! torus | cat | 2 | 2 | classical
//! higman | iTC(3) | 1 | inf | cited result
//! ```

use std::path::Path;

use super::{FactBase, Interval, Invariant, SpaceRef};
use crate::error::{Error, Result};

/// One parsed line of a pack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactLine {
    Space(SpaceRef),
    Bound { space: String, invariant: Invariant, interval: Interval, citation: String },
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn call<'a>(attr: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let rest = attr.strip_prefix(name)?.trim_start();
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').map(str::trim).collect())
}

fn parse_space(n: usize, rest: &str) -> Result<SpaceRef> {
    let (name, attrs) = match rest.split_once(':') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (rest.trim(), ""),
    };
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(err(n, format!("bad space name `{name}`")));
    }
    let mut s = SpaceRef::named(name);
    for attr in attrs.split(';').map(str::trim).filter(|a| !a.is_empty()) {
        let num = |v: &str| v.parse::<u32>().map_err(|_| err(n, format!("bad integer `{v}`")));
        match attr {
            "contractible" => s.contractible = Some(true),
            "noncontractible" => s.contractible = Some(false),
            "group" => s.topological_group = true,
            _ => {
                if let Some(a) = call(attr, "power") {
                    let [b, k] = a[..] else { return Err(err(n, "power(base,k) takes two arguments")) };
                    s.power_of = Some((b.to_string(), num(k)?));
                } else if let Some(a) = call(attr, "product") {
                    s.product_of = a.iter().map(|x| x.to_string()).collect();
                } else if let Some(a) = call(attr, "wedge") {
                    s.wedge_of = a.iter().map(|x| x.to_string()).collect();
                } else if let Some(a) = call(attr, "equivalent") {
                    s.homotopy_equivalent.extend(a.iter().map(|x| x.to_string()));
                } else if let Some(a) = call(attr, "covered_by") {
                    let [e, k] = a[..] else { return Err(err(n, "covered_by(E,k) takes two arguments")) };
                    s.covered_by.push((e.to_string(), num(k)?));
                } else {
                    return Err(err(n, format!("unknown attribute `{attr}`")));
                }
            }
        }
    }
    Ok(s)
}

/// Parses a pack into lines; blank lines and `#` comments are skipped.
pub fn parse_facts(text: &str) -> Result<Vec<FactLine>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("space ") {
            out.push(FactLine::Space(parse_space(n, rest)?));
            continue;
        }
        let cols: Vec<&str> = line.splitn(5, '|').map(str::trim).collect();
        let [space, inv, lo, hi, cite] = cols[..] else {
            return Err(err(n, "expected `space | invariant | lo | hi | citation`"));
        };
        let invariant: Invariant = inv.parse().map_err(|e| err(n, e))?;
        let lo: u32 = lo.parse().map_err(|_| err(n, format!("bad lower bound `{lo}`")))?;
        let hi = match hi {
            "inf" | "∞" => None,
            h => Some(h.parse::<u32>().map_err(|_| err(n, format!("bad upper bound `{h}`")))?),
        };
        if cite.is_empty() {
            return Err(err(n, "missing citation"));
        }
        out.push(FactLine::Bound {
            space: space.to_string(),
            invariant,
            interval: Interval::new(lo, hi).map_err(|e| err(n, e))?,
            citation: cite.to_string(),
        });
    }
    Ok(out)
}

impl FactBase {
    /// Applies parsed lines in order.
    pub fn load_lines(&mut self, lines: Vec<FactLine>) -> Result<()> {
        for l in lines {
            match l {
                FactLine::Space(s) => self.declare(s)?,
                FactLine::Bound { space, invariant, interval, citation } => {
                    self.assert_axiom(&space, invariant, interval, &citation)?
                }
            }
        }
        Ok(())
    }

    pub fn load_str(&mut self, text: &str) -> Result<()> {
        self.load_lines(parse_facts(text)?)
    }

    pub fn load_file(&mut self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        self.load_str(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}
