//! Interval fact base over the invariants `cat`, `dcat`, `icat`, `TC_m`,
//! `dTC_m`, `iTC_m` and the cohomological quantities, with a monotone rule
//! engine that records a replayable derivation for every bound.

mod engine;
mod facts;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::FieldSpec;

pub use engine::{Derivation, EngineConfig, FactBase, Separation, Trace};
pub use facts::{parse_facts, FactLine};

/// Invariant tracked by the fact base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Invariant {
    Cat,
    Dcat,
    Icat,
    Tc(u32),
    Dtc(u32),
    Itc(u32),
    Cl(FieldSpec),
    Zcl(u32, FieldSpec),
    /// 1 when some positive-degree cohomology group is nonzero, else 0.
    HPositive(FieldSpec),
}

impl Invariant {
    pub fn m(self) -> Option<u32> {
        match self {
            Invariant::Tc(m) | Invariant::Dtc(m) | Invariant::Itc(m) | Invariant::Zcl(m, _) => Some(m),
            _ => None,
        }
    }

    /// Homotopy invariants of the space; cohomological entries are excluded.
    pub fn is_category_like(self) -> bool {
        matches!(
            self,
            Invariant::Cat | Invariant::Dcat | Invariant::Icat | Invariant::Tc(_) | Invariant::Dtc(_) | Invariant::Itc(_)
        )
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |name: &str, m: u32| if m == 2 { name.to_string() } else { format!("{name}({m})") };
        match self {
            Invariant::Cat => write!(f, "cat"),
            Invariant::Dcat => write!(f, "dcat"),
            Invariant::Icat => write!(f, "icat"),
            Invariant::Tc(m) => write!(f, "{}", idx("TC", *m)),
            Invariant::Dtc(m) => write!(f, "{}", idx("dTC", *m)),
            Invariant::Itc(m) => write!(f, "{}", idx("iTC", *m)),
            Invariant::Cl(k) => write!(f, "cl({k})"),
            Invariant::Zcl(m, k) => {
                if *m == 2 {
                    write!(f, "zcl({k})")
                } else {
                    write!(f, "zcl({m},{k})")
                }
            }
            Invariant::HPositive(k) => write!(f, "hpos({k})"),
        }
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown invariant `{s}`"));
        let (head, args) = match s.split_once('(') {
            Some((h, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                (h.trim(), inner.split(',').map(str::trim).collect::<Vec<_>>())
            }
            None => (s, Vec::new()),
        };
        let m_arg = |args: &[&str]| -> Result<u32, Error> {
            match args {
                [] => Ok(2),
                [m] => {
                    let m: u32 = m.parse().map_err(|_| bad())?;
                    if m < 2 {
                        Err(Error::Parse(format!("`{s}`: m must be at least 2")))
                    } else {
                        Ok(m)
                    }
                }
                _ => Err(bad()),
            }
        };
        let field_arg = |a: &str| a.parse::<FieldSpec>();
        match head {
            "cat" if args.is_empty() => Ok(Invariant::Cat),
            "dcat" if args.is_empty() => Ok(Invariant::Dcat),
            "icat" if args.is_empty() => Ok(Invariant::Icat),
            "TC" => Ok(Invariant::Tc(m_arg(&args)?)),
            "dTC" => Ok(Invariant::Dtc(m_arg(&args)?)),
            "iTC" => Ok(Invariant::Itc(m_arg(&args)?)),
            "cl" => match args.as_slice() {
                [k] => Ok(Invariant::Cl(field_arg(k)?)),
                _ => Err(bad()),
            },
            "hpos" => match args.as_slice() {
                [k] => Ok(Invariant::HPositive(field_arg(k)?)),
                _ => Err(bad()),
            },
            "zcl" => match args.as_slice() {
                [k] => Ok(Invariant::Zcl(2, field_arg(k)?)),
                [m, k] => Ok(Invariant::Zcl(m_arg(&[m])?, field_arg(k)?)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Invariant {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Invariant> for String {
    fn from(i: Invariant) -> String {
        i.to_string()
    }
}

/// Closed interval of naturals; `hi = None` means no upper bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl Interval {
    pub const UNKNOWN: Interval = Interval { lo: 0, hi: None };

    pub fn new(lo: u32, hi: Option<u32>) -> Result<Self, Error> {
        if hi.is_some_and(|h| h < lo) {
            return Err(Error::Parse(format!("empty interval [{lo}, {}]", hi.unwrap_or(0))));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(v: u32) -> Self {
        Interval { lo: v, hi: Some(v) }
    }

    pub fn at_least(v: u32) -> Self {
        Interval { lo: v, hi: None }
    }

    pub fn is_point(&self) -> bool {
        self.hi == Some(self.lo)
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) if h == self.lo => write!(f, "= {h}"),
            Some(h) => write!(f, "[{}, {h}]", self.lo),
            None => write!(f, "≥ {}", self.lo),
        }
    }
}

/// A named space with structural attributes and relations to other spaces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRef {
    pub name: String,
    pub contractible: Option<bool>,
    pub topological_group: bool,
    pub homotopy_equivalent: Vec<String>,
    pub product_of: Vec<String>,
    pub wedge_of: Vec<String>,
    pub power_of: Option<(String, u32)>,
    /// `(total space E, degree k)` for a degree-`k` covering `E → self`.
    pub covered_by: Vec<(String, u32)>,
}

impl SpaceRef {
    pub fn named(name: impl Into<String>) -> Self {
        SpaceRef { name: name.into(), ..Default::default() }
    }
}

/// Upper or lower end of an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lo,
    Hi,
}

/// Inference rules; the number gives the tie-breaking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
    R15,
    R16,
}

impl RuleId {
    pub const ALL: [RuleId; 16] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R12,
        RuleId::R13,
        RuleId::R14,
        RuleId::R15,
        RuleId::R16,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            RuleId::R1 => "iTC_m ≤ dTC_m ≤ TC_m",
            RuleId::R2 => "icat ≤ dcat ≤ cat",
            RuleId::R3 => "icat ≤ iTC",
            RuleId::R4 => "iTC_m(X) ≤ icat(X^m)",
            RuleId::R5 => "iTC_m ≤ iTC_{m+1}",
            RuleId::R6 => "topological group: iTC = icat and iTC_{m+1}(X) ≤ icat(X^m)",
            RuleId::R7 => "degree-k covering E → X: icat(X) ≤ k(icat(E)+1) − 1, iTC_m(X) ≤ km(iTC_m(E)+1) − 1",
            RuleId::R8 => "factors and wedge summands bound icat and iTC_m of products and wedges from below",
            RuleId::R9 => "homotopy equivalent spaces share every invariant",
            RuleId::R10 => "contractible ⇔ icat = 0 ⇔ iTC_m = 0",
            RuleId::R11 => "cl over Q ≥ 2 ⇒ icat ≥ 2",
            RuleId::R12 => "zcl over Q ≥ 2 ⇒ iTC ≥ 2",
            RuleId::R13 => "nonzero positive-degree rational cohomology ⇒ iTC_m ≥ 2 for m ≥ 3",
            RuleId::R14 => "cl over Q ≤ dcat, zcl over Q ≤ dTC",
            RuleId::R15 => "cl ≤ cat, zcl_m ≤ TC_m over any field",
            RuleId::R16 => "external: dcat(X^{m−1}) ≤ dTC_m(X)",
        }
    }

    pub fn is_external(self) -> bool {
        self == RuleId::R16
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// How a rule computes its bound from the premise values, for replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    /// The premise value itself.
    Same,
    /// `factor · (p + 1) − 1`.
    Covering { factor: u32 },
    /// `value` provided the premise is at least `at_least`.
    Threshold { at_least: u32, value: u32 },
    /// A fixed value from a structural attribute.
    Constant { value: u32 },
}

/// Where a bound came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    Axiom { citation: String },
    Computed { method: String },
    Rule { rule: RuleId, formula: Formula, premises: Vec<usize>, note: String },
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { citation } => write!(f, "axiom [{citation}]"),
            Justification::Computed { method } => write!(f, "computed [{method}]"),
            Justification::Rule { rule, note, .. } => {
                let ext = if rule.is_external() { " (external)" } else { "" };
                write!(f, "{rule}{ext}: {note}")
            }
        }
    }
}

/// One recorded bound; the log of these is append-only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEvent {
    pub id: usize,
    pub space: String,
    pub invariant: Invariant,
    pub side: Side,
    pub value: u32,
    pub justification: Justification,
    /// Number of rule applications in the derivation tree.
    pub size: usize,
}
