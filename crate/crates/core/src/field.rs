//! Coefficient fields and exact scalar arithmetic.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact rational scalar. Elements of `Z/p` are stored as integers in `0..p`.
pub type Q = BigRational;

/// Coefficient field for cohomology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Checks that a prime field has prime characteristic.
    pub fn validate(self) -> Result<Self, Error> {
        match self {
            FieldSpec::Rationals => Ok(self),
            FieldSpec::Prime(p) if is_prime(p) => Ok(self),
            FieldSpec::Prime(p) => Err(Error::InvalidField(format!("{p} is not prime"))),
        }
    }

    pub fn is_rational(self) -> bool {
        matches!(self, FieldSpec::Rationals)
    }

    pub fn zero(self) -> Q {
        Q::zero()
    }

    pub fn one(self) -> Q {
        Q::one()
    }

    /// Maps an arbitrary rational into the field.
    pub fn reduce(self, x: &Q) -> Q {
        match self {
            FieldSpec::Rationals => x.clone(),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(p);
                let num = x.numer().mod_floor_big(&p);
                let den = x.denom().mod_floor_big(&p);
                let inv = modinv(&den, &p).expect("denominator divisible by p");
                Q::from_integer((num * inv).mod_floor_big(&p))
            }
        }
    }

    pub fn from_i64(self, v: i64) -> Q {
        self.reduce(&Q::from_integer(BigInt::from(v)))
    }

    pub fn add(self, a: &Q, b: &Q) -> Q {
        self.reduce(&(a + b))
    }

    pub fn sub(self, a: &Q, b: &Q) -> Q {
        self.reduce(&(a - b))
    }

    pub fn mul(self, a: &Q, b: &Q) -> Q {
        self.reduce(&(a * b))
    }

    pub fn neg(self, a: &Q) -> Q {
        self.reduce(&(-a))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: &Q) -> Option<Q> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(p);
                modinv(&a.to_integer(), &p).map(Q::from_integer)
            }
        }
    }

    pub fn label(self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("Z/{p}"),
        }
    }

    /// Label for reports: rational results also stand for real coefficients.
    pub fn report_label(self) -> String {
        match self {
            FieldSpec::Rationals => "Q (= R)".to_string(),
            p => p.label(),
        }
    }
}

trait ModFloor {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt {
        let r = self % p;
        if r.is_negative() {
            r + p
        } else {
            r
        }
    }
}

fn modinv(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor_big(p);
    if a.is_zero() {
        return None;
    }
    let e = num::integer::Integer::extended_gcd(&a, p);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor_big(p))
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "z{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "qq" || t == "rationals" || t == "r" || t == "real" || t == "reals" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("z/")
            .or_else(|| t.strip_prefix("zz/"))
            .or_else(|| t.strip_prefix('z'))
            .or_else(|| t.strip_prefix("f"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        FieldSpec::Prime(p).validate()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// Parses `"p/q"`, `"n"` or a finite decimal like `"0.25"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational literal `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let whole: BigInt = if ip_abs.is_empty() { BigInt::zero() } else { ip_abs.parse().map_err(|_| bad())? };
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let frac: BigInt = fp.parse().map_err(|_| bad())?;
        let den = num::pow(BigInt::from(10), fp.len());
        let v = Q::new(whole * &den + frac, den);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Renders a rational as `"p/q"` (or `"n"` for integers).
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn q_to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Serde adapter storing a rational as a `"p/q"` string.
pub mod q_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => parse_q(&s).map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => parse_q(&n.to_string()).map_err(serde::de::Error::custom),
            other => Err(serde::de::Error::custom(format!("expected rational, got {other}"))),
        }
    }
}

/// Serde adapter for `Vec<Q>` as an array of strings.
pub mod q_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct W(#[serde(with = "q_str")] Q);

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let w: Vec<W> = v.iter().cloned().map(W).collect();
        w.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let w: Vec<W> = Vec::deserialize(d)?;
        Ok(w.into_iter().map(|x| x.0).collect())
    }
}
