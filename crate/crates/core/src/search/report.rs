use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::{make_field, FieldCtx};
use crate::polyring::SparsePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Degree5,
    Binomial,
    Trinomial,
    Quadrinomial,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::Degree5, Shape::Binomial, Shape::Trinomial, Shape::Quadrinomial];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Degree5 => "degree5",
            Shape::Binomial => "binomial",
            Shape::Trinomial => "trinomial",
            Shape::Quadrinomial => "quadrinomial",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shape> {
        Shape::ALL
            .into_iter()
            .find(|sh| sh.name() == s.trim())
            .ok_or_else(|| Error::parse(s, "expected degree5, binomial, trinomial or quadrinomial"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedupe {
    /// One representative per QM class.
    #[default]
    Qm,
    /// Every template instance, no pruning.
    None,
}

impl fmt::Display for Dedupe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dedupe::Qm => "qm",
            Dedupe::None => "none",
        })
    }
}

impl FromStr for Dedupe {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dedupe> {
        match s.trim() {
            "qm" => Ok(Dedupe::Qm),
            "none" => Ok(Dedupe::None),
            _ => Err(Error::parse(s, "expected qm or none")),
        }
    }
}

/// Field descriptor as written in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub n: u32,
    pub modulus: String,
}

impl FieldDesc {
    pub fn of(ctx: &FieldCtx) -> Self {
        FieldDesc { n: ctx.n(), modulus: format!("{:#x}", ctx.modulus()) }
    }

    pub fn to_ctx(&self) -> Result<FieldCtx> {
        let digits = self
            .modulus
            .strip_prefix("0x")
            .ok_or_else(|| Error::parse(&self.modulus, "modulus must be 0x-prefixed hex"))?;
        let m = u64::from_str_radix(digits, 16).map_err(|e| Error::parse(&self.modulus, e.to_string()))?;
        make_field(self.n, Some(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub poly: SparsePoly,
    /// Number of distinct monic polynomials `a f(b x^d)`.
    pub orbit_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub field: FieldDesc,
    pub shape: Shape,
    pub dedupe: Dedupe,
    pub hits: Vec<Hit>,
    pub scanned: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    /// Set when no published data exists to check the hits against.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SearchReport {
    pub fn polys(&self) -> impl Iterator<Item = &SparsePoly> {
        self.hits.iter().map(|h| &h.poly)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<SearchReport> {
        serde_json::from_str(s).map_err(|e| Error::parse("search report", e.to_string()))
    }

    /// The report without its timing, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}
