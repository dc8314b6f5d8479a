use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::DensePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: u64,
    pub coeff: Fe,
}

/// A polynomial as a short list of terms, exponents strictly decreasing and
/// coefficients nonzero. This is the representation of every searched or
/// constructed mapping.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: Vec<Term>,
}

impl SparsePoly {
    /// Builds from `(exponent, coefficient)` pairs; equal exponents are merged
    /// by adding coefficients and zero terms are dropped.
    pub fn from_terms<I: IntoIterator<Item = (u64, Fe)>>(terms: I) -> Self {
        let mut acc: BTreeMap<u64, Fe> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c;
        }
        let terms =
            acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(exp, coeff)| Term { exp, coeff }).collect();
        SparsePoly { terms }
    }

    /// Sum of `x^e` over the given exponents.
    pub fn from_exponents(exps: &[u64]) -> Self {
        Self::from_terms(exps.iter().map(|&e| (e, Fe::ONE)))
    }

    pub fn monomial(exp: u64) -> Self {
        Self::from_exponents(&[exp])
    }

    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.exp).collect()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|t| t.exp)
    }

    pub fn leading_coeff(&self) -> Fe {
        self.terms.first().map_or(Fe::ZERO, |t| t.coeff)
    }

    pub fn coeff(&self, exp: u64) -> Fe {
        self.terms.iter().find(|t| t.exp == exp).map_or(Fe::ZERO, |t| t.coeff)
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|t| (t.exp, t.coeff)))
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Fe) -> SparsePoly {
        Self::from_terms(self.terms.iter().map(|t| (t.exp, ctx.mul(t.coeff, c))))
    }

    /// Sum of `coeff * x^exp` under the convention `0^0 = 1`, `0^e = 0` otherwise.
    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        self.terms.iter().map(|t| ctx.mul(t.coeff, ctx.pow(x, t.exp))).sum()
    }

    /// Functional reduction modulo `x^{2^n} - x`: exponent `e > 0` goes to its
    /// representative of `e mod (2^n - 1)` in `[1, 2^n - 1]`.
    pub fn reduce_exponents(&self, ctx: &FieldCtx) -> SparsePoly {
        let m = ctx.order();
        Self::from_terms(self.terms.iter().map(|t| (arith::reduce_positive(t.exp, m), t.coeff)))
    }

    /// Values at every field element, indexed by element bits.
    ///
    /// Walks the multiplicative group as powers of the generator so every term
    /// costs one multiplication per point; the walk is split across threads.
    pub fn eval_table(&self, ctx: &FieldCtx) -> Vec<Fe> {
        let q = ctx.size() as usize;
        let order = ctx.order();
        let g = ctx.generator();
        let f = self.reduce_exponents(ctx);
        let steps: Vec<(Fe, Fe)> = f.terms.iter().map(|t| (t.coeff, ctx.pow(g, t.exp))).collect();
        const CHUNK: u64 = 1 << 12;
        let chunks: Vec<Vec<(Fe, Fe)>> = (0..order.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(order);
                let mut x = ctx.gen_pow(start);
                let mut cur: Vec<Fe> = steps.iter().map(|&(coef, s)| ctx.mul(coef, ctx.pow(s, start))).collect();
                let mut out = Vec::with_capacity((end - start) as usize);
                for _ in start..end {
                    out.push((x, cur.iter().copied().sum()));
                    x = ctx.mul(x, g);
                    for (v, &(_, s)) in cur.iter_mut().zip(&steps) {
                        *v = ctx.mul(*v, s);
                    }
                }
                out
            })
            .collect();
        let mut table = vec![Fe::ZERO; q];
        table[0] = f.eval(ctx, Fe::ZERO);
        for (x, v) in chunks.into_iter().flatten() {
            table[x.index()] = v;
        }
        table
    }

    pub fn to_dense(&self) -> DensePoly {
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Fe::ZERO; if self.is_zero() { 0 } else { deg + 1 }];
        for t in &self.terms {
            coeffs[t.exp as usize] = t.coeff;
        }
        DensePoly::from_coeffs(coeffs)
    }

    /// Total order used for canonical forms: exponent sequence (descending
    /// terms) lexicographically, then coefficient bits lexicographically.
    pub fn canonical_cmp(&self, other: &SparsePoly) -> Ordering {
        let ea = self.terms.iter().map(|t| t.exp);
        let eb = other.terms.iter().map(|t| t.exp);
        ea.cmp(eb).then_with(|| {
            let ca = self.terms.iter().map(|t| t.coeff.bits());
            let cb = other.terms.iter().map(|t| t.coeff.bits());
            ca.cmp(cb)
        })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ctx: &FieldCtx) -> Result<SparsePoly> {
        let inv = ctx.inv(self.leading_coeff()).map_err(|_| Error::ZeroPolynomial)?;
        Ok(self.scale(ctx, inv))
    }

    /// True when every exponent is a power of two (an additive map).
    pub fn is_linearized(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_power_of_two())
    }
}

impl PartialOrd for SparsePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SparsePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0x0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match (t.exp, t.coeff == Fe::ONE) {
                (0, _) => write!(f, "{}", t.coeff)?,
                (e, true) => write!(f, "x^{e}")?,
                (e, false) => write!(f, "{}*x^{e}", t.coeff)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for SparsePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<SparsePoly> {
        super::text::parse_sparse(s)
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<SparsePoly, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
