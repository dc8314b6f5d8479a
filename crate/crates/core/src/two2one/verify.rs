use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::SparsePoly;

/// Largest `n` for full-domain histograms and 2-to-1 checks.
pub const HISTOGRAM_LIMIT: u32 = 24;
/// Largest `n` for the quadratic-cost shift and o-polynomial checks.
pub const PAIR_SCAN_LIMIT: u32 = 16;

fn check_budget(ctx: &FieldCtx, what: &'static str, limit: u32) -> Result<()> {
    if ctx.n() > limit {
        return Err(Error::Budget { what, n: ctx.n(), limit });
    }
    Ok(())
}

/// Fiber sizes of a map on the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageHistogram {
    n: u32,
    // indexed by image value
    fibers: Vec<u32>,
}

impl PreimageHistogram {
    pub fn from_values(n: u32, values: &[Fe]) -> Self {
        let mut fibers = vec![0u32; 1usize << n];
        for v in values {
            fibers[v.index()] += 1;
        }
        PreimageHistogram { n, fibers }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn fiber(&self, y: Fe) -> u32 {
        self.fibers.get(y.index()).copied().unwrap_or(0)
    }

    /// `(value, fiber size)` for every value with a nonempty fiber, ascending.
    pub fn nonempty(&self) -> impl Iterator<Item = (Fe, u32)> + '_ {
        self.fibers.iter().enumerate().filter(|(_, &c)| c > 0).map(|(y, &c)| (Fe::from_bits(y as u32), c))
    }

    pub fn image_size(&self) -> u64 {
        self.fibers.iter().filter(|&&c| c > 0).count() as u64
    }

    /// Number of values having each nonzero fiber size.
    pub fn size_distribution(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for &c in self.fibers.iter().filter(|&&c| c > 0) {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    pub fn is_two_to_one(&self) -> bool {
        self.fibers.iter().all(|&c| c == 0 || c == 2)
    }

    pub fn summary(&self) -> HistogramSummary {
        HistogramSummary {
            n: self.n,
            image_size: self.image_size(),
            fiber_sizes: self.size_distribution(),
            two_to_one: self.is_two_to_one(),
        }
    }
}

/// Serializable digest of a histogram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct HistogramSummary {
    pub n: u32,
    pub image_size: u64,
    /// fiber size -> number of values with that fiber size
    pub fiber_sizes: BTreeMap<u32, u64>,
    pub two_to_one: bool,
}

pub fn preimage_histogram(ctx: &FieldCtx, f: &SparsePoly) -> Result<PreimageHistogram> {
    check_budget(ctx, "preimage histogram", HISTOGRAM_LIMIT)?;
    Ok(PreimageHistogram::from_values(ctx.n(), &f.eval_table(ctx)))
}

/// Whether a table of values (indexed by argument) has every fiber of size 0 or 2.
///
/// Stops at the first fiber of size 3.
pub fn table_is_two_to_one(values: &[Fe], counts: &mut Vec<u8>) -> bool {
    counts.clear();
    counts.resize(values.len(), 0);
    for v in values {
        let c = &mut counts[v.index()];
        if *c == 2 {
            return false;
        }
        *c += 1;
    }
    // with no fiber above 2, all fibers are even iff the image has half the size
    counts.iter().all(|&c| c != 1)
}

pub fn is_two_to_one(ctx: &FieldCtx, f: &SparsePoly) -> Result<bool> {
    check_budget(ctx, "2-to-1 check", HISTOGRAM_LIMIT)?;
    Ok(table_is_two_to_one(&f.eval_table(ctx), &mut Vec::new()))
}

/// For every `a`, counts the roots of `f(x + a) + f(a)` and requires exactly two.
pub fn shift_criterion(ctx: &FieldCtx, f: &SparsePoly) -> Result<bool> {
    check_budget(ctx, "shift criterion", PAIR_SCAN_LIMIT)?;
    let table = f.eval_table(ctx);
    let q = table.len();
    Ok((0..q).into_par_iter().all(|a| {
        let fa = table[a];
        let mut roots = 0;
        for x in 0..q {
            if table[x ^ a] == fa {
                roots += 1;
                if roots > 2 {
                    return false;
                }
            }
        }
        roots == 2
    }))
}

/// A monomial `c x^d` (c != 0) is 2-to-1 on a field of order `q` iff `gcd(d, q - 1) = 2`.
pub fn monomial_two_to_one(d: u64, q: u64) -> bool {
    arith::gcd(d, q - 1) == 2
}

/// `f(0) = 0` and `f + a x` is 2-to-1 for every nonzero `a`.
pub fn is_o_polynomial(ctx: &FieldCtx, f: &SparsePoly) -> Result<bool> {
    check_budget(ctx, "o-polynomial check", PAIR_SCAN_LIMIT)?;
    let table = f.eval_table(ctx);
    if !table[0].is_zero() {
        return Ok(false);
    }
    Ok(ctx
        .nonzero()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map_init(Vec::new, |counts, a| {
            counts.clear();
            counts.resize(table.len(), 0u8);
            for (x, &fx) in ctx.elements().zip(&table) {
                let c = &mut counts[(fx + ctx.mul(a, x)).index()];
                if *c == 2 {
                    return false;
                }
                *c += 1;
            }
            counts.iter().all(|&c| c != 1)
        })
        .all(|ok| ok))
}

/// Checks the defining property of an o-monomial `x^k` directly: `x^k` permutes the
/// field and so does `f_s(x) = ((x + s)^k + s^k) / x` for each given `s`.
///
/// `f_s(0)` is the `x`-coefficient of `(x + s)^k`, namely `k s^{k-1}`.
pub fn o_monomial_by_definition(ctx: &FieldCtx, k: u64, samples: &[Fe]) -> Result<bool> {
    check_budget(ctx, "o-polynomial check", PAIR_SCAN_LIMIT)?;
    fn is_perm(size: u64, mut vals: impl Iterator<Item = Fe>) -> bool {
        let mut seen = vec![false; size as usize];
        vals.all(|v| !std::mem::replace(&mut seen[v.index()], true))
    }
    if !is_perm(ctx.size(), ctx.elements().map(|x| ctx.pow(x, k))) {
        return Ok(false);
    }
    for &s in samples {
        let sk = ctx.pow(s, k);
        let at_zero = if k % 2 == 1 { ctx.pow(s, k - 1) } else { Fe::ZERO };
        let values = std::iter::once(at_zero)
            .chain(ctx.nonzero().map(|x| ctx.mul(ctx.pow(x + s, k) + sk, ctx.inv(x).expect("nonzero"))));
        if !is_perm(ctx.size(), values) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g(x^d)` with exponents reduced; a permutation of the argument when `gcd(d, 2^n - 1) = 1`.
pub fn compose_monomial(ctx: &FieldCtx, g: &SparsePoly, d: u64) -> SparsePoly {
    SparsePoly::from_terms(g.terms().iter().map(|t| (scale_exponent(t.exp, d, ctx.order()), t.coeff)))
}

/// `e d` as a positive exponent modulo `m`, keeping 0 at 0.
pub(crate) fn scale_exponent(e: u64, d: u64, m: u64) -> u64 {
    match (e, arith::mul_mod(e, d, m)) {
        (0, _) => 0,
        (_, 0) => m,
        (_, r) => r,
    }
}

/// `f(x)^2`: the Frobenius map applied after `f`, so `f` is 2-to-1 iff the square is.
pub fn frobenius_square(ctx: &FieldCtx, f: &SparsePoly) -> SparsePoly {
    SparsePoly::from_terms(f.terms().iter().map(|t| (t.exp * 2, ctx.square(t.coeff)))).reduce_exponents(ctx)
}
