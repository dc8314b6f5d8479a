use std::collections::BTreeSet;

use crate::arith;
use crate::error::Result;
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::SparsePoly;
use crate::two2one::verify::scale_exponent;

/// The six o-equivalent exponents `k, 1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k` modulo `2^n - 1`.
pub fn o_orbit(k: u64, n: u32) -> Result<BTreeSet<u64>> {
    let m = (1u64 << n) - 1;
    let k = k % m;
    let one_minus = (1 + m - k) % m;
    let inv_k = arith::mod_inverse(k, m)?;
    let inv_one_minus = arith::mod_inverse(one_minus, m)?;
    let k_minus = (k + m - 1) % m;
    // 1/(k-1) = -1/(1-k)
    let inv_k_minus = (m - inv_one_minus) % m;
    Ok(BTreeSet::from([
        k,
        inv_k,
        one_minus,
        inv_one_minus,
        arith::mul_mod(k, inv_k_minus, m),
        arith::mul_mod(k_minus, inv_k, m),
    ]))
}

/// `a f(b x^d)` with exponents reduced.
pub fn qm_transform(ctx: &FieldCtx, f: &SparsePoly, a: Fe, b: Fe, d: u64) -> SparsePoly {
    let m = ctx.order();
    SparsePoly::from_terms(
        f.reduce_exponents(ctx)
            .terms()
            .iter()
            .map(|t| (scale_exponent(t.exp, d, m), ctx.mul(a, ctx.mul(t.coeff, ctx.pow(b, t.exp))))),
    )
}

fn exponent_key(f: &SparsePoly, d: u64, m: u64) -> Vec<u64> {
    let mut e: Vec<u64> = f.terms().iter().map(|t| scale_exponent(t.exp, d, m)).collect();
    e.sort_unstable_by(|x, y| y.cmp(x));
    e
}

/// The least monic member of the QM orbit of `f` under the canonical total order.
///
/// The exponent sequence depends on `d` only, so `b` is searched just for the
/// units `d` that reach the least exponent sequence.
pub fn qm_canonical(ctx: &FieldCtx, f: &SparsePoly) -> SparsePoly {
    let f = f.reduce_exponents(ctx);
    if f.is_zero() {
        return f;
    }
    let m = ctx.order();
    let mut best_key: Option<Vec<u64>> = None;
    let mut best_ds = Vec::new();
    for d in arith::units(m) {
        let key = exponent_key(&f, d, m);
        match best_key.as_ref().map(|b| key.cmp(b)) {
            Some(std::cmp::Ordering::Greater) => {}
            Some(std::cmp::Ordering::Equal) => best_ds.push(d),
            _ => {
                best_key = Some(key);
                best_ds = vec![d];
            }
        }
    }
    let mut best: Option<SparsePoly> = None;
    for d in best_ds {
        for b in ctx.nonzero() {
            let g = qm_transform(ctx, &f, Fe::ONE, b, d).monic(ctx).expect("nonzero");
            if best.as_ref().is_none_or(|cur| g < *cur) {
                best = Some(g);
            }
        }
    }
    best.expect("at least one unit")
}

/// Every distinct monic polynomial `a f(b x^d)`.
pub fn qm_orbit(ctx: &FieldCtx, f: &SparsePoly) -> BTreeSet<SparsePoly> {
    let f = f.reduce_exponents(ctx);
    let mut out = BTreeSet::new();
    if f.is_zero() {
        return out;
    }
    for d in arith::units(ctx.order()) {
        for b in ctx.nonzero() {
            out.insert(qm_transform(ctx, &f, Fe::ONE, b, d).monic(ctx).expect("nonzero"));
        }
    }
    out
}

pub fn qm_equivalent(ctx: &FieldCtx, f: &SparsePoly, g: &SparsePoly) -> bool {
    qm_canonical(ctx, f) == qm_canonical(ctx, g)
}
