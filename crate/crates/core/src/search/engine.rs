use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::SparsePoly;
use crate::search::report::{Dedupe, FieldDesc, Hit, SearchReport, Shape};
use crate::search::scan::{FiberCounter, LogTables};
use crate::two2one::{family::quintic, qm_canonical, qm_orbit};

/// Largest `n` for sparse searches without the long-run flag.
pub const SPARSE_MAX_N: u32 = 6;
/// Largest `n` for any search.
pub const LONG_RUN_MAX_N: u32 = 7;
/// Largest `n` for the degree-5 search.
pub const DEGREE5_MAX_N: u32 = 7;

pub const UNVERIFIED_NOTE: &str = "unverified: no published degree-5 data for this field";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub dedupe: Dedupe,
    /// Allows `n = 7` for the sparse shapes.
    pub long_run: bool,
    /// Keeps candidates whose exponents are all powers of two.
    pub include_linearized: bool,
}

/// Runs the search for `shape`.
pub fn search(ctx: &FieldCtx, shape: Shape, opts: SearchOptions) -> Result<SearchReport> {
    match shape {
        Shape::Degree5 => search_degree5_with(ctx, opts.dedupe),
        _ => search_sparse(ctx, shape, opts),
    }
}

/// Every `(a3, a2, a1)` making `x^5 + a3 x^3 + a2 x^2 + a1 x` 2-to-1, sorted.
pub fn search_degree5(ctx: &FieldCtx) -> Result<SearchReport> {
    search_degree5_with(ctx, Dedupe::None)
}

pub fn search_degree5_with(ctx: &FieldCtx, dedupe: Dedupe) -> Result<SearchReport> {
    let n = ctx.n();
    if n > DEGREE5_MAX_N {
        return Err(Error::Budget { what: "degree-5 search", n, limit: DEGREE5_MAX_N });
    }
    let start = Instant::now();
    let tables = LogTables::new(ctx);
    let q = ctx.size() as usize;
    let p5 = tables.power_table(5);
    let p3 = tables.power_table(3);
    let p2 = tables.power_table(2);
    let elements: Vec<Fe> = ctx.elements().collect();
    let raw: Vec<SparsePoly> = elements
        .par_iter()
        .map_init(
            || (FiberCounter::new(q), vec![Fe::ZERO; q]),
            |(counter, base), &a3| {
                let mut hits = Vec::new();
                for &a2 in &elements {
                    for x in 0..q {
                        base[x] = p5[x] + tables.mul(a3, p3[x]) + tables.mul(a2, p2[x]);
                    }
                    for &a1 in &elements {
                        let values = (0..q).map(|x| base[x] + tables.mul(a1, Fe::from_bits(x as u32)));
                        if counter.two_to_one(values) {
                            hits.push(quintic(a3, a2, a1));
                        }
                    }
                }
                hits
            },
        )
        .flatten()
        .collect();
    let mut report = finish(ctx, Shape::Degree5, dedupe, raw, (q as u64).pow(3));
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    if n != 3 {
        report.note = Some(UNVERIFIED_NOTE.to_string());
    }
    Ok(report)
}

fn check_sparse_budget(ctx: &FieldCtx, shape: Shape, long_run: bool) -> Result<()> {
    let n = ctx.n();
    if n > LONG_RUN_MAX_N {
        return Err(Error::Budget { what: "sparse search", n, limit: LONG_RUN_MAX_N });
    }
    if n > SPARSE_MAX_N && !long_run {
        return Err(Error::LongRunRequired { shape: shape.to_string(), n });
    }
    Ok(())
}

/// Exponent tuples of the template, descending, highest exponent `<= 2^n - 2`.
pub fn template_exponents(shape: Shape, q: u64) -> Vec<Vec<u64>> {
    let top = q - 2;
    let mut out = Vec::new();
    match shape {
        Shape::Degree5 => out.push(vec![5, 3, 2, 1]),
        Shape::Binomial => {
            for k in 2..=top {
                for l in 1..k {
                    out.push(vec![k, l]);
                }
            }
        }
        Shape::Trinomial => {
            for k in 3..=top {
                for l in 2..k {
                    out.push(vec![k, l, 1]);
                }
            }
        }
        Shape::Quadrinomial => {
            for k in 4..=top {
                for l in 3..k {
                    for d in 2..l {
                        out.push(vec![k, l, d, 1]);
                    }
                }
            }
        }
    }
    out
}

fn scaled(exps: &[u64], d: u64, m: u64) -> Vec<u64> {
    let mut e: Vec<u64> = exps.iter().map(|&x| arith::reduce_positive(arith::mul_mod(x, d, m), m)).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    e
}

/// Exponent tuples reachable from `exps` by `x -> x^d` while staying inside
/// the template. Binomials admit every unit `d`; the shapes with a fixed `x`
/// term admit only `d = s^{-1}` for a unit exponent `s`.
pub fn template_images(shape: Shape, exps: &[u64], m: u64) -> Vec<Vec<u64>> {
    match shape {
        Shape::Binomial => arith::units(m).into_iter().map(|d| scaled(exps, d, m)).collect(),
        _ => exps.iter().filter_map(|&s| arith::mod_inverse(s, m).ok()).map(|d| scaled(exps, d, m)).collect(),
    }
}

/// True when some template image has only power-of-two exponents. With a
/// fixed `x` term that means `exps` itself; binomials such as `x^6 + x^3` over
/// GF(8) reach `x^2 + x` under a unit.
fn linearized_class(shape: Shape, exps: &[u64], m: u64) -> bool {
    exps.iter().all(|x| x.is_power_of_two())
        || template_images(shape, exps, m).iter().any(|img| img.iter().all(|x| x.is_power_of_two()))
}

fn orbit_minimal(shape: Shape, exps: &[u64], m: u64) -> bool {
    template_images(shape, exps, m).iter().all(|img| exps <= img.as_slice())
}

/// Coefficients tried for the term after the leading one: with pruning, one
/// representative `γ^j` per coset of the `(k - l)`-th powers.
fn second_coefficients(ctx: &FieldCtx, k: u64, l: u64, prune: bool) -> Vec<Fe> {
    if prune {
        let g = arith::gcd(k - l, ctx.order());
        (0..g).map(|j| ctx.gen_pow(j)).collect()
    } else {
        ctx.nonzero().collect()
    }
}

/// Exhaustive search over the binomial `x^k + a x^l`, trinomial
/// `x^k + b x^l + a x` or quadrinomial `x^k + x^l + x^d + x` template.
pub fn search_sparse(ctx: &FieldCtx, shape: Shape, opts: SearchOptions) -> Result<SearchReport> {
    if shape == Shape::Degree5 {
        return search_degree5_with(ctx, opts.dedupe);
    }
    check_sparse_budget(ctx, shape, opts.long_run)?;
    let start = Instant::now();
    let q = ctx.size();
    let m = ctx.order();
    let prune = opts.dedupe == Dedupe::Qm;
    let tables = LogTables::new(ctx);
    let candidates: Vec<Vec<u64>> = template_exponents(shape, q)
        .into_par_iter()
        .filter(|e| opts.include_linearized || !linearized_class(shape, e, m))
        .filter(|e| !prune || orbit_minimal(shape, e, m))
        .collect();
    let nonzero: Vec<Fe> = ctx.nonzero().collect();
    let qs = q as usize;
    let results: Vec<(Vec<SparsePoly>, u64)> = candidates
        .par_iter()
        .map_init(
            || FiberCounter::new(qs),
            |counter, exps| {
                let powers: Vec<Vec<Fe>> = exps.iter().map(|&e| tables.power_table(e)).collect();
                let mut hits = Vec::new();
                let mut scanned = 0u64;
                match shape {
                    Shape::Binomial => {
                        let (pk, pl) = (&powers[0], &powers[1]);
                        for a in second_coefficients(ctx, exps[0], exps[1], prune) {
                            scanned += 1;
                            if counter.two_to_one((0..qs).map(|x| pk[x] + tables.mul(a, pl[x]))) {
                                hits.push(SparsePoly::from_terms([(exps[0], Fe::ONE), (exps[1], a)]));
                            }
                        }
                    }
                    Shape::Trinomial => {
                        let (pk, pl) = (&powers[0], &powers[1]);
                        for b in second_coefficients(ctx, exps[0], exps[1], prune) {
                            for &a in &nonzero {
                                scanned += 1;
                                let values = (0..qs)
                                    .map(|x| pk[x] + tables.mul(b, pl[x]) + tables.mul(a, Fe::from_bits(x as u32)));
                                if counter.two_to_one(values) {
                                    hits.push(SparsePoly::from_terms([(exps[0], Fe::ONE), (exps[1], b), (1, a)]));
                                }
                            }
                        }
                    }
                    _ => {
                        scanned += 1;
                        let values = (0..qs).map(|x| powers.iter().map(|p| p[x]).sum());
                        if counter.two_to_one(values) {
                            hits.push(SparsePoly::from_exponents(exps));
                        }
                    }
                }
                (hits, scanned)
            },
        )
        .collect();
    let scanned = results.iter().map(|r| r.1).sum();
    let raw = results.into_iter().flat_map(|r| r.0).collect();
    let mut report = finish(ctx, shape, opts.dedupe, raw, scanned);
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Canonicalizes, dedupes when asked, attaches orbit sizes and sorts.
fn finish(ctx: &FieldCtx, shape: Shape, dedupe: Dedupe, raw: Vec<SparsePoly>, scanned: u64) -> SearchReport {
    let canon: Vec<SparsePoly> = raw.par_iter().map(|f| qm_canonical(ctx, f)).collect();
    let classes: BTreeSet<&SparsePoly> = canon.iter().collect();
    let sizes: BTreeMap<&SparsePoly, u64> =
        classes.into_iter().collect::<Vec<_>>().into_par_iter().map(|c| (c, qm_orbit(ctx, c).len() as u64)).collect();
    let mut hits: Vec<Hit> = match dedupe {
        Dedupe::Qm => sizes.iter().map(|(&c, &s)| Hit { poly: c.clone(), orbit_size: s }).collect(),
        Dedupe::None => raw.iter().zip(&canon).map(|(f, c)| Hit { poly: f.clone(), orbit_size: sizes[c] }).collect(),
    };
    hits.sort_by(|a, b| a.poly.cmp(&b.poly));
    SearchReport { field: FieldDesc::of(ctx), shape, dedupe, hits, scanned, elapsed_ms: None, note: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    #[test]
    fn budgets() {
        let ctx7 = make_field(7, None).unwrap();
        let err = search_sparse(&ctx7, Shape::Trinomial, SearchOptions::default()).unwrap_err();
        assert!(matches!(err, Error::LongRunRequired { n: 7, .. }));
        let ctx8 = make_field(8, None).unwrap();
        let long = SearchOptions { long_run: true, ..Default::default() };
        assert!(matches!(search_sparse(&ctx8, Shape::Binomial, long), Err(Error::Budget { .. })));
        assert!(matches!(search_degree5(&ctx8), Err(Error::Budget { .. })));
    }

    #[test]
    fn images_stay_in_template() {
        let m = 63;
        for shape in [Shape::Trinomial, Shape::Quadrinomial] {
            for exps in template_exponents(shape, 64).into_iter().step_by(97) {
                for img in template_images(shape, &exps, m) {
                    assert_eq!(*img.last().unwrap(), 1);
                    assert!(img.windows(2).all(|w| w[0] > w[1]));
                    assert!(img[0] <= 62);
                }
            }
        }
    }

    #[test]
    fn trinomials_over_gf8_and_gf16() {
        let ctx = make_field(3, None).unwrap();
        assert!(search_sparse(&ctx, Shape::Trinomial, SearchOptions::default()).unwrap().hits.is_empty());
        let ctx = make_field(4, None).unwrap();
        let r = search_sparse(&ctx, Shape::Trinomial, SearchOptions::default()).unwrap();
        assert_eq!(r.hits.len(), 2);
        assert!(r.hits.iter().all(|h| h.orbit_size == 120));
    }
}
