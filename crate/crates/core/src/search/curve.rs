use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::{count_bivariate_zeros, BivarPoly, DensePoly};

/// `L1(Y)` and `L2(Y)` attached to `x^5 + a3 x^3 + a2 x^2 + a1 x`.
pub fn curve_parts(ctx: &FieldCtx, a3: Fe, a2: Fe, a1: Fe) -> (DensePoly, DensePoly) {
    let p = |a: Fe, e: u64| ctx.pow(a, e);
    let m = |a: Fe, b: Fe| ctx.mul(a, b);
    let mut l1 = vec![Fe::ZERO; 13];
    l1[12] = Fe::ONE;
    l1[8] = p(a3, 2);
    l1[6] = p(a3, 3);
    l1[5] = m(a2, p(a3, 2));
    l1[4] = p(a1, 2) + p(a3, 4) + m(p(a2, 2), a3);
    l1[3] = p(a2, 3);
    l1[2] = p(a3, 5);
    l1[1] = m(a2, p(a3, 4));
    l1[0] = p(a2, 4) + p(a3, 6);
    let mut l2 = vec![Fe::ZERO; 7];
    l2[6] = Fe::ONE;
    l2[4] = a3;
    l2[2] = a1;
    l2[1] = m(a2, a3);
    l2[0] = p(a2, 2);
    (DensePoly::from_coeffs(l1), DensePoly::from_coeffs(l2))
}

/// `G(X, Y) = L2(Y)^2 (X^2 + X) + L1(Y)`.
pub fn degree5_curve(ctx: &FieldCtx, a3: Fe, a2: Fe, a1: Fe) -> BivarPoly {
    let (l1, l2) = curve_parts(ctx, a3, a2, a1);
    let l2sq = l2.mul(ctx, &l2);
    let mut terms = Vec::new();
    for (j, &c) in l2sq.coeffs().iter().enumerate() {
        terms.push((c, 2, j));
        terms.push((c, 1, j));
    }
    for (j, &c) in l1.coeffs().iter().enumerate() {
        terms.push((c, 0, j));
    }
    BivarPoly::from_terms(terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCount {
    pub n: u32,
    /// Zeros of `G` in the field plane, by scanning `G`.
    pub points: u64,
    /// The same number from the trace criterion for `X^2 + X = c`.
    pub oracle: u64,
    /// `2 (2^n - 9)`, the count every 2-to-1 quintic forces.
    pub lower_bound: i64,
    /// `2^n + 1 + 22 * 2^{n/2}`, rounded down, for an absolutely irreducible `G`.
    pub irreducible_upper: u64,
}

impl CurveCount {
    pub fn consistent(&self) -> bool {
        self.points == self.oracle
    }

    pub fn meets_lower_bound(&self) -> bool {
        self.points as i64 >= self.lower_bound
    }
}

/// Counts the affine points of `G` twice: by scanning the bivariate polynomial,
/// and per `y` from the trace of `L1(y) / L2(y)^2` evaluated straight from the
/// coefficient formulas.
pub fn count_curve_points(ctx: &FieldCtx, a3: Fe, a2: Fe, a1: Fe) -> Result<CurveCount> {
    let g = degree5_curve(ctx, a3, a2, a1);
    let points = count_bivariate_zeros(ctx, &g)?;
    let q = ctx.size();
    let oracle = ctx
        .elements()
        .map(|y| {
            let (l1, l2) = direct_parts(ctx, a3, a2, a1, y);
            if l2.is_zero() {
                if l1.is_zero() {
                    q
                } else {
                    0
                }
            } else {
                let c = ctx.div(l1, ctx.square(l2)).expect("nonzero");
                if ctx.trace_abs(c) == 0 {
                    2
                } else {
                    0
                }
            }
        })
        .sum();
    let n = ctx.n();
    Ok(CurveCount {
        n,
        points,
        oracle,
        lower_bound: 2 * (q as i64 - 9),
        irreducible_upper: q + 1 + (22.0 * 2f64.powf(n as f64 / 2.0)).floor() as u64,
    })
}

// Horner-free evaluation of the two coefficient polynomials at one point.
fn direct_parts(ctx: &FieldCtx, a3: Fe, a2: Fe, a1: Fe, y: Fe) -> (Fe, Fe) {
    let p = |a: Fe, e: u64| ctx.pow(a, e);
    let m = |a: Fe, b: Fe| ctx.mul(a, b);
    let l1 = p(y, 12)
        + m(p(a3, 2), p(y, 8))
        + m(p(a3, 3), p(y, 6))
        + m(m(a2, p(a3, 2)), p(y, 5))
        + m(p(a1, 2) + p(a3, 4) + m(p(a2, 2), a3), p(y, 4))
        + m(p(a2, 3), p(y, 3))
        + m(p(a3, 5), p(y, 2))
        + m(m(a2, p(a3, 4)), y)
        + p(a2, 4)
        + p(a3, 6);
    let l2 = p(y, 6) + m(a3, p(y, 4)) + m(a1, p(y, 2)) + m(m(a2, a3), y) + p(a2, 2);
    (l1, l2)
}
