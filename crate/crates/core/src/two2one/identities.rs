//! Eliminants of the bivariate pairs used for the odd-degree quadrinomials.
//!
//! For `n = 2m + 1`, `y` stands for `x^{2^{m+1}}` and `b = a^{2^{m+1}}`. Each `F`
//! encodes `f(x + a) + f(a) = 0` and `G` is `F` raised to the `2^{m+1}`-th power,
//! rewritten with `y^{2^{m+1}} = x^2` and `b^{2^{m+1}} = a^2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::{resultant_eliminate, BivarPoly, DensePoly};

pub const IDENTITY_MAX_N: u32 = 9;

/// Multiplicity of `x + a + 1` in the eliminants of theorems 1 and 2. The
/// Sylvester determinant has it squared, not to the first power (for theorem 1
/// the `y`-coefficient of `F` is already `(x + a + 1)^2`).
pub const LINEAR_FACTOR_MULTIPLICITY: u64 = 2;

/// The pair `(F, G)` and the closed-form eliminant for one theorem.
#[derive(Clone, Debug)]
pub struct IdentityInstance {
    pub f: BivarPoly,
    pub g: BivarPoly,
    pub closed_form: DensePoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub theorem: u8,
    pub n: u32,
    /// Number of values of `a` compared (all of the field except 0 and 1).
    pub checked: u64,
    pub first_failure: Option<Fe>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `b = a^{2^{m+1}}` for `n = 2m + 1`.
pub fn twist_exponent(ctx: &FieldCtx) -> u32 {
    (ctx.n() - 1) / 2 + 1
}

// c1 x + c0
fn lin(c1: Fe, c0: Fe) -> DensePoly {
    DensePoly::from_coeffs(vec![c0, c1])
}

/// The transcribed pair and closed form of theorem `t` (1 to 6) at parameter `a`.
pub fn identity_instance(ctx: &FieldCtx, t: u8, a: Fe) -> Result<IdentityInstance> {
    let b = ctx.frobenius(a, twist_exponent(ctx));
    let one = Fe::ONE;
    let m = |x: Fe, y: Fe| ctx.mul(x, y);
    let p = |x: Fe, e: u64| ctx.pow(x, e);
    let (a2, b2, ab) = (p(a, 2), p(b, 2), m(a, b));
    let bi = |terms: Vec<(Fe, usize, usize)>| BivarPoly::from_terms(terms);
    let prod = |factors: Vec<(DensePoly, u64)>| {
        factors.into_iter().fold(DensePoly::one(), |acc, (f, e)| acc.mul(ctx, &f.pow(ctx, e)))
    };
    let x = DensePoly::x();
    let c = DensePoly::constant;
    Ok(match t {
        1 => IdentityInstance {
            f: bi(vec![(one, 2, 1), (a2 + one, 0, 1), (b + one, 2, 0), (one, 1, 0)]),
            g: bi(vec![(one, 2, 2), (b2 + one, 2, 0), (a2 + one, 0, 2), (one, 0, 1)]),
            closed_form: prod(vec![
                (x.clone(), 1),
                (lin(one, a + one), LINEAR_FACTOR_MULTIPLICITY),
                (lin(m(a2, b2) + a2 + b2 + b + one, one), 1),
            ]),
        },
        2 => IdentityInstance {
            f: bi(vec![(one, 2, 1), (one, 1, 1), (b + one, 2, 0), (a2 + a, 0, 1), (b + one, 1, 0)]),
            g: bi(vec![(one, 2, 2), (one, 2, 1), (a2 + one, 0, 2), (b2 + b, 2, 0), (a2 + one, 0, 1)]),
            closed_form: prod(vec![
                (c(m(a + one, b + one)), 1),
                (x.clone(), 1),
                (lin(one, a + one), LINEAR_FACTOR_MULTIPLICITY),
                (lin(ab + a + b, a), 1),
            ]),
        },
        3 => IdentityInstance {
            f: bi(vec![
                (one, 4, 2),
                (b2, 4, 0),
                (p(a, 4), 0, 2),
                (one, 2, 1),
                (b, 2, 0),
                (a2, 0, 1),
                (one, 2, 0),
                (one, 1, 0),
            ]),
            g: bi(vec![
                (one, 4, 4),
                (p(a, 4), 0, 4),
                (p(b, 4), 4, 0),
                (one, 2, 2),
                (a2, 0, 2),
                (b2, 2, 0),
                (one, 0, 2),
                (one, 0, 1),
            ]),
            closed_form: prod(vec![
                (x.clone(), 2),
                (lin(one, a), 8),
                (lin(one, ctx.inv_or_zero(b)), 2),
                (lin(m(a2, b) + one, a2), 2),
                (lin(m(a2, b2) + b + one, one), 2),
            ]),
        },
        4 => IdentityInstance {
            f: bi(vec![
                (b, 0, 2),
                (b, 2, 1),
                (b, 1, 1),
                (p(a, 3) + b2, 0, 1),
                (b, 3, 0),
                (ab + b2, 2, 0),
                (m(a2, b) + b2, 1, 0),
            ]),
            g: bi(vec![
                (a2, 4, 0),
                (p(a, 4) + p(b, 3), 2, 0),
                (a2, 2, 2),
                (a2, 2, 1),
                (a2, 0, 3),
                (m(a2, b) + p(a, 4), 0, 2),
                (m(a2, b2) + p(a, 4), 0, 1),
            ]),
            closed_form: prod(vec![
                (c(m(p(a + b, 3), p(a2 + b, 2))), 1),
                (x.clone(), 1),
                (lin(one, a), 2),
                (lin(b, a2), 1),
                (lin(a, b), 1),
                (lin(ab, p(a, 3) + ab + b2), 1),
            ]),
        },
        5 => IdentityInstance {
            f: bi(vec![
                (ab, 2, 1),
                (m(a, b2) + ab, 2, 0),
                (m(a2, b) + a2 + b + one, 1, 1),
                (m(a2, b2) + m(a2, b) + b2 + b, 1, 0),
                (p(a, 3) + a, 0, 1),
            ]),
            g: bi(vec![
                (m(a2, b), 2, 2),
                (m(p(a, 4), b) + m(a2, b), 0, 2),
                (m(a2, b2) + b2 + a2 + one, 2, 1),
                (m(p(a, 4), b2) + m(a2, b2) + p(a, 4) + a2, 0, 1),
                (p(b, 3) + b, 2, 0),
            ]),
            closed_form: prod(vec![
                (c(m(ab, m(p(a + one, 2), p(b + one, 2)))), 1),
                (x.clone(), 1),
                (lin(one, a), 2),
                (lin(one, a + one), 2),
                (lin(ab, m(a2, b) + a2 + b + one), 1),
            ]),
        },
        6 => IdentityInstance {
            f: bi(vec![
                (ab, 2, 1),
                (m(a, b2) + ab, 2, 0),
                (m(a2, b) + a2 + b2 + b, 1, 1),
                (m(a2, b2) + m(a2, b) + p(b, 3) + b2, 1, 0),
                (ab, 0, 2),
                (p(a, 3) + m(a, b2), 0, 1),
            ]),
            g: bi(vec![
                (m(a2, b), 2, 2),
                (m(p(a, 4), b) + m(a2, b), 0, 2),
                (m(a2, b2) + b2 + p(a, 4) + a2, 2, 1),
                (m(p(a, 4), b2) + m(a2, b2) + p(a, 6) + p(a, 4), 0, 1),
                (m(a2, b), 4, 0),
                (p(b, 3) + m(p(a, 4), b), 2, 0),
            ]),
            closed_form: prod(vec![
                (c(m(a2, b2)), 1),
                (x.clone(), 2),
                (lin(one, a), 2),
                (lin(b, ab + a), 2),
                (lin(a, a2 + one), 2),
                (lin(a, a2 + b), 2),
            ]),
        },
        _ => return Err(Error::UnknownId(format!("resultant identity {t}"))),
    })
}

/// Applies `c -> c^{2^{m+1}}` to every coefficient and `x^i y^j -> y^i x^{2j}`:
/// the rewriting that turns each `F` into its `G`.
pub fn twist(ctx: &FieldCtx, f: &BivarPoly) -> BivarPoly {
    let s = twist_exponent(ctx);
    BivarPoly::from_terms(f.terms().into_iter().map(|(c, i, j)| (ctx.frobenius(c, s), 2 * j, i)))
}

/// Compares `Res(F, G, y)` with the closed form, up to a nonzero scalar, for every
/// `a` outside `{0, 1}`.
pub fn verify_resultant_identity(theorem: u8, ctx: &FieldCtx) -> Result<IdentityCheck> {
    let n = ctx.n();
    if n.is_multiple_of(2) || n > IDENTITY_MAX_N {
        return Err(Error::Degenerate(format!("resultant identities need n odd and n <= {IDENTITY_MAX_N}, got {n}")));
    }
    if !(1..=6).contains(&theorem) {
        return Err(Error::UnknownId(format!("resultant identity {theorem}")));
    }
    let mut checked = 0;
    for a in ctx.elements().filter(|&a| a != Fe::ZERO && a != Fe::ONE) {
        checked += 1;
        let inst = identity_instance(ctx, theorem, a)?;
        let res = resultant_eliminate(ctx, &inst.f, &inst.g)?;
        if !res.proportional(ctx, &inst.closed_form) {
            return Ok(IdentityCheck { theorem, n, checked, first_failure: Some(a) });
        }
    }
    Ok(IdentityCheck { theorem, n, checked, first_failure: None })
}
