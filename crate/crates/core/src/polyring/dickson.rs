use crate::arith;
use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::DensePoly;

/// `D_r(x, a)` from `D_0 = 0`, `D_1 = x`, `D_r = x D_{r-1} + a D_{r-2}`.
///
/// In characteristic 2 the usual `D_0 = 2` is zero.
pub fn dickson(ctx: &FieldCtx, r: u64, a: Fe) -> DensePoly {
    let (mut prev, mut cur) = (DensePoly::zero(), DensePoly::x());
    if r == 0 {
        return prev;
    }
    let ca = DensePoly::constant(a);
    for _ in 1..r {
        let next = DensePoly::x().mul(ctx, &cur).add(&ca.mul(ctx, &prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `D_r(x0, a)` in `O(log r)` field operations, for exponents too large to
/// expand as a polynomial.
pub fn dickson_eval(ctx: &FieldCtx, r: u64, a: Fe, x0: Fe) -> Fe {
    if r == 0 {
        return Fe::ZERO;
    }
    // (D_k, D_{k-1}) advances by the matrix [[x0, a], [1, 0]]
    type M = [[Fe; 2]; 2];
    let mul = |p: &M, q: &M| -> M {
        let e = |i: usize, j: usize| ctx.mul(p[i][0], q[0][j]) + ctx.mul(p[i][1], q[1][j]);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let mut base: M = [[x0, a], [Fe::ONE, Fe::ZERO]];
    let mut acc: M = [[Fe::ONE, Fe::ZERO], [Fe::ZERO, Fe::ONE]];
    let mut e = r - 1;
    while e != 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    // apply to (D_1, D_0) = (x0, 0)
    ctx.mul(acc[0][0], x0)
}

/// `t` with `r t = 1 (mod 2^{2m} - 1)`, so that `D_t(., a^r)` inverts `D_r(., a)` on `GF(2^m)`.
pub fn dickson_inverse_exponent(r: u64, m: u32) -> Result<u64> {
    if m == 0 || m > 31 {
        return Err(Error::Degenerate(format!("subfield degree {m} out of range")));
    }
    let modulus = (1u64 << (2 * m)) - 1;
    arith::mod_inverse(r, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    // closed form: sum over i of r/(r-i) * C(r-i, i) * a^i x^{r-2i}, integers reduced mod 2
    fn dickson_by_sum(ctx: &FieldCtx, r: u64, a: Fe) -> DensePoly {
        fn binom(n: u64, k: u64) -> u128 {
            (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
        }
        if r == 0 {
            return DensePoly::zero();
        }
        (0..=r / 2)
            .filter(|&i| (r as u128 * binom(r - i, i) / (r - i) as u128) % 2 == 1)
            .map(|i| DensePoly::monomial(ctx.pow(a, i), (r - 2 * i) as usize))
            .fold(DensePoly::zero(), |acc, t| acc.add(&t))
    }

    #[test]
    fn small_cases() {
        let ctx = make_field(4, None).unwrap();
        let g = ctx.generator();
        assert_eq!(dickson(&ctx, 1, g), DensePoly::x());
        assert_eq!(dickson(&ctx, 2, g), DensePoly::monomial(Fe::ONE, 2));
        let d5 = DensePoly::from_coeffs(vec![Fe::ZERO, Fe::ONE, Fe::ZERO, Fe::ONE, Fe::ZERO, Fe::ONE]);
        assert_eq!(dickson(&ctx, 5, Fe::ONE), d5);
    }

    #[test]
    fn recurrence_matches_sum() {
        let ctx = make_field(5, None).unwrap();
        for r in 0..=10 {
            for a in ctx.elements().step_by(4) {
                assert_eq!(dickson(&ctx, r, a), dickson_by_sum(&ctx, r, a), "r={r}");
            }
        }
    }

    #[test]
    fn functional_identity() {
        for n in 2..=8u32 {
            let ctx = make_field(n, None).unwrap();
            for r in 0..=10 {
                for a in ctx.nonzero().step_by(5) {
                    let d = dickson(&ctx, r, a);
                    for z in ctx.nonzero().step_by(3) {
                        let w = ctx.div(a, z).unwrap();
                        assert_eq!(d.eval(&ctx, z + w), ctx.pow(z, r) + ctx.pow(w, r));
                        assert_eq!(dickson_eval(&ctx, r, a, z + w), d.eval(&ctx, z + w));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_exponent() {
        assert_eq!(dickson_inverse_exponent(1, 3).unwrap(), 1);
        assert_eq!(dickson_inverse_exponent(5, 3).unwrap(), 38);
        assert!(matches!(dickson_inverse_exponent(3, 3), Err(Error::NoModularInverse { .. })));
        let ctx = make_field(3, None).unwrap();
        let d5 = dickson(&ctx, 5, Fe::ONE);
        let d38 = dickson(&ctx, 38, Fe::ONE);
        for x in ctx.elements() {
            assert_eq!(d38.eval(&ctx, d5.eval(&ctx, x)), x);
        }
    }
}
