use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::{BivarPoly, DensePoly};

/// Sylvester matrix of `u` (degree `m`) and `v` (degree `k`): `k` shifted rows
/// of `u`'s coefficients followed by `m` shifted rows of `v`'s, highest degree first.
pub fn sylvester_matrix<T: Clone>(u: &[T], v: &[T], zero: T) -> Vec<Vec<T>> {
    let m = u.len() - 1;
    let k = v.len() - 1;
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for (shifts, coeffs) in [(k, u), (m, v)] {
        for s in 0..shifts {
            let mut row = vec![zero.clone(); size];
            for (d, c) in coeffs.iter().rev().enumerate() {
                row[s + d] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant over the field by Gaussian elimination.
pub fn determinant(ctx: &FieldCtx, mut a: Vec<Vec<Fe>>) -> Fe {
    let size = a.len();
    let mut det = Fe::ONE;
    for col in 0..size {
        let Some(p) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return Fe::ZERO;
        };
        a.swap(col, p);
        let pivot = a[col][col];
        det = ctx.mul(det, pivot);
        let inv = ctx.inv(pivot).expect("pivot is nonzero");
        for r in col + 1..size {
            let factor = ctx.mul(a[r][col], inv);
            if factor.is_zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x += ctx.mul(factor, p);
            }
        }
    }
    det
}

/// Resultant of two nonzero univariate polynomials.
///
/// Row swaps change only the sign of the determinant, which is invisible in
/// characteristic 2.
pub fn resultant(ctx: &FieldCtx, u: &DensePoly, v: &DensePoly) -> Result<Fe> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(determinant(ctx, sylvester_matrix(u.coeffs(), v.coeffs(), Fe::ZERO)))
}

/// Determinant of a matrix over `GF(2^n)[x]` by fraction-free (Bareiss) elimination.
pub fn determinant_poly(ctx: &FieldCtx, mut a: Vec<Vec<DensePoly>>) -> DensePoly {
    let size = a.len();
    if size == 0 {
        return DensePoly::one();
    }
    let mut prev = DensePoly::one();
    for k in 0..size - 1 {
        let Some(p) = (k..size).find(|&r| !a[r][k].is_zero()) else {
            return DensePoly::zero();
        };
        a.swap(k, p);
        for i in k + 1..size {
            for j in k + 1..size {
                let num = a[k][k].mul(ctx, &a[i][j]).add(&a[i][k].mul(ctx, &a[k][j]));
                a[i][j] = num.div_exact(ctx, &prev).expect("Bareiss division is exact");
            }
            a[i][k] = DensePoly::zero();
        }
        prev = a[k][k].clone();
    }
    a[size - 1][size - 1].clone()
}

/// Cofactor expansion along the first row; the slow reference for [`determinant_poly`].
pub fn determinant_poly_cofactor(ctx: &FieldCtx, a: &[Vec<DensePoly>]) -> DensePoly {
    match a.len() {
        0 => DensePoly::one(),
        1 => a[0][0].clone(),
        size => (0..size)
            .filter(|&c| !a[0][c].is_zero())
            .map(|c| {
                let minor: Vec<Vec<DensePoly>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                a[0][c].mul(ctx, &determinant_poly_cofactor(ctx, &minor))
            })
            .fold(DensePoly::zero(), |acc, t| acc.add(&t)),
    }
}

fn check_positive_y(p: &BivarPoly) -> Result<()> {
    match p.degree_y() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantInY),
        Some(_) => Ok(()),
    }
}

/// Sylvester matrix of two bivariate polynomials with respect to `y`.
pub fn sylvester_matrix_y(f: &BivarPoly, g: &BivarPoly) -> Result<Vec<Vec<DensePoly>>> {
    check_positive_y(f)?;
    check_positive_y(g)?;
    Ok(sylvester_matrix(f.y_coeffs(), g.y_coeffs(), DensePoly::zero()))
}

/// `Res(F, G, y)`: eliminates `y`, leaving a polynomial in `x` that vanishes at
/// the `x`-coordinate of every common zero.
pub fn resultant_eliminate(ctx: &FieldCtx, f: &BivarPoly, g: &BivarPoly) -> Result<DensePoly> {
    Ok(determinant_poly(ctx, sylvester_matrix_y(f, g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    #[test]
    fn linear_resultant() {
        let ctx = make_field(5, None).unwrap();
        for a in ctx.elements().step_by(3) {
            for b in ctx.elements().step_by(5) {
                let r = resultant(&ctx, &DensePoly::linear(a), &DensePoly::linear(b)).unwrap();
                assert_eq!(r, a + b);
            }
        }
    }

    #[test]
    fn resultant_examples() {
        let ctx = make_field(3, None).unwrap();
        let g = ctx.generator();
        let sq = DensePoly::from_coeffs(vec![Fe::ONE, Fe::ZERO, Fe::ONE]);
        assert_eq!(resultant(&ctx, &sq, &DensePoly::linear(Fe::ONE)).unwrap(), Fe::ZERO);
        let u = DensePoly::from_coeffs(vec![Fe::ONE, g, Fe::ONE]);
        assert_eq!(resultant(&ctx, &u, &DensePoly::linear(g)).unwrap(), Fe::ONE);
        assert_eq!(resultant(&ctx, &u, &DensePoly::zero()), Err(Error::ZeroPolynomial));
        // a constant against a degree-2 polynomial is c^2
        let c = DensePoly::constant(g);
        assert_eq!(resultant(&ctx, &c, &u).unwrap(), ctx.square(g));
    }

    #[test]
    fn eliminate_examples() {
        let ctx = make_field(4, None).unwrap();
        let f = BivarPoly::from_terms([(Fe::ONE, 0, 1), (Fe::ONE, 1, 0)]);
        let g = BivarPoly::from_terms([(Fe::ONE, 0, 1), (Fe::ONE, 2, 0)]);
        let r = resultant_eliminate(&ctx, &f, &g).unwrap();
        assert_eq!(r, DensePoly::from_coeffs(vec![Fe::ZERO, Fe::ONE, Fe::ONE]));
        let h = BivarPoly::from_terms([(Fe::ONE, 0, 2), (ctx.generator(), 3, 0)]);
        let shared = resultant_eliminate(&ctx, &f.mul(&ctx, &g), &f.mul(&ctx, &h)).unwrap();
        assert!(shared.is_zero());
        let flat = BivarPoly::from_x(DensePoly::x());
        assert_eq!(resultant_eliminate(&ctx, &flat, &g), Err(Error::ConstantInY));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let ctx = make_field(4, None).unwrap();
        let g = ctx.generator();
        let f = BivarPoly::from_terms([
            (Fe::ONE, 2, 2),
            (g, 0, 2),
            (Fe::ONE, 1, 1),
            (ctx.square(g), 3, 0),
            (Fe::ONE, 0, 0),
        ]);
        let h = BivarPoly::from_terms([(g, 1, 3), (Fe::ONE, 0, 1), (Fe::ONE, 2, 0)]);
        let m = sylvester_matrix_y(&f, &h).unwrap();
        assert_eq!(determinant_poly(&ctx, m.clone()), determinant_poly_cofactor(&ctx, &m));
    }
}
