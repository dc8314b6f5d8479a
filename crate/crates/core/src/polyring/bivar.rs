use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::DensePoly;

/// Largest extension degree for which [`count_bivariate_zeros`] scans the plane.
pub const BIVARIATE_SCAN_LIMIT: u32 = 12;

/// A polynomial in `x, y`, stored as a polynomial in `y` with coefficients in `x`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    // index j holds the coefficient of y^j
    ycoeffs: Vec<DensePoly>,
}

impl BivarPoly {
    pub fn from_y_coeffs(mut ycoeffs: Vec<DensePoly>) -> Self {
        while ycoeffs.last().is_some_and(|c| c.is_zero()) {
            ycoeffs.pop();
        }
        BivarPoly { ycoeffs }
    }

    /// Builds from `(coeff, x_exp, y_exp)` triples, adding repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Fe, usize, usize)>>(terms: I) -> Self {
        let mut ycoeffs: Vec<DensePoly> = Vec::new();
        for (c, i, j) in terms {
            if ycoeffs.len() <= j {
                ycoeffs.resize(j + 1, DensePoly::zero());
            }
            ycoeffs[j] = ycoeffs[j].add(&DensePoly::monomial(c, i));
        }
        Self::from_y_coeffs(ycoeffs)
    }

    pub fn zero() -> Self {
        BivarPoly { ycoeffs: Vec::new() }
    }

    /// A polynomial in `x` alone.
    pub fn from_x(p: DensePoly) -> Self {
        Self::from_y_coeffs(vec![p])
    }

    /// A polynomial in `y` alone.
    pub fn from_y(p: &DensePoly) -> Self {
        Self::from_y_coeffs(p.coeffs().iter().map(|&c| DensePoly::constant(c)).collect())
    }

    pub fn y_coeffs(&self) -> &[DensePoly] {
        &self.ycoeffs
    }

    pub fn y_coeff(&self, j: usize) -> DensePoly {
        self.ycoeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.ycoeffs.iter().filter_map(DensePoly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    /// Monomials as `(coeff, x_exp, y_exp)`, ordered by descending `x` then `y` exponent.
    pub fn terms(&self) -> Vec<(Fe, usize, usize)> {
        let mut out: Vec<(Fe, usize, usize)> = self
            .ycoeffs
            .iter()
            .enumerate()
            .flat_map(|(j, p)| {
                p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (c, i, j))
            })
            .collect();
        out.sort_by_key(|t| std::cmp::Reverse((t.1, t.2)));
        out
    }

    pub fn add(&self, other: &BivarPoly) -> BivarPoly {
        let len = self.ycoeffs.len().max(other.ycoeffs.len());
        Self::from_y_coeffs((0..len).map(|j| self.y_coeff(j).add(&other.y_coeff(j))).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &BivarPoly) -> BivarPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![DensePoly::zero(); self.ycoeffs.len() + other.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            for (j, b) in other.ycoeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(ctx, b));
            }
        }
        Self::from_y_coeffs(out)
    }

    /// Substitutes `x = x0`, leaving a polynomial in `y`.
    pub fn at_x(&self, ctx: &FieldCtx, x0: Fe) -> DensePoly {
        DensePoly::from_coeffs(self.ycoeffs.iter().map(|p| p.eval(ctx, x0)).collect())
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe, y: Fe) -> Fe {
        self.at_x(ctx, x).eval(ctx, y)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> BivarPoly {
        Self::from_terms(self.terms().into_iter().map(|(c, i, j)| (c, j, i)))
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0x0");
        }
        for (k, (c, i, j)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if c != Fe::ONE || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            if i > 0 {
                parts.push(format!("x^{i}"));
            }
            if j > 0 {
                parts.push(format!("y^{j}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for BivarPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<BivarPoly> {
        super::text::parse_bivar(s)
    }
}

/// Number of `(x, y)` in the field plane with `G(x, y) = 0`, by full scan.
pub fn count_bivariate_zeros(ctx: &FieldCtx, g: &BivarPoly) -> Result<u64> {
    if ctx.n() > BIVARIATE_SCAN_LIMIT {
        return Err(Error::Budget { what: "bivariate zero count", n: ctx.n(), limit: BIVARIATE_SCAN_LIMIT });
    }
    Ok(ctx
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| {
            let h = g.at_x(ctx, x);
            ctx.elements().filter(|&y| h.eval(ctx, y).is_zero()).count() as u64
        })
        .sum())
}
