use std::fmt;

use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};

/// Univariate polynomial with coefficients in ascending degree order.
///
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DensePoly {
    coeffs: Vec<Fe>,
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, *c == Fe::ONE) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl DensePoly {
    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Fe::ONE, 1)
    }

    pub fn monomial(c: Fe, degree: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x + c`, the monic linear polynomial with root `c`.
    pub fn linear(c: Fe) -> Self {
        Self::from_coeffs(vec![c, Fe::ONE])
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Fe) -> DensePoly {
        Self::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += ctx.mul(a, b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, ctx: &FieldCtx, mut e: u64) -> DensePoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e != 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            e >>= 1;
            if e != 0 {
                base = base.mul(ctx, &base);
            }
        }
        acc
    }

    /// Horner evaluation; a nonzero constant term counts as `c * x^0 = c` at `x = 0`.
    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| ctx.mul(acc, x) + c)
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Result<DensePoly> {
        let inv = ctx.inv(self.lead()).map_err(|_| Error::ZeroPolynomial)?;
        Ok(self.scale(ctx, inv))
    }

    pub fn div_rem(&self, ctx: &FieldCtx, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let inv_lead = ctx.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let q = ctx.mul(c, inv_lead);
            quot[i - dd] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] += ctx.mul(q, d);
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, divisor: &DensePoly) -> Result<DensePoly> {
        Ok(self.div_rem(ctx, divisor)?.1)
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, ctx: &FieldCtx, divisor: &DensePoly) -> Result<DensePoly> {
        let (q, r) = self.div_rem(ctx, divisor)?;
        if !r.is_zero() {
            return Err(Error::Degenerate(format!("{divisor:?} does not divide {self:?}")));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(ctx: &FieldCtx, a: &DensePoly, b: &DensePoly) -> DensePoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(ctx, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(ctx).expect("nonzero")
        }
    }

    /// `self(inner(x))`.
    pub fn compose(&self, ctx: &FieldCtx, inner: &DensePoly) -> DensePoly {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, &c| acc.mul(ctx, inner).add(&Self::constant(c)))
    }

    /// Product of `(x + r)` over the given roots.
    pub fn from_roots(ctx: &FieldCtx, roots: &[Fe]) -> DensePoly {
        roots.iter().fold(Self::one(), |acc, &r| acc.mul(ctx, &Self::linear(r)))
    }

    /// True when `self = c * other` for some nonzero scalar `c`.
    pub fn proportional(&self, ctx: &FieldCtx, other: &DensePoly) -> bool {
        if self.is_zero() || other.is_zero() || self.degree() != other.degree() {
            return false;
        }
        self.scale(ctx, other.lead()) == other.scale(ctx, self.lead())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    #[test]
    fn division_identity() {
        let ctx = make_field(4, None).unwrap();
        let g = ctx.generator();
        let a = DensePoly::from_coeffs(vec![g, Fe::ONE, ctx.square(g), Fe::ZERO, g, Fe::ONE]);
        let b = DensePoly::from_coeffs(vec![Fe::ONE, g, Fe::ONE]);
        let (q, r) = a.div_rem(&ctx, &b).unwrap();
        assert_eq!(q.mul(&ctx, &b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&ctx, &DensePoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_of_products() {
        let ctx = make_field(5, None).unwrap();
        let g = ctx.generator();
        let common = DensePoly::from_roots(&ctx, &[g, ctx.square(g)]);
        let a = common.mul(&ctx, &DensePoly::linear(Fe::ONE));
        let b = common.mul(&ctx, &DensePoly::from_coeffs(vec![Fe::ONE, Fe::ONE, Fe::ONE]));
        assert_eq!(DensePoly::gcd(&ctx, &a, &b), common);
    }

    #[test]
    fn eval_and_compose() {
        let ctx = make_field(3, None).unwrap();
        let f = DensePoly::from_coeffs(vec![Fe::ZERO, Fe::ONE, Fe::ONE]); // x^2 + x
        assert_eq!(f.eval(&ctx, Fe::ONE), Fe::ZERO);
        let inner = DensePoly::linear(ctx.x());
        let comp = f.compose(&ctx, &inner);
        for x in ctx.elements() {
            assert_eq!(comp.eval(&ctx, x), f.eval(&ctx, x + ctx.x()));
        }
    }

    #[test]
    fn proportionality() {
        let ctx = make_field(3, None).unwrap();
        let f = DensePoly::from_coeffs(vec![Fe::ONE, ctx.x(), Fe::ONE]);
        assert!(f.proportional(&ctx, &f.scale(&ctx, ctx.x())));
        assert!(!f.proportional(&ctx, &f.add(&DensePoly::one())));
        assert!(!f.proportional(&ctx, &DensePoly::zero()));
    }
}
