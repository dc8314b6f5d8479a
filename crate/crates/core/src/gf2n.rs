//! Binary extension fields GF(2^n), `2 <= n <= 32`, in the polynomial basis.
//!
//! An element is the bit vector of its coordinates in `{1, x, ..., x^{n-1}}`
//! modulo an irreducible polynomial. Addition is xor; multiplication is a
//! carry-less product followed by reduction. There are no log tables, so a
//! [`FieldCtx`] is a handful of words and is `Copy`.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 32;

/// A field element: `n` coordinate bits in the polynomial basis of its [`FieldCtx`].
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Wraps raw bits without a range check; see [`FieldCtx::elem`] for the checked form.
    pub const fn from_bits(bits: u32) -> Fe {
        Fe(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) const fn index(self) -> usize {
        self.0 as usize
    }
}

impl Add for Fe {
    type Output = Fe;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl AddAssign for Fe {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for Fe {
    fn sum<I: Iterator<Item = Fe>>(iter: I) -> Fe {
        iter.fold(Fe::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::LowerHex for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl FromStr for Fe {
    type Err = Error;

    /// Parses `0x`-prefixed hex. Range is checked later against a context.
    fn from_str(s: &str) -> Result<Fe> {
        let t = s.trim();
        let digits = t
            .strip_prefix("0x")
            .or_else(|| t.strip_prefix("0X"))
            .ok_or_else(|| Error::parse(t, "field elements are written as 0x-prefixed hex"))?;
        u32::from_str_radix(digits, 16).map(Fe).map_err(|e| Error::parse(t, e.to_string()))
    }
}

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Fe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Fe, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Arithmetic in GF(2)[x] on polynomials packed into a `u64` (bit i = coefficient of x^i).
pub(crate) mod bitpoly {
    pub fn degree(a: u64) -> Option<u32> {
        (a != 0).then(|| 63 - a.leading_zeros())
    }

    pub fn rem(mut a: u64, m: u64) -> u64 {
        let dm = degree(m).expect("nonzero modulus");
        while let Some(da) = degree(a) {
            if da < dm {
                break;
            }
            a ^= m << (da - dm);
        }
        a
    }

    /// `a * b mod m` with `deg a, deg b < deg m <= 32`.
    pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
        let mut acc: u64 = 0;
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        rem(acc, m)
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = rem(a, b);
            a = b;
            b = r;
        }
        a
    }

    /// Degree of the smallest irreducible factor of `m` when it is below `deg m`.
    ///
    /// `m` is irreducible iff `gcd(x^{2^d} - x, m) = 1` for every `d <= deg(m)/2`.
    pub fn smallest_factor_degree(m: u64) -> Option<u32> {
        let dm = degree(m)?;
        let x = rem(0b10, m);
        let mut power = x;
        for d in 1..=dm / 2 {
            power = mulmod(power, power, m);
            if degree(gcd(m, power ^ x)).unwrap_or(0) > 0 {
                return Some(d);
            }
        }
        None
    }
}

/// One instance of GF(2^n): degree, modulus and a fixed primitive element.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    n: u32,
    modulus: u64,
    generator: Fe,
    trace_mask: u32,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({self})")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf2_{}/{:#x}", self.n, self.modulus)
    }
}

impl FromStr for FieldCtx {
    type Err = Error;

    /// Parses `gf2_N/0xMOD` or the bare `gf2_N` (default modulus).
    fn from_str(s: &str) -> Result<FieldCtx> {
        let t = s.trim();
        let rest = t.strip_prefix("gf2_").ok_or_else(|| Error::parse(t, "expected gf2_N or gf2_N/0xMOD"))?;
        let (deg, modulus) = match rest.split_once('/') {
            Some((d, m)) => (d, Some(m)),
            None => (rest, None),
        };
        let n: u32 = deg.parse().map_err(|_| Error::parse(t, "bad degree"))?;
        let modulus = match modulus {
            Some(m) => {
                let digits = m.strip_prefix("0x").ok_or_else(|| Error::parse(t, "modulus must be 0x-prefixed hex"))?;
                Some(u64::from_str_radix(digits, 16).map_err(|e| Error::parse(t, e.to_string()))?)
            }
            None => None,
        };
        make_field(n, modulus)
    }
}

/// Numerically smallest irreducible polynomial of degree `n` over GF(2).
pub fn smallest_irreducible(n: u32) -> u64 {
    let top = 1u64 << n;
    (0..top)
        .map(|low| top | low)
        .find(|&m| m & 1 == 1 && bitpoly::smallest_factor_degree(m).is_none())
        .expect("irreducible polynomials exist in every degree")
}

/// Builds GF(2^n) over `modulus`, or over the smallest irreducible when none is given.
pub fn make_field(n: u32, modulus: Option<u64>) -> Result<FieldCtx> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    let modulus = match modulus {
        Some(m) => {
            let found = bitpoly::degree(m).unwrap_or(0);
            if m == 0 || found != n {
                return Err(Error::ModulusDegree { modulus: m, expected: n, found });
            }
            if let Some(factor_degree) = bitpoly::smallest_factor_degree(m) {
                return Err(Error::ReducibleModulus { modulus: m, factor_degree });
            }
            m
        }
        None => smallest_irreducible(n),
    };
    let mut ctx = FieldCtx { n, modulus, generator: Fe::ONE, trace_mask: 0 };
    ctx.trace_mask =
        (0..n).filter(|&i| ctx.trace_by_definition(Fe(1 << i)) == Fe::ONE).fold(0, |mask, i| mask | (1 << i));
    let factors = arith::prime_factors(ctx.order());
    ctx.generator = (2..ctx.size())
        .map(|b| Fe(b as u32))
        .find(|&g| ctx.has_full_order(g, &factors))
        .expect("the multiplicative group is cyclic");
    Ok(ctx)
}

impl FieldCtx {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The primitive element of smallest bit encoding.
    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// `2^n`.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    /// `2^n - 1`, the order of the multiplicative group.
    pub fn order(&self) -> u64 {
        self.size() - 1
    }

    /// Range-checked element construction.
    pub fn elem(&self, bits: u64) -> Result<Fe> {
        if bits >= self.size() {
            return Err(Error::ElementOutOfRange { bits, n: self.n });
        }
        Ok(Fe(bits as u32))
    }

    /// The residue class of `x`.
    pub fn x(&self) -> Fe {
        Fe(2)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.size()).map(|b| Fe(b as u32))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.size()).map(|b| Fe(b as u32))
    }

    #[inline]
    fn reduce(&self, mut v: u64) -> Fe {
        while v >> self.n != 0 {
            let top = 63 - v.leading_zeros();
            v ^= self.modulus << (top - self.n);
        }
        Fe(v as u32)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let (x, mut y) = (a.0 as u64, b.0);
        let mut acc = 0u64;
        while y != 0 {
            let s = y.trailing_zeros();
            acc ^= x << s;
            y &= y - 1;
        }
        self.reduce(acc)
    }

    #[inline]
    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// `a^e` with `0^0 = 1` and `0^e = 0` for `e > 0`.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let mut e = e % self.order();
        let mut base = a;
        let mut acc = Fe::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Signed exponent; negative powers need a nonzero base.
    pub fn pow_signed(&self, a: Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 1))
    }

    /// `a^{2^n - 2}`: the inverse for `a != 0`, and `0` at `0`.
    pub fn inv_or_zero(&self, a: Fe) -> Fe {
        self.pow(a, self.order() - 1)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^{2^j}`.
    pub fn frobenius(&self, x: Fe, j: u32) -> Fe {
        (0..j % self.n).fold(x, |acc, _| self.square(acc))
    }

    /// The unique square root, `x^{2^{n-1}}`.
    pub fn sqrt(&self, x: Fe) -> Fe {
        self.frobenius(x, self.n - 1)
    }

    fn trace_by_definition(&self, x: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        let mut t = x;
        for _ in 0..self.n {
            acc += t;
            t = self.square(t);
        }
        acc
    }

    /// Absolute trace `x + x^2 + ... + x^{2^{n-1}}` as a bit.
    #[inline]
    pub fn trace_abs(&self, x: Fe) -> u8 {
        ((x.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Relative trace onto GF(2^m): `x + x^{2^m} + ... + x^{2^{(n/m - 1) m}}`.
    pub fn trace_rel(&self, m: u32, x: Fe) -> Result<Fe> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return Err(Error::NotADivisor { m, n: self.n });
        }
        let mut acc = Fe::ZERO;
        let mut t = x;
        for _ in 0..self.n / m {
            acc += t;
            t = self.frobenius(t, m);
        }
        Ok(acc)
    }

    /// True when `x` lies in the subfield GF(2^m) (requires `m | n`).
    pub fn in_subfield(&self, m: u32, x: Fe) -> bool {
        self.frobenius(x, m) == x
    }

    fn has_full_order(&self, g: Fe, factors: &[u64]) -> bool {
        let q1 = self.order();
        self.pow(g, q1) == Fe::ONE && factors.iter().all(|p| self.pow(g, q1 / p) != Fe::ONE)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Fe) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.order();
        for p in arith::prime_factors(ord) {
            while ord.is_multiple_of(p) && self.pow(a, ord / p) == Fe::ONE {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// `g^i` for the context generator.
    pub fn gen_pow(&self, i: u64) -> Fe {
        self.pow(self.generator, i)
    }

    /// Discrete log base the generator by linear search; test and small-field use only.
    pub fn log_by_scan(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut t = Fe::ONE;
        for i in 0..self.order() {
            if t == a {
                return Some(i);
            }
            t = self.mul(t, self.generator);
        }
        None
    }
}
