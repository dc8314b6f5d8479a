//! Solution counts and factorization types of quadratic, cubic and quartic
//! equations, with a brute-force scan as the reference.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::DensePoly;

/// Largest extension degree for which [`roots_by_scan`] evaluates every point.
pub const ROOT_SCAN_LIMIT: u32 = 20;

/// Factorization type over the base field, by the multiset of irreducible factor degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorPattern {
    Q1111,
    Q22,
    Q13,
    Q112,
    Q4,
    C111,
    C12,
    C3,
}

impl FactorPattern {
    pub fn degrees(self) -> &'static [u32] {
        match self {
            FactorPattern::Q1111 => &[1, 1, 1, 1],
            FactorPattern::Q22 => &[2, 2],
            FactorPattern::Q13 => &[1, 3],
            FactorPattern::Q112 => &[1, 1, 2],
            FactorPattern::Q4 => &[4],
            FactorPattern::C111 => &[1, 1, 1],
            FactorPattern::C12 => &[1, 2],
            FactorPattern::C3 => &[3],
        }
    }

    /// Number of linear factors, which is the root count for squarefree polynomials.
    pub fn linear_factors(self) -> usize {
        self.degrees().iter().filter(|&&d| d == 1).count()
    }

    pub fn from_degrees(degrees: &[u32]) -> Option<FactorPattern> {
        let mut d = degrees.to_vec();
        d.sort_unstable();
        [
            FactorPattern::Q1111,
            FactorPattern::Q22,
            FactorPattern::Q13,
            FactorPattern::Q112,
            FactorPattern::Q4,
            FactorPattern::C111,
            FactorPattern::C12,
            FactorPattern::C3,
        ]
        .into_iter()
        .find(|p| p.degrees() == d.as_slice())
    }
}

impl fmt::Display for FactorPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for FactorPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every root of `f` in the field, ascending, by evaluating at all points.
pub fn roots_by_scan(ctx: &FieldCtx, f: &DensePoly) -> Result<Vec<Fe>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if ctx.n() > ROOT_SCAN_LIMIT {
        return Err(Error::Budget { what: "root scan", n: ctx.n(), limit: ROOT_SCAN_LIMIT });
    }
    Ok(ctx.elements().filter(|&x| f.eval(ctx, x).is_zero()).collect())
}

fn mulmod(ctx: &FieldCtx, a: &DensePoly, b: &DensePoly, m: &DensePoly) -> DensePoly {
    a.mul(ctx, b).rem(ctx, m).expect("modulus is nonzero")
}

/// Distinct roots of `f` in the field, ascending, for any extension degree.
///
/// Takes `gcd(f, x^{2^n} + x)` and splits it with `gcd(g, Tr(b x))` for basis
/// elements `b`; the trace form is nondegenerate, so some `b` separates any two roots.
pub fn find_roots(ctx: &FieldCtx, f: &DensePoly) -> Result<Vec<Fe>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let x = DensePoly::x();
    let mut xq = x.rem(ctx, f)?;
    for _ in 0..ctx.n() {
        xq = mulmod(ctx, &xq, &xq, f);
    }
    let g = DensePoly::gcd(ctx, f, &xq.add(&x));
    let mut roots = Vec::new();
    split_roots(ctx, &g, 0, &mut roots);
    roots.sort();
    Ok(roots)
}

fn split_roots(ctx: &FieldCtx, g: &DensePoly, first_basis: u32, out: &mut Vec<Fe>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(ctx.div(g.coeff(0), g.coeff(1)).expect("linear"));
            return;
        }
        Some(_) => {}
    }
    for i in first_basis..ctx.n() {
        // Tr(b x) mod g
        let bx = DensePoly::monomial(Fe::from_bits(1 << i), 1).rem(ctx, g).expect("nonzero");
        let mut term = bx.clone();
        let mut tr = bx;
        for _ in 1..ctx.n() {
            term = mulmod(ctx, &term, &term, g);
            tr = tr.add(&term);
        }
        let h = DensePoly::gcd(ctx, g, &tr);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < g.degree().unwrap_or(0) {
            let rest = g.div_exact(ctx, &h).expect("h divides g");
            split_roots(ctx, &h, i + 1, out);
            split_roots(ctx, &rest, i + 1, out);
            return;
        }
    }
    unreachable!("squarefree split polynomial of degree > 1 separates on some basis trace");
}

// solves z^2 + z = c, given Tr(c) = 0
fn artin_schreier(ctx: &FieldCtx, c: Fe) -> Fe {
    let n = ctx.n();
    if n % 2 == 1 {
        // half-trace
        let mut z = c;
        let mut t = c;
        for _ in 0..(n - 1) / 2 {
            t = ctx.square(ctx.square(t));
            z += t;
        }
        return z;
    }
    // z -> z^2 + z is GF(2)-linear; eliminate on its images of the basis
    let mut pivots: Vec<(u32, u32)> = Vec::new();
    for i in 0..n {
        let e = Fe::from_bits(1 << i);
        let (mut v, mut comb) = ((ctx.square(e) + e).bits(), 1u32 << i);
        for &(pv, pc) in &pivots {
            if v ^ pv < v {
                v ^= pv;
                comb ^= pc;
            }
        }
        if v != 0 {
            pivots.push((v, comb));
            pivots.sort_by_key(|p| std::cmp::Reverse(p.0));
        }
    }
    let (mut v, mut z) = (c.bits(), 0u32);
    for &(pv, pc) in &pivots {
        if v ^ pv < v {
            v ^= pv;
            z ^= pc;
        }
    }
    debug_assert_eq!(v, 0, "right-hand side has trace 1");
    Fe::from_bits(z)
}

/// Roots of `x^2 + u x + v`, ascending: none when `Tr(v / u^2) = 1`, otherwise `{s, s + u}`.
pub fn quadratic_solutions(ctx: &FieldCtx, u: Fe, v: Fe) -> Result<Vec<Fe>> {
    if u.is_zero() {
        return Err(Error::Degenerate("x^2 + v has the single root sqrt(v); use quadratic_degenerate".into()));
    }
    let c = ctx.div(v, ctx.square(u))?;
    if ctx.trace_abs(c) == 1 {
        return Ok(Vec::new());
    }
    let s = ctx.mul(u, artin_schreier(ctx, c));
    let mut roots = vec![s, s + u];
    roots.sort();
    Ok(roots)
}

/// The root of `x^2 + v`, the case `u = 0` excluded by the trace criterion.
pub fn quadratic_degenerate(ctx: &FieldCtx, v: Fe) -> Fe {
    ctx.sqrt(v)
}

/// Whether `x^3 + a x + b` has exactly one root, via `Tr(a^3 / b^2 + 1) != 0`.
pub fn cubic_has_unique_root(ctx: &FieldCtx, a: Fe, b: Fe) -> Result<bool> {
    if b.is_zero() {
        return Err(Error::Degenerate("cubic criterion needs b != 0".into()));
    }
    let w = ctx.div(ctx.pow(a, 3), ctx.square(b))? + Fe::ONE;
    Ok(ctx.trace_abs(w) == 1)
}

/// Factorization type of a cubic.
pub fn cubic_pattern(ctx: &FieldCtx, f: &DensePoly) -> Result<FactorPattern> {
    if f.degree() != Some(3) {
        return Err(Error::Degenerate(format!("{f:?} is not a cubic")));
    }
    let distinct = find_roots(ctx, f)?.len();
    let repeated = !DensePoly::gcd(ctx, f, &derivative(f)).is_constant();
    // a repeated factor of a cubic is linear, and then the cofactor is linear too
    Ok(match (distinct, repeated) {
        (_, true) | (3, _) => FactorPattern::C111,
        (1, false) => FactorPattern::C12,
        _ => FactorPattern::C3,
    })
}

fn derivative(f: &DensePoly) -> DensePoly {
    DensePoly::from_coeffs(
        f.coeffs().iter().enumerate().skip(1).map(|(i, &c)| if i % 2 == 1 { c } else { Fe::ZERO }).collect(),
    )
}

/// Factorization type of `x^4 + a2 x^2 + a1 x + a0` with `a0 a1 != 0`.
///
/// Uses the resolvent cubic `f1 = y^3 + a2 y + a1` and the traces of
/// `w_i = a0 r_i^2 / a1^2` over its roots `r_i`. The case "(2,2)" is tested as
/// "exactly one `w_i` has trace 0", which does not depend on root labels.
pub fn quartic_pattern(ctx: &FieldCtx, a2: Fe, a1: Fe, a0: Fe) -> Result<FactorPattern> {
    if a0.is_zero() || a1.is_zero() {
        return Err(Error::Degenerate("quartic criterion needs a0 a1 != 0".into()));
    }
    let f1 = DensePoly::from_coeffs(vec![a1, a2, Fe::ZERO, Fe::ONE]);
    let roots = find_roots(ctx, &f1)?;
    let a1_sq_inv = ctx.inv(ctx.square(a1))?;
    let traces: Vec<u8> =
        roots.iter().map(|&r| ctx.trace_abs(ctx.mul(ctx.mul(a0, ctx.square(r)), a1_sq_inv))).collect();
    let zero_traces = traces.iter().filter(|&&t| t == 0).count();
    Ok(match (roots.len(), zero_traces) {
        (3, 3) => FactorPattern::Q1111,
        (3, 1) => FactorPattern::Q22,
        (3, _) => {
            return Err(Error::Degenerate(format!(
                "w-traces {traces:?} fit no case; the three traces always sum to zero"
            )))
        }
        (0, _) => FactorPattern::Q13,
        (1, 1) => FactorPattern::Q112,
        (1, _) => FactorPattern::Q4,
        _ => unreachable!("f1 has distinct roots because a1 != 0"),
    })
}

/// Factorization type of any `x^4 + a2 x^2 + a1 x + a0`, routing `a0 a1 = 0` to
/// direct factorizations.
pub fn quartic_pattern_any(ctx: &FieldCtx, a2: Fe, a1: Fe, a0: Fe) -> Result<FactorPattern> {
    if !a0.is_zero() && !a1.is_zero() {
        return quartic_pattern(ctx, a2, a1, a0);
    }
    if a0.is_zero() {
        // x (x^3 + a2 x + a1)
        let cubic = DensePoly::from_coeffs(vec![a1, a2, Fe::ZERO, Fe::ONE]);
        let mut degrees = vec![1];
        degrees.extend_from_slice(cubic_pattern(ctx, &cubic)?.degrees());
        return Ok(FactorPattern::from_degrees(&degrees).expect("degree sum is 4"));
    }
    // a1 = 0: the square of x^2 + sqrt(a2) x + sqrt(a0)
    let (s, t) = (ctx.sqrt(a2), ctx.sqrt(a0));
    let splits = s.is_zero() || !quadratic_solutions(ctx, s, t)?.is_empty();
    Ok(if splits { FactorPattern::Q1111 } else { FactorPattern::Q22 })
}

/// Pattern of `x^4 + a2 x^2 + a1 x + a0` (`a0 a1 != 0`) by brute force: the root
/// scan, and with no roots a search over pairs of monic quadratic factors.
pub fn quartic_pattern_by_search(ctx: &FieldCtx, a2: Fe, a1: Fe, a0: Fe) -> Result<FactorPattern> {
    let f = DensePoly::from_coeffs(vec![a0, a1, a2, Fe::ZERO, Fe::ONE]);
    match roots_by_scan(ctx, &f)?.len() {
        4 => return Ok(FactorPattern::Q1111),
        2 => return Ok(FactorPattern::Q112),
        1 => return Ok(FactorPattern::Q13),
        0 => {}
        k => return Err(Error::Degenerate(format!("quartic with {k} distinct roots is not squarefree"))),
    }
    // no x^3 term forces (x^2 + s x + t)(x^2 + s x + t'): s (t + t') = a1,
    // t + t' + s^2 = a2, t t' = a0
    for s in ctx.nonzero() {
        let sigma = ctx.div(a1, s)?;
        if sigma + ctx.square(s) == a2 && ctx.elements().any(|t| ctx.mul(t, sigma + t) == a0) {
            return Ok(FactorPattern::Q22);
        }
    }
    Ok(FactorPattern::Q4)
}

/// The three low-degree criteria checked exhaustively against scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma {
    /// `x^2 + u x + v` has roots iff `Tr(v / u^2) = 0`.
    #[serde(rename = "2.4")]
    Quadratic,
    /// `x^3 + a x + b` has a unique root iff `Tr(a^3 / b^2 + 1) = 1`.
    #[serde(rename = "2.5")]
    Cubic,
    /// Factorization type of `x^4 + a2 x^2 + a1 x + a0` from the resolvent cubic.
    #[serde(rename = "2.6")]
    Quartic,
}

impl Lemma {
    pub const ALL: [Lemma; 3] = [Lemma::Quadratic, Lemma::Cubic, Lemma::Quartic];

    pub fn label(self) -> &'static str {
        match self {
            Lemma::Quadratic => "2.4",
            Lemma::Cubic => "2.5",
            Lemma::Quartic => "2.6",
        }
    }

    /// Largest `n` the exhaustive check accepts.
    pub fn max_n(self) -> u32 {
        match self {
            Lemma::Quartic => 6,
            _ => 8,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.label() == s)
            .ok_or_else(|| Error::UnknownId(format!("lemma {s} (expected 2.4, 2.5 or 2.6)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    pub n: u32,
    pub checked: u64,
    pub mismatches: u64,
    /// The first disagreeing input, in enumeration order.
    pub first_mismatch: Option<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares the criterion with the scan on every input in the lemma's range:
/// `u != 0` for 2.4, `b != 0` for 2.5 and `a0 a1 != 0` for 2.6.
pub fn check_lemma(ctx: &FieldCtx, lemma: Lemma) -> Result<LemmaCheck> {
    use rayon::prelude::*;

    let n = ctx.n();
    if n > lemma.max_n() {
        return Err(Error::Budget { what: "exhaustive lemma check", n, limit: lemma.max_n() });
    }
    let outer: Vec<Fe> = match lemma {
        Lemma::Quartic => ctx.elements().collect(),
        _ => ctx.nonzero().collect(),
    };
    let per_outer = |&x: &Fe| -> Result<(u64, Vec<String>)> {
        let mut checked = 0;
        let mut bad = Vec::new();
        match lemma {
            Lemma::Quadratic => {
                for v in ctx.elements() {
                    checked += 1;
                    let f = DensePoly::from_coeffs(vec![v, x, Fe::ONE]);
                    let roots = quadratic_solutions(ctx, x, v)?;
                    let apart = roots.len() != 2 || roots[0] + roots[1] == x;
                    if roots != roots_by_scan(ctx, &f)? || !apart {
                        bad.push(format!("u={x} v={v}"));
                    }
                }
            }
            Lemma::Cubic => {
                for a in ctx.elements() {
                    checked += 1;
                    let f = DensePoly::from_coeffs(vec![x, a, Fe::ZERO, Fe::ONE]);
                    if cubic_has_unique_root(ctx, a, x)? != (roots_by_scan(ctx, &f)?.len() == 1) {
                        bad.push(format!("a={a} b={x}"));
                    }
                }
            }
            Lemma::Quartic => {
                for a1 in ctx.nonzero() {
                    for a0 in ctx.nonzero() {
                        checked += 1;
                        if quartic_pattern(ctx, x, a1, a0)? != quartic_pattern_by_search(ctx, x, a1, a0)? {
                            bad.push(format!("a2={x} a1={a1} a0={a0}"));
                        }
                    }
                }
            }
        }
        Ok((checked, bad))
    };
    let parts: Vec<(u64, Vec<String>)> = outer.par_iter().map(per_outer).collect::<Result<_>>()?;
    let checked = parts.iter().map(|p| p.0).sum();
    let mismatches = parts.iter().map(|p| p.1.len() as u64).sum();
    let first_mismatch = parts.into_iter().find_map(|p| p.1.into_iter().next());
    Ok(LemmaCheck { lemma, n, checked, mismatches, first_mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    fn poly(c: &[Fe]) -> DensePoly {
        DensePoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn quadratic_examples() {
        let f8 = make_field(3, None).unwrap();
        assert!(quadratic_solutions(&f8, Fe::ONE, Fe::ONE).unwrap().is_empty());
        assert_eq!(quadratic_solutions(&f8, Fe::ONE, Fe::ZERO).unwrap(), vec![Fe::ZERO, Fe::ONE]);
        let f16 = make_field(4, None).unwrap();
        let roots = quadratic_solutions(&f16, Fe::ONE, Fe::ONE).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!(f16.square(r) + r + Fe::ONE, Fe::ZERO);
        }
        assert!(quadratic_solutions(&f16, Fe::ZERO, Fe::ONE).is_err());
        let v = f16.generator();
        let r = quadratic_degenerate(&f16, v);
        assert_eq!(f16.square(r), v);
    }

    #[test]
    fn quadratic_exhaustive() {
        for n in 2..=8 {
            let ctx = make_field(n, None).unwrap();
            for u in ctx.nonzero() {
                for v in ctx.elements() {
                    let f = poly(&[v, u, Fe::ONE]);
                    let scan = roots_by_scan(&ctx, &f).unwrap();
                    let got = quadratic_solutions(&ctx, u, v).unwrap();
                    assert_eq!(got, scan, "n={n} u={u} v={v}");
                    let tr = ctx.trace_abs(ctx.div(v, ctx.square(u)).unwrap());
                    assert_eq!(got.is_empty(), tr == 1);
                    if let [s, t] = got[..] {
                        assert_eq!(s + t, u);
                    }
                }
            }
        }
    }

    #[test]
    fn cubic_examples() {
        let f8 = make_field(3, None).unwrap();
        assert!(cubic_has_unique_root(&f8, Fe::ZERO, Fe::ONE).unwrap());
        assert!(!cubic_has_unique_root(&f8, Fe::ONE, Fe::ONE).unwrap());
        let f4 = make_field(2, None).unwrap();
        assert!(!cubic_has_unique_root(&f4, Fe::ZERO, Fe::ONE).unwrap());
        assert_eq!(roots_by_scan(&f4, &poly(&[Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ONE])).unwrap().len(), 3);
        assert!(cubic_has_unique_root(&f8, Fe::ONE, Fe::ZERO).is_err());
    }

    #[test]
    fn cubic_exhaustive() {
        for n in 2..=8 {
            let ctx = make_field(n, None).unwrap();
            for a in ctx.elements() {
                for b in ctx.nonzero() {
                    let f = poly(&[b, a, Fe::ZERO, Fe::ONE]);
                    let count = roots_by_scan(&ctx, &f).unwrap().len();
                    assert_eq!(cubic_has_unique_root(&ctx, a, b).unwrap(), count == 1, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn scan_examples() {
        let ctx = make_field(3, None).unwrap();
        assert_eq!(roots_by_scan(&ctx, &poly(&[Fe::ZERO, Fe::ONE, Fe::ONE])).unwrap(), vec![Fe::ZERO, Fe::ONE]);
        let all = DensePoly::monomial(Fe::ONE, 7).add(&DensePoly::one());
        assert_eq!(roots_by_scan(&ctx, &all).unwrap(), ctx.nonzero().collect::<Vec<_>>());
        let g = ctx.generator();
        let mut expected = vec![g, ctx.pow(g, 2), ctx.pow(g, 4)];
        expected.sort();
        assert_eq!(roots_by_scan(&ctx, &poly(&[Fe::ONE, Fe::ONE, Fe::ZERO, Fe::ONE])).unwrap(), expected);
        assert_eq!(roots_by_scan(&ctx, &DensePoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn find_roots_matches_scan() {
        for n in [2u32, 3, 4, 7, 10] {
            let ctx = make_field(n, None).unwrap();
            let g = ctx.generator();
            let f = DensePoly::from_roots(&ctx, &[g, ctx.pow(g, 5), Fe::ZERO])
                .mul(&ctx, &poly(&[g, Fe::ONE, Fe::ONE, Fe::ONE, g]));
            assert_eq!(find_roots(&ctx, &f).unwrap(), roots_by_scan(&ctx, &f).unwrap(), "n={n}");
        }
        let big = make_field(32, None).unwrap();
        let g = big.generator();
        let rs = [g, big.pow(g, 1000), big.pow(g, 77777)];
        let mut want = rs.to_vec();
        want.sort();
        assert_eq!(find_roots(&big, &DensePoly::from_roots(&big, &rs)).unwrap(), want);
    }

    #[test]
    fn quartic_over_gf4_example() {
        // x^4 + x^2 + x + 1 = (x + 1)(x^3 + x^2 + 1); the cubic stays irreducible over GF(4)
        let ctx = make_field(2, None).unwrap();
        let lhs = poly(&[Fe::ONE, Fe::ONE, Fe::ONE, Fe::ZERO, Fe::ONE]);
        let rhs = poly(&[Fe::ONE, Fe::ONE]).mul(&ctx, &poly(&[Fe::ONE, Fe::ZERO, Fe::ONE, Fe::ONE]));
        assert_eq!(lhs, rhs);
        assert_eq!(quartic_pattern(&ctx, Fe::ONE, Fe::ONE, Fe::ONE).unwrap(), FactorPattern::Q13);
        assert!(quartic_pattern(&ctx, Fe::ONE, Fe::ZERO, Fe::ONE).is_err());
    }

    #[test]
    fn pattern_text() {
        assert_eq!(FactorPattern::Q112.to_string(), "(1,1,2)");
        assert_eq!(FactorPattern::from_degrees(&[2, 1, 1]), Some(FactorPattern::Q112));
        assert_eq!(FactorPattern::Q22.linear_factors(), 0);
    }
}
