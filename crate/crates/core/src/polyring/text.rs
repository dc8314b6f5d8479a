//! Text form of polynomials.
//!
//! Terms are joined by `+`; a term is a product (`*`) of an optional hex
//! coefficient `0xC` and powers `x^K` / `y^K`. A bare variable means exponent 1
//! and whitespace is ignored. Formatting always writes `x^K` explicitly.

use crate::error::{Error, Result};
use crate::gf2n::Fe;
use crate::polyring::{BivarPoly, SparsePoly};

struct Monomial {
    coeff: Fe,
    xe: u64,
    ye: u64,
}

fn parse_exponent(input: &str, s: &str) -> Result<u64> {
    s.parse::<u64>().map_err(|_| Error::parse(input, format!("bad exponent `{s}`")))
}

fn parse_monomials(input: &str) -> Result<Vec<Monomial>> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(input, "empty polynomial"));
    }
    let mut out = Vec::new();
    for term in compact.split('+') {
        if term.is_empty() {
            return Err(Error::parse(input, "empty term"));
        }
        let mut m = Monomial { coeff: Fe::ONE, xe: 0, ye: 0 };
        let mut seen_coeff = false;
        for factor in term.split('*') {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, Some(e)),
                None => (factor, None),
            };
            match var {
                "x" | "y" => {
                    let e = match exp {
                        Some(e) => parse_exponent(input, e)?,
                        None => 1,
                    };
                    let slot = if var == "x" { &mut m.xe } else { &mut m.ye };
                    *slot = slot.checked_add(e).ok_or_else(|| Error::parse(input, "exponent overflow"))?;
                }
                _ if exp.is_none() && !seen_coeff => {
                    m.coeff = if factor == "1" {
                        Fe::ONE
                    } else {
                        factor.parse::<Fe>().map_err(|_| Error::parse(input, format!("bad factor `{factor}`")))?
                    };
                    seen_coeff = true;
                }
                _ => return Err(Error::parse(input, format!("bad factor `{factor}`"))),
            }
        }
        out.push(m);
    }
    Ok(out)
}

pub fn parse_sparse(input: &str) -> Result<SparsePoly> {
    let monos = parse_monomials(input)?;
    if monos.iter().any(|m| m.ye != 0) {
        return Err(Error::parse(input, "unexpected variable y in a univariate polynomial"));
    }
    Ok(SparsePoly::from_terms(monos.into_iter().map(|m| (m.xe, m.coeff))))
}

pub fn parse_bivar(input: &str) -> Result<BivarPoly> {
    let monos = parse_monomials(input)?;
    let mut terms = Vec::with_capacity(monos.len());
    for m in monos {
        let (i, j) = (usize::try_from(m.xe), usize::try_from(m.ye));
        match (i, j) {
            (Ok(i), Ok(j)) if i <= 1 << 16 && j <= 1 << 16 => terms.push((m.coeff, i, j)),
            _ => return Err(Error::parse(input, "bivariate degree too large")),
        }
    }
    Ok(BivarPoly::from_terms(terms))
}
