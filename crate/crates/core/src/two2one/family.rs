use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2n::{Fe, FieldCtx};
use crate::polyring::SparsePoly;

/// Exponents of `γ` in the sporadic degree-5 triples `(a3, a2, a1)`, rows 1 to 21.
pub const TABLE_I_SPORADIC: [[u64; 3]; 21] = [
    [0, 1, 5],
    [0, 2, 3],
    [0, 4, 6],
    [1, 0, 5],
    [1, 2, 1],
    [1, 6, 0],
    [2, 0, 3],
    [2, 4, 2],
    [2, 5, 0],
    [3, 2, 4],
    [3, 3, 2],
    [3, 5, 5],
    [4, 0, 6],
    [4, 1, 4],
    [4, 3, 0],
    [5, 1, 2],
    [5, 5, 1],
    [5, 5, 6],
    [6, 3, 3],
    [6, 4, 1],
    [6, 6, 4],
];

/// Number of degree-5 rows: the sporadic ones plus `(a3, 0, 0)` and `(0, a2, 0)`.
pub const TABLE_I_ROWS: u8 = 23;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    BinSinger,
    BinSegre,
    BinGlynn1,
    BinGlynn2,
    BinEvenInv,
    TriI,
    TriII,
    /// Quadrinomial rows 1 to 12.
    Quad(u8),
    /// Degree-5 rows 1 to 23.
    Deg5Row(u8),
}

/// A family and its element choice.
///
/// `choice` selects the root for `tri_I`/`tri_II` (index into the ascending root
/// list) and the exponent `j` of `γ^j` for degree-5 rows 22 and 23.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub choice: u64,
}

impl FamilyId {
    pub const fn new(kind: FamilyKind) -> Self {
        FamilyId { kind, choice: 0 }
    }

    pub fn with_choice(self, choice: u64) -> Self {
        FamilyId { choice, ..self }
    }

    fn takes_choice(self) -> bool {
        matches!(self.kind, FamilyKind::TriI | FamilyKind::TriII | FamilyKind::Deg5Row(22 | 23))
    }

    /// Every family with its default choice.
    pub fn all() -> Vec<FamilyId> {
        use FamilyKind::*;
        let mut out: Vec<FamilyId> = [BinSinger, BinSegre, BinGlynn1, BinGlynn2, BinEvenInv, TriI, TriII]
            .into_iter()
            .map(FamilyId::new)
            .collect();
        out.extend((1..=12).map(|r| FamilyId::new(Quad(r))));
        out.extend((1..=TABLE_I_ROWS).map(|r| FamilyId::new(Deg5Row(r))));
        out
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::BinSinger => write!(f, "bin_singer")?,
            FamilyKind::BinSegre => write!(f, "bin_segre")?,
            FamilyKind::BinGlynn1 => write!(f, "bin_glynn1")?,
            FamilyKind::BinGlynn2 => write!(f, "bin_glynn2")?,
            FamilyKind::BinEvenInv => write!(f, "bin_even_inv")?,
            FamilyKind::TriI => write!(f, "tri_I")?,
            FamilyKind::TriII => write!(f, "tri_II")?,
            FamilyKind::Quad(r) => write!(f, "quad_{r:02}")?,
            FamilyKind::Deg5Row(r) => write!(f, "deg5_t1_row_{r:02}")?,
        }
        if self.takes_choice() && self.choice != 0 {
            write!(f, ":{}", self.choice)?;
        }
        Ok(())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyId> {
        let unknown = || Error::UnknownId(s.to_string());
        let (name, choice) = match s.split_once(':') {
            Some((name, c)) => (name, Some(c.parse::<u64>().map_err(|_| unknown())?)),
            None => (s, None),
        };
        let row = |prefix: &str, max: u8| -> Option<u8> {
            let r: u8 = name.strip_prefix(prefix)?.parse().ok()?;
            (1..=max).contains(&r).then_some(r)
        };
        let kind = match name {
            "bin_singer" => FamilyKind::BinSinger,
            "bin_segre" => FamilyKind::BinSegre,
            "bin_glynn1" => FamilyKind::BinGlynn1,
            "bin_glynn2" => FamilyKind::BinGlynn2,
            "bin_even_inv" => FamilyKind::BinEvenInv,
            "tri_I" => FamilyKind::TriI,
            "tri_II" => FamilyKind::TriII,
            _ => {
                if let Some(r) = row("quad_", 12) {
                    FamilyKind::Quad(r)
                } else if let Some(r) = row("deg5_t1_row_", TABLE_I_ROWS) {
                    FamilyKind::Deg5Row(r)
                } else {
                    return Err(unknown());
                }
            }
        };
        let id = FamilyId::new(kind);
        match choice {
            None => Ok(id),
            Some(c) if id.takes_choice() => Ok(id.with_choice(c)),
            Some(_) => Err(unknown()),
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FamilyId, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn inadmissible(id: FamilyId, n: u32, reason: impl Into<String>) -> Error {
    Error::Inadmissible { family: id.to_string(), n, reason: reason.into() }
}

/// The least positive `π` with `4π = 1 (mod n)`, for odd `n`.
pub fn glynn_pi(n: u32) -> Option<u32> {
    (1..=n).find(|&p| (4 * p as u64) % n as u64 == 1 % n as u64)
}

/// Roots of `α^{2^m} + α + 1` for `n = 2m`, ascending; these are the elements of
/// relative trace 1 down to `GF(2^m)`.
pub fn tri_i_roots(ctx: &FieldCtx) -> Result<Vec<Fe>> {
    let n = ctx.n();
    if !n.is_multiple_of(2) {
        return Err(Error::NotADivisor { m: 2, n });
    }
    let m = n / 2;
    Ok(ctx.elements().filter(|&a| ctx.frobenius(a, m) + a == Fe::ONE).collect())
}

/// The two elements of `GF(4) \ GF(2)` inside an even-degree field, ascending.
pub fn gf4_omegas(ctx: &FieldCtx) -> Result<Vec<Fe>> {
    if !ctx.n().is_multiple_of(2) {
        return Err(Error::NotADivisor { m: 2, n: ctx.n() });
    }
    let w = ctx.gen_pow(ctx.order() / 3);
    let mut out = vec![w, ctx.square(w)];
    out.sort();
    Ok(out)
}

fn pick(id: FamilyId, n: u32, roots: Vec<Fe>, what: &str) -> Result<Fe> {
    if roots.is_empty() {
        return Err(Error::MissingRoot { what: what.to_string(), n });
    }
    let count = roots.len();
    roots
        .get(id.choice as usize)
        .copied()
        .ok_or_else(|| inadmissible(id, n, format!("root index {} but only {count} roots of {what}", id.choice)))
}

fn require_odd(id: FamilyId, n: u32) -> Result<u32> {
    if n % 2 == 1 {
        Ok((n - 1) / 2)
    } else {
        Err(inadmissible(id, n, "needs n odd"))
    }
}

/// Builds the stated polynomial of a family over `ctx`, exponents as stated
/// (not reduced modulo `2^n - 1`).
pub fn make_family(id: FamilyId, ctx: &FieldCtx) -> Result<SparsePoly> {
    let n = ctx.n();
    let p2 = |e: u32| 1u64 << e;
    let q = ctx.size();
    let ones = |exps: &[u64]| SparsePoly::from_exponents(exps);
    Ok(match id.kind {
        FamilyKind::BinSinger => {
            require_odd(id, n)?;
            ones(&[2, 1])
        }
        FamilyKind::BinSegre => {
            require_odd(id, n)?;
            ones(&[6, 1])
        }
        FamilyKind::BinGlynn1 => {
            require_odd(id, n)?;
            let pi = glynn_pi(n).ok_or_else(|| inadmissible(id, n, "no π with 4π ≡ 1 (mod n)"))?;
            ones(&[p2(n.div_ceil(2)) + p2(pi), 1])
        }
        FamilyKind::BinGlynn2 => {
            require_odd(id, n)?;
            ones(&[3 * p2(n.div_ceil(2)) + 4, 1])
        }
        FamilyKind::BinEvenInv => {
            if !n.is_multiple_of(2) {
                return Err(inadmissible(id, n, "needs n even"));
            }
            ones(&[q - 2, 1])
        }
        FamilyKind::TriI => {
            if !n.is_multiple_of(2) {
                return Err(inadmissible(id, n, "needs n = 2m"));
            }
            let m = n / 2;
            let alpha = pick(id, n, tri_i_roots(ctx)?, &format!("x^{}+x+1", p2(m)))?;
            SparsePoly::from_terms([(q - p2(m), Fe::ONE), (q - p2(m) - 1, Fe::ONE), (1, alpha)])
        }
        FamilyKind::TriII => {
            if !n.is_multiple_of(2) || (n / 2).is_multiple_of(2) {
                return Err(inadmissible(id, n, "needs n = 2m with m odd"));
            }
            let m = n / 2;
            let omega = pick(id, n, gf4_omegas(ctx)?, "x^2+x+1")?;
            SparsePoly::from_terms([((p2(n - 1) + p2(m) - 1) / 3, Fe::ONE), (p2(m), Fe::ONE), (1, omega)])
        }
        FamilyKind::Quad(r @ 1..=10) => {
            let m = require_odd(id, n)?;
            match r {
                1 => ones(&[p2(m + 1) + 2, p2(m + 1), 2, 1]),
                2 => ones(&[p2(m + 1) + 2, p2(m + 1) + 1, 2, 1]),
                3 => ones(&[p2(m + 2) + 4, p2(m + 1) + 2, 2, 1]),
                4 => ones(&[q - p2(m + 1) + 2, p2(m + 1), 2, 1]),
                5 => ones(&[q - 2, q - p2(m + 1), q - p2(m + 1) - 2, 1]),
                6 => ones(&[q - 2, q - p2(m + 1), p2(m + 1) - 1, 1]),
                7 => ones(&[q - 2, p2(n - 1) + 1, p2(n - 1) - 2, 1]),
                8 => ones(&[q - 2, q - 4, 3, 1]),
                9 => ones(&[6, 4, 3, 1]),
                _ => ones(&[6, 5, 3, 1]),
            }
        }
        FamilyKind::Quad(r) => {
            if !n.is_multiple_of(3) {
                return Err(inadmissible(id, n, "needs n = 3m"));
            }
            let m = n / 3;
            if r == 11 {
                ones(&[p2(2 * m) + p2(m), p2(2 * m) + 1, p2(m) + 1, 1])
            } else {
                if m % 3 == 1 {
                    return Err(inadmissible(id, n, format!("m = {m} ≡ 1 (mod 3) violates m ≢ 1 (mod 3)")));
                }
                ones(&[p2(2 * m) + 1, p2(m + 1), p2(m) + 1, 1])
            }
        }
        FamilyKind::Deg5Row(r) => {
            if n != 3 {
                return Err(inadmissible(id, n, "degree-5 rows are over GF(2^3)"));
            }
            let (a3, a2, a1) = table_i_triple(ctx, r, id.choice)?;
            quintic(a3, a2, a1)
        }
    })
}

/// `x^5 + a3 x^3 + a2 x^2 + a1 x`.
pub fn quintic(a3: Fe, a2: Fe, a1: Fe) -> SparsePoly {
    SparsePoly::from_terms([(5, Fe::ONE), (3, a3), (2, a2), (1, a1)])
}

/// Row `r` of the degree-5 table as field elements, with `γ` the generator of `ctx`.
pub fn table_i_triple(ctx: &FieldCtx, r: u8, j: u64) -> Result<(Fe, Fe, Fe)> {
    let g = |e: u64| ctx.gen_pow(e);
    match r {
        1..=21 => {
            let [e3, e2, e1] = TABLE_I_SPORADIC[r as usize - 1];
            Ok((g(e3), g(e2), g(e1)))
        }
        22 => Ok((g(j), Fe::ZERO, Fe::ZERO)),
        23 => Ok((Fe::ZERO, g(j), Fe::ZERO)),
        _ => Err(Error::UnknownId(format!("deg5_t1_row_{r}"))),
    }
}

/// Every admissible element choice of a family: all roots for the trinomials,
/// all `j` for the parametric degree-5 rows, otherwise the single instance.
pub fn family_instances(id: FamilyId, ctx: &FieldCtx) -> Result<Vec<SparsePoly>> {
    let choices = match id.kind {
        FamilyKind::TriI if ctx.n().is_multiple_of(2) => tri_i_roots(ctx)?.len() as u64,
        FamilyKind::TriII if ctx.n().is_multiple_of(2) => 2,
        FamilyKind::Deg5Row(22 | 23) => ctx.order(),
        _ => 1,
    };
    (0..choices).map(|c| make_family(id.with_choice(c), ctx)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;

    #[test]
    fn ids_round_trip() {
        for id in FamilyId::all() {
            assert_eq!(id.to_string().parse::<FamilyId>().unwrap(), id);
        }
        assert_eq!("quad_7".parse::<FamilyId>().unwrap(), FamilyId::new(FamilyKind::Quad(7)));
        assert_eq!("tri_I:3".parse::<FamilyId>().unwrap().choice, 3);
        assert_eq!("deg5_t1_row_22:4".parse::<FamilyId>().unwrap().to_string(), "deg5_t1_row_22:4");
        for bad in ["quad_13", "quad_00", "tri_III", "bin_singer:1", "deg5_t1_row_24"] {
            assert!(bad.parse::<FamilyId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn glynn_exponents() {
        assert_eq!(glynn_pi(3), Some(1));
        assert_eq!(glynn_pi(5), Some(4));
        assert_eq!(glynn_pi(7), Some(2));
        let f = |n| make_family("bin_glynn1".parse().unwrap(), &make_field(n, None).unwrap()).unwrap();
        assert_eq!(f(3).degree(), Some(6));
        assert_eq!(f(5).degree(), Some(24));
        assert_eq!(f(7).degree(), Some(20));
    }

    #[test]
    fn literal_examples() {
        let f16 = make_field(4, None).unwrap();
        let t = make_family("tri_I".parse().unwrap(), &f16).unwrap();
        assert_eq!(t.exponents(), vec![12, 11, 1]);
        let alpha = t.coeff(1);
        assert_eq!(f16.pow(alpha, 4) + alpha + Fe::ONE, Fe::ZERO);
        let f64 = make_field(6, None).unwrap();
        let t2 = make_family("tri_II".parse().unwrap(), &f64).unwrap();
        assert_eq!(t2.exponents(), vec![13, 8, 1]);
        let w = t2.coeff(1);
        assert_eq!(f64.square(w) + w + Fe::ONE, Fe::ZERO);
        let f8 = make_field(3, None).unwrap();
        assert_eq!(make_family("quad_01".parse().unwrap(), &f8).unwrap(), SparsePoly::from_exponents(&[6, 4, 2, 1]));
    }

    #[test]
    fn admissibility() {
        let f12 = make_field(12, None).unwrap();
        let err = make_family("quad_12".parse().unwrap(), &f12).unwrap_err();
        assert!(err.to_string().contains("m = 4"), "{err}");
        assert!(make_family("tri_II".parse().unwrap(), &make_field(8, None).unwrap()).is_err());
        assert!(make_family("quad_03".parse().unwrap(), &make_field(6, None).unwrap()).is_err());
        assert!(make_family("bin_even_inv".parse().unwrap(), &make_field(5, None).unwrap()).is_err());
        assert!(make_family("tri_I:99".parse().unwrap(), &make_field(4, None).unwrap()).is_err());
        assert_eq!(tri_i_roots(&make_field(6, None).unwrap()).unwrap().len(), 8);
    }
}
