use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::Result;
use crate::gf2n::FieldCtx;
use crate::polyring::SparsePoly;
use crate::two2one::{make_family, o_orbit, qm_canonical, FamilyId, FamilyKind};

/// A binomial `x^m + x` QM-equivalent to a found one, with `m` in the o-orbit
/// of a family exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialExplanation {
    /// A family id, or `translation` for `x^{2^i}` with `gcd(i, n) = 1`.
    pub family: String,
    pub family_exponent: u64,
    pub member: u64,
    /// False for the translation exponents, which the four listed odd-`n`
    /// families do not cover.
    pub listed: bool,
}

fn listed_exponents(ctx: &FieldCtx) -> Result<Vec<(String, u64)>> {
    use FamilyKind::*;
    let kinds: &[FamilyKind] =
        if ctx.n() % 2 == 1 { &[BinSinger, BinSegre, BinGlynn1, BinGlynn2] } else { &[BinEvenInv] };
    kinds
        .iter()
        .map(|&kind| {
            let id = FamilyId::new(kind);
            let k = make_family(id, ctx)?.degree().expect("nonzero") % ctx.order();
            Ok((id.to_string(), k))
        })
        .collect()
}

/// Exponents `2^i`, `1 < i < n - 1`, `gcd(i, n) = 1`.
pub fn translation_exponents(n: u32) -> Vec<u64> {
    (2..n.saturating_sub(1)).filter(|&i| arith::gcd(i as u64, n as u64) == 1).map(|i| 1u64 << i).collect()
}

/// Finds the family explaining `f`: the Singer, Segre and Glynn exponents for
/// odd `n` and `2^n - 2` for even `n`, then the translation exponents.
pub fn explain_binomial(ctx: &FieldCtx, f: &SparsePoly) -> Result<Option<BinomialExplanation>> {
    let target = qm_canonical(ctx, f);
    let mut families: Vec<(String, u64, bool)> =
        listed_exponents(ctx)?.into_iter().map(|(name, k)| (name, k, true)).collect();
    families.extend(translation_exponents(ctx.n()).into_iter().map(|k| ("translation".to_string(), k, false)));
    for (family, k, listed) in families {
        let Ok(orbit) = o_orbit(k, ctx.n()) else { continue };
        for member in orbit {
            if qm_canonical(ctx, &SparsePoly::from_exponents(&[member, 1])) == target {
                return Ok(Some(BinomialExplanation { family, family_exponent: k, member, listed }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::{make_field, Fe};

    #[test]
    fn known_binomials_are_explained() {
        let ctx = make_field(5, None).unwrap();
        let singer = explain_binomial(&ctx, &SparsePoly::from_exponents(&[30, 1])).unwrap().unwrap();
        assert_eq!(singer.family, "bin_singer");
        let g = ctx.generator();
        let segre = SparsePoly::from_terms([(6, g), (1, Fe::ONE)]);
        assert_eq!(explain_binomial(&ctx, &segre).unwrap().unwrap().family, "bin_segre");
        let ctx = make_field(4, None).unwrap();
        assert_eq!(explain_binomial(&ctx, &SparsePoly::from_exponents(&[14, 1])).unwrap().unwrap().member, 14);
        assert!(explain_binomial(&ctx, &SparsePoly::from_exponents(&[3, 1])).unwrap().is_none());
    }

    #[test]
    fn translation_orbit_over_gf128() {
        assert_eq!(translation_exponents(7), vec![4, 8, 16, 32]);
        assert!(translation_exponents(6).is_empty());
        let ctx = make_field(7, None).unwrap();
        let e = explain_binomial(&ctx, &SparsePoly::from_exponents(&[4, 3])).unwrap().unwrap();
        assert_eq!((e.family.as_str(), e.listed), ("translation", false));
    }
}
