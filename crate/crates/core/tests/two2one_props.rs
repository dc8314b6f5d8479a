use proptest::prelude::*;
use two2one_core::arith;
use two2one_core::two2one::{
    compose_monomial, frobenius_square, is_two_to_one, preimage_histogram, qm_canonical, qm_transform, shift_criterion,
};
use two2one_core::{make_field, Fe, FieldCtx, SparsePoly};

fn field(n: u32) -> FieldCtx {
    make_field(n, None).unwrap()
}

fn sparse(ctx: &FieldCtx, raw: &[(u64, u32)]) -> SparsePoly {
    let mask = (ctx.size() - 1) as u32;
    SparsePoly::from_terms(raw.iter().map(|&(e, c)| (e, Fe::from_bits(c & mask))))
}

fn unit(ctx: &FieldCtx, seed: u64) -> u64 {
    let units = arith::units(ctx.order());
    units[seed as usize % units.len()]
}

fn nonzero(ctx: &FieldCtx, seed: u32) -> Fe {
    Fe::from_bits(1 + seed % (ctx.size() as u32 - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shift_criterion_matches_fibers(n in 2u32..=8, raw in prop::collection::vec((1u64..300, any::<u32>()), 1..5)) {
        let ctx = field(n);
        let f = sparse(&ctx, &raw);
        let verdict = is_two_to_one(&ctx, &f).unwrap();
        prop_assert_eq!(verdict, shift_criterion(&ctx, &f).unwrap());
        let h = preimage_histogram(&ctx, &f).unwrap();
        prop_assert_eq!(verdict, h.nonempty().all(|(_, c)| c == 2));
        // half-size image is necessary only; fibers of 3 and 1 also give it
        if verdict {
            prop_assert_eq!(h.image_size(), ctx.size() / 2);
        }
        prop_assert_eq!(h.nonempty().map(|(_, c)| c as u64).sum::<u64>(), ctx.size());
    }

    // The same equivalence on polynomials biased toward 2-to-1 ones: x^k + a x.
    #[test]
    fn shift_criterion_on_o_like_binomials(n in 3u32..=8, k in 2u64..255, a in any::<u32>()) {
        let ctx = field(n);
        let f = SparsePoly::from_terms([(k, Fe::ONE), (1, nonzero(&ctx, a))]);
        prop_assert_eq!(is_two_to_one(&ctx, &f).unwrap(), shift_criterion(&ctx, &f).unwrap());
    }

    #[test]
    fn qm_transforms_preserve_verdict_and_class(
        n in 2u32..=6,
        raw in prop::collection::vec((1u64..100, any::<u32>()), 1..4),
        a in any::<u32>(), b in any::<u32>(), d in any::<u64>(),
    ) {
        let ctx = field(n);
        let f = sparse(&ctx, &raw);
        prop_assume!(!f.is_zero());
        let g = qm_transform(&ctx, &f, nonzero(&ctx, a), nonzero(&ctx, b), unit(&ctx, d));
        prop_assert_eq!(is_two_to_one(&ctx, &f).unwrap(), is_two_to_one(&ctx, &g).unwrap());
        prop_assert_eq!(qm_canonical(&ctx, &f), qm_canonical(&ctx, &g));
    }

    #[test]
    fn composition_with_permutation_monomial(
        n in 2u32..=8,
        raw in prop::collection::vec((1u64..300, any::<u32>()), 1..4),
        d in any::<u64>(),
    ) {
        let ctx = field(n);
        let g = sparse(&ctx, &raw);
        let composed = compose_monomial(&ctx, &g, unit(&ctx, d));
        prop_assert_eq!(is_two_to_one(&ctx, &g).unwrap(), is_two_to_one(&ctx, &composed).unwrap());
        // squaring afterwards is a bijection too
        prop_assert_eq!(is_two_to_one(&ctx, &g).unwrap(), is_two_to_one(&ctx, &frobenius_square(&ctx, &g)).unwrap());
    }
}
