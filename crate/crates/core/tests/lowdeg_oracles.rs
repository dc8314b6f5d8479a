use two2one_core::lowdeg::{quartic_pattern, quartic_pattern_any, roots_by_scan, FactorPattern};
use two2one_core::{make_field, DensePoly, Fe, FieldCtx};

// pattern of x^4 + a2 x^2 + a1 x + a0 from the root scan, then a search for a
// monic quadratic factor when there are no roots
fn oracle(ctx: &FieldCtx, a2: Fe, a1: Fe, a0: Fe) -> FactorPattern {
    let f = DensePoly::from_coeffs(vec![a0, a1, a2, Fe::ZERO, Fe::ONE]);
    match roots_by_scan(ctx, &f).unwrap().len() {
        4 => return FactorPattern::Q1111,
        2 => return FactorPattern::Q112,
        1 => return FactorPattern::Q13,
        0 => {}
        k => panic!("squarefree quartic with {k} roots"),
    }
    // no x^3 term forces (x^2 + s x + t)(x^2 + s x + t'): s (t + t') = a1,
    // t + t' + s^2 = a2, t t' = a0
    for s in ctx.nonzero() {
        let sigma = ctx.div(a1, s).unwrap();
        if sigma + ctx.square(s) != a2 {
            continue;
        }
        if ctx.elements().any(|t| ctx.mul(t, sigma + t) == a0) {
            return FactorPattern::Q22;
        }
    }
    FactorPattern::Q4
}

#[test]
fn quartic_criterion_matches_oracle() {
    for n in 2..=6 {
        let ctx = make_field(n, None).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for a2 in ctx.elements() {
            for a1 in ctx.nonzero() {
                for a0 in ctx.nonzero() {
                    let got = quartic_pattern(&ctx, a2, a1, a0).unwrap();
                    assert_eq!(got, oracle(&ctx, a2, a1, a0), "n={n} a2={a2} a1={a1} a0={a0}");
                    seen.insert(got);
                }
            }
        }
        if n >= 3 {
            assert_eq!(seen.len(), 5, "n={n} reaches every quartic pattern");
        }
    }
}

#[test]
fn pattern_semantics_match_root_count() {
    let ctx = make_field(5, None).unwrap();
    for a2 in ctx.elements().step_by(3) {
        for a1 in ctx.nonzero().step_by(2) {
            for a0 in ctx.nonzero() {
                let f = DensePoly::from_coeffs(vec![a0, a1, a2, Fe::ZERO, Fe::ONE]);
                let p = quartic_pattern(&ctx, a2, a1, a0).unwrap();
                assert_eq!(p.linear_factors(), roots_by_scan(&ctx, &f).unwrap().len());
            }
        }
    }
}

#[test]
fn degenerate_quartics_by_brute_force() {
    // compare against the product of all monic factor candidates of degree <= 2
    let ctx = make_field(3, None).unwrap();
    let mut irreducible_quadratics = Vec::new();
    for b in ctx.elements() {
        for c in ctx.elements() {
            let q = DensePoly::from_coeffs(vec![c, b, Fe::ONE]);
            if roots_by_scan(&ctx, &q).unwrap().is_empty() {
                irreducible_quadratics.push(q);
            }
        }
    }
    for a2 in ctx.elements() {
        for (a1, a0) in ctx.elements().flat_map(|a| [(a, Fe::ZERO), (Fe::ZERO, a)]) {
            let mut f = DensePoly::from_coeffs(vec![a0, a1, a2, Fe::ZERO, Fe::ONE]);
            let mut degrees = Vec::new();
            for r in ctx.elements() {
                while f.eval(&ctx, r).is_zero() {
                    f = f.div_exact(&ctx, &DensePoly::linear(r)).unwrap();
                    degrees.push(1);
                }
            }
            for q in &irreducible_quadratics {
                while f.degree().unwrap() >= 2 && f.rem(&ctx, q).unwrap().is_zero() {
                    f = f.div_exact(&ctx, q).unwrap();
                    degrees.push(2);
                }
            }
            match f.degree().unwrap() {
                0 => {}
                d => degrees.push(d as u32),
            }
            let want = FactorPattern::from_degrees(&degrees).unwrap();
            assert_eq!(quartic_pattern_any(&ctx, a2, a1, a0).unwrap(), want, "a2={a2} a1={a1} a0={a0}");
        }
    }
}

#[test]
fn exhaustive_lemma_checks() {
    use two2one_core::lowdeg::{check_lemma, Lemma};
    for lemma in Lemma::ALL {
        for n in 2..=lemma.max_n().min(6) {
            let ctx = make_field(n, None).unwrap();
            let c = check_lemma(&ctx, lemma).unwrap();
            assert!(c.passed(), "{lemma} n={n}: {:?}", c.first_mismatch);
        }
        assert_eq!(lemma.label().parse::<Lemma>().unwrap(), lemma);
    }
    let ctx = make_field(7, None).unwrap();
    assert!(check_lemma(&ctx, Lemma::Quartic).is_err());
    assert_eq!(check_lemma(&make_field(3, None).unwrap(), Lemma::Quadratic).unwrap().checked, 7 * 8);
}
