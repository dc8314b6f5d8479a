use std::collections::BTreeSet;

use two2one_core::search::tables::table_i_triples;
use two2one_core::search::{
    compare_with_table, count_curve_points, search, search_degree5, template_exponents, Dedupe, SearchOptions, Shape,
    TableId,
};
use two2one_core::two2one::family::quintic;
use two2one_core::two2one::{is_two_to_one, make_family, qm_canonical, qm_orbit};
use two2one_core::{make_field, Fe, FieldCtx, SparsePoly};

fn opts(dedupe: Dedupe) -> SearchOptions {
    SearchOptions { dedupe, ..Default::default() }
}

// Every template instance, checked one at a time through the histogram.
fn brute_force(ctx: &FieldCtx, shape: Shape) -> BTreeSet<SparsePoly> {
    let nonzero: Vec<Fe> = ctx.nonzero().collect();
    let elements: Vec<Fe> = ctx.elements().collect();
    let mut candidates = Vec::new();
    if shape == Shape::Degree5 {
        for &a3 in &elements {
            for &a2 in &elements {
                for &a1 in &elements {
                    candidates.push(quintic(a3, a2, a1));
                }
            }
        }
    }
    for exps in template_exponents(shape, ctx.size()) {
        if shape == Shape::Degree5 || exps.iter().all(|e| e.is_power_of_two()) {
            continue;
        }
        match shape {
            Shape::Binomial => {
                candidates.extend(nonzero.iter().map(|&a| SparsePoly::from_terms([(exps[0], Fe::ONE), (exps[1], a)])))
            }
            Shape::Trinomial => {
                for &b in &nonzero {
                    for &a in &nonzero {
                        candidates.push(SparsePoly::from_terms([(exps[0], Fe::ONE), (exps[1], b), (1, a)]));
                    }
                }
            }
            _ => candidates.push(SparsePoly::from_exponents(&exps)),
        }
    }
    candidates
        .into_iter()
        .filter(|f| is_two_to_one(ctx, f).unwrap())
        .filter(|f| shape == Shape::Degree5 || !qm_orbit(ctx, f).iter().any(|g| g.is_linearized()))
        .collect()
}

fn in_template(ctx: &FieldCtx, shape: Shape, f: &SparsePoly) -> bool {
    if f.leading_coeff() != Fe::ONE {
        return false;
    }
    let exps = f.exponents();
    match shape {
        Shape::Degree5 => false,
        _ => {
            !f.is_linearized()
                && template_exponents(shape, ctx.size()).contains(&exps)
                && (shape != Shape::Quadrinomial || f.terms().iter().all(|t| t.coeff == Fe::ONE))
        }
    }
}

#[test]
fn unpruned_search_equals_brute_force() {
    for n in 2..=4 {
        let ctx = make_field(n, None).unwrap();
        for shape in Shape::ALL {
            let report = search(&ctx, shape, opts(Dedupe::None)).unwrap();
            let found: BTreeSet<SparsePoly> = report.polys().cloned().collect();
            assert_eq!(found.len(), report.hits.len(), "{shape} n={n}: duplicate hits");
            assert_eq!(found, brute_force(&ctx, shape), "{shape} n={n}");
        }
    }
}

#[test]
fn pruned_classes_expand_to_unpruned_hits() {
    for n in 2..=4 {
        let ctx = make_field(n, None).unwrap();
        for shape in Shape::ALL {
            let pruned = search(&ctx, shape, opts(Dedupe::Qm)).unwrap();
            let full = search(&ctx, shape, opts(Dedupe::None)).unwrap();
            let classes: BTreeSet<SparsePoly> = full.polys().map(|f| qm_canonical(&ctx, f)).collect();
            assert_eq!(classes, pruned.polys().cloned().collect(), "{shape} n={n}");
            for h in &pruned.hits {
                assert_eq!(h.orbit_size, qm_orbit(&ctx, &h.poly).len() as u64);
            }
            // exponents reduce mod 2^n - 1, so x^5 leaves the template over GF(4)
            if shape == Shape::Degree5 {
                continue;
            }
            let expanded: BTreeSet<SparsePoly> =
                pruned.polys().flat_map(|c| qm_orbit(&ctx, c)).filter(|f| in_template(&ctx, shape, f)).collect();
            let hits: BTreeSet<SparsePoly> = full.polys().cloned().collect();
            assert_eq!(expanded, hits, "{shape} n={n}");
        }
    }
}

#[test]
fn pruned_hits_are_sound_up_to_gf64() {
    for n in 5..=6 {
        let ctx = make_field(n, None).unwrap();
        for shape in [Shape::Binomial, Shape::Trinomial, Shape::Quadrinomial] {
            let report = search(&ctx, shape, opts(Dedupe::Qm)).unwrap();
            let classes: BTreeSet<&SparsePoly> = report.polys().collect();
            assert_eq!(classes.len(), report.hits.len());
            for f in report.polys() {
                assert!(is_two_to_one(&ctx, f).unwrap(), "{shape} n={n}: {f}");
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let ctx = make_field(5, None).unwrap();
    let run = |threads: usize, shape: Shape| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| search(&ctx, shape, opts(Dedupe::Qm)).unwrap().without_timing().to_json())
    };
    for shape in [Shape::Binomial, Shape::Quadrinomial] {
        let one = run(1, shape);
        assert_eq!(one, run(3, shape));
        assert_eq!(one, run(8, shape));
    }
}

#[test]
fn report_json_round_trip() {
    let ctx = make_field(4, None).unwrap();
    let report = search(&ctx, Shape::Trinomial, opts(Dedupe::Qm)).unwrap();
    let back = two2one_core::search::SearchReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn table_i_and_injected_fault() {
    let ctx = make_field(3, None).unwrap();
    let mut report = search_degree5(&ctx).unwrap();
    assert_eq!(report.hits.len(), 35);
    let diff = compare_with_table(&report, TableId::I).unwrap();
    assert!(diff.is_empty(), "{diff}");
    assert!(diff.notes.iter().any(|n| n.contains("row 18")), "{diff}");

    let removed = report.hits.remove(0).poly;
    let diff = compare_with_table(&report, TableId::I).unwrap();
    assert!(!diff.is_empty());
    assert!(diff.missing.iter().any(|m| m.contains(&removed.to_string())), "{diff}");

    let binomials = search(&ctx, Shape::Binomial, opts(Dedupe::Qm)).unwrap();
    assert!(compare_with_table(&binomials, TableId::I).is_err());
}

#[test]
fn table_ii_and_injected_fault() {
    for n in 3..=6 {
        let ctx = make_field(n, None).unwrap();
        let report = search(&ctx, Shape::Trinomial, opts(Dedupe::Qm)).unwrap();
        let diff = compare_with_table(&report, TableId::II).unwrap();
        assert!(diff.is_empty(), "{diff}");
    }
    let ctx = make_field(6, None).unwrap();
    let mut report = search(&ctx, Shape::Trinomial, opts(Dedupe::Qm)).unwrap();
    assert_eq!(report.hits.len(), 6);
    let removed = report.hits.pop().unwrap().poly;
    let diff = compare_with_table(&report, TableId::II).unwrap();
    assert_eq!(diff.missing, vec![removed.to_string()]);
    // the same comparison from an unpruned run
    let full = search(&ctx, Shape::Trinomial, opts(Dedupe::None)).unwrap();
    assert!(compare_with_table(&full, TableId::II).unwrap().is_empty());
}

#[test]
fn table_iii_and_injected_fault() {
    for n in 3..=5 {
        let ctx = make_field(n, None).unwrap();
        let report = search(&ctx, Shape::Quadrinomial, opts(Dedupe::Qm)).unwrap();
        let diff = compare_with_table(&report, TableId::III).unwrap();
        assert!(diff.is_empty(), "{diff}");
    }
    let ctx = make_field(5, None).unwrap();
    let mut report = search(&ctx, Shape::Quadrinomial, opts(Dedupe::Qm)).unwrap();
    let row1 = make_family("quad_01".parse().unwrap(), &ctx).unwrap();
    let class = qm_canonical(&ctx, &row1);
    report.hits.retain(|h| h.poly != class);
    let diff = compare_with_table(&report, TableId::III).unwrap();
    assert!(diff.missing.iter().any(|m| m.starts_with("row 1:")), "{diff}");
}

#[test]
fn curve_counts_for_table_i() {
    let ctx = make_field(3, None).unwrap();
    for (row, [a3, a2, a1]) in table_i_triples(&ctx, ctx.generator()).unwrap() {
        let c = count_curve_points(&ctx, a3, a2, a1).unwrap();
        assert!(c.consistent(), "row {row}: {c:?}");
        assert!(c.meets_lower_bound(), "row {row}: {c:?}");
        assert_eq!(c.lower_bound, -2);
    }
    for n in [4, 5] {
        let ctx = make_field(n, None).unwrap();
        for (a3, a2, a1) in [(Fe::ZERO, Fe::ZERO, Fe::ONE), (Fe::ONE, ctx.generator(), Fe::ZERO)] {
            assert!(count_curve_points(&ctx, a3, a2, a1).unwrap().consistent());
        }
    }
}
