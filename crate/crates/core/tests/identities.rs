use two2one_core::make_field;
use two2one_core::two2one::identities::verify_resultant_identity;

#[test]
fn all_six_eliminants_for_odd_n() {
    for n in [3u32, 5, 7, 9] {
        let ctx = make_field(n, None).unwrap();
        for t in 1..=6 {
            let check = verify_resultant_identity(t, &ctx).unwrap();
            assert!(check.passed(), "theorem {t} n={n}: {:?}", check.first_failure);
            assert_eq!(check.checked, (1 << n) - 2);
        }
    }
}

#[test]
fn even_n_and_unknown_ids_are_rejected() {
    let ctx = make_field(4, None).unwrap();
    assert!(verify_resultant_identity(1, &ctx).is_err());
    let ctx = make_field(5, None).unwrap();
    assert!(verify_resultant_identity(7, &ctx).is_err());
}
