use super::*;
use crate::fpgroups::{catalog, coxeter_quotient};
use crate::matgroup::build_catalog_group;
use proptest::prelude::*;

const BUDGET: usize = 10_000;

fn map(p: &RamificationProfile) -> Vec<(String, Vec<(usize, usize)>)> {
    p.as_map().into_iter().map(|(k, v)| (k, v.into_iter().collect())).collect()
}

#[test]
fn g4_braid_loop_profile() {
    let c = braid_loop_images("G4_paper").unwrap().build(BUDGET).unwrap();
    assert_eq!(c.degree(), 24);
    assert_eq!(c.orders, [3, 3, 6]);
    assert!(c.is_transitive());
    let p = monodromy_profile(&c).unwrap();
    assert_eq!(p.summary(), "{0: 8x3, 1: 8x3, inf: 4x6}");
    assert_eq!(p, order_profile(&c).unwrap());
    // 2 - 2g = 48 - (16 + 16 + 20)
    assert_eq!(p.genus, Some(3));
}

#[test]
fn s3_regular_cover_is_rational() {
    let spec: CoverSpec = serde_json::from_str(
        r#"{"group": {"kind": "catalog", "name": "S3"}, "fiber": "regular", "x": "s1", "y": "s2"}"#,
    )
    .unwrap();
    let c = spec.build(BUDGET).unwrap();
    let p = monodromy_profile(&c).unwrap();
    assert_eq!(map(&p), vec![
        ("0".into(), vec![(2, 3)]),
        ("1".into(), vec![(2, 3)]),
        ("inf".into(), vec![(3, 2)]),
    ]);
    assert_eq!(p.genus, Some(0));
}

#[test]
fn quotient_cover_agrees_with_matrix_cover() {
    // G4 = Br3 / (s^3): x = s1^2, y = s2^2 in both models
    let q = coxeter_quotient(3, 3, 100_000).unwrap();
    let br3 = catalog::braid_group(3).unwrap();
    let c = Cover::regular_quotient(&q, &br3.parse_word("s1^2").unwrap(), &br3.parse_word("s2^2").unwrap());
    let m = braid_loop_images("G4_paper").unwrap().build(BUDGET).unwrap();
    assert_eq!(monodromy_profile(&c).unwrap(), monodromy_profile(&m).unwrap());
}

#[test]
fn coset_cover_of_s3() {
    // S3 acting on cosets of ⟨s1⟩: the natural degree-3 action
    let g = build_catalog_group("S3", BUDGET).unwrap();
    let alpha = matrix_alphabet(&g);
    let s1 = element_of(&g, &alpha.parse("s1").unwrap()).unwrap();
    let s2 = element_of(&g, &alpha.parse("s2").unwrap()).unwrap();
    let c = Cover::coset_matrix(&g, &[s1], s1, s2);
    assert_eq!(c.degree(), 3);
    assert!(!c.regular);
    let p = monodromy_profile(&c).unwrap();
    assert_eq!(p.summary(), "{0: 1x1 + 1x2, 1: 1x1 + 1x2, inf: 1x3}");
    assert_eq!(p.genus, Some(0));
    assert!(order_profile(&c).is_err());
}

#[test]
fn genus_rejects_impossible_profiles() {
    let pt = |l: &str, len, count| BranchPoint { label: l.into(), cycles: vec![CycleClass { length: len, count }] };
    let odd = RamificationProfile::new(2, vec![pt("0", 2, 1), pt("1", 1, 2), pt("inf", 1, 2)]).unwrap();
    assert!(riemann_hurwitz_genus(&odd).is_err());
    let neg = RamificationProfile::new(2, vec![pt("0", 1, 2), pt("1", 1, 2), pt("inf", 1, 2)]).unwrap();
    assert!(riemann_hurwitz_genus(&neg).is_err());
    assert!(RamificationProfile::new(3, vec![pt("0", 2, 1)]).is_err());
}

#[test]
fn from_permutations_validates() {
    assert!(Cover::from_permutations("bad", vec![0, 0], vec![0, 1]).is_err());
    let c = Cover::from_permutations("c", vec![1, 2, 0], vec![1, 0, 2]).unwrap();
    assert!(c.product_is_identity());
    assert_eq!(c.orders, [3, 2, 2]);
}

#[test]
fn profile_json_roundtrip() {
    let c = braid_loop_images("G4_paper").unwrap().build(BUDGET).unwrap();
    let p = monodromy_profile(&c).unwrap();
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<RamificationProfile>(&s).unwrap(), p);
    let spec = serde_json::to_string(&braid_loop_images("G4_paper").unwrap()).unwrap();
    assert!(serde_json::from_str::<CoverSpec>(&spec).is_ok());
    assert!(braid_loop_images("nope").is_err());
}

fn perm6() -> impl Strategy<Value = Vec<usize>> {
    Just((0..6).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn profile_invariant_under_simultaneous_conjugation(
        x in perm6(), y in perm6(), s in perm6(),
    ) {
        let conj = |p: &[usize]| { let si = invert(&s); compose(&s, &compose(p, &si)) };
        let a = Cover::from_permutations("a", x.clone(), y.clone()).unwrap();
        let b = Cover::from_permutations("b", conj(&x), conj(&y)).unwrap();
        let pa = monodromy_profile(&a).unwrap();
        prop_assert_eq!(&pa, &monodromy_profile(&b).unwrap());
        prop_assert_eq!(pa.points.iter().map(|p| p.total()).collect::<Vec<_>>(), vec![6, 6, 6]);
    }
}

#[test]
fn trivial_cover_has_genus_zero() {
    let c = Cover::from_permutations("trivial", vec![0], vec![0]).unwrap();
    let p = monodromy_profile(&c).unwrap();
    assert!(p.points.iter().all(|b| b.ramification() == 0));
    assert_eq!(p.genus, Some(0));
}
