use braidwork_core::arrangement::{arrangement_of, is_supersolvable, supersolvable_all_chains};
use braidwork_core::fpgroups::catalog::braid_group;
use braidwork_core::fpgroups::quotient::{coxeter_quotient, torsion_quotient};
use braidwork_core::fpgroups::word::{letter, Word};
use braidwork_core::garside::{CoxeterType, Garside};
use braidwork_core::gtaction::{drinfeld_images, GTPair};
use braidwork_core::invariants::molien_degrees;
use braidwork_core::matgroup::build_catalog_group;
use braidwork_core::monodromy::{monodromy_profile, riemann_hurwitz_genus, Cover};
use proptest::prelude::*;

const LIMIT: usize = 100_000;

#[test]
fn g4_three_ways() {
    let g = build_catalog_group("G4", LIMIT).unwrap();
    let q = torsion_quotient(&braid_group(3).unwrap(), &[3, 3], LIMIT).unwrap();
    let degrees = molien_degrees(&g).unwrap();
    assert_eq!(degrees, [4, 6]);
    assert_eq!(g.order(), q.order());
    assert_eq!(degrees.iter().product::<u32>() as usize, g.order());
}

#[test]
fn quotient_cover_genus_matches_matrix_cover() {
    let q = torsion_quotient(&braid_group(3).unwrap(), &[3, 3], LIMIT).unwrap();
    let x = Word::new([letter(0, false), letter(0, false)]);
    let y = Word::new([letter(1, false), letter(1, false)]);
    let cover = Cover::regular_quotient(&q, &x, &y);
    let profile = monodromy_profile(&cover).unwrap();
    assert_eq!(profile.summary(), "{0: 8x3, 1: 8x3, inf: 4x6}");
    assert_eq!(riemann_hurwitz_genus(&profile).unwrap(), 3);
}

#[test]
fn rank_two_arrangements_are_supersolvable() {
    for name in ["G4", "S3"] {
        let g = build_catalog_group(name, LIMIT).unwrap();
        let a = arrangement_of(&g);
        assert!(is_supersolvable(&a, LIMIT).unwrap().supersolvable, "{name}");
        assert!(supersolvable_all_chains(&a, LIMIT).unwrap(), "{name}");
    }
}

#[test]
fn trivial_gt_pair_fixes_generators() {
    let p = GTPair::new(1, Word::empty()).unwrap();
    for n in 2..=5 {
        let images = drinfeld_images(n, &p).unwrap();
        let expected: Vec<Word> = (0..n - 1).map(Word::gen).collect();
        assert_eq!(images, expected);
    }
}

fn words(ngens: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens, any::<bool>()), 0..max)
        .prop_map(|ls| Word::new(ls.into_iter().map(|(g, inv)| letter(g, inv))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn garside_equality_survives_in_the_quotient(u in words(3, 10), v in words(3, 10)) {
        let gs = Garside::new(CoxeterType::A(3)).unwrap();
        let q = coxeter_quotient(4, 3, LIMIT).unwrap();
        let uv = Word::new(u.letters().iter().chain(v.letters()).copied());
        let vu = Word::new(v.letters().iter().chain(u.letters()).copied());
        if gs.equal(&uv, &vu).unwrap() {
            prop_assert!(q.equal(&uv, &vu));
        }
        let round = Word::new(u.letters().iter().chain(u.inverse().letters()).copied());
        prop_assert!(gs.equal(&round, &Word::empty()).unwrap());
        prop_assert!(q.is_identity(&round));
    }
}
