use proptest::prelude::*;

use super::catalog::{self, presentation};
use super::*;
use crate::matgroup::{build_catalog_group, build_monomial_group};

const LIMIT: usize = 200_000;

fn br(n: usize) -> Presentation {
    catalog::braid_group(n).unwrap()
}

/// Coxeter's order formula for `Br_n / (s_i^k)`.
fn coxeter_order(n: u64, k: u64) -> u64 {
    // 1/n + 1/k - 1/2 = (2k + 2n - nk) / (2nk)
    let den = 2 * k + 2 * n - n * k;
    assert!(den > 0 && (2 * k) % den == 0, "infinite or non-integral");
    let f = 2 * k / den;
    f.pow(n as u32 - 1) * (1..=n).product::<u64>()
}

#[test]
fn parse_examples() {
    let p = br(3);
    assert!(p.parse_word("s1 s1^-1").unwrap().is_empty());
    let f2 = Alphabet::new(&["x", "y"]).unwrap();
    assert_eq!(f2.parse("[x,y]").unwrap(), f2.parse("x y x^-1 y^-1").unwrap());
    let g12 = catalog::g12();
    let a = g12.parse_word("stus").unwrap();
    let b = g12.parse_word("tust").unwrap();
    assert_eq!((a.len(), b.len()), (4, 4));
    assert_ne!(a, b);
    assert!(matches!(p.parse_word("s1 q"), Err(crate::error::Error::UnknownSymbol(_)) | Err(crate::error::Error::Parse(_))));
    assert!(p.parse_word("s1^x").is_err());
}

#[test]
fn uppercase_inverse_sugar() {
    let p = Presentation::parse("s3", &["s", "t"], &["s t s T S T"]).unwrap();
    let q = Presentation::parse("s3", &["s", "t"], &["s t s = t s t"]).unwrap();
    assert_eq!(p.relators(), q.relators());
}

#[test]
fn catalog_entries_parse() {
    for name in ["Br2", "Br5", "ArtB3", "ArtD4", "ArtD5", "I2(5)", "I2(6)", "G12", "G13", "CP(3,3)", "CP(3,4)", "CP(3,4,nocomm)", "Z/4"] {
        presentation(name).unwrap();
    }
    assert!(presentation("Br").is_err());
    assert!(presentation("H7").is_err());
    for name in ["g12-conjugation", "g13-conjugation", "i26-to-g13", "i26-transported-conjugation", "cp-conjugation(3,4)", "artb3-to-br", "artb3-to-z4"] {
        catalog::catalog_map(name).unwrap();
    }
}

#[test]
fn todd_coxeter_examples() {
    let p = br(4);
    let sub: Vec<Word> = ["s1^2", "s2", "s3"].iter().map(|t| p.parse_word(t).unwrap()).collect();
    let t = todd_coxeter(&p, &sub, LIMIT);
    assert!(t.is_complete());
    assert_eq!(t.index(), 4);

    let s3 = Presentation::parse("S3", &["a", "b"], &["a^2", "b^2", "(a b)^3"]).unwrap();
    let t = todd_coxeter(&s3, &[Word::gen(0)], LIMIT);
    assert_eq!(t.index(), 3);

    let t = todd_coxeter(&br(3), &[Word::gen(0), Word::gen(1)], LIMIT);
    assert_eq!(t.index(), 1);
}

#[test]
fn todd_coxeter_budget_is_a_status() {
    let t = todd_coxeter(&br(3), &[], 1000);
    assert_eq!(t.status(), EnumerationStatus::BudgetExceeded);
    assert!(PermQuotient::enumerate(&br(3), 1000).is_err());
}

#[test]
fn braid_index_of_b_type_subgroup() {
    for n in 2..=5 {
        let p = br(n + 1);
        let mut sub = vec![p.parse_word("s1^2").unwrap()];
        sub.extend((1..n).map(Word::gen));
        assert_eq!(todd_coxeter(&p, &sub, LIMIT).index(), n + 1);
    }
}

#[test]
fn coxeter_quotients_match_coxeter_formula() {
    for (n, k) in [(3, 2), (3, 3), (3, 4), (3, 5), (4, 3)] {
        let q = coxeter_quotient(n, k, LIMIT).unwrap();
        assert_eq!(q.order() as u64, coxeter_order(n as u64, k as u64), "({n},{k})");
    }
}

#[test]
fn coxeter_quotient_3_3_is_g4() {
    let q = coxeter_quotient(3, 3, LIMIT).unwrap();
    let g4 = build_catalog_group("G4", 1000).unwrap();
    assert_eq!(q.order(), g4.order());
    // the matrix generators satisfy the relators, so G4 is a quotient of equal order
    let gens = g4.generators();
    let s1 = &gens[0];
    let s2 = &gens[1];
    assert_eq!(&(s1 * s2) * s1, &(s2 * s1) * s2);
    assert!(s1.pow(3).unwrap().is_identity());
}

#[test]
fn torsion_quotients_of_catalog_groups() {
    assert_eq!(torsion_quotient(&catalog::g12(), &[2, 2, 2], LIMIT).unwrap().order(), 48);
    assert_eq!(torsion_quotient(&catalog::g13(), &[2, 2, 2], LIMIT).unwrap().order(), 96);
    assert_eq!(torsion_quotient(&catalog::artin_i2(6).unwrap(), &[2, 2], LIMIT).unwrap().order(), 12);
}

#[test]
fn braid_torsion_2_is_symmetric() {
    for n in 2..=5 {
        let p = br(n);
        let q = torsion_quotient(&p, &vec![2; p.ngens()], LIMIT).unwrap();
        assert_eq!(q.order(), (1..=n).product::<usize>());
    }
}

#[test]
fn corran_picantin_torsion_matches_monomial_group() {
    for (e, n) in [(2, 3), (3, 3), (4, 3), (3, 4), (2, 4)] {
        let p = catalog::corran_picantin(e, n, true).unwrap();
        let q = torsion_quotient(&p, &vec![2; p.ngens()], LIMIT).unwrap();
        let g = build_monomial_group(e as u32, e as u32, n as u32, 100_000).unwrap();
        assert_eq!(q.order(), g.order(), "G({e},{e},{n})");
    }
}

#[test]
fn artin_b_and_d_coxeter_orders() {
    let b3 = catalog::artin_b(3).unwrap();
    assert_eq!(torsion_quotient(&b3, &[2, 2, 2], LIMIT).unwrap().order(), 48);
    let d4 = catalog::artin_d(4).unwrap();
    assert_eq!(torsion_quotient(&d4, &[2; 4], LIMIT).unwrap().order(), 192);
}

#[test]
fn verify_hom_examples() {
    let m = catalog::g12_conjugation();
    let h = GroupHom::from(&m);
    let w = torsion_quotient(&m.target, &[2, 2, 2], LIMIT).unwrap();
    let v = verify_hom(&h, &[&w]).unwrap();
    assert!(v.is_consistent() && !v.is_proof());

    let m = catalog::i26_to_g13();
    let w = torsion_quotient(&m.target, &[2, 2, 2], LIMIT).unwrap();
    assert!(verify_hom(&GroupHom::from(&m), &[&w]).unwrap().is_consistent());

    let p = br(3);
    let bogus = GroupHom::new(p.clone(), p.clone(), vec![Word::gen(0), Word::gen(0)]).unwrap();
    let s3 = torsion_quotient(&p, &[2, 2], LIMIT).unwrap();
    // s1, s2 -> s1 sends the braid relator to s1^3 s1^-3, so it is a homomorphism
    assert!(verify_hom(&bogus, &[&s3]).unwrap().is_consistent());
    let bogus = GroupHom::new(p.clone(), p.clone(), vec![Word::gen(0), Word::gen(0).pow(2)]).unwrap();
    assert!(matches!(verify_hom(&bogus, &[&s3]).unwrap(), HomVerdict::Falsified { .. }));
}

#[test]
fn verify_hom_rejects_alphabet_mismatch() {
    let p = br(3);
    assert!(GroupHom::new(p.clone(), p.clone(), vec![Word::gen(2), Word::gen(0)]).is_err());
    let s4 = torsion_quotient(&br(4), &[2, 2, 2], LIMIT).unwrap();
    let id = GroupHom::new(p.clone(), p, vec![Word::gen(0), Word::gen(1)]).unwrap();
    assert!(verify_hom(&id, &[&s4]).is_err());
}

#[test]
fn catalog_automorphisms_are_bijective_on_w_quotients() {
    for m in [
        catalog::g12_conjugation(),
        catalog::g13_conjugation(),
        catalog::i26_transported_conjugation(),
        catalog::cp_conjugation(3, 3, true).unwrap(),
        catalog::cp_conjugation(3, 4, true).unwrap(),
    ] {
        let w = torsion_quotient(&m.source, &vec![2; m.source.ngens()], LIMIT).unwrap();
        let h = GroupHom::from(&m);
        assert!(verify_hom(&h, &[&w]).unwrap().is_consistent(), "{}", m.name);
        let map = induced_map(&w, &w, &h.images).unwrap().unwrap();
        assert!(is_bijective(&map, w.order()), "{}", m.name);
    }
}

#[test]
fn transported_conjugation_composes_on_order_96_quotient() {
    let iso = GroupHom::from(&catalog::i26_to_g13());
    let conj = GroupHom::from(&catalog::g13_conjugation());
    let transported = GroupHom::from(&catalog::i26_transported_conjugation());
    let w = torsion_quotient(&catalog::g13(), &[2, 2, 2], LIMIT).unwrap();
    let lhs = conj.compose_after(&iso).unwrap();
    let rhs = iso.compose_after(&transported).unwrap();
    for (a, b) in lhs.images.iter().zip(&rhs.images) {
        assert!(w.equal(a, b));
    }
}

#[test]
fn artin_b_maps() {
    let m = catalog::artb_to_braid(3).unwrap();
    let w = torsion_quotient(&m.target, &[3, 3, 3], LIMIT).unwrap();
    assert!(verify_hom(&GroupHom::from(&m), &[&w]).unwrap().is_consistent());
    let m = catalog::artb_to_cyclic(3, 4).unwrap();
    let z = PermQuotient::enumerate(&m.target, LIMIT).unwrap();
    assert_eq!(z.order(), 4);
    assert!(verify_hom(&GroupHom::from(&m), &[&z]).unwrap().is_consistent());
}

#[test]
fn perm_rep_backend() {
    let p = br(3);
    let rep = PermRep::new("S3", vec![vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
    let id = GroupHom::new(p.clone(), p.clone(), vec![Word::gen(0), Word::gen(1)]).unwrap();
    assert!(verify_hom(&id, &[&rep]).unwrap().is_consistent());
    let bad = PermRep::new("bad", vec![vec![1, 0, 2], vec![1, 0, 2]]).unwrap();
    let swap = GroupHom::new(p.clone(), p, vec![Word::gen(0), Word::gen(0).pow(2)]).unwrap();
    assert!(!verify_hom(&swap, &[&bad]).unwrap().is_consistent());
    assert!(PermRep::new("x", vec![vec![0, 0]]).is_err());
}

#[test]
fn backend_specs_parse() {
    assert_eq!("torsion:2".parse::<BackendSpec>().unwrap(), BackendSpec::Torsion(vec![2]));
    assert_eq!("coxeter:3,3".parse::<BackendSpec>().unwrap(), BackendSpec::Coxeter { n: 3, k: 3 });
    assert_eq!("garside:D4".parse::<BackendSpec>().unwrap(), BackendSpec::Garside("D4".into()));
    assert_eq!("table:t.json".parse::<BackendSpec>().unwrap(), BackendSpec::Table("t.json".into()));
    assert!("coxeter:3".parse::<BackendSpec>().is_err());
    assert!("nope".parse::<BackendSpec>().is_err());
    let b = BackendSpec::Coxeter { n: 3, k: 3 }.build_finite(&br(3), LIMIT).unwrap();
    assert!(!b.exact());
    assert!(BackendSpec::Coxeter { n: 3, k: 3 }.build_finite(&br(4), LIMIT).is_err());
}

#[test]
fn schreier_examples() {
    let p = br(4);
    let sub: Vec<Word> = ["s1^2", "s2", "s3"].iter().map(|t| p.parse_word(t).unwrap()).collect();
    let t = todd_coxeter(&p, &sub, LIMIT);
    let s = schreier_rewrite(&t, &p.parse_word("s1^2").unwrap()).unwrap().unwrap();
    assert_eq!(s.len(), 1);
    assert!(schreier_rewrite(&t, &Word::gen(0)).unwrap().is_none());
    let sys = SchreierSystem::new(&t).unwrap();
    // Schreier index formula: (n - 1) * index + 1 free generators
    assert_eq!(sys.rank(), 2 * 4 + 1);
}

#[test]
fn pure_braid_abelianization_rank() {
    for n in 3..=4 {
        let p = br(n);
        let w = torsion_quotient(&p, &vec![2; p.ngens()], LIMIT).unwrap();
        let sys = SchreierSystem::new(w.table()).unwrap();
        let k = sys.rank();
        let rels: Vec<Vec<i64>> = sys.subgroup_relators(&p).iter().map(|r| r.exponent_sums(k)).collect();
        let lat = IntLattice::new(&rels, k);
        assert_eq!(lat.quotient_free_rank(), n * (n - 1) / 2);
        assert!(lat.pivot_entries().iter().all(|x| x == &1.into()));
    }
}

#[test]
fn derived_membership_in_pure_braid_group() {
    let p = br(3);
    let w = torsion_quotient(&p, &[2, 2], LIMIT).unwrap();
    let s1sq = p.parse_word("s1^2").unwrap();
    let d = derived_membership(&p, w.table(), &s1sq).unwrap();
    assert!(d.in_subgroup && !d.trivial_in_abelianization);
    let c = p.parse_word("[s1^2, s2^2]").unwrap();
    let d = derived_membership(&p, w.table(), &c).unwrap();
    assert!(d.in_subgroup && d.trivial_in_abelianization);
    let d = derived_membership(&p, w.table(), &Word::gen(0)).unwrap();
    assert!(!d.in_subgroup);
}

#[test]
fn exponent_sums_and_derived_f2() {
    assert_eq!(exponent_sum(&catalog::omega4()), 12);
    let f2 = Alphabet::new(&["x", "y"]).unwrap();
    assert_eq!(exponent_sum(&f2.parse("[x^3, y y x]").unwrap()), 0);
    assert_eq!(exponent_sum(&br(3).parse_word("s1^3").unwrap()), 3);
    assert!(is_in_derived_f2(&parse_f2("[x,y]").unwrap()).unwrap());
    assert!(!is_in_derived_f2(&parse_f2("x y").unwrap()).unwrap());
    assert!(is_in_derived_f2(&parse_f2("[x^2, y] [y,x]^3").unwrap()).unwrap());
    assert!(is_in_derived_f2(&Word::gen(2)).is_err());
}

#[test]
fn element_orders_in_quotient() {
    let q = coxeter_quotient(3, 3, LIMIT).unwrap();
    let p = q.presentation();
    assert_eq!(q.element_order(&p.parse_word("s1").unwrap()), 3);
    // the full twist of Br3 generates the centre, of order 2 in G4
    assert_eq!(q.element_order(&p.parse_word("(s1 s2)^3").unwrap()), 2);
}

#[test]
fn presentation_json_round_trip() {
    let p = catalog::g12();
    let text = serde_json::to_string(&p).unwrap();
    let q: Presentation = serde_json::from_str(&text).unwrap();
    assert_eq!(p.relators(), q.relators());
    let r: Presentation = serde_json::from_str(r#"{"generators":["s","t"],"relators":["s t s T S T"]}"#).unwrap();
    assert_eq!(r.relators().len(), 1);
    assert!(serde_json::from_str::<Presentation>(r#"{"generators":["s"],"relators":["t"]}"#).is_err());
}

fn small_presentations() -> Vec<Presentation> {
    vec![
        br(3).with_torsion(&[3, 3]).unwrap(),
        br(4).with_torsion(&[2, 2, 2]).unwrap(),
        catalog::g12().with_torsion(&[2, 2, 2]).unwrap(),
        catalog::artin_i2(5).unwrap().with_torsion(&[2, 2]).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn index_is_invariant_under_relator_order(which in 0usize..4, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let p = &small_presentations()[which];
        let mut rels = p.relators().to_vec();
        rels.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let q = Presentation::new("shuffled", p.alphabet().clone(), rels).unwrap();
        let a = todd_coxeter(p, &[], LIMIT);
        let b = todd_coxeter(&q, &[], LIMIT);
        prop_assert!(a.is_complete() && b.is_complete());
        prop_assert_eq!(a.index(), b.index());
    }

    #[test]
    fn quotient_elements_respect_relators(which in 0usize..4, word in prop::collection::vec(prop_oneof![1i32..=3, -3i32..=-1], 0..12)) {
        let p = &small_presentations()[which];
        let q = PermQuotient::enumerate(p, LIMIT).unwrap();
        let n = p.ngens() as i32;
        let w = Word::new(word.into_iter().filter(|l| l.abs() <= n));
        for r in p.relators() {
            prop_assert!(q.equal(&w.mul(r), &w));
            prop_assert!(q.equal(&w.mul(r).mul(&w.inverse()), &Word::empty()));
        }
    }

    #[test]
    fn lattice_contains_its_combinations(
        rows in prop::collection::vec(prop::collection::vec(-6i64..6, 3), 1..4),
        coeffs in prop::collection::vec(-4i64..4, 4),
    ) {
        let lat = IntLattice::new(&rows, 3);
        let mut v = vec![0i64; 3];
        for (r, c) in rows.iter().zip(&coeffs) {
            for j in 0..3 {
                v[j] += c * r[j];
            }
        }
        prop_assert!(lat.contains(&v));
    }

    #[test]
    fn commutators_have_zero_exponent_sum(a in prop::collection::vec(prop_oneof![1i32..=2, -2i32..=-1], 0..8), b in prop::collection::vec(prop_oneof![1i32..=2, -2i32..=-1], 0..8)) {
        let c = Word::commutator(&Word::new(a), &Word::new(b));
        prop_assert_eq!(exponent_sum(&c), 0);
        prop_assert!(is_in_derived_f2(&c).unwrap());
    }
}
