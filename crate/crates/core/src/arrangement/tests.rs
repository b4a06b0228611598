use super::*;
use crate::matgroup::{build_catalog_group, build_monomial_group, DEFAULT_ELEMENT_BUDGET as B};
use crate::invariants::proportional;
use proptest::prelude::*;

fn q(v: i64) -> CycNum {
    CycNum::from_int(v)
}

/// Independent oracle: flats from closures of every subset, ranks recomputed
/// from stacked forms, and every maximal chain of the lattice enumerated.
fn oracle_supersolvable(a: &Arrangement) -> bool {
    let n = a.len();
    assert!(n <= 14, "oracle limited to 14 hyperplanes");
    let rank = |set: u64| -> usize {
        let rows: Vec<Vec<CycNum>> = (0..n)
            .filter(|i| set >> i & 1 == 1)
            .map(|i| a.hyperplanes()[i].clone())
            .collect();
        crate::linalg::rank(&rows)
    };
    let mut flats: Vec<u64> = Vec::new();
    for s in 0u64..(1 << n) {
        let r = rank(s);
        let closed = (0..n).fold(s, |acc, h| if rank(s | 1 << h) == r { acc | 1 << h } else { acc });
        if !flats.contains(&closed) {
            flats.push(closed);
        }
    }
    let ranks: Vec<usize> = flats.iter().map(|&f| rank(f)).collect();
    let modular: Vec<bool> = flats
        .iter()
        .map(|&x| flats.iter().all(|&y| rank(x) + rank(y) == rank(x & y) + rank(x | y)))
        .collect();
    let top_rank = *ranks.iter().max().unwrap();
    // enumerate all maximal chains by depth-first search without pruning
    fn chains(cur: usize, flats: &[u64], ranks: &[usize], top: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if ranks[cur] == top {
            out.push(path.clone());
            return;
        }
        for j in 0..flats.len() {
            if ranks[j] == ranks[cur] + 1 && flats[cur] & flats[j] == flats[cur] {
                path.push(j);
                chains(j, flats, ranks, top, path, out);
                path.pop();
            }
        }
    }
    let bottom = flats.iter().position(|&f| f == 0).unwrap();
    let mut all = Vec::new();
    chains(bottom, &flats, &ranks, top_rank, &mut vec![bottom], &mut all);
    all.iter().any(|c| c.iter().all(|&i| modular[i]))
}

#[test]
fn arrangements_of_catalog_groups() {
    let a = arrangement_of(&build_catalog_group("S3_paper", B).unwrap());
    assert_eq!(a.len(), 3);
    assert!(a.multiplicities().iter().all(|&e| e == 2));
    let a = arrangement_of(&build_catalog_group("G4", B).unwrap());
    assert_eq!(a.len(), 4);
    assert!(a.multiplicities().iter().all(|&e| e == 3));
    assert_eq!(arrangement_of(&build_monomial_group(2, 1, 2, B).unwrap()).len(), 4);
}

#[test]
fn lattice_sizes() {
    let a = Arrangement::from_forms(2, vec![vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
    assert_eq!(intersection_lattice(&a, DEFAULT_FLAT_BUDGET).unwrap().len(), 4);
    let s3 = arrangement_of(&build_monomial_group(1, 1, 3, B).unwrap());
    let l = intersection_lattice(&s3, DEFAULT_FLAT_BUDGET).unwrap();
    assert_eq!(l.atoms().count(), 3);
    assert_eq!(l.rank(), 2);
    assert_eq!(l.of_rank(2).count(), 1);
    let d4 = arrangement_of(&build_monomial_group(2, 2, 4, B).unwrap());
    let l = intersection_lattice(&d4, DEFAULT_FLAT_BUDGET).unwrap();
    assert_eq!(l.atoms().count(), 12);
    assert_eq!(l.rank(), 4);
    for f in &l.flats {
        assert_eq!(f.rank, d4.rank_of(f.set));
    }
}

#[test]
fn lattice_limits() {
    let forms: Vec<Vec<CycNum>> = (0..7).map(|i| { let mut v = vec![q(0); 7]; v[i] = q(1); v }).collect();
    let a = Arrangement::from_forms(7, forms).unwrap();
    assert!(matches!(intersection_lattice(&a, DEFAULT_FLAT_BUDGET), Err(Error::BudgetExceeded(_))));
    let b3 = arrangement_of(&build_monomial_group(2, 1, 3, B).unwrap());
    assert!(matches!(intersection_lattice(&b3, 5), Err(Error::BudgetExceeded(_))));
}

#[test]
fn supersolvability_verdicts() {
    for name in ["S3_paper", "G4", "G(4,2,2)", "G(5,5,2)"] {
        let a = arrangement_of(&build_catalog_group(name, B).unwrap());
        assert!(is_supersolvable(&a, DEFAULT_FLAT_BUDGET).unwrap().supersolvable, "{name}");
    }
    let b3 = arrangement_of(&build_monomial_group(2, 1, 3, B).unwrap());
    let v = is_supersolvable(&b3, DEFAULT_FLAT_BUDGET).unwrap();
    assert!(v.supersolvable);
    let chain = v.chain.unwrap();
    assert_eq!(chain.iter().map(|f| f.rank).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    assert!(oracle_supersolvable(&b3));
    let d4 = arrangement_of(&build_monomial_group(2, 2, 4, B).unwrap());
    assert!(!is_supersolvable(&d4, DEFAULT_FLAT_BUDGET).unwrap().supersolvable);
    assert!(!oracle_supersolvable(&d4));
    for (m, p, n) in [(1, 1, 4), (3, 3, 3), (3, 1, 3), (2, 2, 3)] {
        let a = arrangement_of(&build_monomial_group(m, p, n, B).unwrap());
        assert_eq!(
            is_supersolvable(&a, DEFAULT_FLAT_BUDGET).unwrap().supersolvable,
            oracle_supersolvable(&a),
            "G({m},{p},{n})"
        );
    }
}

#[test]
fn discriminants() {
    let g4 = build_catalog_group("G4", B).unwrap();
    let a = arrangement_of(&g4);
    let d = discriminant_poly(&a);
    assert_eq!(d.degree(), Some(12));
    let s3 = arrangement_of(&build_catalog_group("S3_paper", B).unwrap());
    assert_eq!(discriminant_poly(&s3).degree(), Some(6));
    let one = Arrangement::new(1, vec![vec![q(3)]], vec![2]).unwrap();
    assert_eq!(discriminant_poly(&one), crate::poly::parse_poly("z1^2", 1).unwrap());
}

#[test]
fn discriminant_is_invariant_up_to_scalar() {
    for name in ["G4", "S3_paper", "G(3,1,2)", "G(2,2,3)"] {
        let g = build_catalog_group(name, B).unwrap();
        let d = discriminant_poly(&arrangement_of(&g));
        for s in g.generators() {
            assert!(proportional(&d.act(s).unwrap(), &d).is_some(), "{name}");
        }
    }
}

#[test]
fn rejects_bad_arrangements() {
    assert!(Arrangement::from_forms(2, vec![vec![q(1), q(2)], vec![q(2), q(4)]]).is_err());
    assert!(Arrangement::new(2, vec![vec![q(1), q(2)]], vec![1]).is_err());
    assert!(Arrangement::from_forms(2, vec![vec![q(0), q(0)]]).is_err());
    assert!(Arrangement::from_forms(2, vec![vec![q(1)]]).is_err());
}

#[test]
fn json_round_trip() {
    let a = arrangement_of(&build_catalog_group("G4", B).unwrap());
    let s = serde_json::to_string(&a).unwrap();
    assert!(s.starts_with(r#"{"dim":2,"hyperplanes":"#));
    let back: Arrangement = serde_json::from_str(&s).unwrap();
    assert_eq!(back, a);
}

fn small_form() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn supersolvable_matches_oracle(forms in prop::collection::vec(small_form(), 1..7)) {
        let mut uniq: Vec<Vec<CycNum>> = Vec::new();
        for f in forms {
            if f.iter().all(|&x| x == 0) { continue; }
            let v = normalize_form(&f.iter().map(|&x| q(x)).collect::<Vec<_>>());
            if !uniq.contains(&v) { uniq.push(v); }
        }
        prop_assume!(!uniq.is_empty());
        let a = Arrangement::from_forms(3, uniq).unwrap();
        let l = intersection_lattice(&a, DEFAULT_FLAT_BUDGET).unwrap();
        for f in &l.flats {
            prop_assert_eq!(f.rank, a.rank_of(f.set));
        }
        prop_assert_eq!(
            is_supersolvable(&a, DEFAULT_FLAT_BUDGET).unwrap().supersolvable,
            oracle_supersolvable(&a)
        );
    }
}

#[test]
fn all_chains_search_agrees_with_oracle() {
    for (m, p, n) in [(2, 1, 3), (2, 2, 4), (1, 1, 4), (3, 3, 3)] {
        let a = arrangement_of(&build_monomial_group(m, p, n, B).unwrap());
        assert_eq!(supersolvable_all_chains(&a, DEFAULT_FLAT_BUDGET).unwrap(), oracle_supersolvable(&a), "G({m},{p},{n})");
    }
}
