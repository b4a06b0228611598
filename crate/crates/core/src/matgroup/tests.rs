use super::*;
use num_complex::Complex64;
use proptest::prelude::*;

const B: usize = DEFAULT_ELEMENT_BUDGET;

fn g4() -> RGroup {
    build_catalog_group("G4", B).unwrap()
}

fn s3() -> RGroup {
    build_catalog_group("S3_paper", B).unwrap()
}

/// Float oracle: an element is a reflection when exactly one eigenvalue of the
/// complex matrix differs from 1. Eigenvalues of 2x2 and small monomial
/// matrices are read from the characteristic polynomial numerically.
fn float_is_reflection(m: &RMatrix) -> bool {
    let a = m.to_complex();
    let n = a.len();
    let mut d = a.clone();
    for (i, row) in d.iter_mut().enumerate() {
        row[i] -= Complex64::new(1.0, 0.0);
    }
    // numerical rank of d by Gaussian elimination with partial pivoting
    let mut rank = 0;
    let mut rows = d;
    for c in 0..n {
        let p = (rank..n).max_by(|&i, &j| rows[i][c].norm().total_cmp(&rows[j][c].norm()));
        let Some(p) = p else { break };
        if rows[p][c].norm() < 1e-9 {
            continue;
        }
        rows.swap(rank, p);
        for i in rank + 1..n {
            let f = rows[i][c] / rows[rank][c];
            for j in c..n {
                let t = f * rows[rank][j];
                rows[i][j] -= t;
            }
        }
        rank += 1;
    }
    rank == 1
}

fn monomial_reflection_count(m: u32, p: u32, n: u32) -> usize {
    let n = n as usize;
    let m = m as usize;
    m * n * (n - 1) / 2 + n * (m / p as usize - 1)
}

#[test]
fn monomial_orders() {
    assert_eq!(build_monomial_group(1, 1, 3, B).unwrap().order(), 6);
    assert_eq!(build_monomial_group(2, 1, 2, B).unwrap().order(), 8);
    assert_eq!(build_monomial_group(3, 3, 2, B).unwrap().order(), 6);
    for (m, p, n) in [(2, 2, 3), (4, 2, 2), (3, 1, 2), (2, 1, 3)] {
        let g = build_monomial_group(m, p, n, B).unwrap();
        assert_eq!(g.order() as u128, catalog::monomial_order(m, p, n));
    }
}

#[test]
fn budget_is_enforced() {
    assert!(matches!(
        build_monomial_group(2, 1, 8, 1000),
        Err(Error::BudgetExceeded(_))
    ));
    assert!(matches!(
        RGroup::generate("g4", catalog::g4_generators(), 10),
        Err(Error::BudgetExceeded(_))
    ));
}

#[test]
fn catalog_groups() {
    let g = g4();
    assert_eq!(g.order(), 24);
    assert_eq!(s3().order(), 6);
    assert!(g.generators()[0].pow(3).unwrap().is_identity());
    assert!(g.generators()[1].pow(3).unwrap().is_identity());
    assert!(matches!(
        build_catalog_group("G99", B),
        Err(Error::UnknownCatalog(_))
    ));
}

#[test]
fn reflection_counts_match_float_oracle() {
    let cases: Vec<(RGroup, usize, usize, u32)> = vec![
        (s3(), 3, 3, 2),
        (g4(), 8, 4, 3),
        (build_monomial_group(2, 1, 2, B).unwrap(), 4, 4, 2),
    ];
    for (g, nref, nhyp, _) in &cases {
        let refl = g.reflections();
        let oracle = g.elements().iter().filter(|m| float_is_reflection(m)).count();
        assert_eq!(refl.len(), oracle, "{}", g.label());
        assert_eq!(refl.len(), *nref, "{}", g.label());
        assert_eq!(g.hyperplanes().len(), *nhyp, "{}", g.label());
    }
    assert!(s3().hyperplanes().iter().all(|h| h.order_eh == 2));
    assert!(g4().hyperplanes().iter().all(|h| h.order_eh == 3));
    for (m, p, n) in [(2, 1, 3), (2, 2, 4), (3, 1, 2), (4, 2, 2)] {
        let g = build_monomial_group(m, p, n, B).unwrap();
        assert_eq!(g.reflections().len(), monomial_reflection_count(m, p, n));
    }
}

#[test]
fn reflections_fix_their_hyperplanes() {
    for g in [g4(), s3(), build_monomial_group(3, 1, 2, B).unwrap()] {
        for r in g.reflections() {
            let ker = crate::linalg::nullspace(&[r.hyperplane.clone()], g.dim());
            assert_eq!(ker.len(), g.dim() - 1);
            for v in ker {
                for i in 0..g.dim() {
                    let gv = (0..g.dim()).fold(CycNum::zero(), |acc, j| acc + r.element.get(i, j) * &v[j]);
                    assert_eq!(gv, v[i]);
                }
            }
            assert_eq!(r.hyperplane.iter().find(|x| !x.is_zero()), Some(&CycNum::one()));
        }
    }
}

#[test]
fn distinguished_reflections_biject_with_hyperplanes() {
    for g in [g4(), s3(), build_monomial_group(4, 2, 2, B).unwrap()] {
        let hyps = g.hyperplanes();
        let dist: Vec<_> = g.reflections().into_iter().filter(|r| r.distinguished).collect();
        assert_eq!(dist.len(), hyps.len());
        for h in &hyps {
            assert_ne!(h.distinguished, usize::MAX);
            let r = dist.iter().find(|r| r.element_index == h.distinguished).unwrap();
            assert_eq!(r.nontrivial_eigenvalue, CycNum::root_of_unity(h.order_eh, 1));
        }
    }
}

#[test]
fn fields_of_definition() {
    for n in 2..=5 {
        let g = build_monomial_group(1, 1, n, B).unwrap();
        assert_eq!(g.field_of_definition().conductor, 1);
    }
    let f = g4().field_of_definition();
    assert_eq!(f.conductor, 3);
    assert_eq!(f.fixing_subgroup, vec![1]);
    assert_eq!(f.degree, 2);
    // dihedral group of order 16: traces 2cos(2πk/8) generate Q(√2)
    let f = build_monomial_group(8, 8, 2, B).unwrap().field_of_definition();
    assert_eq!(f.conductor, 8);
    assert_eq!(f.fixing_subgroup, vec![1, 7]);
    // dihedral group of order 8 has rational traces
    assert_eq!(build_monomial_group(4, 4, 2, B).unwrap().field_of_definition().conductor, 1);
}

#[test]
fn traces_live_in_conductor_field() {
    for g in [g4(), build_monomial_group(3, 1, 2, B).unwrap()] {
        let f = g.field_of_definition();
        for e in g.elements() {
            assert_eq!(f.conductor % e.trace().order(), 0);
        }
        assert_eq!(
            f.degree as u64 * f.fixing_subgroup.len() as u64,
            crate::cyclo::euler_phi(f.conductor as u64)
        );
    }
}

#[test]
fn galois_images() {
    let g = g4();
    let id = g.galois_image(1).unwrap();
    assert!(id.same_set);
    assert_eq!(id.permutation.unwrap(), (0..24).collect::<Vec<_>>());
    let real = build_monomial_group(2, 2, 3, B).unwrap();
    let conj = real.galois_image(-1).unwrap();
    assert_eq!(conj.permutation.unwrap(), (0..real.order()).collect::<Vec<_>>());
    let c = g.galois_image(-1).unwrap();
    if let Some(perm) = &c.permutation {
        for a in 0..g.order() {
            for b in 0..g.generators().len() {
                let gb = g.index_of(&g.generators()[b]).unwrap();
                assert_eq!(perm[g.mul_index(a, gb)], g.mul_index(perm[a], perm[gb]));
            }
        }
    }
    assert!(matches!(
        build_monomial_group(3, 1, 2, B).unwrap().galois_image(3),
        Err(Error::NonCoprime { .. })
    ));
}

#[test]
fn hermitian_forms() {
    let h = build_monomial_group(3, 1, 2, B).unwrap().invariant_hermitian_form().unwrap();
    assert!(h.is_identity());
    let h = g4().invariant_hermitian_form().unwrap();
    assert_eq!(h.adjoint(), h);
    let h = s3().invariant_hermitian_form().unwrap();
    assert!(h.entries().iter().all(|e| e.as_rational().is_some()));
    assert_eq!(h.transpose(), h);
}

#[test]
fn centers() {
    assert_eq!(build_monomial_group(1, 1, 3, B).unwrap().center().len(), 1);
    let z = g4().center();
    assert_eq!(z.len(), 2);
    assert!(z.contains(&RMatrix::identity(2).scale(&CycNum::from_int(-1))));
    assert_eq!(build_monomial_group(2, 1, 2, B).unwrap().center().len(), 2);
}

#[test]
fn closure_is_idempotent() {
    let g = g4();
    let again = RGroup::generate("again", g.elements().to_vec(), B).unwrap();
    assert_eq!(again.order(), g.order());
}

#[test]
fn group_spec_json() {
    let spec: GroupSpec = serde_json::from_str(r#"{"kind":"monomial","d":2,"e":1,"n":2}"#).unwrap();
    assert_eq!(spec.build(B).unwrap().order(), 8);
    let spec: GroupSpec = serde_json::from_str(r#"{"kind":"catalog","name":"G4"}"#).unwrap();
    assert_eq!(spec.build(B).unwrap().order(), 24);
    let gens = serde_json::to_string(&catalog::s3_generators()).unwrap();
    let spec: GroupSpec =
        serde_json::from_str(&format!(r#"{{"kind":"explicit","generators":{gens}}}"#)).unwrap();
    assert_eq!(spec.build(B).unwrap().order(), 6);
    assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"monomial","d":2}"#).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn monomial_closure_properties(m in 1u32..4, n in 1u32..4, pick in 0usize..3) {
        let divisors: Vec<u32> = (1..=m).filter(|p| m % p == 0).collect();
        let p = divisors[pick % divisors.len()];
        let g = build_monomial_group(m, p, n, B).unwrap();
        prop_assert_eq!(g.order() as u128, catalog::monomial_order(m, p, n));
        for (a, x) in g.elements().iter().enumerate().take(20) {
            let inv = g.inverse_index(a);
            prop_assert!((x * &g.elements()[inv]).is_identity());
        }
    }
}
