use crate::cyclo::CycNum;
use crate::error::{Error, Result};

use super::{RGroup, RMatrix};

fn transposition(n: usize, i: usize) -> RMatrix {
    let mut m = RMatrix::identity(n);
    m.set(i, i, CycNum::zero());
    m.set(i + 1, i + 1, CycNum::zero());
    m.set(i, i + 1, CycNum::one());
    m.set(i + 1, i, CycNum::one());
    m
}

/// Generators of the monomial group `G(m, p, n)`: entries in `μ_m`, product of
/// the nonzero entries in `μ_{m/p}`.
pub fn monomial_generators(m: u32, p: u32, n: u32) -> Result<Vec<RMatrix>> {
    if m == 0 || p == 0 || n == 0 || m % p != 0 {
        return Err(Error::Invalid(format!(
            "G({m},{p},{n}) needs positive parameters with p dividing m"
        )));
    }
    let n = n as usize;
    let mut gens = Vec::new();
    if p < m {
        let mut diag = vec![CycNum::one(); n];
        diag[0] = CycNum::root_of_unity(m, p as i64);
        gens.push(RMatrix::diagonal(diag));
    }
    if m > 1 && n >= 2 {
        let mut t = transposition(n, 0);
        t.set(0, 1, CycNum::root_of_unity(m, -1));
        t.set(1, 0, CycNum::root_of_unity(m, 1));
        gens.push(t);
    }
    for i in 0..n.saturating_sub(1) {
        gens.push(transposition(n, i));
    }
    if gens.is_empty() {
        gens.push(RMatrix::identity(n));
    }
    Ok(gens)
}

pub fn monomial_order(m: u32, p: u32, n: u32) -> u128 {
    let fact: u128 = (1..=n as u128).product();
    (m as u128).pow(n) * fact / p as u128
}

/// Builds `G(m, p, n)` of order `mⁿ·n!/p`.
pub fn build_monomial_group(m: u32, p: u32, n: u32, budget: usize) -> Result<RGroup> {
    let gens = monomial_generators(m, p, n)?;
    let predicted = monomial_order(m, p, n);
    if predicted > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "G({m},{p},{n}) has {predicted} elements, budget is {budget}"
        )));
    }
    RGroup::generate(&format!("G({m},{p},{n})"), gens, budget)
}

pub fn catalog_names() -> &'static [&'static str] {
    &["G4", "G4_paper", "S3_paper"]
}

/// `s̄1 = diag(1, j)` and `s̄2 = (1/√-3)[[-1, j], [2, j]]` with `√-3 = j - j²`.
pub fn g4_generators() -> Vec<RMatrix> {
    let j = CycNum::root_of_unity(3, 1);
    let j2 = CycNum::root_of_unity(3, 2);
    let c = (&j - &j2).inv().expect("nonzero");
    let s1 = RMatrix::diagonal(vec![CycNum::one(), j.clone()]);
    let s2 = RMatrix::from_rows(vec![
        vec![CycNum::from_int(-1), j.clone()],
        vec![CycNum::from_int(2), j],
    ])
    .expect("square")
    .scale(&c);
    vec![s1, s2]
}

pub fn s3_generators() -> Vec<RMatrix> {
    let i = |v: i64| CycNum::from_int(v);
    vec![
        RMatrix::from_rows(vec![vec![i(1), i(-1)], vec![i(0), i(-1)]]).expect("square"),
        RMatrix::from_rows(vec![vec![i(-1), i(0)], vec![i(-1), i(1)]]).expect("square"),
    ]
}

pub fn build_catalog_group(name: &str, budget: usize) -> Result<RGroup> {
    match name {
        "G4" | "G4_paper" => RGroup::generate("G4", g4_generators(), budget),
        "S3_paper" | "S3" => RGroup::generate("S3_paper", s3_generators(), budget),
        _ => {
            if let Some(g) = parse_monomial_label(name) {
                let (m, p, n) = g?;
                return build_monomial_group(m, p, n, budget);
            }
            Err(Error::UnknownCatalog(name.to_string()))
        }
    }
}

/// Accepts labels such as `G(2,2,4)`.
fn parse_monomial_label(name: &str) -> Option<Result<(u32, u32, u32)>> {
    let inner = name.strip_prefix("G(")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Some(Err(Error::Parse(format!("bad monomial label `{name}`"))));
    }
    let nums: std::result::Result<Vec<u32>, _> = parts.iter().map(|s| s.parse()).collect();
    Some(
        nums.map(|v| (v[0], v[1], v[2]))
            .map_err(|e| Error::Parse(format!("bad monomial label `{name}`: {e}"))),
    )
}
