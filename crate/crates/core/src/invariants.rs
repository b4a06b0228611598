//! Polynomial invariants of finite matrix groups.

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::cyclo::{CycNum, Rat};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matgroup::{RGroup, RMatrix};
use crate::poly::{count_monomials, monomials_of_degree, MPoly, Mono};
use crate::upoly;

pub const DEFAULT_MONOMIAL_BUDGET: u128 = 20_000;

/// Coefficients of `det(I - t·g)` in increasing powers of `t`.
pub fn det_one_minus_tg(g: &RMatrix) -> Vec<CycNum> {
    // Faddeev–LeVerrier for det(xI - g) = Σ c_i x^i, then reverse.
    let n = g.dim();
    let mut c = vec![CycNum::zero(); n + 1];
    c[n] = CycNum::one();
    let mut m = RMatrix::identity(n).scale(&CycNum::zero());
    for k in 1..=n {
        let mut next = &*g * &m;
        for i in 0..n {
            let v = next.get(i, i) + &c[n - k + 1];
            next.set(i, i, v);
        }
        m = next;
        let tr = (&*g * &m).trace();
        c[n - k] = -(tr * CycNum::from_frac(1, k as i64));
    }
    c.reverse();
    c
}

/// First `nterms` coefficients of `(1/|G|) Σ_g 1/det(I - t·g)`.
pub fn molien_series(group: &RGroup, nterms: usize) -> Result<Vec<Rat>> {
    let mut classes: HashMap<Vec<CycNum>, usize> = HashMap::new();
    for g in group.elements() {
        *classes.entry(det_one_minus_tg(g)).or_default() += 1;
    }
    let mut keys: Vec<_> = classes.into_iter().collect();
    keys.sort_by_key(|(k, _)| format!("{k:?}"));
    let mut total = vec![CycNum::zero(); nterms];
    for (q, count) in keys {
        // invert q (q_0 = 1) as a power series
        let mut s = vec![CycNum::zero(); nterms];
        if nterms > 0 {
            s[0] = CycNum::one();
        }
        for k in 1..nterms {
            let mut acc = CycNum::zero();
            for i in 1..q.len().min(k + 1) {
                if !q[i].is_zero() && !s[k - i].is_zero() {
                    acc = acc + &q[i] * &s[k - i];
                }
            }
            s[k] = -acc;
        }
        let w = CycNum::from_int(count as i64);
        for (t, x) in total.iter_mut().zip(&s) {
            *t = &*t + &(x * &w);
        }
    }
    let inv = CycNum::from_frac(1, group.order() as i64);
    total
        .into_iter()
        .map(|x| {
            (x * &inv)
                .as_rational()
                .cloned()
                .ok_or_else(|| Error::Inconsistent("Molien coefficient is not rational".into()))
        })
        .collect()
}

/// Degrees `d_i` with Molien series `Π 1/(1 - t^{d_i})`.
pub fn molien_degrees(group: &RGroup) -> Result<Vec<u32>> {
    let nref = group.reflections().len();
    let nterms = nref + 2;
    let mut s = molien_series(group, nterms)?;
    let mut degrees = Vec::new();
    while let Some(d) = (1..nterms).find(|&d| !s[d].is_zero()) {
        if !s[d].is_positive() || !s[d].is_integer() || degrees.len() >= group.dim() {
            return Err(Error::Invalid(format!(
                "Molien series of {} is not of the form Π 1/(1-t^d)",
                group.label()
            )));
        }
        // multiply by (1 - t^d)
        for k in (d..nterms).rev() {
            let v = &s[k] - &s[k - d];
            s[k] = v;
        }
        degrees.push(d as u32);
    }
    let prod: u128 = degrees.iter().map(|&d| d as u128).product();
    let exps: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    if degrees.len() != group.dim() || prod != group.order() as u128 || exps != nref {
        return Err(Error::Invalid(format!(
            "Molien factorization of {} gives degrees {:?}, inconsistent with order {} and {} reflections",
            group.label(),
            degrees,
            group.order(),
            nref
        )));
    }
    Ok(degrees)
}

fn check_dim(group: &RGroup, p: &MPoly) -> Result<()> {
    if p.nvars() != group.dim() {
        return Err(Error::Arity(format!(
            "polynomial in {} variables for a group of dimension {}",
            p.nvars(),
            group.dim()
        )));
    }
    Ok(())
}

/// True when `p(g·z) = p(z)` for every generator.
pub fn is_invariant(group: &RGroup, p: &MPoly) -> Result<bool> {
    check_dim(group, p)?;
    for g in group.generators() {
        if p.act(g)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(1/|G|) Σ_g p(g·z)`.
pub fn reynolds(group: &RGroup, p: &MPoly) -> Result<MPoly> {
    check_dim(group, p)?;
    let mut acc = MPoly::zero(p.nvars());
    for g in group.elements() {
        acc = acc.add(&p.act(g)?);
    }
    Ok(acc.scale(&CycNum::from_frac(1, group.order() as i64)))
}

/// Reynolds images of all degree-`d` monomials as coordinate rows.
fn reynolds_monomials(group: &RGroup, monos: &[Mono], d: u32) -> Vec<Vec<CycNum>> {
    let n = group.dim();
    let index: HashMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = vec![vec![CycNum::zero(); monos.len()]; monos.len()];
    for g in group.elements() {
        let forms: Vec<MPoly> = (0..n).map(|i| MPoly::linear(g.row(i))).collect();
        let powers: Vec<Vec<MPoly>> = forms
            .iter()
            .map(|f| {
                let mut v = vec![MPoly::one(n)];
                for _ in 0..d {
                    let next = v.last().unwrap().mul(f);
                    v.push(next);
                }
                v
            })
            .collect();
        for (r, m) in monos.iter().enumerate() {
            let mut img = MPoly::one(n);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    img = img.mul(&powers[i][e as usize]);
                }
            }
            for (mono, c) in img.terms() {
                let j = index[mono];
                rows[r][j] = &rows[r][j] + c;
            }
        }
    }
    rows
}

/// Basis of the degree-`d` invariants, in reduced echelon form.
pub fn invariant_space(group: &RGroup, d: u32, budget: u128) -> Result<Vec<MPoly>> {
    let n = group.dim();
    let count = count_monomials(n, d);
    if count > budget {
        return Err(Error::BudgetExceeded(format!(
            "{count} monomials of degree {d} in {n} variables, budget is {budget}"
        )));
    }
    let mut monos = monomials_of_degree(n, d);
    monos.reverse(); // leading monomials first so echelon rows are monic in grlex
    let mut rows = reynolds_monomials(group, &monos, d);
    let pivots = linalg::row_reduce(&mut rows);
    Ok(rows
        .iter()
        .take(pivots.len())
        .map(|r| MPoly::from_coords(n, &monos, r))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantBasis {
    pub group: String,
    pub degrees: Vec<u32>,
    pub generators: Vec<MPoly>,
}

/// Products of `gens` (with weights `degs`) of total degree `d`.
fn products_of_degree(gens: &[MPoly], degs: &[u32], d: u32, nvars: usize) -> Vec<MPoly> {
    fn rec(
        gens: &[MPoly],
        degs: &[u32],
        start: usize,
        left: u32,
        cur: MPoly,
        out: &mut Vec<MPoly>,
    ) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..gens.len() {
            if degs[i] <= left && degs[i] > 0 {
                rec(gens, degs, i, left - degs[i], cur.mul(&gens[i]), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(gens, degs, 0, d, MPoly::one(nvars), &mut out);
    out
}

/// Basic invariants with Molien degrees, each normalized to leading coefficient 1.
pub fn fundamental_invariants(group: &RGroup, budget: u128) -> Result<InvariantBasis> {
    let degrees = molien_degrees(group)?;
    let n = group.dim();
    let mut gens: Vec<MPoly> = Vec::new();
    let mut gdegs: Vec<u32> = Vec::new();
    let mut distinct = degrees.clone();
    distinct.dedup();
    for &d in &distinct {
        let need = degrees.iter().filter(|&&x| x == d).count();
        let monos = monomials_of_degree(n, d);
        let decomposable = products_of_degree(&gens, &gdegs, d, n);
        let mut span: Vec<Vec<CycNum>> = decomposable.iter().map(|p| p.coords(&monos)).collect();
        let mut rank = linalg::rank(&span);
        let mut found = 0;
        for cand in invariant_space(group, d, budget)? {
            if found == need {
                break;
            }
            span.push(cand.coords(&monos));
            let r = linalg::rank(&span);
            if r > rank {
                rank = r;
                found += 1;
                gens.push(cand.monic());
                gdegs.push(d);
            } else {
                span.pop();
            }
        }
        if found < need {
            return Err(Error::Inconsistent(format!(
                "only {found} new invariants of degree {d}, expected {need}"
            )));
        }
    }
    if jacobian(&gens)?.is_zero() {
        return Err(Error::Inconsistent("basic invariants are algebraically dependent".into()));
    }
    Ok(InvariantBasis {
        group: group.label().to_string(),
        degrees,
        generators: gens,
    })
}

fn det_poly(m: &[Vec<MPoly>], nvars: usize) -> MPoly {
    match m.len() {
        0 => MPoly::one(nvars),
        1 => m[0][0].clone(),
        n => {
            let mut acc = MPoly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&det_poly(&minor, nvars));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

/// Determinant of `(∂p_i/∂z_j)`.
pub fn jacobian(ps: &[MPoly]) -> Result<MPoly> {
    let n = ps.len();
    if ps.iter().any(|p| p.nvars() != n) {
        return Err(Error::Arity(format!(
            "jacobian needs {n} polynomials in {n} variables"
        )));
    }
    let m: Vec<Vec<MPoly>> = ps
        .iter()
        .map(|p| (0..n).map(|j| p.derivative(j)).collect())
        .collect();
    Ok(det_poly(&m, n))
}

/// `Some(c)` with `p = c·q` and `c ≠ 0`.
pub fn proportional(p: &MPoly, q: &MPoly) -> Option<CycNum> {
    if p.nvars() != q.nvars() || p.is_zero() || q.is_zero() {
        return None;
    }
    let (mp, cp) = p.leading_term()?;
    let (mq, cq) = q.leading_term()?;
    if mp != mq || p.num_terms() != q.num_terms() {
        return None;
    }
    let c = cp * &cq.inv().ok()?;
    (q.scale(&c) == *p).then_some(c)
}

/// Exact square root with a canonically positive leading coefficient.
pub fn poly_square_root(p: &MPoly) -> Option<MPoly> {
    let n = p.nvars();
    if p.is_zero() {
        return Some(MPoly::zero(n));
    }
    let (m, c) = p.leading_term()?;
    if m.0.iter().any(|e| e % 2 == 1) {
        return None;
    }
    let mut lc = c.sqrt()?;
    if !lc.is_canonically_positive() {
        lc = -lc;
    }
    let lead_exps: Vec<u32> = m.0.iter().map(|e| e / 2).collect();
    let lead = Mono(lead_exps.clone());
    let mut q = MPoly::monomial(n, lead_exps.clone(), lc.clone());
    let two_lc_inv = (&lc * &CycNum::from_int(2)).inv().ok()?;
    loop {
        let r = p.sub(&q.mul(&q));
        let Some((rm, rc)) = r.leading_term() else {
            return Some(q);
        };
        if !lead.divides(rm) || *rm >= Mono(m.0.clone()) {
            return None;
        }
        let exps: Vec<u32> = rm.0.iter().zip(&lead.0).map(|(a, b)| a - b).collect();
        if Mono(exps.clone()) >= lead {
            return None;
        }
        q = q.add(&MPoly::monomial(n, exps, rc * &two_lc_inv));
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SquarefreeReport {
    pub degree: u32,
    /// gcd of the dehomogenization with its derivative is constant.
    pub exact_squarefree: bool,
    /// Multiplicity of the direction `[1:0]` (root at infinity).
    pub multiplicity_at_infinity: u32,
    pub distinct_directions: usize,
    pub min_separation: f64,
    pub passed: bool,
}

pub const ROOT_SEPARATION: f64 = 1e-8;

/// Decides whether a binary form is a product of pairwise distinct linear forms.
pub fn squarefree_linear_factor_check(p: &MPoly) -> Result<SquarefreeReport> {
    if p.nvars() != 2 || !p.is_homogeneous() || p.is_zero() {
        return Err(Error::Invalid(
            "squarefree check needs a nonzero binary form".into(),
        ));
    }
    let d = p.degree().unwrap();
    // f(t) = p(t, 1)
    let mut f = vec![CycNum::zero(); d as usize + 1];
    for (m, c) in p.terms() {
        f[m.0[0] as usize] = c.clone();
    }
    let f = upoly::trim(f);
    let deg_f = f.len() - 1;
    let at_inf = d - deg_f as u32;
    let g = upoly::gcd(&f, &upoly::derivative(&f));
    let exact = g.len() <= 1 && at_inf <= 1;
    let coeffs: Vec<Complex64> = f.iter().map(CycNum::to_complex).collect();
    let roots = upoly::complex_roots(&coeffs)
        .ok_or_else(|| Error::Inconsistent("root iteration did not converge".into()))?;
    let sep = upoly::min_separation(&roots);
    let mut distinct = roots.len();
    if sep < ROOT_SEPARATION {
        // count clusters
        let mut reps: Vec<Complex64> = Vec::new();
        for r in &roots {
            if reps.iter().all(|s| (s - r).norm() >= ROOT_SEPARATION) {
                reps.push(*r);
            }
        }
        distinct = reps.len();
    }
    distinct += at_inf.min(1) as usize;
    let numeric_ok = distinct == d as usize;
    Ok(SquarefreeReport {
        degree: d,
        exact_squarefree: exact,
        multiplicity_at_infinity: at_inf,
        distinct_directions: distinct,
        min_separation: sep,
        passed: exact && numeric_ok,
    })
}

/// Writes `p` as a polynomial in `basis` (homogeneous basis elements of positive degree).
pub fn express_in(p: &MPoly, basis: &[MPoly]) -> Result<Option<MPoly>> {
    let k = basis.len();
    let mut degs = Vec::with_capacity(k);
    for b in basis {
        if b.nvars() != p.nvars() {
            return Err(Error::Arity("basis and polynomial differ in arity".into()));
        }
        match b.degree() {
            Some(d) if d > 0 && b.is_homogeneous() => degs.push(d),
            _ => return Err(Error::Invalid("basis elements must be homogeneous of positive degree".into())),
        }
    }
    let mut out = MPoly::zero(k);
    let top = p.degree().unwrap_or(0);
    for d in 0..=top {
        let part = p.homogeneous_part(d);
        if part.is_zero() {
            continue;
        }
        // exponent vectors a with Σ a_i deg_i = d
        let mut exps: Vec<Vec<u32>> = Vec::new();
        fn rec(degs: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for a in 0..=left / degs[i] {
                cur.push(a);
                rec(degs, i + 1, left - a * degs[i], cur, out);
                cur.pop();
            }
        }
        rec(&degs, 0, d, &mut Vec::new(), &mut exps);
        let prods: Vec<MPoly> = exps
            .iter()
            .map(|a| {
                a.iter()
                    .zip(basis)
                    .fold(MPoly::one(p.nvars()), |acc, (&e, b)| acc.mul(&b.pow(e)))
            })
            .collect();
        let monos = monomials_of_degree(p.nvars(), d);
        // columns are products, rows are monomials
        let cols: Vec<Vec<CycNum>> = prods.iter().map(|q| q.coords(&monos)).collect();
        let mat: Vec<Vec<CycNum>> = (0..monos.len())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let rhs = part.coords(&monos);
        let Some(sol) = linalg::solve(&mat, &rhs) else {
            return Ok(None);
        };
        for (a, c) in exps.into_iter().zip(sol) {
            out = out.add(&MPoly::monomial(k, a, c));
        }
    }
    Ok(Some(out))
}

/// Polynomials with fixed names.
pub mod named {
    use super::*;
    use crate::poly::parse_poly;

    pub const NAMES: &[&str] = &["g1", "g2", "f1", "f2", "alpha", "beta"];

    pub fn lookup(name: &str) -> Result<MPoly> {
        let text = match name {
            "g1" => "z1^4 - z1*z2^3",
            "g2" => "z1^6 + 5/2*z1^3*z2^3 - 1/8*z2^6",
            "f1" => "z1^2 - z1*z2 + z2^2",
            "f2" => "z1^3 - 3/2*z1^2*z2 - 3/2*z1*z2^2 + z2^3",
            "alpha" => "(x1^2 - x2^2)*(x1^4 + 12*x1^2*x2^2 + 4*x2^4)",
            "beta" => "(x1^2 - 4*x1*x2 - 2*x2^2)*(x1^2 + 4*x1*x2 - 2*x2^2)*(3*x1^4 + 4*x1^2*x2^2 + 12*x2^4)",
            _ => return Err(Error::UnknownCatalog(format!("polynomial `{name}`"))),
        };
        parse_poly(text, 2)
    }

    pub fn g1() -> MPoly {
        lookup("g1").expect("catalog")
    }
    pub fn g2() -> MPoly {
        lookup("g2").expect("catalog")
    }
    pub fn f1() -> MPoly {
        lookup("f1").expect("catalog")
    }
    pub fn f2() -> MPoly {
        lookup("f2").expect("catalog")
    }
    pub fn alpha() -> MPoly {
        lookup("alpha").expect("catalog")
    }
    pub fn beta() -> MPoly {
        lookup("beta").expect("catalog")
    }
}

/// `β³ - 27α⁴` for a pair of binary forms.
pub fn g12_discriminant(alpha: &MPoly, beta: &MPoly) -> MPoly {
    beta.pow(3).sub(&alpha.pow(4).scale(&CycNum::from_int(27)))
}

#[derive(Clone, Debug, Serialize)]
pub struct G12Check {
    pub discriminant_degree: Option<u32>,
    pub square_root: Option<MPoly>,
    pub squarefree: Option<SquarefreeReport>,
    /// `c` with `jacobian(α, β) = c·D`.
    pub jacobian_ratio: Option<CycNum>,
    pub passed: bool,
}

/// Square root, squarefree and Jacobian checks on `β³ - 27α⁴`.
pub fn g12_check(alpha: &MPoly, beta: &MPoly) -> Result<G12Check> {
    let disc = g12_discriminant(alpha, beta);
    let root = poly_square_root(&disc);
    let (sf, ratio) = match &root {
        Some(d) if !d.is_zero() => (
            Some(squarefree_linear_factor_check(d)?),
            proportional(&jacobian(&[alpha.clone(), beta.clone()])?, d),
        ),
        _ => (None, None),
    };
    let passed = root.as_ref().and_then(MPoly::degree) == Some(12)
        && sf.as_ref().is_some_and(|r| r.passed)
        && ratio.is_some();
    Ok(G12Check {
        discriminant_degree: disc.degree(),
        square_root: root,
        squarefree: sf,
        jacobian_ratio: ratio,
        passed,
    })
}
