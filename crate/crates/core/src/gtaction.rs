//! Actions of pairs `(λ, f)` on braid generators: the Drinfeld formulas on
//! `Br_n`, Matsumoto's formulas on `Art(D_n)`, and dihedral `(λ, g)` pairs.
//!
//! `λ` is a plain integer. Finite quotients only see it modulo their exponent.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpgroups::catalog::{self, alternating};
use crate::fpgroups::{
    derived_membership, induced_map, is_bijective, is_in_derived_f2, parse_f2, todd_coxeter, torsion_quotient,
    word::exponent_sum, Alphabet, PermQuotient, Presentation, SchreierSystem, Word,
};
use crate::garside::{eta_word, CoxeterType, Garside};

/// A pair `(λ, f)` with `f` in the derived subgroup of `F₂ = ⟨x, y⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTPair {
    pub lambda: i64,
    pub f: Word,
}

impl GTPair {
    pub fn new(lambda: i64, f: Word) -> Result<Self> {
        if !is_in_derived_f2(&f)? {
            return Err(Error::Precondition(format!(
                "f = {} is not in the derived subgroup of F2",
                f2_format(&f)
            )));
        }
        Ok(GTPair { lambda, f })
    }

    /// `f` written over `x, y`; the empty string is the trivial word.
    pub fn parse(lambda: i64, f: &str) -> Result<Self> {
        let f = if f.trim().is_empty() { Word::empty() } else { parse_f2(f)? };
        Self::new(lambda, f)
    }

    pub fn identity() -> Self {
        GTPair {
            lambda: 1,
            f: Word::empty(),
        }
    }

    /// `f(u, v)`.
    pub fn eval_f(&self, u: &Word, v: &Word) -> Word {
        self.f
            .substitute(&[u.clone(), v.clone()])
            .expect("f is over two letters")
    }

    /// `f(a, b) · s^λ · f(b, a)`.
    fn sandwich(&self, s: &Word, a: &Word, b: &Word) -> Word {
        self.eval_f(a, b).mul(&s.pow(self.lambda)).mul(&self.eval_f(b, a))
    }

    /// Even `λ` kills the image of every generator in a W-quotient.
    pub fn lambda_is_odd(&self) -> bool {
        self.lambda % 2 != 0
    }
}

/// `f` written in the letters `x`, `y`.
pub fn f2_format(f: &Word) -> String {
    Alphabet::new(&["x", "y"]).expect("valid names").format(f)
}

/// `y_i = (s_{i-1} ⋯ s_1)(s_1 ⋯ s_{i-1})` in `Br_n`, so `y_2 = s_1²`.
pub fn y_word(i: usize) -> Word {
    let up: Vec<i32> = (1..i as i32).collect();
    Word::new(up.iter().rev().copied().chain(up.iter().copied()))
}

/// Drinfeld images `s_1 ↦ s_1^λ`, `s_i ↦ f(s_i², y_i) s_i^λ f(y_i, s_i²)` in `Br_n`.
pub fn drinfeld_images(n: usize, p: &GTPair) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::Invalid("Br_n needs n >= 2".into()));
    }
    Ok((1..n)
        .map(|i| {
            let s = Word::gen(i - 1);
            if i == 1 {
                s.pow(p.lambda)
            } else {
                p.sandwich(&s, &s.pow(2), &y_word(i))
            }
        })
        .collect())
}

fn symbolic_word(w: &Word) -> String {
    let names: Vec<String> = (1..=w.max_generator().map_or(0, |g| g + 1))
        .map(|i| format!("s_{i}"))
        .collect();
    if names.is_empty() {
        return "1".into();
    }
    Alphabet::new(&names)
        .expect("valid names")
        .format(w)
        .replace(' ', "")
}

/// The Drinfeld formulas with `f` and `λ` left symbolic, e.g.
/// `f(s_2^2,s_1^2) s_2^λ f(s_1^2,s_2^2)` for `i = 2`.
pub fn drinfeld_symbolic(n: usize) -> Vec<String> {
    (1..n)
        .map(|i| {
            if i == 1 {
                "s_1^λ".to_string()
            } else {
                let sq = format!("s_{i}^2");
                let y = symbolic_word(&y_word(i));
                format!("f({sq},{y}) s_{i}^λ f({y},{sq})")
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RelatorVerdict {
    pub relator: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    pub backend: String,
    pub lambda: i64,
    pub f: String,
    pub images: Vec<String>,
    pub relators: Vec<RelatorVerdict>,
    /// All relators hold.
    pub endomorphism: bool,
    /// Bijectivity of the induced map; `None` if some relator fails or the backend is infinite.
    pub automorphism: Option<bool>,
    /// Images equal the `λ`-power map on generators.
    pub equals_power_map: bool,
    pub exact: bool,
    pub notes: Vec<String>,
}

fn base_report(backend: String, p: &GTPair, pres: &Presentation, images: &[Word], exact: bool) -> ActionReport {
    let mut notes = Vec::new();
    if !p.lambda_is_odd() {
        notes.push("lambda is even: generator images are trivial in every W-quotient".into());
    }
    if !exact {
        notes.push("finite-quotient verdicts are necessary-condition evidence".into());
    }
    ActionReport {
        backend,
        lambda: p.lambda,
        f: f2_format(&p.f),
        images: images.iter().map(|w| pres.format(w)).collect(),
        relators: Vec::new(),
        endomorphism: false,
        automorphism: None,
        equals_power_map: false,
        exact,
        notes,
    }
}

/// Evaluates the Drinfeld images on a finite quotient of `Br_n` (`n = ngens + 1`).
pub fn act_on_quotient(q: &PermQuotient, p: &GTPair) -> Result<ActionReport> {
    let pres = q.presentation();
    let n = pres.ngens() + 1;
    let images = drinfeld_images(n, p)?;
    let mut report = base_report(format!("quotient {} of order {}", q.label(), q.order()), p, pres, &images, false);
    for r in pres.relators() {
        report.relators.push(RelatorVerdict {
            relator: pres.format(r),
            holds: q.is_identity(&r.substitute(&images)?),
        });
    }
    report.endomorphism = report.relators.iter().all(|v| v.holds);
    if report.endomorphism {
        let map = induced_map(q, q, &images)?.expect("relators checked");
        report.automorphism = Some(is_bijective(&map, q.order()));
    }
    report.equals_power_map = images
        .iter()
        .enumerate()
        .all(|(g, w)| q.equal(w, &Word::gen(g).pow(p.lambda)));
    Ok(report)
}

/// Evaluates the Drinfeld images in `Br_n` itself via Garside normal forms.
pub fn act_exact(n: usize, p: &GTPair) -> Result<ActionReport> {
    if n < 2 {
        return Err(Error::Invalid("Br_n needs n >= 2".into()));
    }
    let g = Garside::new(CoxeterType::A(n - 1))?;
    let pres = g.presentation().clone();
    let images = drinfeld_images(n, p)?;
    let mut report = base_report(format!("Garside normal form in Br{n}"), p, &pres, &images, true);
    for r in pres.relators() {
        report.relators.push(RelatorVerdict {
            relator: pres.format(r),
            holds: g.normal_form(&r.substitute(&images)?)?.is_identity(),
        });
    }
    report.endomorphism = report.relators.iter().all(|v| v.holds);
    let mut power = true;
    for (i, w) in images.iter().enumerate() {
        power &= g.equal(w, &Word::gen(i).pow(p.lambda))?;
    }
    report.equals_power_map = power;
    Ok(report)
}

/// Induced element maps of two pairs compose as functions on a finite quotient.
pub fn composition_consistent(q: &PermQuotient, p1: &GTPair, p2: &GTPair) -> Result<Option<bool>> {
    let n = q.ngens() + 1;
    let i1 = drinfeld_images(n, p1)?;
    let i2 = drinfeld_images(n, p2)?;
    let (Some(m1), Some(m2)) = (induced_map(q, q, &i1)?, induced_map(q, q, &i2)?) else {
        return Ok(None);
    };
    // first p1, then p2: s ↦ F2(F1(s))
    let composed: Vec<Word> = i1.iter().map(|w| w.substitute(&i2)).collect::<Result<_>>()?;
    let Some(mc) = induced_map(q, q, &composed)? else {
        return Ok(Some(false));
    };
    Ok(Some((0..q.order()).all(|x| mc[x] == m2[m1[x]])))
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizationReport {
    pub n: usize,
    pub index: usize,
    pub generators: Vec<RelatorVerdict>,
    pub stabilized: bool,
}

/// Whether the Drinfeld images of `t = s_1², s_2, …, s_n` stay in
/// `⟨s_1², s_2, …, s_n⟩ ≤ Br_{n+1}`.
pub fn stabilizes_bn_subgroup(n: usize, p: &GTPair, limit: usize) -> Result<StabilizationReport> {
    if n < 2 {
        return Err(Error::Invalid("Art(B_n) needs n >= 2".into()));
    }
    let pres = catalog::braid_group(n + 1)?;
    let mut sub = vec![Word::gen(0).pow(2)];
    sub.extend((1..n).map(Word::gen));
    let table = todd_coxeter(&pres, &sub, limit);
    if !table.is_complete() {
        return Err(Error::BudgetExceeded(format!("coset enumeration exceeded {limit} cosets")));
    }
    let sys = SchreierSystem::new(&table)?;
    let images = drinfeld_images(n + 1, p)?;
    let mut gens = Vec::new();
    for (k, w) in sub.iter().enumerate() {
        let img = w.substitute(&images)?;
        gens.push(RelatorVerdict {
            relator: if k == 0 { "t".into() } else { pres.format(w) },
            holds: sys.rewrite(&img).is_some(),
        });
    }
    Ok(StabilizationReport {
        n,
        index: table.index(),
        stabilized: gens.iter().all(|v| v.holds),
        generators: gens,
    })
}

/// Matsumoto's images in `Art(D_n)`: `s_1 ↦ s_1^λ`, `s'_1 ↦ s'_1^λ`,
/// `s_i ↦ f(s_i², η_i) s_i^λ f(η_i, s_i²)`.
pub fn matsumoto_d_images(n: usize, p: &GTPair) -> Result<Vec<Word>> {
    if n < 3 {
        return Err(Error::Invalid("Matsumoto's formulas need n >= 3".into()));
    }
    let mut out = vec![Word::gen(0).pow(p.lambda), Word::gen(1).pow(p.lambda)];
    for i in 2..n {
        let s = Word::gen(i);
        out.push(p.sandwich(&s, &s.pow(2), &eta_word(n, i)?));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutationCheck {
    pub left: String,
    pub right: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatsumotoReport {
    pub n: usize,
    pub lambda: i64,
    pub f: String,
    pub images: Vec<String>,
    pub commutations: Vec<CommutationCheck>,
    pub all_hold: bool,
}

/// Checks `F(s_i)F(s_j) = F(s_j)F(s_i)` for `|i - j| ≥ 2` and
/// `F(s'_1)F(s_j) = F(s_j)F(s'_1)` for `j ≥ 3`, exactly.
pub fn matsumoto_report(n: usize, p: &GTPair) -> Result<MatsumotoReport> {
    let g = Garside::new(CoxeterType::D(n))?;
    let images = matsumoto_d_images(n, p)?;
    let names = g.alphabet().names().to_vec();
    // alphabet index of s_i (i ≥ 1) and s'_1
    let idx = |i: usize| if i == 1 { 0 } else { i };
    let mut pairs = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            pairs.push((idx(i), idx(j)));
        }
    }
    for j in 3..n {
        pairs.push((1, idx(j)));
    }
    let mut checks = Vec::new();
    for (a, b) in pairs {
        checks.push(CommutationCheck {
            left: format!("F({})", names[a]),
            right: format!("F({})", names[b]),
            holds: g.commutes(&images[a], &images[b])?,
        });
    }
    Ok(MatsumotoReport {
        n,
        lambda: p.lambda,
        f: f2_format(&p.f),
        images: images.iter().map(|w| g.format(w)).collect(),
        all_hold: checks.iter().all(|c| c.holds),
        commutations: checks,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MuReport {
    pub lhs_exponent_sum: i64,
    pub rhs_exponent_sum: i64,
    pub omega4_exponent_sum: i64,
    /// Solution of `lhs = rhs + 12 μ` over the integers, if any.
    pub mu: Option<i64>,
}

/// Abelianizes `F(s_1)F(s_2)F(s_1) = F(s_2)F(s_1)F(s_2) ω₄^μ` under
/// `Art(D_3) ≅ Br_4` (`s_1, s_2, s'_1 ↦ s_1, s_2, s_3`) and solves for `μ`.
pub fn mu_from_abelianization(p: &GTPair) -> Result<MuReport> {
    let images = matsumoto_d_images(3, p)?;
    let (f1, f2) = (&images[0], &images[2]);
    let lhs = exponent_sum(&f1.mul(f2).mul(f1));
    let rhs = exponent_sum(&f2.mul(f1).mul(f2));
    let omega = exponent_sum(&catalog::omega4());
    let diff = lhs - rhs;
    Ok(MuReport {
        lhs_exponent_sum: lhs,
        rhs_exponent_sum: rhs,
        omega4_exponent_sum: omega,
        mu: (diff % omega == 0).then_some(diff / omega),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GdReport {
    pub m: usize,
    pub lambda: i64,
    pub g: String,
    pub images: Vec<String>,
    /// `g` is trivial in `W` and in the abelianization of `P`.
    pub g_in_p: bool,
    pub g_trivial_in_p_abelianization: bool,
    /// (1) bijective on the W-quotient (evidence only).
    pub automorphism_on_w: Option<bool>,
    /// (2) the braid relation is preserved (exact).
    pub homomorphism: bool,
    /// (3) `Δ ↦ Δ^λ g` for odd `m`, `Δ ↦ Δ^λ` for even `m` (exact).
    pub delta_image: bool,
    /// (4) `Δ² ↦ Δ^{2λ}` (exact).
    pub delta_squared_image: bool,
    /// Normal form of `φ(Δ)`.
    pub delta_image_nf: String,
}

/// Checks the dihedral conditions for `a ↦ a^λ`, `b ↦ g⁻¹ b^λ g` in `Art(I₂(m))`.
pub fn check_gd_pair(m: usize, lambda: i64, g: &Word, limit: usize) -> Result<GdReport> {
    let eng = Garside::new(CoxeterType::I2(m))?;
    let pres = eng.presentation().clone();
    if g.max_generator().is_some_and(|x| x >= 2) {
        return Err(Error::Alphabet("g must be a word over a, b".into()));
    }
    let w = torsion_quotient(&pres, &[2, 2], limit)?;
    let d = derived_membership(&pres, w.table(), g)?;
    if !d.in_subgroup || !d.trivial_in_abelianization {
        return Err(Error::Precondition(format!(
            "g = {} is not in the derived subgroup of the pure braid group (in P: {}, trivial in P^ab: {})",
            pres.format(g),
            d.in_subgroup,
            d.trivial_in_abelianization
        )));
    }
    let a = Word::gen(0);
    let b = Word::gen(1);
    let images = vec![a.pow(lambda), b.pow(lambda).conjugate_by(&g.inverse())];
    let relator = &pres.relators()[0];
    let homomorphism = eng.normal_form(&relator.substitute(&images)?)?.is_identity();
    let delta = pres.parse_word(&alternating("a", "b", m))?;
    let phi_delta = delta.substitute(&images)?;
    let target = if m % 2 == 1 { delta.pow(lambda).mul(g) } else { delta.pow(lambda) };
    let delta_image = eng.equal(&phi_delta, &target)?;
    let delta_squared_image = eng.equal(&delta.pow(2).substitute(&images)?, &delta.pow(2 * lambda))?;
    let automorphism_on_w = induced_map(&w, &w, &images)?.map(|map| is_bijective(&map, w.order()));
    let nf = eng.normal_form(&phi_delta)?;
    Ok(GdReport {
        m,
        lambda,
        g: pres.format(g),
        images: images.iter().map(|x| pres.format(x)).collect(),
        g_in_p: d.in_subgroup,
        g_trivial_in_p_abelianization: d.trivial_in_abelianization,
        automorphism_on_w,
        homomorphism,
        delta_image,
        delta_squared_image,
        delta_image_nf: eng.nf_string(&nf),
    })
}
