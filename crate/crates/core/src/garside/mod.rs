//! Garside normal forms for spherical Artin groups of types A, B, D and I₂(m).
//!
//! Simple elements are elements of the Coxeter group, stored as permutations
//! of a root system. A normal form is `Δ^k · x₁ ⋯ x_r` with each pair
//! `(x_i, x_{i+1})` left-weighted, i.e. every left descent of `x_{i+1}` is a
//! right descent of `x_i`.

mod roots;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpgroups::catalog;
use crate::fpgroups::hom::WordBackend;
use crate::fpgroups::{Alphabet, Presentation, Word};
use roots::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    I2(usize),
}

impl CoxeterType {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 2,
            CoxeterType::I2(m) => m >= 3,
        };
        let max_rank = match self {
            CoxeterType::I2(m) => m <= 4096,
            _ => self.rank() <= 40,
        };
        if ok && max_rank {
            Ok(self)
        } else {
            Err(Error::Invalid(format!("unsupported Coxeter type {self}")))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::I2(_) => 2,
        }
    }

    pub fn generator_names(self) -> Vec<String> {
        match self {
            CoxeterType::A(n) => (1..=n).map(|i| format!("s{i}")).collect(),
            CoxeterType::B(n) => std::iter::once("t".to_string())
                .chain((2..=n).map(|i| format!("s{i}")))
                .collect(),
            CoxeterType::D(n) => ["s1".to_string(), "s1p".to_string()]
                .into_iter()
                .chain((2..n).map(|i| format!("s{i}")))
                .collect(),
            CoxeterType::I2(_) => vec!["a".into(), "b".into()],
        }
    }

    /// Artin presentation with catalog naming; D types carry the `w<r>`,
    /// `eta<r>` and `Delta<r>` macros.
    pub fn presentation(self) -> Result<Presentation> {
        let p = self.plain_presentation()?;
        Ok(match self {
            CoxeterType::D(n) => p.with_alphabet_macros(d_macros(n)),
            _ => p,
        })
    }

    fn plain_presentation(self) -> Result<Presentation> {
        Ok(match self {
            CoxeterType::A(n) => catalog::braid_group(n + 1)?,
            CoxeterType::B(n) => catalog::artin_b(n)?,
            CoxeterType::D(n) => catalog::artin_d(n)?,
            CoxeterType::I2(m) => catalog::artin_i2(m)?,
        })
    }

    /// Number of reflections, i.e. the length of `Δ`.
    pub fn delta_length(self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::I2(m) => m,
        }
    }

    fn root_system(self) -> RootSystem {
        match self {
            CoxeterType::A(n) => RootSystem::type_a(n),
            CoxeterType::B(n) => RootSystem::type_b(n),
            CoxeterType::D(n) => RootSystem::type_d(n),
            CoxeterType::I2(m) => RootSystem::type_i2(m),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown Coxeter type `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let ty = if let Some(m) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            CoxeterType::I2(num(m)?)
        } else if let Some(m) = s.strip_prefix("I2_") {
            CoxeterType::I2(num(m)?)
        } else if let Some(n) = s.strip_prefix('A') {
            CoxeterType::A(num(n)?)
        } else if let Some(n) = s.strip_prefix('B') {
            CoxeterType::B(num(n)?)
        } else if let Some(n) = s.strip_prefix('D') {
            CoxeterType::D(num(n)?)
        } else {
            return Err(bad());
        };
        ty.validate()
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coxeter group element as a permutation of the roots.
type Elem = Box<[u16]>;

/// `Δ^delta_power · factors[0] ⋯ factors[r-1]`, factors neither trivial nor `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    pub delta_power: i64,
    factors: Vec<Elem>,
}

impl GarsideNF {
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Number of non-`Δ` simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

/// Serialized normal form: reduced words of the factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NfRepr {
    pub delta_power: i64,
    pub factors: Vec<Vec<String>>,
}

/// Normal-form engine for one Coxeter type.
#[derive(Clone, Debug)]
pub struct Garside {
    ty: CoxeterType,
    roots: RootSystem,
    presentation: Presentation,
    w0: Elem,
    identity: Elem,
    /// `lift(w0 s)` for each generator `s`.
    co_gens: Vec<Elem>,
}

impl Garside {
    pub fn new(ty: CoxeterType) -> Result<Self> {
        let mut g = Self::bare(ty)?;
        g.presentation = ty.presentation()?;
        Ok(g)
    }

    /// Engine over the catalog presentation without macros.
    fn bare(ty: CoxeterType) -> Result<Self> {
        let ty = ty.validate()?;
        let roots = ty.root_system();
        let identity: Elem = (0..roots.nroots() as u16).collect();
        let mut g = Garside {
            ty,
            presentation: ty.plain_presentation()?,
            w0: identity.clone(),
            identity,
            co_gens: Vec::new(),
            roots,
        };
        let mut w = g.identity.clone();
        while let Some(s) = (0..g.rank()).find(|&s| !g.is_right_descent(&w, s)) {
            w = g.mul_gen(&w, s);
        }
        g.co_gens = (0..g.rank()).map(|s| g.mul_gen(&w, s)).collect();
        g.w0 = w;
        Ok(g)
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        self.presentation.parse_word(text)
    }

    pub fn format(&self, w: &Word) -> String {
        self.presentation.format(w)
    }

    fn compose(&self, u: &[u16], v: &[u16]) -> Elem {
        v.iter().map(|&x| u[x as usize]).collect()
    }

    fn inverse(&self, u: &[u16]) -> Elem {
        let mut inv = vec![0u16; u.len()];
        for (i, &x) in u.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        inv.into_boxed_slice()
    }

    fn mul_gen(&self, w: &[u16], s: usize) -> Elem {
        self.compose(w, &self.roots.gens[s])
    }

    fn gen_mul(&self, s: usize, w: &[u16]) -> Elem {
        self.compose(&self.roots.gens[s], w)
    }

    fn is_right_descent(&self, w: &[u16], s: usize) -> bool {
        !self.roots.positive[w[self.roots.simple[s] as usize] as usize]
    }

    fn right_descents(&self, w: &[u16]) -> u64 {
        (0..self.rank())
            .filter(|&s| self.is_right_descent(w, s))
            .fold(0, |m, s| m | 1 << s)
    }

    fn left_descents(&self, w: &[u16]) -> u64 {
        self.right_descents(&self.inverse(w))
    }

    /// Coxeter length: the number of positive roots sent to negative ones.
    fn length(&self, w: &[u16]) -> usize {
        w.iter()
            .enumerate()
            .filter(|&(a, &b)| self.roots.positive[a] && !self.roots.positive[b as usize])
            .count()
    }

    /// `τ(x) = Δ x Δ⁻¹`, computed as `w0 x w0`.
    fn tau(&self, x: &[u16]) -> Elem {
        self.compose(&self.compose(&self.w0, x), &self.w0)
    }

    /// Left-greedy reduced word, as generator indices.
    fn reduced_word(&self, w: &[u16]) -> Vec<usize> {
        let mut w: Elem = w.into();
        let mut out = Vec::new();
        while *w != *self.identity {
            let l = self.left_descents(&w);
            let s = l.trailing_zeros() as usize;
            out.push(s);
            w = self.gen_mul(s, &w);
        }
        out
    }

    /// Makes `(a, b)` left-weighted, preserving the product `ab`.
    fn normalize_pair(&self, a: &mut Elem, b: &mut Elem) {
        loop {
            let moves = self.left_descents(b) & !self.right_descents(a);
            if moves == 0 {
                return;
            }
            let s = moves.trailing_zeros() as usize;
            *a = self.mul_gen(a, s);
            *b = self.gen_mul(s, b);
        }
    }

    /// Right multiplication of a normal form by a simple element.
    fn push_simple(&self, nf: &mut GarsideNF, y: Elem) {
        if *y == *self.identity {
            return;
        }
        let mut cur = y;
        let mut out = Vec::with_capacity(nf.factors.len() + 1);
        while let Some(mut x) = nf.factors.pop() {
            self.normalize_pair(&mut x, &mut cur);
            out.push(cur);
            cur = x;
        }
        out.push(cur);
        out.reverse();
        let mut factors = out.into_iter().filter(|x| **x != *self.identity).peekable();
        while factors.next_if(|x| **x == *self.w0).is_some() {
            nf.delta_power += 1;
        }
        nf.factors = factors.collect();
    }

    fn push_delta_inverse(&self, nf: &mut GarsideNF) {
        nf.delta_power -= 1;
        nf.factors = nf.factors.iter().map(|x| self.tau(x)).collect();
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.max_generator().is_some_and(|g| g >= self.rank()) {
            return Err(Error::Alphabet(format!(
                "word uses a generator outside {:?}",
                self.alphabet().names()
            )));
        }
        Ok(())
    }

    pub fn identity_nf(&self) -> GarsideNF {
        GarsideNF {
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    /// Right-multiplies `nf` by `w` in place.
    pub fn extend(&self, nf: &mut GarsideNF, w: &Word) -> Result<()> {
        self.check_word(w)?;
        for &l in w.letters() {
            let s = (l.unsigned_abs() - 1) as usize;
            if l > 0 {
                self.push_simple(nf, self.roots.gens[s].clone().into_boxed_slice());
            } else {
                // s⁻¹ = Δ⁻¹ · lift(w0 s)
                self.push_delta_inverse(nf);
                self.push_simple(nf, self.co_gens[s].clone());
            }
        }
        Ok(())
    }

    pub fn normal_form(&self, w: &Word) -> Result<GarsideNF> {
        let mut nf = self.identity_nf();
        self.extend(&mut nf, w)?;
        Ok(nf)
    }

    pub fn normal_form_text(&self, text: &str) -> Result<GarsideNF> {
        self.normal_form(&self.parse(text)?)
    }

    /// Word spelling the normal form: `Δ^k` followed by reduced words of the factors.
    pub fn nf_word(&self, nf: &GarsideNF) -> Word {
        let delta = self.delta_word();
        let mut w = delta.pow(nf.delta_power);
        for x in &nf.factors {
            w = w.mul(&Word::new(self.reduced_word(x).into_iter().map(|s| s as i32 + 1)));
        }
        w
    }

    pub fn nf_repr(&self, nf: &GarsideNF) -> NfRepr {
        let names = self.alphabet().names();
        NfRepr {
            delta_power: nf.delta_power,
            factors: nf
                .factors
                .iter()
                .map(|x| self.reduced_word(x).into_iter().map(|s| names[s].clone()).collect())
                .collect(),
        }
    }

    pub fn nf_string(&self, nf: &GarsideNF) -> String {
        let repr = self.nf_repr(nf);
        let mut parts = Vec::new();
        if repr.delta_power != 0 {
            parts.push(format!("Delta^{}", repr.delta_power));
        }
        parts.extend(repr.factors.iter().map(|f| format!("({})", f.join(" "))));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    /// Fixed reduced expression of the Garside element.
    pub fn delta_word(&self) -> Word {
        Word::new(self.reduced_word(&self.w0).into_iter().map(|s| s as i32 + 1))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.normal_form(&u.mul(&v.inverse()))?.is_identity())
    }

    pub fn commutes(&self, u: &Word, v: &Word) -> Result<bool> {
        self.equal(&u.mul(v), &v.mul(u))
    }

    pub fn is_central(&self, u: &Word) -> Result<bool> {
        for g in 0..self.rank() {
            if !self.commutes(u, &Word::gen(g))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generator permutation `s ↦ Δ s Δ⁻¹`.
    pub fn conjugation_by_delta(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|s| {
                let img = self.tau(&self.roots.gens[s]);
                (0..self.rank())
                    .find(|&t| *self.roots.gens[t] == *img)
                    .expect("τ permutes the simple reflections")
            })
            .collect()
    }

    /// Coxeter length of `Δ`, from the root action.
    pub fn delta_length(&self) -> usize {
        self.length(&self.w0)
    }
}

/// Exact backend: the word problem of the Artin group itself.
impl WordBackend for Garside {
    fn describe(&self) -> String {
        format!("Garside normal form in Art({})", self.ty)
    }

    fn exact(&self) -> bool {
        true
    }

    fn ngens(&self) -> usize {
        self.rank()
    }

    fn is_identity(&self, w: &Word) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }
}

pub fn normal_form(ty: CoxeterType, w: &Word) -> Result<GarsideNF> {
    Garside::new(ty)?.normal_form(w)
}

pub fn garside_delta(ty: CoxeterType) -> Result<Word> {
    Ok(Garside::new(ty)?.delta_word())
}

pub fn equal(ty: CoxeterType, u: &Word, v: &Word) -> Result<bool> {
    Garside::new(ty)?.equal(u, v)
}

pub fn commutes(ty: CoxeterType, u: &Word, v: &Word) -> Result<bool> {
    Garside::new(ty)?.commutes(u, v)
}

pub fn is_central(ty: CoxeterType, u: &Word) -> Result<bool> {
    Garside::new(ty)?.is_central(u)
}

/// Named generator permutation induced by conjugation by `Δ` in a D type.
pub fn conjugation_by_delta(ty: CoxeterType) -> Result<Vec<(String, String)>> {
    if !matches!(ty, CoxeterType::D(_)) {
        return Err(Error::Precondition(format!("{ty} is not of type D")));
    }
    let g = Garside::new(ty)?;
    let names = g.alphabet().names();
    Ok(g.conjugation_by_delta()
        .into_iter()
        .enumerate()
        .map(|(s, t)| (names[s].clone(), names[t].clone()))
        .collect())
}

/// Index of `s_i` (`i ≥ 2`) in the D alphabet `s1, s1p, s2, …`.
pub fn d_index(i: usize) -> usize {
    i
}

/// `w_r = s1 s1p s2 ⋯ s_r` in the `D_n` alphabet; needs `2 ≤ r ≤ n - 1`.
pub fn w_word(n: usize, r: usize) -> Result<Word> {
    if r < 2 || r + 1 > n {
        return Err(Error::Alphabet(format!("w{r} needs s{r}, which is not in D{n}")));
    }
    Ok(Word::new((0..=r).map(|g| g as i32 + 1)))
}

/// `η_r = s_{r-1} ⋯ s2 s1 s1p s2 ⋯ s_{r-1}`; needs `2 ≤ r ≤ n`.
pub fn eta_word(n: usize, r: usize) -> Result<Word> {
    if r < 2 || r > n {
        return Err(Error::Alphabet(format!("eta{r} is not defined in D{n}")));
    }
    let up: Vec<i32> = (2..r).map(|i| d_index(i) as i32 + 1).collect();
    let mut letters: Vec<i32> = up.iter().rev().copied().collect();
    letters.extend([1, 2]);
    letters.extend(up);
    Ok(Word::new(letters))
}

/// `Δ_r`, the Garside element of `Art(D_r) ⊂ Art(D_n)`; needs `2 ≤ r ≤ n`.
pub fn delta_d_word(n: usize, r: usize) -> Result<Word> {
    if r < 2 || r > n {
        return Err(Error::Alphabet(format!("Delta{r} is not defined in D{n}")));
    }
    // the generators of D_r are the first r generators of D_n
    Ok(Garside::bare(CoxeterType::D(r))?.delta_word())
}

fn d_macros(n: usize) -> Vec<(String, Word)> {
    let mut out = Vec::new();
    for r in 2..=n {
        if let Ok(w) = w_word(n, r) {
            out.push((format!("w{r}"), w));
        }
        out.push((format!("eta{r}"), eta_word(n, r).expect("in range")));
        out.push((format!("Delta{r}"), delta_d_word(n, r).expect("in range")));
    }
    out
}
