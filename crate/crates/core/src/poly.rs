//! Multivariate polynomials with cyclotomic coefficients, graded-lex ordered.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::{CycNum, Rat};
use crate::error::{Error, Result};
use crate::matgroup::RMatrix;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Mono, CycNum>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CycNum) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, CycNum::one())
    }

    /// The variable `z_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, CycNum::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: CycNum) -> Self {
        assert_eq!(exps.len(), nvars, "exponent length must match nvars");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono(exps), c);
        }
        p
    }

    /// Linear form `Σ coeffs[i] z_i`.
    pub fn linear(coeffs: &[CycNum]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Self::unit_exps(n, i), c.clone());
        }
        p
    }

    fn unit_exps(n: usize, i: usize) -> Mono {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, CycNum)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Arity(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    nvars
                )));
            }
            p.add_term(Mono(e), c);
        }
        Ok(p)
    }

    /// Integer-coefficient helper used by catalogs and tests.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, i64, &[u32])]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(n, d, e)| (e.to_vec(), CycNum::from_frac(*n, *d))),
        )
        .expect("exponent lengths match")
    }

    fn add_term(&mut self, m: Mono, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &CycNum)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> CycNum {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(CycNum::zero)
    }

    pub fn leading_term(&self) -> Option<(&Mono, &CycNum)> {
        self.terms.last_key_value()
    }

    pub fn leading_coeff(&self) -> Option<&CycNum> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Mono::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Arity(format!(
                "{} variables vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut p = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                p.add_term(Mono(e), c1 * c2);
            }
        }
        Ok(p)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("arity mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("arity mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("arity mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&CycNum) -> CycNum) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Substitutes `subs[i]` for `z_{i+1}`.
    pub fn compose(&self, subs: &[MPoly]) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::Arity(format!(
                "{} substitutions for {} variables",
                subs.len(),
                self.nvars
            )));
        }
        let target = subs.first().map_or(0, MPoly::nvars);
        if subs.iter().any(|s| s.nvars != target) {
            return Err(Error::Arity("substitutions have different arities".into()));
        }
        let mut powers: Vec<Vec<MPoly>> = subs.iter().map(|s| vec![Self::one(target), s.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&subs[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// `z ↦ p(g z)` for a square matrix `g` acting on column vectors.
    pub fn act(&self, g: &RMatrix) -> Result<Self> {
        if g.dim() != self.nvars {
            return Err(Error::Arity(format!(
                "{}x{} matrix on {} variables",
                g.dim(),
                g.dim(),
                self.nvars
            )));
        }
        let subs: Vec<MPoly> = (0..self.nvars).map(|i| Self::linear(g.row(i))).collect();
        self.compose(&subs)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut x = m.0.clone();
            x[i] -= 1;
            p.add_term(Mono(x), c * &CycNum::from_int(e as i64));
        }
        p
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(z)
                    .fold(c.to_complex(), |acc, (&e, zi)| acc * zi.powu(e))
            })
            .sum()
    }

    pub fn eval(&self, z: &[CycNum]) -> CycNum {
        self.terms.iter().fold(CycNum::zero(), |acc, (m, c)| {
            let t = m.0.iter().zip(z).fold(c.clone(), |t, (&e, zi)| {
                t * zi.pow(e as i64).expect("nonnegative exponent")
            });
            acc + t
        })
    }

    /// Coefficient vector with respect to an explicit monomial list.
    pub fn coords(&self, basis: &[Mono]) -> Vec<CycNum> {
        basis
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(CycNum::zero))
            .collect()
    }

    pub fn from_coords(nvars: usize, basis: &[Mono], coords: &[CycNum]) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in basis.iter().zip(coords) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

/// All exponent vectors of total degree `d` in `n` variables, increasing.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Mono(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![Mono(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn count_monomials(n: usize, d: u32) -> u128 {
    // C(d + n - 1, n - 1)
    let mut num: u128 = 1;
    for i in 0..(n as u128).saturating_sub(1) {
        num = num * (d as u128 + 1 + i) / (i + 1);
    }
    num
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("z{}", i + 1)
                    } else {
                        format!("z{}^{}", i + 1, e)
                    }
                })
                .collect();
            let (neg, body) = match c.as_rational() {
                Some(q) => (q.is_negative(), CycNum::from_rat(q.abs()).to_string()),
                None => (false, format!("({c})")),
            };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = body == "1";
            if vars.is_empty() {
                f.write_str(&body)?;
            } else if unit {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{}*{}", body, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    exps: Vec<u32>,
    coef: CycNum,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRepr {
                    exps: m.0.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        MPoly::from_terms(r.nvars, r.terms.into_iter().map(|t| (t.exps, t.coef)))
            .map_err(serde::de::Error::custom)
    }
}

/// Parses expressions such as `z1^4 - 5/2*z1*z2^3 + E(3)*(z1 + z2)^2`.
///
/// Variables are `z<i>` or `x<i>` (1-based); `E(n)` is a primitive n-th root of unity.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MPoly> {
    let mut p = PolyParser {
        s: text.as_bytes(),
        i: 0,
        nvars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(Error::Parse(format!(
            "unexpected `{}` at offset {}",
            &text[p.i..],
            p.i
        )));
    }
    Ok(out)
}

struct PolyParser<'a> {
    s: &'a [u8],
    i: usize,
    nvars: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.power()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                    acc = acc.scale(&c.inv().map_err(|_| Error::Parse("division by zero".into()))?);
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.number()?;
            let e: u32 = e
                .to_string()
                .parse()
                .map_err(|_| Error::Parse("exponent must be a small nonnegative integer".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::Parse(format!("expected a number at offset {start}")));
        }
        let text = std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits");
        text.parse().map_err(|_| Error::Parse(format!("bad number `{text}`")))
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(MPoly::constant(self.nvars, CycNum::from_rat(Rat::from_integer(n))))
            }
            Some(b'E') => {
                self.i += 1;
                if self.peek() != Some(b'(') {
                    return Err(Error::Parse("expected `E(n)`".into()));
                }
                self.i += 1;
                let n: u32 = self
                    .number()?
                    .to_string()
                    .parse()
                    .map_err(|_| Error::Parse("root of unity order too large".into()))?;
                if self.peek() != Some(b')') || n == 0 {
                    return Err(Error::Parse("expected `E(n)` with n > 0".into()));
                }
                self.i += 1;
                Ok(MPoly::constant(self.nvars, CycNum::root_of_unity(n, 1)))
            }
            Some(b'z') | Some(b'x') => {
                self.i += 1;
                let k: usize = self
                    .number()?
                    .to_string()
                    .parse()
                    .map_err(|_| Error::Parse("bad variable index".into()))?;
                if k == 0 || k > self.nvars {
                    return Err(Error::UnknownSymbol(format!("variable index {k}")));
                }
                Ok(MPoly::var(self.nvars, k - 1))
            }
            other => Err(Error::Parse(format!(
                "unexpected {:?} at offset {}",
                other.map(|c| c as char),
                self.i
            ))),
        }
    }
}

impl MPoly {
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(CycNum::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = Mono(vec![2, 0]);
        let b = Mono(vec![1, 1]);
        let c = Mono(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert_eq!(monomials_of_degree(2, 2), vec![Mono(vec![0, 2]), b, a]);
        assert_eq!(monomials_of_degree(3, 4).len() as u128, count_monomials(3, 4));
    }

    #[test]
    fn compose_square() {
        let p = parse_poly("z1^2", 1).unwrap();
        let s = parse_poly("z1 + z2", 2).unwrap();
        let q = p.compose(&[s]).unwrap();
        assert_eq!(q, parse_poly("z1^2 + 2*z1*z2 + z2^2", 2).unwrap());
        assert!(matches!(p.compose(&[]), Err(Error::Arity(_))));
    }

    #[test]
    fn parse_and_display() {
        let p = parse_poly("z1^6 + 5/2*z1^3*z2^3 - 1/8*z2^6", 2).unwrap();
        assert_eq!(p.to_string(), "z1^6 + 5/2*z1^3*z2^3 - 1/8*z2^6");
        let q = parse_poly("(x1^2 - x2^2)*(x1^4 + 12*x1^2*x2^2 + 4*x2^4)", 2).unwrap();
        assert_eq!(q.degree(), Some(6));
        assert_eq!(q.coefficient(&[6, 0]), CycNum::one());
        assert_eq!(q.coefficient(&[0, 6]), CycNum::from_int(-4));
        let r = parse_poly("E(3)*z1", 1).unwrap();
        assert_eq!(r.coefficient(&[1]), CycNum::root_of_unity(3, 1));
        assert!(parse_poly("z3", 2).is_err());
        assert!(parse_poly("z1 +", 2).is_err());
    }

    #[test]
    fn derivative_and_eval() {
        let p = parse_poly("z1^3*z2 + 2*z2^2", 2).unwrap();
        assert_eq!(p.derivative(0), parse_poly("3*z1^2*z2", 2).unwrap());
        assert_eq!(p.derivative(1), parse_poly("z1^3 + 4*z2", 2).unwrap());
        let v = p.eval(&[CycNum::from_int(2), CycNum::from_int(3)]);
        assert_eq!(v, CycNum::from_int(42));
    }

    #[test]
    fn json_round_trip() {
        let p = parse_poly("z1^4 - z1*z2^3 + E(4)", 2).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert!(s.starts_with(r#"{"nvars":2,"terms":[{"exps":[4,0]"#));
    }
}
