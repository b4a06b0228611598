use std::fmt;

use crate::error::{Error, Result};

/// Freely reduced word. Letter `g + 1` is generator `g`, `-(g + 1)` its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

pub fn letter(g: usize, inverse: bool) -> i32 {
    let l = g as i32 + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn generator_of(l: i32) -> usize {
    (l.unsigned_abs() - 1) as usize
}

impl Word {
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert_ne!(l, 0, "zero letter");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![letter(g, false)])
    }

    pub fn gen_pow(g: usize, k: i64) -> Self {
        Word::gen(g).pow(k)
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn mul(&self, other: &Word) -> Self {
        Word::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Self {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// `u w u⁻¹`.
    pub fn conjugate_by(&self, u: &Word) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Replaces generator `g` by `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut out = Vec::new();
        for &l in &self.0 {
            let g = generator_of(l);
            let img = images.get(g).ok_or_else(|| {
                Error::Arity(format!("no image for generator {g} ({} given)", images.len()))
            })?;
            if l > 0 {
                out.extend_from_slice(&img.0);
            } else {
                out.extend(img.0.iter().rev().map(|x| -x));
            }
        }
        Ok(Word::new(out))
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for &l in &self.0 {
            let g = generator_of(l);
            if g < ngens {
                v[g] += l.signum() as i64;
            }
        }
        v
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&l| generator_of(l)).max()
    }

    /// Cyclic reduction.
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0] == -v[v.len() - 1] {
            v = &v[1..v.len() - 1];
        }
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// Total exponent sum of a word.
pub fn exponent_sum(w: &Word) -> i64 {
    w.exponent_sum()
}

/// Membership of a word over `{x, y}` in the derived subgroup of the free group.
///
/// In a free group the derived subgroup is the kernel of abelianization, so this
/// is exactly the vanishing of both exponent sums.
pub fn is_in_derived_f2(w: &Word) -> Result<bool> {
    if w.max_generator().is_some_and(|g| g >= 2) {
        return Err(Error::Alphabet("expected a word over two letters".into()));
    }
    Ok(w.exponent_sums(2).iter().all(|&s| s == 0))
}

/// Generator names plus optional named macros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    macros: Vec<(String, Word)>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Invalid(format!("bad generator name `{n}`")));
            }
            if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
                return Err(Error::Invalid(format!("bad generator name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Alphabet {
            names,
            macros: Vec::new(),
        })
    }

    pub fn with_macros(mut self, macros: Vec<(String, Word)>) -> Self {
        self.macros = macros;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        let mut p = WordParser {
            alpha: self,
            s: text.as_bytes(),
            text,
            i: 0,
        };
        let w = p.sequence()?;
        p.skip_ws();
        if p.i < p.s.len() {
            return Err(Error::Parse(format!(
                "unexpected `{}` in `{text}`",
                &text[p.i..]
            )));
        }
        Ok(w)
    }

    /// Renders a word with runs collapsed, e.g. `s1^2 s2^-1`.
    pub fn format(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * l.signum() as i64;
            let name = &self.names[generator_of(l)];
            parts.push(if k == 1 {
                name.clone()
            } else {
                format!("{name}^{k}")
            });
            i = j;
        }
        parts.join(" ")
    }

    /// Generator names for each letter of `w` (inverses suffixed with `^-1`).
    pub fn letter_names(&self, w: &Word) -> Vec<String> {
        w.letters()
            .iter()
            .map(|&l| {
                let n = &self.names[generator_of(l)];
                if l > 0 {
                    n.clone()
                } else {
                    format!("{n}^-1")
                }
            })
            .collect()
    }

    fn longest_match(&self, rest: &str) -> Option<(usize, Word)> {
        let mut best: Option<(usize, Word)> = None;
        for (g, n) in self.names.iter().enumerate() {
            if rest.starts_with(n.as_str()) && best.as_ref().is_none_or(|(l, _)| n.len() > *l) {
                best = Some((n.len(), Word::gen(g)));
            }
        }
        for (n, w) in &self.macros {
            if rest.starts_with(n.as_str()) && best.as_ref().is_none_or(|(l, _)| n.len() > *l) {
                best = Some((n.len(), w.clone()));
            }
        }
        best
    }
}

struct WordParser<'a> {
    alpha: &'a Alphabet,
    s: &'a [u8],
    text: &'a str,
    i: usize,
}

impl WordParser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i].is_ascii_whitespace() || self.s[self.i] == b'*' || self.s[self.i] == b'.') {
            self.i += 1;
        }
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        loop {
            self.skip_ws();
            match self.s.get(self.i) {
                None | Some(b')') | Some(b']') | Some(b',') => return Ok(w),
                _ => {
                    let item = self.item()?;
                    w = w.mul(&item);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.s.get(self.i) == Some(&b'^') {
            self.i += 1;
            let k = self.exponent()?;
            return Ok(atom.pow(k));
        }
        Ok(atom)
    }

    fn exponent(&mut self) -> Result<i64> {
        let braced = self.s.get(self.i) == Some(&b'{');
        if braced {
            self.i += 1;
        }
        let start = self.i;
        if matches!(self.s.get(self.i), Some(b'-') | Some(b'+')) {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let txt = &self.text[start..self.i];
        let k: i64 = txt
            .parse()
            .map_err(|_| Error::Parse(format!("malformed exponent `{txt}` in `{}`", self.text)))?;
        if braced {
            if self.s.get(self.i) != Some(&b'}') {
                return Err(Error::Parse(format!("missing `}}` in `{}`", self.text)));
            }
            self.i += 1;
        }
        Ok(k)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.i) != Some(&c) {
            return Err(Error::Parse(format!("expected `{}` in `{}`", c as char, self.text)));
        }
        self.i += 1;
        Ok(())
    }

    fn atom(&mut self) -> Result<Word> {
        match self.s[self.i] {
            b'(' => {
                self.i += 1;
                let w = self.sequence()?;
                self.expect(b')')?;
                Ok(w)
            }
            b'[' => {
                self.i += 1;
                let u = self.sequence()?;
                self.expect(b',')?;
                let v = self.sequence()?;
                self.expect(b']')?;
                Ok(Word::commutator(&u, &v))
            }
            b'1' => {
                self.i += 1;
                Ok(Word::empty())
            }
            _ => {
                let rest = &self.text[self.i..];
                if let Some((len, w)) = self.alpha.longest_match(rest) {
                    self.i += len;
                    return Ok(w);
                }
                let c = self.s[self.i];
                if c.is_ascii_uppercase() {
                    let lowered = format!("{}{}", (c as char).to_ascii_lowercase(), &rest[1..]);
                    if let Some((len, w)) = self.alpha.longest_match(&lowered) {
                        self.i += len;
                        return Ok(w.inverse());
                    }
                }
                let end = rest
                    .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_' || ch == '\''))
                    .unwrap_or(rest.len())
                    .max(1);
                Err(Error::UnknownSymbol(rest[..end].to_string()))
            }
        }
    }
}

/// Parses a two-letter word over `{x, y}`.
pub fn parse_f2(text: &str) -> Result<Word> {
    Alphabet::new(&["x", "y"])?.parse(text)
}
