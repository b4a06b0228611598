use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    label: String,
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(label: &str, alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.max_generator().is_some_and(|g| g >= alphabet.len()) {
                return Err(Error::Alphabet(format!(
                    "relator uses a generator outside {:?}",
                    alphabet.names()
                )));
            }
        }
        Ok(Presentation {
            label: label.to_string(),
            alphabet,
            relators,
        })
    }

    /// Relations are written `u = v` (chains `u = v = w` allowed) or as bare relators.
    pub fn parse<S: AsRef<str>>(label: &str, gens: &[S], relations: &[S]) -> Result<Self> {
        let alphabet = Alphabet::new(gens)?;
        let mut relators = Vec::new();
        for rel in relations {
            relators.extend(parse_relation(&alphabet, rel.as_ref())?);
        }
        Self::new(label, alphabet, relators)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ngens(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse(text)
    }

    pub fn format(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn with_alphabet_macros(mut self, macros: Vec<(String, Word)>) -> Self {
        self.alphabet = self.alphabet.with_macros(macros);
        self
    }

    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Self {
        let mut p = self.clone();
        p.relators.extend(extra);
        p
    }

    /// Adds `g^{orders[g]}` for every generator with a nonzero order.
    pub fn with_torsion(&self, orders: &[u32]) -> Result<Self> {
        if orders.len() != self.ngens() {
            return Err(Error::Arity(format!(
                "{} orders for {} generators",
                orders.len(),
                self.ngens()
            )));
        }
        let extra = orders
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(g, &k)| Word::gen_pow(g, k as i64));
        let label = format!("{}/({:?})", self.label, orders);
        Ok(self.with_relators(extra).with_label(&label))
    }
}

pub fn parse_relation(alphabet: &Alphabet, text: &str) -> Result<Vec<Word>> {
    let sides: Vec<Word> = text
        .split('=')
        .map(|s| alphabet.parse(s))
        .collect::<Result<_>>()?;
    Ok(match sides.len() {
        1 => sides,
        _ => sides
            .windows(2)
            .map(|p| p[0].mul(&p[1].inverse()))
            .collect(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationRepr {
    #[serde(default)]
    label: Option<String>,
    generators: Vec<String>,
    relators: Vec<String>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationRepr {
            label: Some(self.label.clone()),
            generators: self.alphabet.names().to_vec(),
            relators: self.relators.iter().map(|r| self.alphabet.format(r)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PresentationRepr::deserialize(d)?;
        Presentation::parse(
            r.label.as_deref().unwrap_or("input"),
            &r.generators,
            &r.relators,
        )
        .map_err(serde::de::Error::custom)
    }
}
