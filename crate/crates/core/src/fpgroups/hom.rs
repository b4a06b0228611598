use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::catalog::CatalogMap;
use super::presentation::Presentation;
use super::quotient::PermQuotient;
use super::word::Word;
use crate::error::{Error, Result};

/// A group in which words of a fixed alphabet can be tested for triviality.
pub trait WordBackend {
    fn describe(&self) -> String;
    /// Exact backends decide the word problem of the target itself.
    fn exact(&self) -> bool;
    fn ngens(&self) -> usize;
    fn is_identity(&self, w: &Word) -> Result<bool>;
}

impl WordBackend for PermQuotient {
    fn describe(&self) -> String {
        format!("quotient {} of order {}", self.label(), self.order())
    }

    fn exact(&self) -> bool {
        false
    }

    fn ngens(&self) -> usize {
        PermQuotient::ngens(self)
    }

    fn is_identity(&self, w: &Word) -> Result<bool> {
        Ok(PermQuotient::is_identity(self, w))
    }
}

/// Permutation representation given by generator images on `0..degree`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermRep {
    #[serde(default)]
    pub label: String,
    pub permutations: Vec<Vec<u32>>,
}

impl PermRep {
    pub fn new(label: &str, permutations: Vec<Vec<u32>>) -> Result<Self> {
        let degree = permutations.first().map_or(0, Vec::len);
        for p in &permutations {
            let mut seen = vec![false; degree];
            if p.len() != degree || !p.iter().all(|&x| (x as usize) < degree && !std::mem::replace(&mut seen[x as usize], true)) {
                return Err(Error::Invalid(format!("{p:?} is not a permutation of 0..{degree}")));
            }
        }
        Ok(PermRep {
            label: label.to_string(),
            permutations,
        })
    }

    pub fn degree(&self) -> usize {
        self.permutations.first().map_or(0, Vec::len)
    }

    /// Image of point `x` under `w`, acting on the right.
    pub fn act(&self, x: usize, w: &Word) -> usize {
        w.letters().iter().fold(x, |x, &l| {
            let p = &self.permutations[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                p[x] as usize
            } else {
                p.iter().position(|&y| y as usize == x).expect("permutation")
            }
        })
    }
}

impl WordBackend for PermRep {
    fn describe(&self) -> String {
        format!("permutation table {} of degree {}", self.label, self.degree())
    }

    fn exact(&self) -> bool {
        false
    }

    fn ngens(&self) -> usize {
        self.permutations.len()
    }

    fn is_identity(&self, w: &Word) -> Result<bool> {
        if w.max_generator().is_some_and(|g| g >= self.permutations.len()) {
            return Err(Error::Alphabet("word uses a generator without a permutation".into()));
        }
        Ok((0..self.degree()).all(|x| self.act(x, w) == x))
    }
}

/// Homomorphism `source → target` given by generator images.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<Word>,
}

impl GroupHom {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Arity(format!(
                "{} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        if images
            .iter()
            .any(|w| w.max_generator().is_some_and(|g| g >= target.ngens()))
        {
            return Err(Error::Alphabet("image outside the target alphabet".into()));
        }
        Ok(GroupHom { source, target, images })
    }

    /// Images keyed by source generator name, parsed in the target alphabet.
    pub fn from_named_images(source: Presentation, target: Presentation, images: &BTreeMap<String, String>) -> Result<Self> {
        for k in images.keys() {
            if source.alphabet().index(k).is_none() {
                return Err(Error::Alphabet(format!("`{k}` is not a source generator")));
            }
        }
        let words = source
            .alphabet()
            .names()
            .iter()
            .map(|g| match images.get(g) {
                Some(t) => target.parse_word(t),
                None => Err(Error::Arity(format!("no image for `{g}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, words)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }

    /// `self ∘ inner`.
    pub fn compose_after(&self, inner: &GroupHom) -> Result<GroupHom> {
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(inner.source.clone(), self.target.clone(), images)
    }
}

impl From<&CatalogMap> for GroupHom {
    fn from(m: &CatalogMap) -> Self {
        GroupHom {
            source: m.source.clone(),
            target: m.target.clone(),
            images: m.images.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HomVerdict {
    Falsified {
        backend: String,
        relator: String,
        relator_index: usize,
    },
    Consistent {
        backends: Vec<String>,
        /// `proof` for exact backends, otherwise `necessary-condition evidence`.
        strength: String,
    },
}

impl HomVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, HomVerdict::Consistent { .. })
    }

    pub fn is_proof(&self) -> bool {
        matches!(self, HomVerdict::Consistent { strength, .. } if strength == "proof")
    }
}

/// Sends every source relator through `h` and tests the image in each backend.
pub fn verify_hom(h: &GroupHom, backends: &[&dyn WordBackend]) -> Result<HomVerdict> {
    if backends.is_empty() {
        return Err(Error::Invalid("no backend given".into()));
    }
    for b in backends {
        if b.ngens() != h.target.ngens() {
            return Err(Error::Alphabet(format!(
                "backend {} has {} generators, target has {}",
                b.describe(),
                b.ngens(),
                h.target.ngens()
            )));
        }
    }
    let images = h
        .source
        .relators()
        .iter()
        .map(|r| h.apply(r))
        .collect::<Result<Vec<_>>>()?;
    for b in backends {
        for (i, w) in images.iter().enumerate() {
            if !b.is_identity(w)? {
                return Ok(HomVerdict::Falsified {
                    backend: b.describe(),
                    relator: h.source.format(&h.source.relators()[i]),
                    relator_index: i,
                });
            }
        }
    }
    let exact = backends.iter().any(|b| b.exact());
    Ok(HomVerdict::Consistent {
        backends: backends.iter().map(|b| b.describe()).collect(),
        strength: if exact { "proof" } else { "necessary-condition evidence" }.to_string(),
    })
}

/// Backend descriptors: `torsion:2`, `torsion:2,3,2`, `coxeter:3,3`, `garside:D4`, `table:<file>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BackendSpec {
    /// Per-generator orders added to the target; a single value applies to all.
    Torsion(Vec<u32>),
    Coxeter { n: usize, k: u32 },
    Garside(String),
    Table(String),
}

impl FromStr for BackendSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed backend `{s}`"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let nums = |a: &str| -> Result<Vec<u32>> {
            a.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "torsion" => Ok(BackendSpec::Torsion(nums(arg)?)),
            "coxeter" => match nums(arg)?.as_slice() {
                &[n, k] => Ok(BackendSpec::Coxeter { n: n as usize, k }),
                _ => Err(bad()),
            },
            "garside" if !arg.is_empty() => Ok(BackendSpec::Garside(arg.to_string())),
            "table" if !arg.is_empty() => Ok(BackendSpec::Table(arg.to_string())),
            _ => Err(bad()),
        }
    }
}

impl BackendSpec {
    /// Builds a finite backend for `target`; Garside backends are built elsewhere.
    pub fn build_finite(&self, target: &Presentation, limit: usize) -> Result<Box<dyn WordBackend>> {
        match self {
            BackendSpec::Torsion(orders) => {
                let orders = match orders.as_slice() {
                    [k] => vec![*k; target.ngens()],
                    o => o.to_vec(),
                };
                Ok(Box::new(PermQuotient::enumerate(&target.with_torsion(&orders)?, limit)?))
            }
            BackendSpec::Coxeter { n, k } => {
                let q = super::quotient::coxeter_quotient(*n, *k, limit)?;
                if q.presentation().alphabet().names() != target.alphabet().names() {
                    return Err(Error::Alphabet(format!(
                        "coxeter:{n},{k} is over {:?}, target is over {:?}",
                        q.presentation().alphabet().names(),
                        target.alphabet().names()
                    )));
                }
                Ok(Box::new(q))
            }
            BackendSpec::Table(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
                let rep: PermRep = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                let rep = PermRep::new(if rep.label.is_empty() { path } else { &rep.label }, rep.permutations)?;
                Ok(Box::new(rep))
            }
            BackendSpec::Garside(t) => Err(Error::Precondition(format!(
                "garside:{t} is not a finite backend"
            ))),
        }
    }
}
