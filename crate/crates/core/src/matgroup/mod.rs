//! Finite matrix groups over cyclotomic fields.
//!
//! Groups are enumerated breadth-first from their generators; element indices
//! are stable (identity first, then discovery order by generator index) and are
//! reused by the permutation-based modules downstream.

mod catalog;
mod matrix;

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use catalog::{build_catalog_group, build_monomial_group, catalog_names, monomial_generators, monomial_order};
pub use matrix::RMatrix;

use crate::cyclo::{euler_phi, CycNum};
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_BUDGET: usize = 200_000;

/// A finite subgroup of `GL_n` over a cyclotomic field, with its elements listed.
#[derive(Clone, Debug)]
pub struct RGroup {
    label: String,
    dim: usize,
    generators: Vec<RMatrix>,
    elements: Vec<RMatrix>,
    index: HashMap<RMatrix, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReflectionData {
    pub element: RMatrix,
    pub element_index: usize,
    pub hyperplane: Vec<CycNum>,
    pub order_eh: u32,
    pub distinguished: bool,
    pub nontrivial_eigenvalue: CycNum,
}

/// A reflecting hyperplane with the cyclic group fixing it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hyperplane {
    pub form: Vec<CycNum>,
    pub order_eh: u32,
    pub reflections: Vec<usize>,
    pub distinguished: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldOfDefinition {
    pub conductor: u32,
    pub fixing_subgroup: Vec<u32>,
    pub degree: u32,
}

#[derive(Clone, Debug)]
pub struct GaloisImage {
    pub group: RGroup,
    pub same_set: bool,
    /// `permutation[i]` is the index in the original group of `σ_k(elements[i])`.
    pub permutation: Option<Vec<usize>>,
}

impl RGroup {
    /// Closes the generators under multiplication.
    pub fn generate(label: &str, generators: Vec<RMatrix>, budget: usize) -> Result<Self> {
        let dim = generators
            .first()
            .map(RMatrix::dim)
            .ok_or_else(|| Error::Invalid("at least one generator is required".into()))?;
        if generators.iter().any(|g| g.dim() != dim) {
            return Err(Error::Invalid("generators have different dimensions".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.det().is_zero()) {
            return Err(Error::Invalid(format!("generator {g:?} is singular")));
        }
        let id = RMatrix::identity(dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut i = 0;
        while i < elements.len() {
            for g in &generators {
                let p = &elements[i] * g;
                if !index.contains_key(&p) {
                    if elements.len() >= budget {
                        return Err(Error::BudgetExceeded(format!(
                            "more than {budget} elements in {label}"
                        )));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        Ok(RGroup {
            label: label.to_string(),
            dim,
            generators,
            elements,
            index,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[RMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[RMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &RMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &RMatrix) -> bool {
        self.index.contains_key(m)
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let g = &self.elements[a];
        let mut x = g.clone();
        let mut prev = RMatrix::identity(self.dim);
        while !x.is_identity() {
            prev = x.clone();
            x = &x * g;
        }
        self.index[&prev]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let g = &self.elements[a];
        let mut x = g.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = &x * g;
            k += 1;
        }
        k
    }

    /// Evaluates a word given as `(generator index, exponent)` pairs.
    pub fn eval_syllables(&self, word: &[(usize, i64)]) -> Result<RMatrix> {
        let mut acc = RMatrix::identity(self.dim);
        for &(g, e) in word {
            let m = self
                .generators
                .get(g)
                .ok_or_else(|| Error::Invalid(format!("generator {g} out of range")))?;
            acc = &acc * &m.pow(e)?;
        }
        Ok(acc)
    }

    /// All pseudo-reflections in element order.
    pub fn reflections(&self) -> Vec<ReflectionData> {
        let mut raw: Vec<(usize, Vec<CycNum>, CycNum)> = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if i == 0 {
                continue;
            }
            let d = g.minus_identity();
            if d.rank() != 1 {
                continue;
            }
            let row = (0..self.dim)
                .map(|r| d.row(r))
                .find(|r| r.iter().any(|x| !x.is_zero()))
                .expect("rank one matrix has a nonzero row");
            let form = normalize_form(row);
            let eigen = g.trace() - CycNum::from_int(self.dim as i64 - 1);
            raw.push((i, form, eigen));
        }
        let mut counts: HashMap<&Vec<CycNum>, u32> = HashMap::new();
        for (_, f, _) in &raw {
            *counts.entry(f).or_default() += 1;
        }
        raw.iter()
            .map(|(i, form, eigen)| {
                let eh = counts[form] + 1;
                ReflectionData {
                    element: self.elements[*i].clone(),
                    element_index: *i,
                    hyperplane: form.clone(),
                    order_eh: eh,
                    distinguished: *eigen == CycNum::root_of_unity(eh, 1),
                    nontrivial_eigenvalue: eigen.clone(),
                }
            })
            .collect()
    }

    /// Reflecting hyperplanes in order of first appearance.
    pub fn hyperplanes(&self) -> Vec<Hyperplane> {
        let mut out: Vec<Hyperplane> = Vec::new();
        let mut pos: HashMap<Vec<CycNum>, usize> = HashMap::new();
        for r in self.reflections() {
            let k = *pos.entry(r.hyperplane.clone()).or_insert_with(|| {
                out.push(Hyperplane {
                    form: r.hyperplane.clone(),
                    order_eh: r.order_eh,
                    reflections: Vec::new(),
                    distinguished: usize::MAX,
                });
                out.len() - 1
            });
            out[k].reflections.push(r.element_index);
            if r.distinguished {
                out[k].distinguished = r.element_index;
            }
        }
        out
    }

    /// Conductor of the field generated by all traces, with its fixing subgroup
    /// inside `(Z/f)^×`.
    pub fn field_of_definition(&self) -> FieldOfDefinition {
        let mut traces: Vec<CycNum> = self.elements.iter().map(RMatrix::trace).collect();
        traces.sort_by_key(|t| t.order());
        traces.dedup();
        let f = traces.iter().fold(1u32, |acc, t| acc.lcm(&t.order()));
        let fixing: Vec<u32> = (1..=f)
            .filter(|k| k.gcd(&f) == 1)
            .filter(|&k| {
                traces
                    .iter()
                    .all(|t| t.galois(k as i64).map(|s| &s == t).unwrap_or(false))
            })
            .collect();
        let degree = (euler_phi(f as u64) as usize / fixing.len()) as u32;
        FieldOfDefinition {
            conductor: f,
            fixing_subgroup: fixing,
            degree,
        }
    }

    /// Applies `σ_k` entrywise to every element.
    pub fn galois_image(&self, k: i64) -> Result<GaloisImage> {
        let f = self
            .generators
            .iter()
            .fold(1u32, |acc, g| acc.lcm(&g.conductor()));
        if (k.rem_euclid(f as i64) as u32).gcd(&f) != 1 {
            return Err(Error::NonCoprime { k, n: f as u64 });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.galois(k))
            .collect::<Result<Vec<_>>>()?;
        let elements = self
            .elements
            .iter()
            .map(|g| g.galois(k))
            .collect::<Result<Vec<_>>>()?;
        let perm: Option<Vec<usize>> = elements.iter().map(|e| self.index_of(e)).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let group = RGroup {
            label: format!("sigma_{k}({})", self.label),
            dim: self.dim,
            generators: gens,
            elements,
            index,
        };
        Ok(GaloisImage {
            group,
            same_set: perm.is_some(),
            permutation: perm,
        })
    }

    /// `H = (1/|G|) Σ w̄ᵀ w`, checked to be exactly invariant and Hermitian.
    pub fn invariant_hermitian_form(&self) -> Result<RMatrix> {
        let mut h = RMatrix::from_rows(vec![vec![CycNum::zero(); self.dim]; self.dim])?;
        for w in &self.elements {
            h = h.add(&(&w.adjoint() * w));
        }
        let h = h.scale(&CycNum::from_frac(1, self.order() as i64));
        if h.adjoint() != h {
            return Err(Error::Inconsistent("averaged form is not Hermitian".into()));
        }
        for g in &self.generators {
            if &(&g.adjoint() * &h) * g != h {
                return Err(Error::Inconsistent("averaged form is not invariant".into()));
            }
        }
        if !is_positive_definite(&h, 1e-9) {
            return Err(Error::Inconsistent("averaged form is not positive definite".into()));
        }
        Ok(h)
    }

    pub fn center(&self) -> Vec<RMatrix> {
        self.elements
            .iter()
            .filter(|z| self.generators.iter().all(|g| &(*z * g) == &(g * *z)))
            .cloned()
            .collect()
    }
}

/// Scales a nonzero linear form so its first nonzero coordinate is 1.
pub fn normalize_form(row: &[CycNum]) -> Vec<CycNum> {
    let lead = row
        .iter()
        .find(|x| !x.is_zero())
        .expect("form is nonzero")
        .inv()
        .expect("nonzero");
    row.iter().map(|x| x * &lead).collect()
}

/// Leading principal minors of the float image, each required to exceed `tol`.
pub fn is_positive_definite(h: &RMatrix, tol: f64) -> bool {
    let m = h.to_complex();
    let n = m.len();
    (1..=n).all(|k| {
        let mut a: Vec<Vec<num_complex::Complex64>> =
            m[..k].iter().map(|r| r[..k].to_vec()).collect();
        let mut det = num_complex::Complex64::new(1.0, 0.0);
        for c in 0..k {
            let Some(p) = (c..k).max_by(|&i, &j| a[i][c].norm().total_cmp(&a[j][c].norm())) else {
                return false;
            };
            if a[p][c].norm() < 1e-300 {
                return false;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for i in c + 1..k {
                let f = a[i][c] / a[c][c];
                for j in c..k {
                    let t = f * a[c][j];
                    a[i][j] -= t;
                }
            }
        }
        det.re > tol && det.im.abs() < 1e-6 * det.re.abs().max(1.0)
    })
}

/// Group description as accepted on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Monomial { d: u32, e: u32, n: u32 },
    Catalog { name: String },
    Explicit { generators: Vec<RMatrix> },
}

impl GroupSpec {
    pub fn build(&self, budget: usize) -> Result<RGroup> {
        match self {
            GroupSpec::Monomial { d, e, n } => build_monomial_group(*d, *e, *n, budget),
            GroupSpec::Catalog { name } => build_catalog_group(name, budget),
            GroupSpec::Explicit { generators } => {
                RGroup::generate("explicit", generators.clone(), budget)
            }
        }
    }
}

#[cfg(test)]
mod tests;
