//! Hyperplane arrangements of reflection groups.

use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matgroup::{normalize_form, RGroup};
use crate::poly::MPoly;

pub const MAX_DIM: usize = 6;
pub const MAX_HYPERPLANES: usize = 60;
pub const DEFAULT_FLAT_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Vec<CycNum>>,
    mult: Vec<u32>,
}

impl Arrangement {
    /// Normalizes the forms and rejects zero or proportional ones.
    pub fn new(dim: usize, forms: Vec<Vec<CycNum>>, mult: Vec<u32>) -> Result<Self> {
        if forms.len() != mult.len() {
            return Err(Error::Invalid(format!(
                "{} hyperplanes but {} multiplicities",
                forms.len(),
                mult.len()
            )));
        }
        if let Some(e) = mult.iter().find(|&&e| e < 2) {
            return Err(Error::Invalid(format!("multiplicity {e} is below 2")));
        }
        let mut hyperplanes: Vec<Vec<CycNum>> = Vec::with_capacity(forms.len());
        for f in forms {
            if f.len() != dim {
                return Err(Error::Arity(format!("form of length {} in dimension {dim}", f.len())));
            }
            if f.iter().all(CycNum::is_zero) {
                return Err(Error::Invalid("zero linear form".into()));
            }
            let f = normalize_form(&f);
            if hyperplanes.contains(&f) {
                return Err(Error::Invalid("proportional linear forms".into()));
            }
            hyperplanes.push(f);
        }
        Ok(Arrangement {
            dim,
            hyperplanes,
            mult,
        })
    }

    /// Every multiplicity set to 2.
    pub fn from_forms(dim: usize, forms: Vec<Vec<CycNum>>) -> Result<Self> {
        let n = forms.len();
        Self::new(dim, forms, vec![2; n])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Vec<CycNum>] {
        &self.hyperplanes
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Rank of the forms indexed by the bits of `set`.
    pub fn rank_of(&self, set: u64) -> usize {
        let rows: Vec<Vec<CycNum>> = bits(set).map(|i| self.hyperplanes[i].clone()).collect();
        linalg::rank(&rows)
    }

    pub fn linear_form(&self, i: usize) -> MPoly {
        MPoly::linear(&self.hyperplanes[i])
    }

    /// `Π α_H^{exps[H]}`.
    pub fn product_with_exponents(&self, exps: &[u32]) -> Result<MPoly> {
        if exps.len() != self.len() {
            return Err(Error::Arity(format!(
                "{} exponents for {} hyperplanes",
                exps.len(),
                self.len()
            )));
        }
        Ok((0..self.len()).fold(MPoly::one(self.dim), |acc, i| {
            acc.mul(&self.linear_form(i).pow(exps[i]))
        }))
    }
}

/// `{ Ker(s - 1) }` with the order `e_H` of each pointwise stabilizer.
pub fn arrangement_of(group: &RGroup) -> Arrangement {
    let hyps = group.hyperplanes();
    Arrangement {
        dim: group.dim(),
        mult: hyps.iter().map(|h| h.order_eh).collect(),
        hyperplanes: hyps.into_iter().map(|h| h.form).collect(),
    }
}

/// `Δ = Π α_H^{e_H}`.
pub fn discriminant_poly(a: &Arrangement) -> MPoly {
    a.product_with_exponents(&a.mult).expect("aligned")
}

fn bits(set: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| set >> i & 1 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flat {
    /// Hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub rank: usize,
    #[serde(skip)]
    pub set: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatLattice {
    /// Sorted by rank, then by hyperplane set.
    pub flats: Vec<Flat>,
    #[serde(skip)]
    index: HashMap<u64, usize>,
}

impl FlatLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn index_of(&self, set: u64) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn rank(&self) -> usize {
        self.flats.last().map_or(0, |f| f.rank)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(|f| f.rank == 1)
    }

    pub fn of_rank(&self, r: usize) -> impl Iterator<Item = (usize, &Flat)> {
        self.flats.iter().enumerate().filter(move |(_, f)| f.rank == r)
    }

    /// `x ≤ y` in the lattice: every hyperplane through `x` passes through `y`.
    pub fn below(&self, x: usize, y: usize) -> bool {
        let (a, b) = (self.flats[x].set, self.flats[y].set);
        a & b == a
    }
}

struct Closer<'a> {
    a: &'a Arrangement,
}

impl Closer<'_> {
    /// All hyperplanes whose form lies in the span of those in `set`.
    fn closure(&self, set: u64) -> u64 {
        let rows: Vec<Vec<CycNum>> = bits(set).map(|i| self.a.hyperplanes[i].clone()).collect();
        let mut basis = rows.clone();
        let pivots = linalg::row_reduce(&mut basis);
        basis.truncate(pivots.len());
        let r = pivots.len();
        let mut out = set;
        for h in 0..self.a.len() {
            if set >> h & 1 == 1 {
                continue;
            }
            let mut m = basis.clone();
            m.push(self.a.hyperplanes[h].clone());
            if linalg::rank(&m) == r {
                out |= 1 << h;
            }
        }
        out
    }
}

fn check_limits(a: &Arrangement) -> Result<()> {
    if a.dim > MAX_DIM || a.len() > MAX_HYPERPLANES {
        return Err(Error::BudgetExceeded(format!(
            "lattice limited to dimension {MAX_DIM} and {MAX_HYPERPLANES} hyperplanes, got {} and {}",
            a.dim,
            a.len()
        )));
    }
    Ok(())
}

/// All flats, built rank by rank from closures of `X ∪ {H}`.
pub fn intersection_lattice(a: &Arrangement, budget: usize) -> Result<FlatLattice> {
    check_limits(a)?;
    let closer = Closer { a };
    let mut flats = vec![Flat {
        hyperplanes: vec![],
        rank: 0,
        set: 0,
    }];
    let mut index = HashMap::from([(0u64, 0usize)]);
    let mut level = vec![0u64];
    let mut rank = 0;
    while !level.is_empty() {
        let mut next: Vec<u64> = Vec::new();
        for &x in &level {
            for h in 0..a.len() {
                if x >> h & 1 == 1 {
                    continue;
                }
                let y = closer.closure(x | 1 << h);
                if !index.contains_key(&y) {
                    index.insert(y, usize::MAX);
                    next.push(y);
                    if index.len() > budget {
                        return Err(Error::BudgetExceeded(format!(
                            "more than {budget} flats"
                        )));
                    }
                }
            }
        }
        rank += 1;
        next.sort_unstable_by_key(|s| bits(*s).collect::<Vec<_>>());
        for &y in &next {
            index.insert(y, flats.len());
            flats.push(Flat {
                hyperplanes: bits(y).collect(),
                rank,
                set: y,
            });
        }
        level = next;
    }
    Ok(FlatLattice { flats, index })
}

/// Whether `rk(x) + rk(y) = rk(x ∧ y) + rk(x ∨ y)` for every flat `y`.
pub fn is_modular(a: &Arrangement, lattice: &FlatLattice, x: usize) -> bool {
    let closer = Closer { a };
    let fx = &lattice.flats[x];
    lattice.flats.iter().all(|fy| {
        let meet = fx.set & fy.set;
        let join = closer.closure(fx.set | fy.set);
        let rmeet = lattice.index_of(meet).map_or_else(|| a.rank_of(meet), |i| lattice.flats[i].rank);
        let rjoin = lattice.flats[lattice.index_of(join).expect("closed")].rank;
        fx.rank + fy.rank == rmeet + rjoin
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SupersolvableVerdict {
    pub supersolvable: bool,
    /// Maximal chain of modular flats from the bottom to the top.
    pub chain: Option<Vec<Flat>>,
    pub flats: usize,
}

/// Searches for a maximal chain of modular flats.
pub fn is_supersolvable(a: &Arrangement, budget: usize) -> Result<SupersolvableVerdict> {
    let lattice = intersection_lattice(a, budget)?;
    let modular: Vec<bool> = (0..lattice.len()).map(|i| is_modular(a, &lattice, i)).collect();
    let top = lattice.len() - 1;
    // reach[i]: i can be extended to the top through modular covers
    let mut reach = vec![false; lattice.len()];
    for i in (0..lattice.len()).rev() {
        if !modular[i] {
            continue;
        }
        if i == top {
            reach[i] = true;
            continue;
        }
        let r = lattice.flats[i].rank;
        reach[i] = lattice
            .of_rank(r + 1)
            .any(|(j, _)| reach[j] && lattice.below(i, j));
    }
    let chain = reach[0].then(|| {
        let mut chain = vec![lattice.flats[0].clone()];
        let mut cur = 0;
        while cur != top {
            let r = lattice.flats[cur].rank;
            let (j, f) = lattice
                .of_rank(r + 1)
                .find(|(j, _)| reach[*j] && lattice.below(cur, *j))
                .expect("reachable");
            chain.push(f.clone());
            cur = j;
        }
        chain
    });
    Ok(SupersolvableVerdict {
        supersolvable: chain.is_some(),
        chain,
        flats: lattice.len(),
    })
}

/// Brute-force check: enumerates every maximal chain of the lattice and
/// tests each flat on it for modularity. Exponential; meant as a cross-check.
pub fn supersolvable_all_chains(a: &Arrangement, budget: usize) -> Result<bool> {
    let lattice = intersection_lattice(a, budget)?;
    let top = lattice.len() - 1;
    let mut stack: Vec<Vec<usize>> = vec![vec![0]];
    let mut visited = 0usize;
    while let Some(chain) = stack.pop() {
        visited += 1;
        if visited > budget {
            return Err(Error::BudgetExceeded(format!("more than {budget} partial chains")));
        }
        let cur = *chain.last().expect("nonempty");
        if cur == top {
            if chain.iter().all(|&x| is_modular(a, &lattice, x)) {
                return Ok(true);
            }
            continue;
        }
        let r = lattice.flats[cur].rank;
        for (j, _) in lattice.of_rank(r + 1).filter(|(j, _)| lattice.below(cur, *j)) {
            let mut next = chain.clone();
            next.push(j);
            stack.push(next);
        }
    }
    Ok(false)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementRepr {
    dim: usize,
    hyperplanes: Vec<Vec<CycNum>>,
    mult: Vec<u32>,
}

impl Serialize for Arrangement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ArrangementRepr {
            dim: self.dim,
            hyperplanes: self.hyperplanes.clone(),
            mult: self.mult.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrangement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ArrangementRepr::deserialize(d)?;
        Arrangement::new(r.dim, r.hyperplanes, r.mult).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
