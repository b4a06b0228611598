use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::coset::CosetTable;
use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

/// Schreier generator `rep(c) · g · rep(c·g)⁻¹` for a non-tree edge `c --g--> c·g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchreierGen {
    pub coset: usize,
    pub generator: usize,
}

/// Schreier generators indexed in (coset, generator) order.
#[derive(Clone, Debug)]
pub struct SchreierSystem {
    table: CosetTable,
    tree: Vec<Vec<bool>>,
    gens: Vec<SchreierGen>,
    index: HashMap<SchreierGen, usize>,
}

impl SchreierSystem {
    pub fn new(table: &CosetTable) -> Result<Self> {
        if !table.is_complete() {
            return Err(Error::Precondition("Schreier rewriting needs a complete coset table".into()));
        }
        let ngens = table.ngens();
        let mut tree = vec![vec![false; ngens]; table.index()];
        for (d, p) in table.spanning_tree().into_iter().enumerate() {
            if let Some((c, l)) = p {
                let g = (l.unsigned_abs() - 1) as usize;
                if l > 0 {
                    tree[c][g] = true;
                } else {
                    tree[d][g] = true;
                }
            }
        }
        let mut gens = Vec::new();
        for (c, row) in tree.iter().enumerate() {
            for (g, &t) in row.iter().enumerate() {
                if !t {
                    gens.push(SchreierGen { coset: c, generator: g });
                }
            }
        }
        let index = gens.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Ok(SchreierSystem {
            table: table.clone(),
            tree,
            gens,
            index,
        })
    }

    pub fn generators(&self) -> &[SchreierGen] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Rewrites `w` read from coset `start`; returns the end coset and the Schreier word.
    pub fn rewrite_from(&self, start: usize, w: &Word) -> (usize, Word) {
        let mut c = start;
        let mut out = Vec::new();
        for &l in w.letters() {
            let g = (l.unsigned_abs() - 1) as usize;
            if l > 0 {
                if !self.tree[c][g] {
                    out.push(self.index[&SchreierGen { coset: c, generator: g }] as i32 + 1);
                }
                c = self.table.act_letter(c, l);
            } else {
                let d = self.table.act_letter(c, l);
                if !self.tree[d][g] {
                    out.push(-(self.index[&SchreierGen { coset: d, generator: g }] as i32 + 1));
                }
                c = d;
            }
        }
        (c, Word::new(out))
    }

    /// `Some(word in Schreier generators)` iff `w` lies in the subgroup.
    pub fn rewrite(&self, w: &Word) -> Option<Word> {
        let (end, out) = self.rewrite_from(0, w);
        (end == 0).then_some(out)
    }

    /// Relators of the subgroup: every relator rewritten from every coset.
    pub fn subgroup_relators(&self, p: &Presentation) -> Vec<Word> {
        let mut out = Vec::new();
        for c in 0..self.table.index() {
            for r in p.relators() {
                let (end, w) = self.rewrite_from(c, r);
                debug_assert_eq!(end, c);
                if !w.is_empty() {
                    out.push(w);
                }
            }
        }
        out
    }
}

/// `schreier_rewrite`: `None` means "not in subgroup".
pub fn schreier_rewrite(table: &CosetTable, w: &Word) -> Result<Option<Word>> {
    Ok(SchreierSystem::new(table)?.rewrite(w))
}

/// Row-style Hermite normal form of an integer lattice.
#[derive(Clone, Debug)]
pub struct IntLattice {
    ncols: usize,
    /// Echelon rows with positive pivots.
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntLattice {
    pub fn new(generators: &[Vec<i64>], ncols: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..ncols {
            // gcd-combine all rows below `top` into one with a pivot in column c
            loop {
                let nz: Vec<usize> = (top..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
                if nz.is_empty() {
                    break;
                }
                let best = *nz
                    .iter()
                    .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                    .unwrap();
                rows.swap(top, best);
                let mut done = true;
                for i in top + 1..rows.len() {
                    if rows[i][c].is_zero() {
                        continue;
                    }
                    let q = rows[i][c].div_floor(&rows[top][c]);
                    let pivot_row = rows[top].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                    if !rows[i][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if top < rows.len() && !rows[top][c].is_zero() {
                if rows[top][c].is_negative() {
                    for x in rows[top].iter_mut() {
                        *x = -x.clone();
                    }
                }
                pivots.push(c);
                top += 1;
            }
        }
        rows.truncate(top);
        // reduce entries above pivots
        for (k, &c) in pivots.iter().enumerate() {
            for i in 0..k {
                let q = rows[i][c].div_floor(&rows[k][c]);
                if !q.is_zero() {
                    let pivot_row = rows[k].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
            }
        }
        IntLattice { ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether `v` is an integer combination of the generators.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (k, &c) in self.pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let (q, r) = v[c].div_mod_floor(&self.rows[k][c]);
            if !r.is_zero() {
                return false;
            }
            for (x, p) in v.iter_mut().zip(&self.rows[k]) {
                *x -= &q * p;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Torsion-free rank and invariant-factor-free summary of `Z^n / L`.
    pub fn quotient_free_rank(&self) -> usize {
        self.ncols - self.rank()
    }

    pub fn pivot_entries(&self) -> Vec<BigInt> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(k, &c)| self.rows[k][c].clone())
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols && self.pivot_entries().iter().all(One::is_one)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedMembership {
    /// `w` lies in the subgroup of the table.
    pub in_subgroup: bool,
    /// The class of `w` in the abelianized subgroup vanishes.
    pub trivial_in_abelianization: bool,
    pub schreier_rank: usize,
}

/// Whether `w ∈ H` and its class in `H^ab` is trivial, with `H` the subgroup
/// of a complete coset table of `P`.
pub fn derived_membership(p: &Presentation, table: &CosetTable, w: &Word) -> Result<DerivedMembership> {
    let sys = SchreierSystem::new(table)?;
    let k = sys.rank();
    let Some(rw) = sys.rewrite(w) else {
        return Ok(DerivedMembership {
            in_subgroup: false,
            trivial_in_abelianization: false,
            schreier_rank: k,
        });
    };
    let rels: Vec<Vec<i64>> = sys
        .subgroup_relators(p)
        .iter()
        .map(|r| r.exponent_sums(k))
        .collect();
    let lattice = IntLattice::new(&rels, k);
    Ok(DerivedMembership {
        in_subgroup: true,
        trivial_in_abelianization: lattice.contains(&rw.exponent_sums(k)),
        schreier_rank: k,
    })
}
