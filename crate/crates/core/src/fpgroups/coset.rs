use std::collections::VecDeque;

use serde::Serialize;

use super::presentation::Presentation;
use super::word::Word;

pub const DEFAULT_COSET_BUDGET: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationStatus {
    Complete,
    BudgetExceeded,
}

/// Coset table with columns `2g` (generator `g`) and `2g + 1` (its inverse).
/// Coset 0 is the subgroup; rows are numbered in breadth-first order.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ngens: usize,
    table: Vec<Vec<u32>>,
    subgroup: Vec<Word>,
    status: EnumerationStatus,
    /// Cosets allocated during enumeration, including ones later merged.
    pub cosets_defined: usize,
}

fn col(l: i32) -> usize {
    let g = (l.unsigned_abs() - 1) as usize;
    if l > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }

    /// Number of cosets; meaningful only for complete tables.
    pub fn index(&self) -> usize {
        self.table.len()
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn subgroup(&self) -> &[Word] {
        &self.subgroup
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.table
    }

    /// Image of coset `c` under generator `g` or its inverse.
    pub fn act_letter(&self, c: usize, l: i32) -> usize {
        self.table[c][col(l)] as usize
    }

    /// Right action `c · w`.
    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.act_letter(c, l))
    }

    /// `w ∈ H` iff `0 · w = 0`.
    pub fn contains(&self, w: &Word) -> bool {
        self.act(0, w) == 0
    }

    /// Breadth-first spanning tree: `parent[c] = (p, letter)` with `p · letter = c`.
    pub fn spanning_tree(&self) -> Vec<Option<(usize, i32)>> {
        let n = self.table.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for x in 0..2 * self.ngens {
                let d = self.table[c][x] as usize;
                if !seen[d] {
                    seen[d] = true;
                    let g = (x / 2) as i32 + 1;
                    parent[d] = Some((c, if x % 2 == 0 { g } else { -g }));
                    queue.push_back(d);
                }
            }
        }
        parent
    }

    /// Representative words with `0 · rep[c] = c`.
    pub fn representatives(&self) -> Vec<Word> {
        let parent = self.spanning_tree();
        let mut reps: Vec<Option<Word>> = vec![None; self.table.len()];
        reps[0] = Some(Word::empty());
        // breadth-first numbering means parents precede children
        for c in 1..self.table.len() {
            let (p, l) = parent[c].expect("connected");
            let w = reps[p].clone().expect("parent first").mul(&Word::new([l]));
            reps[c] = Some(w);
        }
        reps.into_iter().map(|w| w.unwrap()).collect()
    }

    /// Permutation of the cosets induced by each generator.
    pub fn generator_permutations(&self) -> Vec<Vec<u32>> {
        (0..self.ngens)
            .map(|g| self.table.iter().map(|row| row[2 * g]).collect())
            .collect()
    }
}

struct Enumerator<'a> {
    ngens: usize,
    relators: Vec<&'a [i32]>,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    limit: usize,
    overflow: bool,
}

impl Enumerator<'_> {
    fn ncols(&self) -> usize {
        2 * self.ngens
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.table.len() >= self.limit {
            self.overflow = true;
            return None;
        }
        let id = self.table.len() as u32;
        self.table.push(vec![NONE; self.ncols()]);
        self.parent.push(id);
        Some(id)
    }

    fn define(&mut self, c: u32, x: usize) -> bool {
        match self.new_coset() {
            None => false,
            Some(d) => {
                self.table[c as usize][x] = d;
                self.table[d as usize][x ^ 1] = c;
                true
            }
        }
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ncols() {
                let f = self.table[e as usize][x];
                if f == NONE {
                    continue;
                }
                if self.table[f as usize][x ^ 1] == e {
                    self.table[f as usize][x ^ 1] = NONE;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.table[e1 as usize][x];
                if ex != NONE {
                    self.merge(f1, ex, &mut queue);
                } else {
                    let fx = self.table[f1 as usize][x ^ 1];
                    if fx != NONE {
                        self.merge(e1, fx, &mut queue);
                    } else {
                        self.table[e1 as usize][x] = f1;
                        self.table[f1 as usize][x ^ 1] = e1;
                    }
                }
            }
        }
    }

    /// Scans `w` from coset `c`, defining cosets where needed.
    fn scan_and_fill(&mut self, c: u32, w: &[i32]) -> bool {
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.table[f as usize][col(w[i as usize])];
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return true;
            }
            while j >= i {
                let next = self.table[b as usize][col(w[j as usize]) ^ 1];
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return true;
            }
            let x = col(w[i as usize]);
            if i == j {
                // deduction
                self.table[f as usize][x] = b;
                self.table[b as usize][x ^ 1] = f;
                return true;
            }
            if !self.define(f, x) {
                return false;
            }
        }
    }
}

/// Hasse–Lindenbaum–Todd enumeration of the cosets of `⟨subgens⟩` in `P`.
pub fn todd_coxeter(p: &Presentation, subgens: &[Word], limit: usize) -> CosetTable {
    let ngens = p.ngens();
    let relators: Vec<&[i32]> = p.relators().iter().map(Word::letters).collect();
    let mut e = Enumerator {
        ngens,
        relators,
        table: Vec::new(),
        parent: Vec::new(),
        limit: limit.max(1),
        overflow: false,
    };
    e.new_coset();
    let fail = |e: Enumerator| CosetTable {
        ngens,
        cosets_defined: e.table.len(),
        table: Vec::new(),
        subgroup: subgens.to_vec(),
        status: EnumerationStatus::BudgetExceeded,
    };
    for w in subgens {
        if !e.scan_and_fill(0, w.letters()) {
            return fail(e);
        }
    }
    let mut c = 0u32;
    while (c as usize) < e.table.len() {
        if e.alive(c) {
            for r in 0..e.relators.len() {
                let rel = e.relators[r];
                if !e.scan_and_fill(c, rel) {
                    return fail(e);
                }
                if !e.alive(c) {
                    break;
                }
            }
            if e.alive(c) {
                for x in 0..e.ncols() {
                    if e.table[c as usize][x] == NONE && !e.define(c, x) {
                        return fail(e);
                    }
                }
            }
        }
        c += 1;
    }
    debug_assert!(!e.overflow);
    let defined = e.table.len();
    let table = standardize(&e);
    CosetTable {
        ngens,
        table,
        subgroup: subgens.to_vec(),
        status: EnumerationStatus::Complete,
        cosets_defined: defined,
    }
}

/// Renumbers live cosets in breadth-first order from coset 0.
fn standardize(e: &Enumerator) -> Vec<Vec<u32>> {
    let n = e.table.len();
    let mut new_id = vec![NONE; n];
    let mut order = Vec::new();
    new_id[0] = 0;
    order.push(0u32);
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for x in 0..e.ncols() {
            let d = e.table[c as usize][x];
            debug_assert!(d != NONE && e.parent[d as usize] == d);
            if new_id[d as usize] == NONE {
                new_id[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
    }
    order
        .iter()
        .map(|&c| {
            e.table[c as usize]
                .iter()
                .map(|&d| new_id[d as usize])
                .collect()
        })
        .collect()
}
