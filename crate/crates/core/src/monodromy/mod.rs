//! Monodromy of finite covers of `P¹ ∖ {0, 1, ∞}` given by loop images
//! `x`, `y` in a finite group, with `z = (xy)⁻¹`.
//!
//! Regular covers use left translation on the group.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroups::{Alphabet, PermQuotient, Word};
use crate::matgroup::{GroupSpec, RGroup};

/// Fiber of a cover as a set of points permuted by `x`, `y`, `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub label: String,
    /// `x`, `y`, `z` as permutations of the fiber.
    pub perms: [Vec<usize>; 3],
    /// Orders of `x`, `y`, `z` as group elements.
    pub orders: [usize; 3],
    pub regular: bool,
}

pub const BRANCH_LABELS: [&str; 3] = ["0", "1", "inf"];

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

fn perm_order(p: &[usize]) -> usize {
    cycle_lengths(p).into_iter().fold(1, num_integer::lcm)
}

fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = p[c];
            len += 1;
        }
        out.push(len);
    }
    out
}

impl Cover {
    /// Cover from the actions of `x` and `y` on `0..N`; acting first by `y`
    /// then by `x` is the action of `xy`, and `z` acts as its inverse.
    pub fn from_permutations(label: &str, x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        let n = x.len();
        for p in [&x, &y] {
            let mut seen = vec![false; n];
            if p.len() != n || !p.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Invalid("loop images must be permutations of one fiber".into()));
            }
        }
        let z = invert(&compose(&x, &y));
        let orders = [perm_order(&x), perm_order(&y), perm_order(&z)];
        Ok(Cover {
            label: label.to_string(),
            perms: [x, y, z],
            orders,
            regular: false,
        })
    }

    /// Regular cover of a matrix group: `g ↦ x g`.
    pub fn regular_matrix(group: &RGroup, x: usize, y: usize) -> Self {
        let n = group.order();
        let left = |a: usize| (0..n).map(|g| group.mul_index(a, g)).collect::<Vec<_>>();
        let z = group.inverse_index(group.mul_index(x, y));
        Cover {
            label: format!("regular cover of {}", group.label()),
            perms: [left(x), left(y), left(z)],
            orders: [group.element_order(x), group.element_order(y), group.element_order(z)],
            regular: true,
        }
    }

    /// Cover on left cosets `gH` of the subgroup generated by `subgroup`.
    pub fn coset_matrix(group: &RGroup, subgroup: &[usize], x: usize, y: usize) -> Self {
        let n = group.order();
        // closure of H
        let mut in_h = vec![false; n];
        in_h[0] = true;
        let mut h = vec![0usize];
        let mut i = 0;
        while i < h.len() {
            for &s in subgroup {
                let k = group.mul_index(h[i], s);
                if !std::mem::replace(&mut in_h[k], true) {
                    h.push(k);
                }
            }
            i += 1;
        }
        h.sort_unstable();
        let mut coset_of = vec![usize::MAX; n];
        let mut ncosets = 0;
        for g in 0..n {
            if coset_of[g] == usize::MAX {
                for &k in &h {
                    coset_of[group.mul_index(g, k)] = ncosets;
                }
                ncosets += 1;
            }
        }
        let mut reps = vec![0; ncosets];
        for g in (0..n).rev() {
            reps[coset_of[g]] = g;
        }
        let act = |a: usize| (0..ncosets).map(|c| coset_of[group.mul_index(a, reps[c])]).collect::<Vec<_>>();
        let z = group.inverse_index(group.mul_index(x, y));
        Cover {
            label: format!("coset cover of {} of degree {ncosets}", group.label()),
            perms: [act(x), act(y), act(z)],
            orders: [group.element_order(x), group.element_order(y), group.element_order(z)],
            regular: h.len() == 1,
        }
    }

    /// Regular cover of a finite quotient: `g ↦ x g` on its elements.
    pub fn regular_quotient(q: &PermQuotient, x: &Word, y: &Word) -> Self {
        let reps = q.representatives();
        let z = x.mul(y).inverse();
        let left = |w: &Word| {
            let a = q.element(w);
            reps.iter().map(|r| q.mul(a, r)).collect::<Vec<_>>()
        };
        Cover {
            label: format!("regular cover of {}", q.label()),
            perms: [left(x), left(y), left(&z)],
            orders: [q.element_order(x), q.element_order(y), q.element_order(&z)],
            regular: true,
        }
    }

    pub fn degree(&self) -> usize {
        self.perms[0].len()
    }

    /// `z · x · y` acts trivially, i.e. `xyz = 1` as maps composed left to right.
    pub fn product_is_identity(&self) -> bool {
        let [x, y, z] = &self.perms;
        let xyz = compose(&compose(x, y), z);
        xyz.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for perm in &self.perms[..2] {
                let q = perm[p];
                if !std::mem::replace(&mut seen[q], true) {
                    count += 1;
                    stack.push(q);
                }
            }
        }
        count == n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleClass {
    pub length: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchPoint {
    pub label: String,
    pub cycles: Vec<CycleClass>,
}

impl BranchPoint {
    /// `Σ (length - 1)` over the cycles.
    pub fn ramification(&self) -> usize {
        self.cycles.iter().map(|c| (c.length - 1) * c.count).sum()
    }

    pub fn total(&self) -> usize {
        self.cycles.iter().map(|c| c.length * c.count).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamificationProfile {
    pub degree: usize,
    pub points: Vec<BranchPoint>,
    /// Present when the profile comes from a cover.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    /// Whether the loop images act transitively on the fiber, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitive: Option<bool>,
}

impl RamificationProfile {
    pub fn new(degree: usize, points: Vec<BranchPoint>) -> Result<Self> {
        for p in &points {
            if p.total() != degree || p.cycles.iter().any(|c| c.length == 0) {
                return Err(Error::Inconsistent(format!(
                    "cycles at {} cover {} points, not {degree}",
                    p.label,
                    p.total()
                )));
            }
        }
        Ok(RamificationProfile {
            degree,
            points,
            genus: None,
            transitive: None,
        })
    }

    /// Compact form such as `{0: 8x3, 1: 8x3, inf: 4x6}`.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|p| {
                let c: Vec<String> = p.cycles.iter().map(|c| format!("{}x{}", c.count, c.length)).collect();
                format!("{}: {}", p.label, c.join(" + "))
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Point → length → count, for comparisons.
    pub fn as_map(&self) -> BTreeMap<String, BTreeMap<usize, usize>> {
        self.points
            .iter()
            .map(|p| (p.label.clone(), p.cycles.iter().map(|c| (c.length, c.count)).collect()))
            .collect()
    }
}

fn classes(lengths: impl IntoIterator<Item = usize>) -> Vec<CycleClass> {
    let mut m: BTreeMap<usize, usize> = BTreeMap::new();
    for l in lengths {
        *m.entry(l).or_default() += 1;
    }
    m.into_iter().map(|(length, count)| CycleClass { length, count }).collect()
}

/// Cycle structure of `x`, `y`, `z` on the fiber, by orbit computation.
pub fn monodromy_profile(c: &Cover) -> Result<RamificationProfile> {
    if !c.product_is_identity() {
        return Err(Error::Inconsistent("xyz is not the identity".into()));
    }
    let points = c
        .perms
        .iter()
        .zip(BRANCH_LABELS)
        .map(|(p, l)| BranchPoint {
            label: l.to_string(),
            cycles: classes(cycle_lengths(p)),
        })
        .collect();
    let mut prof = RamificationProfile::new(c.degree(), points)?;
    prof.genus = riemann_hurwitz_genus(&prof).ok();
    prof.transitive = Some(c.is_transitive());
    Ok(prof)
}

/// Profile of a regular cover from element orders alone: `N / o` cycles of length `o`.
pub fn order_profile(c: &Cover) -> Result<RamificationProfile> {
    if !c.regular {
        return Err(Error::Precondition("order-based profiles need a regular cover".into()));
    }
    let n = c.degree();
    let points = c
        .orders
        .iter()
        .zip(BRANCH_LABELS)
        .map(|(&o, l)| BranchPoint {
            label: l.to_string(),
            cycles: vec![CycleClass { length: o, count: n / o }],
        })
        .collect();
    let mut prof = RamificationProfile::new(n, points)?;
    prof.genus = riemann_hurwitz_genus(&prof).ok();
    prof.transitive = Some(c.is_transitive());
    Ok(prof)
}

/// Genus from `2 - 2g = 2N - Σ (e - 1)`.
pub fn riemann_hurwitz_genus(p: &RamificationProfile) -> Result<i64> {
    let ram: i64 = p.points.iter().map(|b| b.ramification() as i64).sum();
    let two_g = ram - 2 * p.degree as i64 + 2;
    if two_g % 2 != 0 {
        return Err(Error::Inconsistent(format!("Riemann-Hurwitz gives non-integral genus {two_g}/2")));
    }
    if two_g < 0 {
        return Err(Error::Inconsistent(format!("Riemann-Hurwitz gives negative genus {}", two_g / 2)));
    }
    Ok(two_g / 2)
}

/// Matrix generators are named `s1, s2, …` in element words.
pub fn matrix_alphabet(group: &RGroup) -> Alphabet {
    let names: Vec<String> = (1..=group.generators().len()).map(|i| format!("s{i}")).collect();
    Alphabet::new(&names).expect("valid names")
}

/// Evaluates a word in the generators of a matrix group to an element index.
pub fn element_of(group: &RGroup, w: &Word) -> Result<usize> {
    let syl: Vec<(usize, i64)> = w
        .letters()
        .iter()
        .map(|&l| ((l.unsigned_abs() - 1) as usize, l.signum() as i64))
        .collect();
    let m = group.eval_syllables(&syl)?;
    group
        .index_of(&m)
        .ok_or_else(|| Error::Inconsistent("word evaluates outside the enumerated group".into()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum FiberSpec {
    Regular,
    Subgroup(Vec<String>),
}

/// Input format: `{"group": …, "fiber": "regular" | {"subgroup": [words]}, "x": word, "y": word}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverSpec {
    pub group: GroupSpec,
    #[serde(default = "regular")]
    pub fiber: FiberSpec,
    pub x: String,
    pub y: String,
}

fn regular() -> FiberSpec {
    FiberSpec::Regular
}

impl CoverSpec {
    pub fn build(&self, budget: usize) -> Result<Cover> {
        let group = self.group.build(budget)?;
        let alpha = matrix_alphabet(&group);
        let x = element_of(&group, &alpha.parse(&self.x)?)?;
        let y = element_of(&group, &alpha.parse(&self.y)?)?;
        Ok(match &self.fiber {
            FiberSpec::Regular => Cover::regular_matrix(&group, x, y),
            FiberSpec::Subgroup(words) => {
                let sub = words
                    .iter()
                    .map(|w| element_of(&group, &alpha.parse(w)?))
                    .collect::<Result<Vec<_>>>()?;
                Cover::coset_matrix(&group, &sub, x, y)
            }
        })
    }
}

pub fn catalog_cover_names() -> Vec<&'static str> {
    vec!["G4_paper"]
}

/// Named covers. `G4_paper`: the regular `G₄` cover with `x ↦ s̄₁²`, `y ↦ s̄₂²`.
pub fn braid_loop_images(name: &str) -> Result<CoverSpec> {
    match name {
        "G4_paper" => Ok(CoverSpec {
            group: GroupSpec::Catalog {
                name: "G4_paper".into(),
            },
            fiber: FiberSpec::Regular,
            x: "s1^2".into(),
            y: "s2^2".into(),
        }),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

#[cfg(test)]
mod tests;
