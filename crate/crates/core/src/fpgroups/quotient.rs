use super::coset::{todd_coxeter, CosetTable};
use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

/// Finite group given by the regular action on the cosets of the trivial subgroup.
#[derive(Clone, Debug)]
pub struct PermQuotient {
    presentation: Presentation,
    table: CosetTable,
}

impl PermQuotient {
    /// Enumerates `P` over the trivial subgroup.
    pub fn enumerate(p: &Presentation, limit: usize) -> Result<Self> {
        let table = todd_coxeter(p, &[], limit);
        if !table.is_complete() {
            return Err(Error::BudgetExceeded(format!(
                "coset enumeration of {} exceeded {limit} cosets",
                p.label()
            )));
        }
        Ok(PermQuotient {
            presentation: p.clone(),
            table,
        })
    }

    pub fn label(&self) -> &str {
        self.presentation.label()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.index()
    }

    pub fn ngens(&self) -> usize {
        self.presentation.ngens()
    }

    /// The element represented by `w`, as the coset `1 · w`.
    pub fn element(&self, w: &Word) -> usize {
        self.table.act(0, w)
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.element(w) == 0
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.element(u) == self.element(v)
    }

    /// Product of elements, via representative words.
    pub fn mul(&self, a: usize, w: &Word) -> usize {
        self.table.act(a, w)
    }

    pub fn representatives(&self) -> Vec<Word> {
        self.table.representatives()
    }

    pub fn generator_permutations(&self) -> Vec<Vec<u32>> {
        self.table.generator_permutations()
    }

    /// Order of the element represented by `w`.
    pub fn element_order(&self, w: &Word) -> usize {
        let mut c = self.element(w);
        let mut k = 1;
        while c != 0 {
            c = self.table.act(c, w);
            k += 1;
        }
        k
    }
}

/// `Br_n / ⟨⟨s_i^k⟩⟩`.
pub fn coxeter_quotient(n: usize, k: u32, limit: usize) -> Result<PermQuotient> {
    let p = super::catalog::braid_group(n)?;
    let orders = vec![k; p.ngens()];
    let q = p
        .with_torsion(&orders)?
        .with_label(&format!("Br{n}/(s^{k})"));
    PermQuotient::enumerate(&q, limit)
}

/// Adds `g^{orders[g]}` to `P` and enumerates.
pub fn torsion_quotient(p: &Presentation, orders: &[u32], limit: usize) -> Result<PermQuotient> {
    PermQuotient::enumerate(&p.with_torsion(orders)?, limit)
}

/// Element map `x ↦ φ(x)` between finite quotients induced by generator images,
/// or `None` when some source relator is not sent to the identity.
pub fn induced_map(src: &PermQuotient, dst: &PermQuotient, images: &[Word]) -> Result<Option<Vec<usize>>> {
    if images.len() != src.ngens() {
        return Err(Error::Arity(format!(
            "{} images for {} generators",
            images.len(),
            src.ngens()
        )));
    }
    for r in src.presentation().relators() {
        if !dst.is_identity(&r.substitute(images)?) {
            return Ok(None);
        }
    }
    let parent = src.table().spanning_tree();
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    // breadth-first numbering means parents precede children
    for c in 1..src.order() {
        let (p, l) = parent[c].expect("connected");
        let img = if l > 0 {
            images[(l - 1) as usize].clone()
        } else {
            images[(-l - 1) as usize].inverse()
        };
        map[c] = dst.mul(map[p], &img);
    }
    Ok(Some(map))
}

pub fn is_bijective(map: &[usize], target_order: usize) -> bool {
    if map.len() != target_order {
        return false;
    }
    let mut seen = vec![false; target_order];
    map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
}
