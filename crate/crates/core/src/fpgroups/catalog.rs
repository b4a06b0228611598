use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

fn braid_relations(names: &[String], out: &mut Vec<String>) {
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            let (a, b) = (&names[i], &names[j]);
            if j == i + 1 {
                out.push(format!("{a} {b} {a} = {b} {a} {b}"));
            } else {
                out.push(format!("{a} {b} = {b} {a}"));
            }
        }
    }
}

/// Alternating product `a b a …` with `m` factors.
pub fn alternating(a: &str, b: &str, m: usize) -> String {
    (0..m)
        .map(|i| if i % 2 == 0 { a } else { b })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `Br_n` on `s1, …, s_{n-1}`.
pub fn braid_group(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Invalid("Br_n needs n >= 2".into()));
    }
    let names: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    let mut rels = Vec::new();
    braid_relations(&names, &mut rels);
    Presentation::parse(&format!("Br{n}"), &names, &rels)
}

/// `Art(B_n)` on `t, s2, …, sn` with `t s2 t s2 = s2 t s2 t`.
pub fn artin_b(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Invalid("Art(B_n) needs n >= 2".into()));
    }
    let mut names = vec!["t".to_string()];
    names.extend((2..=n).map(|i| format!("s{i}")));
    let mut rels = vec!["t s2 t s2 = s2 t s2 t".to_string()];
    for j in 3..=n {
        rels.push(format!("t s{j} = s{j} t"));
    }
    braid_relations(&names[1..], &mut rels);
    Presentation::parse(&format!("ArtB{n}"), &names, &rels)
}

/// `Art(D_n)` on `s1, s1p, s2, …, s_{n-1}`.
pub fn artin_d(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Invalid("Art(D_n) needs n >= 2".into()));
    }
    let mut names = vec!["s1".to_string(), "s1p".to_string()];
    names.extend((2..n).map(|i| format!("s{i}")));
    let mut rels = vec!["s1 s1p = s1p s1".to_string()];
    let chain = |first: &str| -> Vec<String> {
        let mut v = vec![first.to_string()];
        v.extend((2..n).map(|i| format!("s{i}")));
        v
    };
    braid_relations(&chain("s1"), &mut rels);
    let with_prime = chain("s1p");
    for j in 1..with_prime.len() {
        let (a, b) = (&with_prime[0], &with_prime[j]);
        rels.push(if j == 1 {
            format!("{a} {b} {a} = {b} {a} {b}")
        } else {
            format!("{a} {b} = {b} {a}")
        });
    }
    Presentation::parse(&format!("ArtD{n}"), &names, &rels)
}

/// `Art(I₂(m))` on `a, b`.
pub fn artin_i2(m: usize) -> Result<Presentation> {
    if m < 2 {
        return Err(Error::Invalid("I2(m) needs m >= 2".into()));
    }
    let rel = format!("{} = {}", alternating("a", "b", m), alternating("b", "a", m));
    Presentation::parse(&format!("I2({m})"), &["a", "b"], &[rel.as_str()])
}

/// `B(G12) = ⟨s, t, u | stus = tust = ustu⟩`.
pub fn g12() -> Presentation {
    Presentation::parse("B(G12)", &["s", "t", "u"], &["s t u s = t u s t = u s t u"])
        .expect("catalog")
}

/// Bannai's presentation of `B(G13)`.
pub fn g13() -> Presentation {
    Presentation::parse(
        "B(G13)",
        &["g1", "g2", "g3"],
        &[
            "g1 g2 g3 g1 = g3 g1 g2 g3",
            "g3 g1 g2 g3 g2 = g2 g3 g1 g2 g3",
        ],
    )
    .expect("catalog")
}

/// Corran–Picantin presentation of `B(G(e,e,n))` on `t0, …, t{e-1}, s3, …, sn`.
///
/// `with_commutations` adds `t_i s_j = s_j t_i` for `j ≥ 4`.
pub fn corran_picantin(e: usize, n: usize, with_commutations: bool) -> Result<Presentation> {
    if e < 2 || n < 2 {
        return Err(Error::Invalid("G(e,e,n) needs e >= 2 and n >= 2".into()));
    }
    let mut names: Vec<String> = (0..e).map(|i| format!("t{i}")).collect();
    let s: Vec<String> = (3..=n).map(|k| format!("s{k}")).collect();
    names.extend(s.iter().cloned());
    let mut rels = Vec::new();
    for i in 1..e {
        rels.push(format!("t{} t{i} = t1 t0", (i + 1) % e));
    }
    if n >= 3 {
        for i in 0..e {
            rels.push(format!("s3 t{i} s3 = t{i} s3 t{i}"));
        }
    }
    braid_relations(&s, &mut rels);
    if with_commutations {
        for i in 0..e {
            for j in 4..=n {
                rels.push(format!("t{i} s{j} = s{j} t{i}"));
            }
        }
    }
    let label = if with_commutations {
        format!("CP({e},{n})")
    } else {
        format!("CP({e},{n},nocomm)")
    };
    Presentation::parse(&label, &names, &rels)
}

/// `Z/e = ⟨c | c^e⟩`.
pub fn cyclic(e: usize) -> Result<Presentation> {
    if e == 0 {
        return Err(Error::Invalid("cyclic group order must be positive".into()));
    }
    let rel = format!("c^{e}");
    Presentation::parse(&format!("Z/{e}"), &["c"], &[rel.as_str()])
}

pub fn catalog_names() -> Vec<&'static str> {
    vec!["Br<n>", "ArtB<n>", "ArtD<n>", "I2(<m>)", "G12", "G13", "CP(<e>,<n>)", "CP(<e>,<n>,nocomm)", "Z/<e>"]
}

fn parse_num(s: &str, name: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::UnknownCatalog(name.to_string()))
}

/// Looks up a catalog presentation by name, e.g. `Br4`, `ArtD5`, `I2(6)`, `CP(3,4)`.
pub fn presentation(name: &str) -> Result<Presentation> {
    match name {
        "G12" | "B(G12)" => return Ok(g12()),
        "G13" | "B(G13)" => return Ok(g13()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix("ArtB") {
        return artin_b(parse_num(n, name)?);
    }
    if let Some(n) = name.strip_prefix("ArtD") {
        return artin_d(parse_num(n, name)?);
    }
    if let Some(n) = name.strip_prefix("Br") {
        return braid_group(parse_num(n, name)?);
    }
    if let Some(e) = name.strip_prefix("Z/") {
        return cyclic(parse_num(e, name)?);
    }
    if let Some(m) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        return artin_i2(parse_num(m, name)?);
    }
    if let Some(args) = name.strip_prefix("CP(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        return match parts.as_slice() {
            [e, n] => corran_picantin(parse_num(e, name)?, parse_num(n, name)?, true),
            [e, n, "nocomm"] => corran_picantin(parse_num(e, name)?, parse_num(n, name)?, false),
            _ => Err(Error::UnknownCatalog(name.to_string())),
        };
    }
    Err(Error::UnknownCatalog(name.to_string()))
}

/// A homomorphism given by generator images, as printed.
#[derive(Clone, Debug)]
pub struct CatalogMap {
    pub name: String,
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<Word>,
    /// Whether the map is claimed to be an automorphism.
    pub automorphism: bool,
}

impl CatalogMap {
    fn build(name: &str, source: Presentation, target: Presentation, images: &[&str], automorphism: bool) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Arity(format!(
                "{} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        let images = images
            .iter()
            .map(|t| target.parse_word(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(CatalogMap {
            name: name.to_string(),
            source,
            target,
            images,
            automorphism,
        })
    }

    pub fn formatted_images(&self) -> Vec<(String, String)> {
        self.source
            .alphabet()
            .names()
            .iter()
            .zip(&self.images)
            .map(|(g, w)| (g.clone(), self.target.format(w)))
            .collect()
    }
}

/// `s ↦ t⁻¹, t ↦ s⁻¹, u ↦ u⁻¹`.
pub fn g12_conjugation() -> CatalogMap {
    CatalogMap::build("g12-conjugation", g12(), g12(), &["t^-1", "s^-1", "u^-1"], true).expect("catalog")
}

/// `s_k ↦ s_k⁻¹`, `t_i ↦ t_{-i}⁻¹`.
pub fn cp_conjugation(e: usize, n: usize, with_commutations: bool) -> Result<CatalogMap> {
    let p = corran_picantin(e, n, with_commutations)?;
    let mut images: Vec<String> = (0..e).map(|i| format!("t{}^-1", (e - i) % e)).collect();
    images.extend((3..=n).map(|k| format!("s{k}^-1")));
    let refs: Vec<&str> = images.iter().map(String::as_str).collect();
    CatalogMap::build(&format!("cp-conjugation({e},{n})"), p.clone(), p, &refs, true)
}

/// `g1 ↦ g1⁻¹`, `g2 ↦ g1 g2⁻¹ g1⁻¹`, `g3 ↦ g1 g2 g3 g2⁻¹ g1⁻¹`.
pub fn g13_conjugation() -> CatalogMap {
    CatalogMap::build(
        "g13-conjugation",
        g13(),
        g13(),
        &["g1^-1", "g1 g2^-1 g1^-1", "g1 g2 g3 g2^-1 g1^-1"],
        true,
    )
    .expect("catalog")
}

/// `a ↦ g3 g1 g2 g3`, `b ↦ g3⁻¹`.
pub fn i26_to_g13() -> CatalogMap {
    CatalogMap::build("i26-to-g13", artin_i2(6).expect("catalog"), g13(), &["g3 g1 g2 g3", "g3^-1"], false)
        .expect("catalog")
}

/// `a ↦ (bab) a⁻¹ (bab)⁻¹`, `b ↦ (ba) b⁻¹ (ba)⁻¹`.
pub fn i26_transported_conjugation() -> CatalogMap {
    let p = artin_i2(6).expect("catalog");
    CatalogMap::build(
        "i26-transported-conjugation",
        p.clone(),
        p,
        &["(b a b) a^-1 (b a b)^-1", "(b a) b^-1 (b a)^-1"],
        true,
    )
    .expect("catalog")
}

/// The mirror automorphism `a ↦ a⁻¹, b ↦ b⁻¹` followed by conjugation by `bab`.
pub fn i26_mirror_conjugated() -> CatalogMap {
    let p = artin_i2(6).expect("catalog");
    CatalogMap::build(
        "i26-ad-bab-mirror",
        p.clone(),
        p,
        &["(b a b) a^-1 (b a b)^-1", "(b a b) b^-1 (b a b)^-1"],
        true,
    )
    .expect("catalog")
}

/// `Art(B_n) → Br_{n+1}`, `t ↦ s1²`, `s_i ↦ s_i`.
pub fn artb_to_braid(n: usize) -> Result<CatalogMap> {
    let mut images = vec!["s1^2".to_string()];
    images.extend((2..=n).map(|i| format!("s{i}")));
    let refs: Vec<&str> = images.iter().map(String::as_str).collect();
    CatalogMap::build(&format!("artb{n}-to-br{}", n + 1), artin_b(n)?, braid_group(n + 1)?, &refs, false)
}

/// `Art(B_n) ↠ Z/e`, `t ↦ c`, `s_i ↦ 1`.
pub fn artb_to_cyclic(n: usize, e: usize) -> Result<CatalogMap> {
    let mut images = vec!["c"];
    images.extend((2..=n).map(|_| "1"));
    CatalogMap::build(&format!("artb{n}-to-z{e}"), artin_b(n)?, cyclic(e)?, &images, false)
}

pub fn map_names() -> Vec<&'static str> {
    vec![
        "g12-conjugation",
        "g13-conjugation",
        "i26-to-g13",
        "i26-transported-conjugation",
        "i26-ad-bab-mirror",
        "cp-conjugation(<e>,<n>)",
        "artb<n>-to-br",
        "artb<n>-to-z<e>",
    ]
}

pub fn catalog_map(name: &str) -> Result<CatalogMap> {
    match name {
        "g12-conjugation" => return Ok(g12_conjugation()),
        "g13-conjugation" => return Ok(g13_conjugation()),
        "i26-to-g13" => return Ok(i26_to_g13()),
        "i26-transported-conjugation" => return Ok(i26_transported_conjugation()),
        "i26-ad-bab-mirror" => return Ok(i26_mirror_conjugated()),
        _ => {}
    }
    if let Some(args) = name.strip_prefix("cp-conjugation(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        return match parts.as_slice() {
            [e, n] => cp_conjugation(parse_num(e, name)?, parse_num(n, name)?, true),
            [e, n, "nocomm"] => cp_conjugation(parse_num(e, name)?, parse_num(n, name)?, false),
            _ => Err(Error::UnknownCatalog(name.to_string())),
        };
    }
    if let Some(rest) = name.strip_prefix("artb") {
        if let Some(n) = rest.strip_suffix("-to-br") {
            return artb_to_braid(parse_num(n, name)?);
        }
        if let Some((n, e)) = rest.split_once("-to-z") {
            return artb_to_cyclic(parse_num(n, name)?, parse_num(e, name)?);
        }
    }
    Err(Error::UnknownCatalog(name.to_string()))
}

/// `ω₄ = (s1 s2 s3)⁴`, the full twist of `Br_4`.
pub fn omega4() -> Word {
    let p = braid_group(4).expect("catalog");
    p.parse_word("(s1 s2 s3)^4").expect("catalog")
}
