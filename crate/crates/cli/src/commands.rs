use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use braidwork_core::arrangement::{
    arrangement_of, discriminant_poly, is_supersolvable, supersolvable_all_chains, Arrangement,
    DEFAULT_FLAT_BUDGET,
};
use braidwork_core::error::{Error, Result};
use braidwork_core::fpgroups::catalog::{self, catalog_map};
use braidwork_core::fpgroups::{
    coxeter_quotient, todd_coxeter, torsion_quotient, verify_hom, BackendSpec, EnumerationStatus,
    GroupHom, PermQuotient, Presentation, WordBackend,
};
use braidwork_core::garside::{conjugation_by_delta, CoxeterType, Garside};
use braidwork_core::gtaction::{
    act_exact, act_on_quotient, check_gd_pair, drinfeld_images, drinfeld_symbolic,
    matsumoto_report, stabilizes_bn_subgroup, GTPair,
};
use braidwork_core::invariants::{fundamental_invariants, g12_check, is_invariant, molien_degrees, named};
use braidwork_core::matgroup::{GroupSpec, RGroup};
use braidwork_core::monodromy::{self, braid_loop_images, riemann_hurwitz_genus, CoverSpec, RamificationProfile};
use braidwork_core::poly::{parse_poly, MPoly};
use braidwork_core::suite::{run_criterion, SuiteConfig, CRITERIA};

use crate::{GroupArgs, Outcome, PairArgs, PresArgs, RunConfig, Status};

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Splits on commas outside brackets and parentheses, so `[u,v]` stays whole.
fn split_words(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter()
        .map(|w| w.trim().to_string())
        .filter(|w| !w.is_empty())
        .collect()
}

fn group_spec(args: &GroupArgs) -> Result<GroupSpec> {
    match (&args.catalog, &args.input) {
        (Some(name), _) => Ok(GroupSpec::Catalog { name: name.clone() }),
        (None, Some(path)) => {
            let mut v = read_json(path)?;
            if let Some(spec) = v.get_mut("spec") {
                v = spec.take();
            }
            from_value(v, "group spec")
        }
        (None, None) => Err(Error::Invalid("give --catalog or --input".into())),
    }
}

fn load_group(args: &GroupArgs, cfg: &RunConfig) -> Result<RGroup> {
    group_spec(args)?.build(cfg.elements)
}

fn load_presentation(args: &PresArgs) -> Result<Presentation> {
    match (&args.catalog, &args.input) {
        (Some(name), _) => catalog::presentation(name),
        (None, Some(path)) => from_value(read_json(path)?, "presentation"),
        (None, None) => Err(Error::Invalid("give --catalog or --input".into())),
    }
}

fn presentation_ref(v: Value) -> Result<Presentation> {
    match v {
        Value::String(name) => catalog::presentation(&name),
        v => from_value(v, "presentation"),
    }
}

pub fn group_info(args: &GroupArgs, cfg: &RunConfig) -> Result<Outcome> {
    let g = load_group(args, cfg)?;
    let degrees = molien_degrees(&g).ok();
    Ok(Outcome::ok(json!({
        "label": g.label(),
        "order": g.order(),
        "dim": g.dim(),
        "reflections": g.reflections().len(),
        "hyperplanes": to_value(&g.hyperplanes()),
        "degrees": degrees,
        "center_order": g.center().len(),
        "field_of_definition": to_value(&g.field_of_definition()),
        "spec": {"kind": "explicit", "generators": to_value(&g.generators())},
    })))
}

pub fn invariants_compute(args: &GroupArgs, cfg: &RunConfig) -> Result<Outcome> {
    let g = load_group(args, cfg)?;
    let basis = fundamental_invariants(&g, cfg.degrees)?;
    let gens: Vec<Value> = basis
        .generators
        .iter()
        .map(|p| json!({"text": p.to_string(), "poly": to_value(p)}))
        .collect();
    Ok(Outcome::ok(json!({
        "group": g.label(),
        "degrees": basis.degrees,
        "generators": gens,
    })))
}

fn named_or_parsed(text: &str, nvars: usize) -> Result<MPoly> {
    if named::NAMES.contains(&text) {
        named::lookup(text)
    } else {
        parse_poly(text, nvars)
    }
}

fn polys_from_file(path: &Path) -> Result<Vec<MPoly>> {
    let v = read_json(path)?;
    match v.get("generators") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|it| from_value(it.get("poly").unwrap_or(it).clone(), "polynomial"))
            .collect(),
        _ => Ok(vec![from_value(v, "polynomial")?]),
    }
}

pub fn invariants_check(args: &GroupArgs, texts: &[String], file: Option<&Path>, cfg: &RunConfig) -> Result<Outcome> {
    let g = load_group(args, cfg)?;
    let mut polys = texts
        .iter()
        .map(|t| named_or_parsed(t, g.dim()))
        .collect::<Result<Vec<_>>>()?;
    if let Some(f) = file {
        polys.extend(polys_from_file(f)?);
    }
    if polys.is_empty() {
        return Err(Error::Invalid("give --poly or --poly-file".into()));
    }
    let mut results = Vec::new();
    let mut all = true;
    for p in &polys {
        let inv = is_invariant(&g, p)?;
        all &= inv;
        results.push(json!({"poly": p.to_string(), "invariant": inv}));
    }
    Ok(Outcome::verdict(json!({"group": g.label(), "results": results}), all))
}

pub fn invariants_g12(alpha: &str, beta: &str) -> Result<Outcome> {
    let c = g12_check(&named_or_parsed(alpha, 2)?, &named_or_parsed(beta, 2)?)?;
    Ok(Outcome::verdict(to_value(&c), c.passed))
}

pub fn arrangement_supersolvable(args: &GroupArgs, brute_force: bool, cfg: &RunConfig) -> Result<Outcome> {
    let a = load_arrangement(args, cfg)?;
    let v = is_supersolvable(&a, DEFAULT_FLAT_BUDGET)?;
    let all_chains = if brute_force {
        Some(supersolvable_all_chains(&a, DEFAULT_FLAT_BUDGET)?)
    } else {
        None
    };
    let agree = all_chains.is_none_or(|b| b == v.supersolvable);
    Ok(Outcome::verdict(
        json!({
            "supersolvable": v.supersolvable,
            "flats": v.flats,
            "chain": to_value(&v.chain),
            "all_chains": all_chains,
        }),
        agree,
    ))
}

/// Arrangements come from a group, or from JSON written by `arrangement discriminant`.
fn load_arrangement(args: &GroupArgs, cfg: &RunConfig) -> Result<Arrangement> {
    if let (None, Some(path)) = (&args.catalog, &args.input) {
        let v = read_json(path)?;
        if let Some(a) = v.get("arrangement") {
            return from_value(a.clone(), "arrangement");
        }
    }
    Ok(arrangement_of(&load_group(args, cfg)?))
}

pub fn arrangement_discriminant(args: &GroupArgs, cfg: &RunConfig) -> Result<Outcome> {
    let g = load_group(args, cfg)?;
    let a = arrangement_of(&g);
    let d = discriminant_poly(&a);
    Ok(Outcome::ok(json!({
        "group": g.label(),
        "arrangement": to_value(&a),
        "discriminant": d.to_string(),
        "poly": to_value(&d),
    })))
}

pub fn present_tc(args: &PresArgs, subgroup: &str, cfg: &RunConfig) -> Result<Outcome> {
    let p = load_presentation(args)?;
    let words = split_words(subgroup);
    let subs = words.iter().map(|w| p.parse_word(w)).collect::<Result<Vec<_>>>()?;
    let t = todd_coxeter(&p, &subs, cfg.cosets);
    let complete = t.status() == EnumerationStatus::Complete;
    Ok(Outcome {
        value: json!({
            "presentation": p.label(),
            "subgroup": words,
            "status": to_value(&t.status()),
            "index": complete.then(|| t.index()),
            "cosets_defined": t.cosets_defined,
        }),
        status: if complete { Status::Holds } else { Status::Budget },
    })
}

pub fn present_quotient(args: &PresArgs, torsion: &[u32], cfg: &RunConfig) -> Result<Outcome> {
    let p = load_presentation(args)?;
    let q = match torsion {
        [] => PermQuotient::enumerate(&p, cfg.cosets)?,
        [k] => torsion_quotient(&p, &vec![*k; p.ngens()], cfg.cosets)?,
        ks => torsion_quotient(&p, ks, cfg.cosets)?,
    };
    Ok(Outcome::ok(json!({
        "label": q.label(),
        "order": q.order(),
        "generators": p.alphabet().names(),
        "permutations": q.generator_permutations(),
    })))
}

fn load_hom(map: Option<&str>, input: Option<&Path>) -> Result<(String, GroupHom)> {
    if let Some(name) = map {
        let m = catalog_map(name)?;
        return Ok((m.name.clone(), GroupHom::from(&m)));
    }
    let path = input.ok_or_else(|| Error::Invalid("give --map or --input".into()))?;
    let mut v = read_json(path)?;
    let mut field = |k: &str| v.get_mut(k).map(Value::take).ok_or_else(|| Error::Parse(format!("missing `{k}`")));
    let source = presentation_ref(field("source")?)?;
    let target = presentation_ref(field("target")?)?;
    let images: BTreeMap<String, String> = from_value(field("images")?, "images")?;
    Ok((path.display().to_string(), GroupHom::from_named_images(source, target, &images)?))
}

pub fn present_verify_map(map: Option<&str>, input: Option<&Path>, backends: &[String], cfg: &RunConfig) -> Result<Outcome> {
    let (name, h) = load_hom(map, input)?;
    let built = backends
        .iter()
        .map(|b| match b.parse::<BackendSpec>()? {
            BackendSpec::Garside(t) => Ok(Box::new(Garside::new(t.parse()?)?) as Box<dyn WordBackend>),
            spec => spec.build_finite(&h.target, cfg.cosets),
        })
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&dyn WordBackend> = built.iter().map(|b| b.as_ref()).collect();
    let verdict = verify_hom(&h, &refs)?;
    let images: Vec<(String, String)> = h
        .source
        .alphabet()
        .names()
        .iter()
        .zip(&h.images)
        .map(|(g, w)| (g.clone(), h.target.format(w)))
        .collect();
    Ok(Outcome::verdict(
        json!({
            "map": name,
            "source": h.source.label(),
            "target": h.target.label(),
            "images": images,
            "verdict": to_value(&verdict),
        }),
        verdict.is_consistent(),
    ))
}

fn engine(ty: &str) -> Result<Garside> {
    Garside::new(ty.parse::<CoxeterType>()?)
}

pub fn garside_nf(ty: &str, word: &str) -> Result<Outcome> {
    let g = engine(ty)?;
    let nf = g.normal_form(&g.parse(word)?)?;
    Ok(Outcome::ok(json!({
        "type": g.coxeter_type().to_string(),
        "word": word,
        "normal_form": to_value(&g.nf_repr(&nf)),
        "text": g.nf_string(&nf),
    })))
}

pub fn garside_equal(ty: &str, u: &str, v: &str) -> Result<Outcome> {
    let g = engine(ty)?;
    let (nu, nv) = (g.normal_form(&g.parse(u)?)?, g.normal_form(&g.parse(v)?)?);
    let eq = nu == nv;
    Ok(Outcome::verdict(
        json!({
            "type": g.coxeter_type().to_string(),
            "equal": eq,
            "u": g.nf_string(&nu),
            "v": g.nf_string(&nv),
        }),
        eq,
    ))
}

pub fn garside_delta(ty: &str) -> Result<Outcome> {
    let g = engine(ty)?;
    let t = g.coxeter_type();
    let conj = match t {
        CoxeterType::D(_) => Some(conjugation_by_delta(t)?),
        _ => None,
    };
    Ok(Outcome::ok(json!({
        "type": t.to_string(),
        "delta": g.format(&g.delta_word()),
        "length": g.delta_length(),
        "conjugation": conj,
    })))
}

fn pair(p: &PairArgs) -> Result<GTPair> {
    GTPair::parse(p.lambda, &p.f)
}

pub fn gt_act(n: usize, p: &PairArgs, backend: &str, cfg: &RunConfig) -> Result<Outcome> {
    let pr = pair(p)?;
    let report = if backend == "garside" || backend.starts_with("garside:") {
        act_exact(n, &pr)?
    } else {
        let q = match backend.parse::<BackendSpec>()? {
            BackendSpec::Coxeter { n: m, k } if m == n => coxeter_quotient(n, k, cfg.cosets)?,
            BackendSpec::Coxeter { n: m, .. } => {
                return Err(Error::Alphabet(format!("backend is a quotient of Br{m}, not Br{n}")))
            }
            BackendSpec::Torsion(orders) => {
                let br = catalog::braid_group(n)?;
                let orders = if orders.len() == 1 { vec![orders[0]; br.ngens()] } else { orders };
                torsion_quotient(&br, &orders, cfg.cosets)?
            }
            _ => return Err(Error::Invalid(format!("gt act needs garside, coxeter or torsion, not `{backend}`"))),
        };
        act_on_quotient(&q, &pr)?
    };
    let holds = report.endomorphism;
    Ok(Outcome::verdict(to_value(&report), holds))
}

pub fn gt_images(n: usize, p: &PairArgs, matsumoto: bool) -> Result<Outcome> {
    let pr = pair(p)?;
    if matsumoto {
        let r = matsumoto_report(n, &pr)?;
        let holds = r.all_hold;
        return Ok(Outcome::verdict(to_value(&r), holds));
    }
    let br = catalog::braid_group(n)?;
    let images: Vec<String> = drinfeld_images(n, &pr)?.iter().map(|w| br.format(w)).collect();
    Ok(Outcome::ok(json!({
        "n": n,
        "lambda": pr.lambda,
        "f": p.f,
        "images": images,
        "formulas": drinfeld_symbolic(n),
    })))
}

pub fn gt_stabilize(n: usize, p: &PairArgs, cfg: &RunConfig) -> Result<Outcome> {
    let r = stabilizes_bn_subgroup(n, &pair(p)?, cfg.cosets)?;
    let holds = r.stabilized;
    Ok(Outcome::verdict(to_value(&r), holds))
}

pub fn gt_gd_check(m: usize, lambda: i64, g: &str, cfg: &RunConfig) -> Result<Outcome> {
    let w = catalog::artin_i2(m)?.parse_word(g)?;
    let r = check_gd_pair(m, lambda, &w, cfg.cosets)?;
    let holds = r.homomorphism && r.delta_image && r.delta_squared_image && r.automorphism_on_w != Some(false);
    Ok(Outcome::verdict(to_value(&r), holds))
}

pub fn monodromy_profile(name: Option<&str>, input: Option<&Path>, cfg: &RunConfig) -> Result<Outcome> {
    let spec: CoverSpec = match (name, input) {
        (Some(n), _) => braid_loop_images(n)?,
        (None, Some(path)) => from_value(read_json(path)?, "cover spec")?,
        (None, None) => return Err(Error::Invalid("give --catalog or --input".into())),
    };
    let cover = spec.build(cfg.elements)?;
    let prof = monodromy::monodromy_profile(&cover)?;
    if cover.regular && monodromy::order_profile(&cover)? != prof {
        return Err(Error::Inconsistent("orbit and order profiles differ".into()));
    }
    riemann_hurwitz_genus(&prof)?;
    let holds = prof.transitive == Some(true);
    Ok(Outcome::verdict(to_value(&prof), holds))
}

pub fn monodromy_genus(input: &Path) -> Result<Outcome> {
    let p: RamificationProfile = from_value(read_json(input)?, "profile")?;
    let p = RamificationProfile::new(p.degree, p.points)?;
    let g = riemann_hurwitz_genus(&p)?;
    Ok(Outcome::ok(json!({"degree": p.degree, "genus": g})))
}

pub fn suite_command(ids: &[u32], timings: bool, cfg: &RunConfig) -> Result<Outcome> {
    let scfg = SuiteConfig {
        seed: cfg.seed,
        coset_budget: cfg.cosets,
        element_budget: cfg.elements,
    };
    let ids: Vec<u32> = if ids.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { ids.to_vec() };
    let mut reports = Vec::new();
    let mut all = true;
    for id in ids {
        let r = run_criterion(id, &scfg)?;
        eprintln!("{r}");
        all &= r.passed;
        let mut v = to_value(&r);
        if !timings {
            v.as_object_mut().expect("object").remove("elapsed_secs");
        }
        reports.push(v);
    }
    Ok(Outcome::verdict(json!({"seed": cfg.seed, "passed": all, "criteria": reports}), all))
}

#[cfg(test)]
mod tests {
    use super::split_words;

    #[test]
    fn commas_inside_brackets_are_kept() {
        assert_eq!(split_words("s1^2, s2,s3"), ["s1^2", "s2", "s3"]);
        assert_eq!(split_words("[a,b], (a b)^2"), ["[a,b]", "(a b)^2"]);
        assert!(split_words("").is_empty());
    }
}
