//! JSON payloads of the query subcommands.

use klein_core::group::{all_subgroups, conjugacy_classes, recognize, Ambient, ElemId, Group};
use klein_core::linalg::Mat3;
use klein_core::orbits::{classify_locus, orbit, singularity_report, stabilizer, Locus};
use klein_core::torus::registry::{name_of, resolve};
use klein_core::torus::{fixed_locus_structure, TorusPoint};
use klein_core::{Error, Result};
use serde_json::{json, Value};

/// A named element (`m1`, `g7`, ...), its negative (`-g7`), or a numeric id.
pub fn resolve_element(group: &Group, s: &str) -> Result<ElemId> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix('-') {
        return Ok(group.mul(group.minus_one(), resolve_element(group, n)?));
    }
    if let Ok(id) = s.parse::<usize>() {
        return if id < group.len() { Ok(id) } else { Err(Error::UnknownName(s.into())) };
    }
    group.named(s)
}

pub fn resolve_matrix(group: &Group, s: &str) -> Result<ElemId> {
    let m: Mat3 = s.parse()?;
    group.find(&m).ok_or(Error::NotInGroup)
}

pub fn resolve_point(s: &str) -> Result<TorusPoint> {
    resolve(s)
}

fn element_names(group: &Group, id: ElemId) -> Vec<&'static str> {
    group.named_elements().iter().filter(|(_, &v)| v == id).map(|(k, _)| *k).collect()
}

fn element_json(group: &Group, id: ElemId) -> Value {
    let el = group.element(id);
    json!({
        "id": id,
        "names": element_names(group, id),
        "word": el.word_string(),
        "order": el.order,
        "det": el.det.to_string(),
        "in_h": group.set(Ambient::H).contains(id),
        "reflection": group.is_reflection(id),
        "matrix": el.mat,
    })
}

pub fn group_build(group: &Group) -> Value {
    let elements: Vec<Value> = (0..group.len()).map(|id| element_json(group, id)).collect();
    json!({ "order": group.len(), "h_order": group.set(Ambient::H).len(), "elements": elements })
}

pub fn group_classes(group: &Group, ambient: Ambient) -> Value {
    let classes: Vec<Value> = conjugacy_classes(group, ambient)
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative,
                "representative_word": group.element(c.representative).word_string(),
                "order": c.order,
                "det": c.det,
                "size": c.size(),
                "centralizer_order": c.centralizer_order,
            })
        })
        .collect();
    json!({ "ambient": ambient, "classes": classes })
}

pub fn group_subgroups(group: &Group) -> Value {
    let lat = all_subgroups(group);
    let classes: Vec<Value> = lat
        .classes
        .iter()
        .map(|c| {
            json!({
                "number": c.number,
                "order": c.order,
                "length": c.length,
                "label": c.label,
                "maximal_subgroups": c.maximal_subgroups,
                "minimal_overgroups": c.minimal_overgroups,
            })
        })
        .collect();
    json!({ "total": lat.total(), "classes": classes })
}

pub fn fixed(group: &Group, id: ElemId) -> Result<Value> {
    let locus = fixed_locus_structure(group, id)?;
    let names: Vec<Value> =
        locus.points.iter().map(|p| json!({ "point": p, "name": name_of(p).map(|n| n.to_string()) })).collect();
    let mut v = serde_json::to_value(&locus).expect("fixed locus serializes");
    v["points"] = Value::Array(names);
    v["element"] = element_json(group, id);
    v["count"] = json!(if locus.points.is_empty() { None } else { Some(locus.points.len()) });
    Ok(v)
}

pub fn stabilizer_of(group: &Group, u: &TorusPoint, ambient: Ambient) -> Result<Value> {
    let s = stabilizer(group, u, ambient);
    let orbit_size = orbit(group, u, ambient).len();
    Ok(json!({
        "point": u,
        "name": name_of(u).map(|n| n.to_string()),
        "ambient": ambient,
        "label": recognize(group, &s)?,
        "order": s.len(),
        "orbit_size": orbit_size,
        "elements": s.to_vec(),
    }))
}

pub fn orbit_of(group: &Group, u: &TorusPoint, ambient: Ambient) -> Value {
    let points: Vec<Value> = orbit(group, u, ambient)
        .iter()
        .map(|p| json!({ "point": p, "name": name_of(p).map(|n| n.to_string()) }))
        .collect();
    json!({ "point": u, "ambient": ambient, "size": points.len(), "orbit": points })
}

pub fn classify(group: &Group, locus: Locus, ambient: Ambient) -> Result<Value> {
    let recs = classify_locus(group, locus, ambient)?;
    Ok(json!({ "locus": locus.to_string(), "ambient": ambient, "orbits": recs }))
}

pub fn singularities(group: &Group, ambient: Ambient, seed: u64) -> Result<Value> {
    Ok(serde_json::to_value(singularity_report(group, ambient, seed)?).expect("report serializes"))
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}
