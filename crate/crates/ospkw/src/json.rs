//! JSON encodings. Weights and roots are written in display form,
//! coefficients as decimal strings.

use ospkw_core::atyp::{TamenessReport, WitnessKind};
use ospkw_core::blocks::BottomTrace;
use ospkw_core::characters::CharacterResult;
use ospkw_core::{Algebra, Error, HookPartition, LaurentPolynomial, Root, Weight};
use serde_json::{json, Value};

use crate::verify::Check;

pub fn weight(w: &Weight) -> Value {
    Value::String(w.to_string())
}

fn roots(rs: &[Root]) -> Value {
    rs.iter().map(|r| Value::String(r.to_string())).collect()
}

pub fn polynomial(p: &LaurentPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exp": weight(&Weight::from_exponent(e, p.n())), "coef": c.to_string() }))
        .collect();
    json!({ "n": p.n(), "m": p.m(), "terms": terms })
}

fn kind(k: &Option<WitnessKind>) -> Value {
    match k {
        None => Value::Null,
        Some(WitnessKind::Typical) => json!("typical"),
        Some(WitnessKind::OddBorel) => json!("odd-borel"),
        Some(WitnessKind::HookFilled { index }) => json!(format!("hook-filled:{}", index + 1)),
    }
}

pub fn report(alg: &Algebra, lam: &HookPartition, r: &TamenessReport) -> Value {
    json!({
        "algebra": alg.to_string(),
        "partition": lam.to_string(),
        "minus": r.minus,
        "k": r.atypicality,
        "tame": r.tame,
        "kind": kind(&r.kind),
        "T": r.distinguished.as_deref().map(roots).unwrap_or(Value::Null),
        "e": r.e_lambda,
        "j": r.j_lambda,
        "borel": r.witness_borel.as_ref().map(|b| b.sequence().to_string()),
        "weight": r.witness_weight.as_ref().map(weight),
        "levi": r.levi.as_deref().map(roots).unwrap_or(Value::Null),
    })
}

pub fn trace(alg: &Algebra, t: &BottomTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "before": weight(&s.before),
                "chosen": s.chosen.to_string(),
                "replacement": s.replacement.to_string(),
                "after": weight(&s.after),
                "partition": s.partition.to_string(),
            })
        })
        .collect();
    json!({
        "algebra": alg.to_string(),
        "start": t.start.to_string(),
        "steps": steps,
        "bottom": t.result.to_string(),
        "bottom_weight": weight(&t.result.natural(false)),
    })
}

pub fn character(cr: &CharacterResult) -> Value {
    json!({
        "hw": weight(&cr.highest_weight),
        "borel": cr.borel_used.sequence().to_string(),
        "T": roots(&cr.t_used),
        "j": cr.j_used,
        "k": cr.atypicality,
        "dim": cr.dimension.to_string(),
        "character": polynomial(&cr.character),
    })
}

pub fn family(alg: &Algebra, lam: &HookPartition, members: &[(i64, HookPartition, Weight)]) -> Value {
    let list: Vec<Value> = members
        .iter()
        .map(|(x, p, w)| json!({ "x": x, "partition": p.to_string(), "shifted": weight(w) }))
        .collect();
    json!({ "algebra": alg.to_string(), "partition": lam.to_string(), "family": list })
}

pub fn checks(list: &[(Algebra, Vec<Check>)]) -> Value {
    let groups: Vec<Value> = list
        .iter()
        .map(|(alg, cs)| {
            let items: Vec<Value> =
                cs.iter().map(|c| json!({ "name": c.name, "pass": c.passed, "detail": c.detail })).collect();
            json!({ "algebra": alg.to_string(), "checks": items })
        })
        .collect();
    let all = list.iter().all(|(_, cs)| cs.iter().all(|c| c.passed));
    json!({ "passed": all, "results": groups })
}

pub fn error(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}

pub fn core_error(e: &Error) -> Value {
    error(e.code(), &e.to_string())
}
