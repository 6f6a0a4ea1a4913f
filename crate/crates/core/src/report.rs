//! Text and JSON renderings of index bundles, closed-form reports, bounds
//! and verification reports.
//!
//! JSON objects have sorted keys and contain no floating-point values.
//! Integers beyond ±(2^53 − 1) are written as decimal strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::closed_forms::{ClosedFormReport, ClosedFormValue, IndexName};
use crate::graph::{Graph, TransmissionProfile};
use crate::indices::{BoundsReport, IndexBundle};
use crate::verify::{CaseRecord, Mode, Relation, VerificationReport};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// A JSON number when exactly representable as an IEEE double, otherwise a
/// decimal string.
pub fn json_int<T: Into<BigInt>>(value: T) -> Value {
    let value: BigInt = value.into();
    match i64::try_from(&value) {
        Ok(x) if (-MAX_SAFE..=MAX_SAFE).contains(&x) => Value::from(x),
        _ => Value::String(value.to_string()),
    }
}

fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn compute_json(g: &Graph, tp: &TransmissionProfile, b: &IndexBundle) -> String {
    let mut obj = Map::new();
    obj.insert("n".into(), json_int(g.n() as u64));
    obj.insert("m".into(), json_int(g.m() as u64));
    obj.insert("diameter".into(), json_int(tp.diameter));
    obj.insert("wiener".into(), json_int(b.wiener.clone()));
    obj.insert(
        "transmission".into(),
        Value::Array(tp.sigma.iter().map(|&s| json_int(s)).collect()),
    );
    obj.insert(
        "transmission_regular_k".into(),
        tp.regular_k.map_or(Value::Null, json_int),
    );
    for (key, value) in bundle_fields(b) {
        obj.insert(key.into(), json_int(value.clone()));
    }
    to_pretty(&Value::Object(obj))
}

fn bundle_fields(b: &IndexBundle) -> [(&'static str, &BigInt); 8] {
    [
        ("s1", &b.s1),
        ("s2", &b.s2),
        ("s1_co", &b.s1_co),
        ("s2_co", &b.s2_co),
        ("m1", &b.m1),
        ("m2", &b.m2),
        ("m1_co", &b.m1_co),
        ("m2_co", &b.m2_co),
    ]
}

pub fn compute_text(g: &Graph, tp: &TransmissionProfile, b: &IndexBundle) -> String {
    let mut out = String::new();
    writeln!(out, "n: {}", g.n()).unwrap();
    writeln!(out, "m: {}", g.m()).unwrap();
    writeln!(out, "diameter: {}", tp.diameter).unwrap();
    let sigma: Vec<String> = tp.sigma.iter().map(u64::to_string).collect();
    writeln!(out, "transmission: {}", sigma.join(" ")).unwrap();
    match tp.regular_k {
        Some(k) => writeln!(out, "transmission_regular_k: {k}").unwrap(),
        None => writeln!(out, "transmission_regular_k: none").unwrap(),
    }
    writeln!(out, "wiener: {}", b.wiener).unwrap();
    for (key, value) in bundle_fields(b) {
        writeln!(out, "{key}: {value}").unwrap();
    }
    out
}

fn value_json(v: &ClosedFormValue, as_printed: bool) -> Value {
    let shown = if as_printed {
        v.printed_or_corrected()
    } else {
        &v.corrected
    };
    json!({
        "value": json_int(shown.clone()),
        "corrected": json_int(v.corrected.clone()),
        "as_printed": v.as_printed.clone().map_or(Value::Null, json_int),
        "erratum": v.erratum,
    })
}

pub fn closed_form_json(r: &ClosedFormReport, as_printed: bool) -> String {
    let indices: Map<String, Value> = IndexName::ALL
        .into_iter()
        .map(|i| (i.as_str().to_string(), value_json(r.get(i), as_printed)))
        .collect();
    to_pretty(&json!({
        "family": r.family.to_string(),
        "mode": if as_printed { Mode::AsPrinted } else { Mode::Corrected }.to_string(),
        "n": json_int(r.n.clone()),
        "m": json_int(r.m.clone()),
        "degree": json_int(r.degree.clone()),
        "indices": indices,
    }))
}

pub fn closed_form_text(r: &ClosedFormReport, as_printed: bool) -> String {
    let mut out = String::new();
    let mode = if as_printed {
        Mode::AsPrinted
    } else {
        Mode::Corrected
    };
    writeln!(out, "family: {}", r.family).unwrap();
    writeln!(out, "mode: {mode}").unwrap();
    writeln!(out, "n: {}", r.n).unwrap();
    writeln!(out, "m: {}", r.m).unwrap();
    writeln!(out, "degree: {}", r.degree).unwrap();
    for index in IndexName::ALL {
        let v = r.get(index);
        if as_printed {
            write!(out, "{}: {}", index.as_str(), v.printed_or_corrected()).unwrap();
            if v.erratum {
                write!(out, "  [erratum: corrected value {}]", v.corrected).unwrap();
            }
        } else {
            write!(out, "{}: {}", index.as_str(), v.corrected).unwrap();
            if let (true, Some(p)) = (v.erratum, &v.as_printed) {
                write!(out, "  [printed value {p} differs]").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

pub fn bounds_json(b: &BoundsReport) -> String {
    to_pretty(&json!({
        "s1_lower": json_int(b.s1_lower.clone()),
        "s2_lower": json_int(b.s2_lower.clone()),
        "s1_actual": json_int(b.s1_actual.clone()),
        "s2_actual": json_int(b.s2_actual.clone()),
        "equality": b.equality,
        "complement_diameter": json_int(b.complement_diameter),
    }))
}

pub fn bounds_text(b: &BoundsReport) -> String {
    format!(
        "complement S1: {} >= {}\ncomplement S2: {} >= {}\nequality: {}\ncomplement diameter: {}\n",
        b.s1_actual, b.s1_lower, b.s2_actual, b.s2_lower, b.equality, b.complement_diameter
    )
}

fn relation_str(r: Relation) -> &'static str {
    match r {
        Relation::Equal => "==",
        Relation::AtLeast => ">=",
    }
}

fn violated_str(r: Relation) -> &'static str {
    match r {
        Relation::Equal => "!=",
        Relation::AtLeast => "<",
    }
}

fn case_json(c: &CaseRecord) -> Value {
    json!({
        "subject": c.subject,
        "check": c.check,
        "mode": c.mode.to_string(),
        "relation": relation_str(c.relation),
        "oracle": json_int(c.oracle.clone()),
        "claimed": json_int(c.claimed.clone()),
        "matched": c.matched,
        "registered_erratum": c.registered_erratum(),
        "erratum": c.erratum,
        "note": c.note,
    })
}

pub fn verification_json(r: &VerificationReport) -> String {
    let s = r.summary();
    to_pretty(&json!({
        "cases": r.cases.iter().map(case_json).collect::<Vec<_>>(),
        "summary": {
            "total": s.total,
            "passed": s.passed,
            "failed": s.failed,
            "errata": s.errata,
        },
    }))
}

pub fn verification_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.cases {
        let status = if c.matched {
            "ok"
        } else if c.is_failure() {
            "FAIL"
        } else {
            "erratum"
        };
        write!(
            out,
            "{status:<8} {} {} [{}] oracle {} {} claimed {}",
            c.subject,
            c.check,
            c.mode,
            c.oracle,
            if c.matched {
                relation_str(c.relation)
            } else {
                violated_str(c.relation)
            },
            c.claimed
        )
        .unwrap();
        if let Some(id) = c.erratum {
            write!(out, " ({id})").unwrap();
        }
        if let Some(note) = &c.note {
            write!(out, " -- {note}").unwrap();
        }
        out.push('\n');
    }
    let s = r.summary();
    writeln!(
        out,
        "total {}, passed {}, registered errata {}, failed {}",
        s.total, s.passed, s.errata, s.failed
    )
    .unwrap();
    out
}
