//! JSON rendering of classification and tangent reports.
//!
//! Keys are emitted in sorted order (serde_json's default `Value` map), so
//! the output is byte-stable across runs.

use hilbsmooth::{Classification, MonomialIdeal, SingularCertificate, TangentReport, Verdict,
    WitnessStatus};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn ideal_json(ideal: &MonomialIdeal) -> Value {
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
    json!({ "vars": ideal.nvars(), "gens": gens })
}

/// A big integer as a JSON number when it fits in i64, else as a string.
fn big_json(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn classification_json(c: &Classification, cert: Option<&SingularCertificate>) -> Value {
    let (verdict, condition) = match c.verdict {
        Verdict::Empty => ("empty", Value::Null),
        Verdict::Smooth(k) => ("smooth", json!(k)),
        Verdict::Singular => ("singular", Value::Null),
    };
    let witness_status = match c.witness_status {
        WitnessStatus::NotNeeded => "notNeeded",
        WitnessStatus::Provided => "provided",
        WitnessStatus::NotConstructedByPaper => "notConstructedByPaper",
    };
    let mut value = json!({
        "ambient": c.ambient,
        "partition": c.partition.parts(),
        "polynomial": c.partition.hilbert_polynomial().to_string(),
        "verdict": verdict,
        "condition": condition,
        "lexComponentDim": c.lex_component_dim.as_ref().map(big_json).unwrap_or(Value::Null),
        "description": c.description,
        "witness": c.witness.as_ref().map(ideal_json).unwrap_or(Value::Null),
        "witnessStatus": witness_status,
    });
    if let Some(cert) = cert {
        value["certificate"] = json!({
            "hom0": cert.hom0_dim,
            "lexComponentDim": big_json(&cert.lex_component_dim),
            "singularCertified": cert.singular_certified,
            "assumesLexComponent": cert.assumes_lex_component,
        });
    }
    value
}

pub fn tangent_json(report: &TangentReport) -> Value {
    json!({
        "ideal": ideal_json(&report.ideal),
        "hom0Dim": report.hom0_dim,
        "unknowns": report.unknowns,
        "equations": report.equations,
        "field": report.field.to_string(),
    })
}
