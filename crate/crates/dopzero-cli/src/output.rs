//! CSV (RFC-4180-style quoting) and JSON emission.
//!
//! JSON key order is fixed by struct declaration order: spec, method,
//! zeros, checks. Floats go through Rust's shortest round-trip `Display`,
//! so output is bit-identical across runs for identical inputs.

use dopzero::scalar::ExactScalar;
use dopzero::zeros::ZeroSet;
use dopzero::Family;
use serde::Serialize;

/// Quotes a CSV field when it contains a comma, quote or line break.
pub fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// One CSV line from preformatted fields, with terminator.
pub fn csv_row(fields: &[String]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

pub fn zeros_csv(set: &ZeroSet) -> String {
    let mut out = String::from("index,zero,bracket_lo,bracket_hi,lemma1_sign\n");
    for (i, z) in set.zeros.iter().enumerate() {
        let fields = vec![
            (i + 1).to_string(),
            z.refined.to_string(),
            approx(&z.bracket_lo).to_string(),
            approx(&z.bracket_hi).to_string(),
            z.lemma1_product_sign
                .map(|s| s.to_string())
                .unwrap_or_default(),
        ];
        out.push_str(&csv_row(&fields));
    }
    out
}

fn approx(v: &ExactScalar) -> f64 {
    v.to_real().unwrap_or(f64::INFINITY)
}

#[derive(Serialize)]
struct SpecJson {
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<String>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    m: Option<String>,
    n: usize,
}

#[derive(Serialize)]
struct ZeroJson {
    index: usize,
    zero: f64,
    bracket_lo: String,
    bracket_hi: String,
    lemma1_sign: Option<i8>,
}

#[derive(Serialize)]
struct ChecksJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    jacobi: Option<Vec<f64>>,
}

#[derive(Serialize)]
struct ZeroSetJson {
    spec: SpecJson,
    method: String,
    zeros: Vec<ZeroJson>,
    checks: ChecksJson,
}

pub fn zeros_json(set: &ZeroSet) -> String {
    let spec = match set.spec.family() {
        Family::Meixner { beta, c } => SpecJson {
            family: "meixner",
            beta: Some(beta.to_string()),
            c: Some(c.to_string()),
            p: None,
            m: None,
            n: set.spec.degree(),
        },
        Family::Krawtchouk { p, m } => SpecJson {
            family: "krawtchouk",
            beta: None,
            c: None,
            p: Some(p.to_string()),
            m: Some(m.to_string()),
            n: set.spec.degree(),
        },
    };
    let doc = ZeroSetJson {
        spec,
        method: set.method.to_string(),
        zeros: set
            .zeros
            .iter()
            .enumerate()
            .map(|(i, z)| ZeroJson {
                index: i + 1,
                zero: z.refined,
                bracket_lo: z.bracket_lo.to_string(),
                bracket_hi: z.bracket_hi.to_string(),
                lemma1_sign: z.lemma1_product_sign,
            })
            .collect(),
        checks: ChecksJson {
            jacobi: set.jacobi_cross.clone(),
        },
    };
    serde_json::to_string_pretty(&doc).expect("serialisable report")
}
