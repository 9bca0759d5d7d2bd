//! Report envelope and JSON encodings of library values.
//!
//! Everything under `payload` is deterministic; its SHA-256 is stored in
//! `digest`. Wall-clock timing sits outside it.

use std::time::Duration;

use liepair::cochain::CECochain;
use liepair::exact::{format_scalar, Combination, MultiIndex, Scalar};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "liepair-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification ran and found a counterexample.
    Failed,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub payload: Value,
}

pub fn digest(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("json values serialize");
    hex::encode(Sha256::digest(&bytes))
}

impl Report {
    pub fn render(&self, elapsed: Duration, pretty: bool) -> String {
        let v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "status": self.status.as_str(),
            "payload": self.payload,
            "digest": digest(&self.payload),
            "timing": { "elapsed_ms": elapsed.as_secs_f64() * 1e3 },
        });
        if pretty {
            serde_json::to_string_pretty(&v).unwrap()
        } else {
            serde_json::to_string(&v).unwrap()
        }
    }
}

/// Basis labels, used to name monomials.
pub struct Labels<'a> {
    pub names: &'a [String],
}

impl Labels<'_> {
    pub fn name(&self, slot: usize) -> &str {
        &self.names[slot]
    }

    /// `e*f^2`; `1` for the empty monomial.
    pub fn monomial(&self, m: &MultiIndex) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.exponents()
            .into_iter()
            .map(|(s, e)| if e == 1 { self.name(s).to_string() } else { format!("{}^{e}", self.name(s)) })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Sparse combination of monomials in slots `offset..`.
    pub fn combination<S>(&self, c: &Combination<S>) -> Value {
        Value::Array(
            c.terms()
                .map(|(m, x)| {
                    json!({
                        "monomial": self.monomial(m),
                        "slots": one_based(m.slots()),
                        "coeff": format_scalar(x),
                    })
                })
                .collect(),
        )
    }

    /// Entries `ν^I x^β ∂_j` with polynomial coefficients.
    pub fn cochain(&self, c: &CECochain) -> Value {
        Value::Array(
            c.terms()
                .map(|((e, m, j), x)| {
                    let mut o = Map::new();
                    o.insert("form".into(), json!(e.slots().iter().map(|&s| self.name(s)).collect::<Vec<_>>()));
                    o.insert("form_slots".into(), json!(one_based(e.slots())));
                    o.insert("monomial".into(), json!(self.monomial(m)));
                    o.insert("monomial_slots".into(), json!(one_based(m.slots())));
                    o.insert("out".into(), json!(self.name(*j)));
                    o.insert("out_slot".into(), json!(j + 1));
                    o.insert("coeff".into(), json!(format_scalar(x)));
                    Value::Object(o)
                })
                .collect(),
        )
    }
}

pub fn one_based(slots: &[usize]) -> Vec<usize> {
    slots.iter().map(|s| s + 1).collect()
}

pub fn scalar(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}
