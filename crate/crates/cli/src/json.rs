//! Exact rationals as `{"num", "den"}` pairs.

use hispec::{Rational, Spectrum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
struct Pair {
    num: Value,
    den: Value,
}

fn integer(s: String) -> Value {
    match s.parse::<i64>() {
        Ok(v) => json!(v),
        // Out of i64 range: keep every digit.
        Err(_) => Value::String(s),
    }
}

pub fn rational(r: &Rational) -> Value {
    serde_json::to_value(Pair {
        num: integer(r.numer().to_string()),
        den: integer(r.denom().to_string()),
    })
    .unwrap()
}

pub fn spectrum(sp: &Spectrum) -> Value {
    Value::Array(
        sp.entries()
            .map(|(a, m)| {
                let mut v = rational(a);
                v.as_object_mut().unwrap().insert("mult".into(), json!(m));
                v
            })
            .collect(),
    )
}
