//! Plain-text rendering. Characters use `x_i = e^{eps_i}` and
//! `y_j = e^{delta_j}`.

use std::fmt::Write;

use num_bigint::BigInt;
use ospkw_core::{HalfInt, LaurentPolynomial};

fn power(name: &str, e: HalfInt) -> Option<String> {
    match e.doubled() {
        0 => None,
        2 => Some(name.to_string()),
        d if d % 2 == 0 => Some(format!("{name}^{}", d / 2)),
        _ => Some(format!("{name}^({e})")),
    }
}

/// `2 x1 y1^-1 + x1^(1/2) + 1`.
pub fn polynomial(p: &LaurentPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let n = p.n();
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().enumerate() {
        let d = e.as_slice();
        let mut vars: Vec<String> = Vec::new();
        for j in 0..p.m() {
            vars.extend(power(&format!("x{}", j + 1), HalfInt::from_doubled(d[n + j])));
        }
        for (i, &c) in d[..n].iter().enumerate() {
            vars.extend(power(&format!("y{}", i + 1), HalfInt::from_doubled(c)));
        }
        let negative = c < &BigInt::from(0);
        let mag = if negative { -c } else { c.clone() };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let one = mag == BigInt::from(1);
        if vars.is_empty() {
            let _ = write!(out, "{mag}");
        } else if one {
            out.push_str(&vars.join(" "));
        } else {
            let _ = write!(out, "{mag} {}", vars.join(" "));
        }
    }
    out
}

/// `key: value` lines from a JSON object, recursing into nested objects
/// and printing arrays of scalars inline.
pub fn from_json(v: &serde_json::Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map {
                match val {
                    serde_json::Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, val, depth + 1);
                    }
                    serde_json::Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            let _ = writeln!(out, "{pad}  -");
                            write_value(out, item, depth + 2);
                        }
                    }
                    serde_json::Value::Array(items) => {
                        let shown: Vec<String> = items.iter().map(scalar).collect();
                        let _ = writeln!(out, "{pad}{k}: [{}]", shown.join(", "));
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(val));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}
