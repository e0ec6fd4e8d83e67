//! Plain-text rendering of run reports.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn tree(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if k == "module" {
                    let _ = writeln!(out, "{pad}module: omitted in text output, use --format json");
                    continue;
                }
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        tree(out, x, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        tree(out, x, indent + 2);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

fn kl_table(out: &mut String, payload: &Value) {
    let _ = writeln!(out, "Kazhdan-Lusztig polynomials of S_{} (coefficients ascending in q)", payload["rank"]);
    for e in payload["entries"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  P[{}, {}] = {}", scalar(&e["x"]).unwrap_or_default(), scalar(&e["w"]).unwrap_or_default(), scalar(&e["p"]).unwrap_or_default());
    }
    let _ = writeln!(out, "oracle_agrees: {}", payload["oracle_agrees"]);
}

fn matrix(out: &mut String, title: &str, m: &Value) {
    let _ = writeln!(out, "{title}:");
    for row in m.as_array().into_iter().flatten() {
        let cells: Vec<String> = row.as_array().into_iter().flatten().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

pub fn render(report: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "status: {}", scalar(&report["status"]).unwrap_or_default());
    let _ = writeln!(out, "command: {}", scalar(&report["command"]).unwrap_or_default());
    let _ = writeln!(out, "seed: {}", report["seed"]);
    let payload = &report["payload"];
    match report["command"].as_str() {
        Some("kl") if payload.get("entries").is_some() => kl_table(&mut out, payload),
        Some("mtable") if payload.get("matrix").is_some() => {
            let _ = writeln!(out, "λ = {}, μ = {}, n = {}", scalar(&payload["lambda"]).unwrap_or_default(), scalar(&payload["mu"]).unwrap_or_default(), payload["n"]);
            let _ = writeln!(out, "cosets (w_LR):");
            for c in payload["cosets"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  {}  weight {}  size {}", scalar(&c["w_lr"]).unwrap_or_default(), scalar(&c["weight"]).unwrap_or_default(), c["size"]);
            }
            matrix(&mut out, "multiplicities", &payload["matrix"]);
            matrix(&mut out, "inverse", &payload["inverse"]);
        }
        _ => tree(&mut out, payload, 0),
    }
    out
}
