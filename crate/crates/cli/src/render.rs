//! Plain-text view of a JSON document: one `path: value` line per scalar.

use serde_json::Value;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| x.is_number()) => {
            Some(format!("[{}]", items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, path: &str, out: &mut String) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{path}: {s}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(x, &p, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                walk(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
