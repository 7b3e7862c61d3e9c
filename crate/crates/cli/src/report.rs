//! Canonical reports.
//!
//! A report is a JSON object whose keys serialize in sorted order and whose
//! numbers are all integers, so equal reports are equal byte strings. Text
//! output is rendered from the same object.

use std::fmt::Write as _;

use monostab::stability::DstabMethod;
use monostab::{
    AssSet, DepthEntry, EngineConfig, Monomial, MonomialIdeal, PrimeSupport, RelationGraph,
    StabilityReport, Verdict, VerdictStatus,
};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "monostab-report/1";
pub const ENGINE: &str = concat!("monostab ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    value: Value,
}

impl Report {
    /// A report for `command` with the schema/engine stamp; add sections with
    /// [`Report::set`].
    pub fn new(command: &str) -> Self {
        let mut map = Map::new();
        map.insert("schema".into(), json!(SCHEMA));
        map.insert("engine".into(), json!(ENGINE));
        map.insert("command".into(), json!(command));
        map.insert("verdicts".into(), json!([]));
        Report {
            value: Value::Object(map),
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.map_mut().insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.value.get(key)
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    fn map_mut(&mut self) -> &mut Map<String, Value> {
        self.value.as_object_mut().expect("reports are objects")
    }

    pub fn push_verdict(&mut self, name: &str, status: VerdictStatus, detail: impl Into<String>) {
        let entry = json!({"name": name, "status": status.name(), "detail": detail.into()});
        self.map_mut()
            .get_mut("verdicts")
            .and_then(Value::as_array_mut)
            .expect("verdict list")
            .push(entry);
    }

    pub fn push_verdicts(&mut self, verdicts: &[Verdict]) {
        for v in verdicts {
            self.push_verdict(v.name, v.status, v.detail.clone());
        }
    }

    /// Record a checked claim as a verdict.
    pub fn claim(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        let status = if holds {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Fail
        };
        self.push_verdict(name, status, detail);
    }

    /// Names of failed verdicts, in report order.
    pub fn failures(&self) -> Vec<String> {
        self.value["verdicts"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|v| v["status"] == "fail")
            .filter_map(|v| v["name"].as_str().map(String::from))
            .collect()
    }

    pub fn has_failures(&self) -> bool {
        !self.failures().is_empty()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("values always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let value: Value = serde_json::from_str(text)?;
        if !value.is_object() {
            return Err(serde::de::Error::custom("a report is a JSON object"));
        }
        Ok(Report { value })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let map = self.value.as_object().expect("reports are objects");
        let _ = writeln!(
            out,
            "{} ({})",
            map["command"].as_str().unwrap_or("?"),
            ENGINE
        );
        for (key, value) in map {
            if matches!(key.as_str(), "command" | "engine" | "schema" | "verdicts") {
                continue;
            }
            render_text(&mut out, key, value, 0);
        }
        if let Some(verdicts) = map["verdicts"].as_array().filter(|v| !v.is_empty()) {
            out.push_str("verdicts:\n");
            let width = verdicts
                .iter()
                .filter_map(|v| v["name"].as_str())
                .map(str::len)
                .max()
                .unwrap_or(0);
            for v in verdicts {
                let _ = writeln!(
                    out,
                    "  {:<8} {:<width$}  {}",
                    v["status"].as_str().unwrap_or("?"),
                    v["name"].as_str().unwrap_or("?"),
                    v["detail"].as_str().unwrap_or(""),
                );
            }
        }
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn inline_text(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline_text).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}={}", inline_text(v)))
                .collect();
            parts.join(" ")
        }
        other => scalar_text(other),
    }
}

fn render_text(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                render_text(out, k, v, depth + 1);
            }
        }
        // Rows of objects (Ass chains, depth sequences, trials) as tables.
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let _ = writeln!(out, "{pad}{key}:");
            for item in items {
                let _ = writeln!(out, "{pad}  {}", inline_text(item));
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}{key}: {}", parts.join(" "));
        }
        Value::Array(_) => {
            let _ = writeln!(out, "{pad}{key}: {}", inline_text(value));
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar_text(other));
        }
    }
}

// ---- section builders ----

pub fn monomials(ms: &[Monomial]) -> Value {
    Value::Array(ms.iter().map(|m| json!(m.to_string())).collect())
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    json!({
        "vars": i.num_vars(),
        "count": i.len(),
        "generators": monomials(i.generators()),
    })
}

pub fn prime(p: &PrimeSupport) -> Value {
    json!(p.one_based())
}

pub fn ass_set(set: &AssSet) -> Value {
    Value::Array(set.iter().map(prime).collect())
}

/// `[{power, count, primes}, ...]` for `k = 1..`.
pub fn chain(chain: &[AssSet]) -> Value {
    Value::Array(
        chain
            .iter()
            .enumerate()
            .map(|(k, set)| {
                json!({
                    "power": k + 1,
                    "count": set.len(),
                    "has_maximal": set.contains_maximal(),
                    "primes": ass_set(set),
                })
            })
            .collect(),
    )
}

pub fn invariants(i: &MonomialIdeal) -> Value {
    let support: Vec<usize> = i.support().iter().map(|v| v + 1).collect();
    json!({
        "vars": i.num_vars(),
        "generators": i.len(),
        "degree": i.degree(),
        "squarefree": i.is_squarefree(),
        "equigenerated": i.is_equigenerated(),
        "support": support,
        "gcd": i.gcd().to_string(),
    })
}

pub fn gamma(g: &RelationGraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|&(a, b)| json!([a + 1, b + 1]))
        .collect();
    let comps: Vec<Value> = g
        .components()
        .iter()
        .map(|c| json!(c.iter().map(|v| v + 1).collect::<Vec<_>>()))
        .collect();
    json!({
        "vertices": g.vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
        "edges": edges,
        "components": comps,
        "component_count": g.num_components(),
        "complete": g.is_complete(),
        "complete_on_all_variables": g.is_complete_on_all_variables(),
    })
}

pub fn depth_entries(entries: &[DepthEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .enumerate()
            .map(|(k, e)| match e {
                DepthEntry::Computed {
                    depth,
                    pd,
                    field_discrepancy,
                } => json!({
                    "power": k + 1,
                    "depth": depth,
                    "pd": pd,
                    "field_discrepancy": field_discrepancy,
                }),
                DepthEntry::OutOfScope(why) => json!({
                    "power": k + 1,
                    "depth": null,
                    "skipped": why,
                }),
            })
            .collect(),
    )
}

pub fn config(cfg: &EngineConfig) -> Value {
    json!({
        "max_ass_vars": cfg.max_ass_vars,
        "max_generators": cfg.max_generators,
        "max_lattice": cfg.max_lattice,
        "max_components": cfg.max_components,
        "field_characteristic": cfg.field.characteristic(),
        "check_field_characteristic": cfg.check_field.map(|f| f.characteristic()),
    })
}

pub fn dstab_method(m: DstabMethod) -> &'static str {
    match m {
        DstabMethod::Factorization => "factorization",
        DstabMethod::ExactDepth => "exact_depth",
    }
}

/// The bound-check sections shared by `bounds`, `reproduce` and `search`.
pub fn stability(r: &StabilityReport) -> Value {
    let components: Vec<Value> = r
        .dstab
        .components
        .iter()
        .map(|c| {
            json!({
                "block": c.block.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "degree": c.degree,
                "dstab": c.index,
            })
        })
        .collect();
    json!({
        "vars": r.num_vars,
        "degree": r.degree,
        "spread": r.spread,
        "gamma_components": r.components,
        "bound": r.bound,
        "horizon": r.horizon,
        "astab": r.astab,
        "dstab": r.dstab.index,
        "dstab_method": dstab_method(r.dstab.method),
        "dstab_components": components,
        "max_ideal_stable": r.max_ideal_stable,
        "cover_counts": r.cover.counts,
        "gamma": gamma(&r.gamma),
        "ass_chain": chain(&r.chain),
        "depths": depth_entries(&r.depths),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_minimal_and_valid() {
        let r = Report::new("check");
        let text = r.to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdicts"], json!([]));
        assert_eq!(v["schema"], SCHEMA);
        assert!(!r.has_failures());
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("check");
        r.set("zeta", json!(1));
        r.set("alpha", json!({"b": 1, "a": 2}));
        let text = r.to_json();
        let alpha = text.find("\"alpha\"").unwrap();
        let zeta = text.find("\"zeta\"").unwrap();
        assert!(alpha < zeta);
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("ass");
        r.set("ass", json!([[1, 2], [1, 3]]));
        r.claim("demo", false, "x");
        let text = r.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.failures(), vec!["demo".to_string()]);
    }

    #[test]
    fn text_lists_verdicts() {
        let mut r = Report::new("bounds");
        r.set("astab", json!(3));
        r.claim("astab_bound", true, "3 <= 4");
        let text = r.to_text();
        assert!(text.contains("astab: 3"));
        assert!(text.contains("pass"));
        assert!(text.contains("astab_bound"));
    }
}
