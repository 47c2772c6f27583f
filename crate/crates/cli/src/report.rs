use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// What every command emits.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub round: Option<u32>,
    pub seed: u64,
    pub outputs: Value,
    pub checks: Vec<CheckLine>,
    #[serde(skip)]
    pub table: Vec<String>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// SHA-256 over the input byte streams, each prefixed by its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

pub fn round_to(x: f64, places: u32) -> f64 {
    let k = 10f64.powi(places as i32);
    (x * k).round() / k
}

/// Rounds every float in `v` in place.
pub fn round_value(v: &mut Value, places: u32) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_to(x, places)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|x| round_value(x, places)),
        Value::Object(map) => map.values_mut().for_each(|x| round_value(x, places)),
        _ => {}
    }
}

pub fn num(x: f64, round: Option<u32>) -> String {
    match round {
        Some(p) => format!("{:.*}", p as usize, x),
        None => format!("{x}"),
    }
}

pub fn triple(v: &[f64], round: Option<u32>) -> String {
    let parts: Vec<String> = v.iter().map(|&x| num(x, round)).collect();
    format!("({})", parts.join(", "))
}

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(report).expect("report serializes");
            if let (Some(p), Some(out)) = (report.round, v.get_mut("outputs")) {
                round_value(out, p);
            }
            let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = String::new();
            for line in &report.table {
                s.push_str(line);
                s.push('\n');
            }
            if !report.checks.is_empty() {
                let passed = report.checks.iter().filter(|c| c.passed).count();
                for c in report.checks.iter().filter(|c| !c.passed) {
                    s.push_str(&format!("MISMATCH {}", c.label));
                    if let Some(d) = &c.detail {
                        s.push_str(&format!(": {d}"));
                    }
                    s.push('\n');
                }
                s.push_str(&format!("{passed}/{} checks passed\n", report.checks.len()));
            }
            s.push_str(&format!("inputs sha256 {}\n", report.inputs_digest));
            s
        }
    }
}
