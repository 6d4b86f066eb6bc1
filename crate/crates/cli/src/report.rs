use std::time::Instant;

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    ExactPass,
    Pass,
    Fail,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::ExactPass => "exact-pass",
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: f64,
    /// Printed to stderr when the check fails.
    pub detail: Option<String>,
}

/// Everything a subcommand reports: `{command, params, checks, results, wall_ms}`.
pub struct Report {
    command: String,
    params: Map<String, Value>,
    checks: Vec<Check>,
    results: Map<String, Value>,
    table: Option<(Vec<String>, Vec<Vec<Value>>)>,
    started: Instant,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            checks: Vec::new(),
            results: Map::new(),
            table: None,
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), clean(value.into()));
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), clean(value.into()));
    }

    /// Exact check: the residual is the number of nonzero terms left.
    pub fn exact(&mut self, name: &str, nonzero_terms: usize, detail: impl FnOnce() -> String) {
        let status = if nonzero_terms == 0 { Status::ExactPass } else { Status::Fail };
        let detail = (status == Status::Fail).then(detail);
        self.checks.push(Check { name: name.to_string(), status, residual: nonzero_terms as f64, detail });
    }

    pub fn numeric(&mut self, name: &str, residual: f64, tolerance: f64) {
        let status = if residual <= tolerance { Status::Pass } else { Status::Fail };
        let detail = (status == Status::Fail).then(|| format!("residual {} exceeds {}", fmt_num(residual), fmt_num(tolerance)));
        self.checks.push(Check { name: name.to_string(), status, residual, detail });
    }

    pub fn fail(&mut self, name: &str, detail: String) {
        self.checks.push(Check { name: name.to_string(), status: Status::Fail, residual: f64::NAN, detail: Some(detail) });
    }

    /// Row data for CSV output.
    pub fn table(&mut self, header: &[&str], rows: Vec<Vec<Value>>) {
        self.table = Some((header.iter().map(|s| s.to_string()).collect(), rows));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "status": c.status.as_str(), "residual": number(c.residual)}))
            .collect();
        json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "checks": checks,
            "results": Value::Object(self.results.clone()),
            "wall_ms": number(self.started.elapsed().as_secs_f64() * 1e3),
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some((header, rows)) = &self.table {
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(csv_cell).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            return out;
        }
        out.push_str("name,status,residual\n");
        for c in &self.checks {
            out.push_str(&format!("{},{},{}\n", c.name, c.status.as_str(), fmt_num(c.residual)));
        }
        out
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Number(n) => n.as_f64().map(fmt_num).unwrap_or_else(|| n.to_string()),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// JSON number rounded to 12 significant digits; non-finite values become
/// strings since JSON has no representation for them.
pub fn number(x: f64) -> Value {
    if x.is_finite() {
        serde_json::Number::from_f64(round12(x)).map(Value::Number).unwrap_or(Value::Null)
    } else if x.is_nan() {
        Value::String("nan".into())
    } else if x > 0.0 {
        Value::String("inf".into())
    } else {
        Value::String("-inf".into())
    }
}

fn clean(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => number(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(a) => Value::Array(a.into_iter().map(clean).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, clean(v))).collect()),
        other => other,
    }
}

/// Text form: 12 significant digits, scientific below `1e-3` and at `1e12`
/// and above.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let ax = x.abs();
    if !(1e-3..1e12).contains(&ax) {
        let s = format!("{x:.11e}");
        let (mant, exp) = s.split_once('e').expect("scientific format");
        let mant = if mant.contains('.') { mant.trim_end_matches('0').trim_end_matches('.') } else { mant };
        return format!("{mant}e{exp}");
    }
    let digits = 11 - ax.log10().floor() as i32;
    let s = format!("{x:.*}", digits.max(0) as usize);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
