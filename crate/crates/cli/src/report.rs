//! Command results and their text and json renderings.

use linkage_core::linkage::{Evidence, Ternary};
use linkage_core::sheaf::{ChartReport, SheafReport};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn ternary_name(t: Ternary) -> &'static str {
    match t {
        Ternary::Yes => "Yes",
        Ternary::No => "No",
        Ternary::Inconclusive => "Inconclusive",
    }
}

#[derive(Clone, Debug, Default)]
pub struct CommandResult {
    pub command: String,
    pub verdict: Option<String>,
    pub inconclusive: bool,
    /// Random trials used, reported with inconclusive verdicts.
    pub trials: Option<usize>,
    pub note: Option<String>,
    /// Command-specific values in insertion order.
    pub values: Vec<(String, Value)>,
    pub matrices: Vec<(String, String)>,
    pub betti: Option<Value>,
    pub evidence: Vec<Evidence>,
    pub chart_reports: Vec<ChartReport>,
}

impl CommandResult {
    pub fn new(command: impl Into<String>) -> Self {
        CommandResult { command: command.into(), ..Default::default() }
    }

    pub fn exit_code(&self) -> i32 {
        if self.inconclusive {
            2
        } else {
            0
        }
    }

    pub fn verdict(&mut self, v: impl Into<String>, trials: usize) {
        let v = v.into();
        self.inconclusive = v == "Inconclusive";
        if self.inconclusive {
            self.trials = Some(trials);
        }
        self.verdict = Some(v);
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.push((key.to_string(), v.into()));
    }

    pub fn matrix(&mut self, label: impl Into<String>, text: String) {
        self.matrices.push((label.into(), text));
    }

    pub fn sheaf(&mut self, rep: &SheafReport, trials: usize) {
        self.verdict(ternary_name(rep.overall), trials);
        self.evidence.extend(rep.checks.iter().cloned());
        self.chart_reports.extend(rep.charts.iter().cloned());
        if let Some(r) = rep.rank {
            self.value("rank", r);
        }
        if let Some((t, k)) = rep.co_rank {
            self.value("co_rank", json!([t, k]));
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), self.command.clone().into());
        if let Some(v) = &self.verdict {
            m.insert("verdict".into(), v.clone().into());
        }
        if let Some(t) = self.trials {
            m.insert("trials".into(), t.into());
        }
        if let Some(n) = &self.note {
            m.insert("note".into(), n.clone().into());
        }
        for (k, v) in &self.values {
            m.insert(k.clone(), v.clone());
        }
        m.insert("matrices".into(), pairs(&self.matrices));
        if let Some(b) = &self.betti {
            m.insert("betti".into(), b.clone());
        }
        m.insert("evidence".into(), self.evidence.iter().map(evidence_json).collect());
        if !self.chart_reports.is_empty() {
            let charts: Map<String, Value> = self
                .chart_reports
                .iter()
                .map(|c| {
                    let body = json!({
                        "outcome": ternary_name(c.outcome),
                        "summary": c.summary,
                        "evidence": c.evidence.iter().map(evidence_json).collect::<Vec<_>>(),
                    });
                    (c.chart.clone(), body)
                })
                .collect();
            m.insert("chart_reports".into(), Value::Object(charts));
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = vec![format!("command: {}", self.command)];
        if let Some(v) = &self.verdict {
            out.push(format!("verdict: {v}"));
        }
        if let Some(t) = self.trials {
            out.push(format!("trials: {t}"));
        }
        if let Some(n) = &self.note {
            out.push(format!("note: {n}"));
        }
        for (k, v) in &self.values {
            out.push(format!("{k}: {}", plain(v)));
        }
        if let Some(b) = &self.betti {
            out.push(format!("betti: {}", plain(b)));
        }
        if !self.matrices.is_empty() {
            out.push("matrices:".into());
            let width = self.matrices.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
            for (l, m) in &self.matrices {
                out.push(format!("  {l:<width$}  {m}"));
            }
        }
        if !self.evidence.is_empty() {
            out.push("evidence:".into());
            evidence_text(&self.evidence, "  ", &mut out);
        }
        for c in &self.chart_reports {
            out.push(format!("chart {}: {} ({})", c.chart, ternary_name(c.outcome), c.summary));
            evidence_text(&c.evidence, "  ", &mut out);
        }
        out.join("\n") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json().to_string() + "\n",
            Format::Text => self.to_text(),
        }
    }
}

fn pairs(items: &[(String, String)]) -> Value {
    Value::Object(items.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect())
}

fn evidence_json(e: &Evidence) -> Value {
    json!({
        "name": e.name,
        "outcome": ternary_name(e.outcome),
        "detail": e.detail,
        "informational": e.informational,
        "matrices": pairs(&e.matrices),
    })
}

fn evidence_text(items: &[Evidence], indent: &str, out: &mut Vec<String>) {
    for e in items {
        let tag = if e.informational { " (informational)" } else { "" };
        out.push(format!("{indent}[{}] {}{tag}: {}", ternary_name(e.outcome), e.name, e.detail));
        for (l, m) in &e.matrices {
            out.push(format!("{indent}    {l}: {m}"));
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// Error rendering; the exit code for errors is 1.
pub fn render_error(command: &str, message: &str, format: Format) -> String {
    match format {
        Format::Json => json!({ "command": command, "error": message }).to_string() + "\n",
        Format::Text => format!("error: {message}\n"),
    }
}
