use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::rational::{fmt_q, ExtQ, Q};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Exact,
    MonteCarlo,
    Quadrature,
}

impl Provenance {
    fn label(self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::MonteCarlo => "monte-carlo",
            Provenance::Quadrature => "quadrature",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub problem: String,
    pub seed: u64,
    pub results: Vec<Entry>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str, problem: &str, seed: u64) -> Self {
        Report {
            report_version: REPORT_VERSION,
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            problem: problem.into(),
            seed,
            results: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            table: None,
        }
    }

    pub fn exact(&mut self, name: &str, value: impl Into<Value>) {
        self.results.push(Entry { name: name.into(), value: value.into(), provenance: Provenance::Exact, stderr: None });
    }

    pub fn rational(&mut self, name: &str, value: &Q) {
        self.exact(name, fmt_q(value));
    }

    pub fn ext(&mut self, name: &str, value: &ExtQ) {
        self.exact(name, value.to_report_string());
    }

    pub fn estimated(&mut self, name: &str, value: f64, stderr: Option<f64>, provenance: Provenance) {
        self.results.push(Entry { name: name.into(), value: float(value), provenance, stderr });
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.results.iter().find(|e| e.name == name).map(|e| &e.value)
    }

    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    /// The series table when present, otherwise one row per result.
    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        match &self.table {
            Some(t) => {
                w.write_record(&t.columns)?;
                for r in &t.rows {
                    w.write_record(r)?;
                }
            }
            None => {
                w.write_record(["name", "value", "provenance", "stderr"])?;
                for e in &self.results {
                    let stderr = e.stderr.map(|s| s.to_string()).unwrap_or_default();
                    w.write_record([e.name.as_str(), &plain(&e.value), e.provenance.label(), &stderr])?;
                }
            }
        }
        w.flush()
    }

    pub fn write_table(&self, out: &mut dyn Write, quiet: bool) -> io::Result<()> {
        if !quiet {
            writeln!(out, "{} {}  {}  {}  seed {}", self.tool, self.version, self.command, self.problem, self.seed)?;
        }
        let width = self.results.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.results {
            let mut line = format!("{:width$}  {}  [{}]", e.name, plain(&e.value), e.provenance.label());
            if let Some(s) = e.stderr {
                line.push_str(&format!("  stderr {s:.3e}"));
            }
            writeln!(out, "{line}")?;
        }
        if quiet {
            return Ok(());
        }
        if !self.witnesses.is_empty() {
            writeln!(out, "witnesses:")?;
            for w in &self.witnesses {
                writeln!(out, "  {w}")?;
            }
        }
        if let Some(t) = &self.table {
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| t.rows.iter().map(|r| r[i].len()).chain([t.columns[i].len()]).max().unwrap_or(0))
                .collect();
            let fmt_row = |cells: &[String]| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", fmt_row(&t.columns))?;
            for r in &t.rows {
                writeln!(out, "{}", fmt_row(r))?;
            }
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        Ok(())
    }
}

fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::String(x.to_string()), Value::Number)
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
