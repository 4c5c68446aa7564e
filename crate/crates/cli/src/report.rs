//! Sieve history in CSV or JSON lines.
//!
//! CSV columns are fixed: [`CSV_HEADER`]. JSON-lines records carry
//! `"schema"` ([`REPORT_SCHEMA`]) and `"type"` (`generation` or `summary`).

use std::io::Write;

use evosieve::GenerationReport;
use serde::Serialize;

use crate::args::ReportFormat;
use crate::error::CliResult;

pub const REPORT_SCHEMA: u32 = 1;
pub const CSV_HEADER: [&str; 7] = [
    "generation",
    "best_norm_sq",
    "best_norm",
    "mean_norm",
    "accepted_children",
    "crossovers_attempted",
    "elapsed_ms",
];

#[derive(Serialize)]
struct GenerationRecord<'a> {
    schema: u32,
    #[serde(rename = "type")]
    kind: &'static str,
    generation: usize,
    best_norm_sq: &'a evosieve::Int,
    best_norm: f64,
    mean_norm: f64,
    accepted_children: usize,
    crossovers_attempted: usize,
    elapsed_ms: u128,
}

/// End-of-run figures in the layout of a results table row.
#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub d: usize,
    pub sigma: f64,
    pub ell: f64,
    pub alpha: f64,
    pub g: usize,
    pub n: usize,
    pub stop: String,
    pub best: String,
    pub closure: bool,
    pub wall_ms: u128,
}

pub struct HistoryWriter<'a> {
    format: ReportFormat,
    timing: bool,
    csv: Option<csv::Writer<&'a mut dyn Write>>,
    raw: Option<&'a mut dyn Write>,
}

impl<'a> HistoryWriter<'a> {
    pub fn new(sink: &'a mut dyn Write, format: ReportFormat, timing: bool) -> CliResult<Self> {
        Ok(match format {
            ReportFormat::Csv => {
                let mut w = csv::Writer::from_writer(sink);
                w.write_record(CSV_HEADER).map_err(csv_err)?;
                w.flush()?;
                HistoryWriter {
                    format,
                    timing,
                    csv: Some(w),
                    raw: None,
                }
            }
            ReportFormat::Jsonl => HistoryWriter {
                format,
                timing,
                csv: None,
                raw: Some(sink),
            },
        })
    }

    fn elapsed_ms(&self, r: &GenerationReport) -> u128 {
        if self.timing {
            r.elapsed.as_millis()
        } else {
            0
        }
    }

    pub fn generation(&mut self, r: &GenerationReport) -> CliResult<()> {
        let ms = self.elapsed_ms(r);
        match self.format {
            ReportFormat::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.write_record([
                    r.generation.to_string(),
                    r.best_norm_sq.to_string(),
                    r.best_norm.to_string(),
                    r.mean_norm.to_string(),
                    r.accepted_children.to_string(),
                    r.crossovers_attempted.to_string(),
                    ms.to_string(),
                ])
                .map_err(csv_err)?;
                w.flush()?;
            }
            ReportFormat::Jsonl => {
                let rec = GenerationRecord {
                    schema: REPORT_SCHEMA,
                    kind: "generation",
                    generation: r.generation,
                    best_norm_sq: &r.best_norm_sq,
                    best_norm: r.best_norm,
                    mean_norm: r.mean_norm,
                    accepted_children: r.accepted_children,
                    crossovers_attempted: r.crossovers_attempted,
                    elapsed_ms: ms,
                };
                let w = self.raw.as_mut().expect("raw writer");
                writeln!(
                    w,
                    "{}",
                    serde_json::to_string(&rec).expect("record serializes")
                )?;
                w.flush()?;
            }
        }
        Ok(())
    }

    /// JSON lines get a closing summary record; CSV has no room for one.
    pub fn summary(&mut self, s: &Summary) -> CliResult<()> {
        if let Some(w) = self.raw.as_mut() {
            let mut v = serde_json::to_value(s).expect("summary serializes");
            let obj = v.as_object_mut().expect("summary is an object");
            obj.insert("schema".into(), REPORT_SCHEMA.into());
            obj.insert("type".into(), "summary".into());
            if !self.timing {
                obj.insert("wall_ms".into(), 0.into());
            }
            writeln!(
                w,
                "{}",
                serde_json::to_string(&v).expect("summary serializes")
            )?;
            w.flush()?;
        }
        Ok(())
    }
}

pub(crate) fn csv_err(e: csv::Error) -> crate::error::CliError {
    crate::error::CliError::new(crate::error::ExitStatus::Failure, format!("csv error: {e}"))
}

impl Summary {
    pub fn line(&self, timing: bool) -> String {
        let mut s = format!(
            "d={} n={} g={} ell={:.2} sigma={:.2} alpha={:.4} stop={} closure={} best={}",
            self.d,
            self.n,
            self.g,
            self.ell,
            self.sigma,
            self.alpha,
            self.stop,
            if self.closure { "ok" } else { "FAILED" },
            self.best
        );
        if timing {
            s.push_str(&format!(" wall_ms={}", self.wall_ms));
        }
        s
    }
}
