use rayon::prelude::*;
use serde::Serialize;

use qcert_core::congruence::FactorDiag;
use qcert_core::theorems::{verify, Kind, StatementId, StatementSummary, Variant, VerdictRecord};

use crate::Format;

fn factors_text(fs: &[FactorDiag], kind: Kind) -> String {
    let prefix = if kind == Kind::Q { "Phi_" } else { "" };
    fs.iter()
        .map(|f| format!("{prefix}{}^{}:{}/{}", f.d, f.required, f.val_num, f.val_den))
        .collect::<Vec<_>>()
        .join(" ")
}

fn summary_line(s: &StatementSummary) -> String {
    format!(
        "{} [{}]: {}/{} hold, {} fail, {} ill-posed, {} ms",
        s.statement, s.variant, s.holds, s.cells, s.fails, s.ill_posed, s.elapsed_ms
    )
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Verdict records of one statement. Factor diagnostics in csv and text
/// read `Phi_d^required:val_num/val_den` (or `p^e:...` for integer
/// congruences), with `inf` for a zero difference.
pub fn render_records(records: &[VerdictRecord], format: Format) -> Result<String, String> {
    let Some(first) = records.first() else {
        return Ok(if format == Format::Json { "[]\n".into() } else { String::new() });
    };
    let info = first.statement.info();
    let (params, kind) = (info.params, info.kind);
    match format {
        Format::Json => serde_json::to_string_pretty(records)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["statement", "variant"];
            header.extend_from_slice(params);
            header.extend_from_slice(&["status", "factors", "elapsed_ms"]);
            w.write_record(&header).map_err(|e| e.to_string())?;
            for r in records {
                let mut row = vec![r.statement.to_string(), r.variant.to_string()];
                row.extend(params.iter().map(|p| {
                    r.params.get(p).map(|v| v.to_string()).unwrap_or_default()
                }));
                row.push(r.status.to_string());
                row.push(factors_text(&r.factors, kind));
                row.push(r.elapsed_ms.to_string());
                w.write_record(&row).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Text => {
            let mut out = String::new();
            for r in records {
                out.push_str(&format!(
                    "{} {} {} {}\n",
                    r.statement,
                    r.params,
                    r.status,
                    factors_text(&r.factors, kind)
                ));
            }
            let s = StatementSummary::from_records(first.statement, first.variant, records);
            out.push_str(&summary_line(&s));
            out.push('\n');
            Ok(out)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VariantRun {
    #[serde(flatten)]
    pub summary: StatementSummary,
    pub records: Vec<VerdictRecord>,
}

/// One statement's default-grid results; statements with a correction
/// carry both variants side by side.
#[derive(Debug, Serialize)]
pub struct ReportEntry {
    pub statement: StatementId,
    pub title: &'static str,
    pub hypotheses: &'static str,
    pub correction: Option<&'static str>,
    pub runs: Vec<VariantRun>,
}

impl ReportEntry {
    pub fn run(id: StatementId) -> ReportEntry {
        let info = id.info();
        let mut variants = vec![Variant::AsPrinted];
        if info.correction.is_some() {
            variants.push(Variant::Corrected);
        }
        let runs = variants
            .into_par_iter()
            .map(|v| {
                let records = verify(id, &id.default_grid(), v);
                VariantRun {
                    summary: StatementSummary::from_records(id, v, &records),
                    records,
                }
            })
            .collect();
        ReportEntry {
            statement: id,
            title: info.title,
            hypotheses: info.hypotheses,
            correction: info.correction,
            runs,
        }
    }

    /// Judged on the corrected variant when one exists.
    pub fn holds(&self) -> bool {
        self.runs.last().is_some_and(|r| r.summary.all_hold())
    }
}

#[derive(Serialize)]
struct FlatRow<'a> {
    statement: String,
    variant: String,
    params: String,
    status: &'a str,
    elapsed_ms: u64,
}

pub fn render_report(entries: &[ReportEntry], format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(entries)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let rows: Vec<FlatRow> = entries
                .iter()
                .flat_map(|e| e.runs.iter())
                .flat_map(|run| run.records.iter())
                .map(|r| FlatRow {
                    statement: r.statement.to_string(),
                    variant: r.variant.to_string(),
                    params: r.params.to_string(),
                    status: r.status.as_str(),
                    elapsed_ms: r.elapsed_ms,
                })
                .collect();
            csv_rows(&rows)
        }
        Format::Text => {
            let mut out = String::new();
            for e in entries {
                for run in &e.runs {
                    out.push_str(&summary_line(&run.summary));
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}
