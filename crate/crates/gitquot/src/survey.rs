//! Exhaustive survey of every Schubert variety with semistable points.

use std::io;

use gitquot_core::{
    analyze, enumerate_interval, minimal_semistable, ColumnTuple, Grassmannian, Result, Verdict,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub w: ColumnTuple,
    pub verdict: Verdict,
    pub component_count: usize,
    pub components: Vec<ColumnTuple>,
}

/// One row per `w >= w_{r,n}`, in lexicographic order.
pub fn survey(ctx: &Grassmannian) -> Result<Vec<SurveyRow>> {
    let minimal = minimal_semistable(ctx)?;
    let tuples: Vec<ColumnTuple> = enumerate_interval(&minimal, &ctx.top())?.collect();
    tuples
        .par_iter()
        .map(|w| {
            let report = analyze(w, ctx)?;
            Ok(SurveyRow {
                w: report.w,
                verdict: report.verdict,
                component_count: report.components.len(),
                components: report.components,
            })
        })
        .collect()
}

fn join(t: &ColumnTuple) -> String {
    t.entries()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// CSV with a header row; components are separated by `;`.
pub fn write_csv<W: io::Write>(rows: &[SurveyRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["w", "verdict", "component_count", "components"])?;
    for row in rows {
        let components = row
            .components
            .iter()
            .map(join)
            .collect::<Vec<_>>()
            .join(";");
        writer.write_record([
            join(&row.w),
            row.verdict.to_string(),
            row.component_count.to_string(),
            components,
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonRow {
    w: Vec<usize>,
    verdict: &'static str,
    component_count: usize,
    components: Vec<Vec<usize>>,
}

pub fn to_json(ctx: &Grassmannian, rows: &[SurveyRow]) -> serde_json::Value {
    let rows: Vec<JsonRow> = rows
        .iter()
        .map(|row| JsonRow {
            w: row.w.entries().to_vec(),
            verdict: row.verdict.as_str(),
            component_count: row.component_count,
            components: row
                .components
                .iter()
                .map(|v| v.entries().to_vec())
                .collect(),
        })
        .collect();
    serde_json::json!({ "r": ctx.r(), "n": ctx.n(), "rows": rows })
}
