//! JSON form of a [`SmoothnessReport`].

use gitquot_core::{Criterion, Grassmannian, SmoothnessReport, Verdict};
use serde::{Deserialize, Serialize};

/// One `analyze` result. Tuples are plain arrays of 1-indexed entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeRecord {
    pub r: usize,
    pub n: usize,
    pub w: Vec<usize>,
    pub verdict: String,
    pub minimal: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub criterion_components: bool,
    pub criterion_runs: bool,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Singular components containing the minimal semistable variety.
    pub components: Vec<Vec<usize>>,
    /// Rows `j` with `b_j >= b_{j-1} + 2` but `a_j < b_{j-1} + 1`.
    pub rows: Vec<usize>,
}

impl From<&SmoothnessReport> for AnalyzeRecord {
    fn from(report: &SmoothnessReport) -> Self {
        AnalyzeRecord {
            r: report.w.r(),
            n: report.w.n(),
            w: report.w.entries().to_vec(),
            verdict: report.verdict.as_str().to_owned(),
            minimal: report.minimal.entries().to_vec(),
            components: report
                .components
                .iter()
                .map(|v| v.entries().to_vec())
                .collect(),
            criterion_components: report.criterion_components.holds,
            criterion_runs: report.criterion_runs.holds,
            witnesses: Witnesses {
                components: report
                    .criterion_components
                    .witnesses
                    .iter()
                    .map(|v| v.entries().to_vec())
                    .collect(),
                rows: report.criterion_runs.witnesses.clone(),
            },
        }
    }
}

impl AnalyzeRecord {
    /// Rebuilds the report, validating every tuple against `G(r, n)`.
    pub fn to_report(&self) -> Result<SmoothnessReport, String> {
        let ctx = Grassmannian::new(self.r, self.n).map_err(|e| e.to_string())?;
        let tuple = |e: &Vec<usize>| ctx.tuple(e.clone()).map_err(|e| e.to_string());
        let verdict = Verdict::parse(&self.verdict)
            .ok_or_else(|| format!("unknown verdict {:?}", self.verdict))?;
        Ok(SmoothnessReport {
            w: tuple(&self.w)?,
            minimal: tuple(&self.minimal)?,
            semistable_nonempty: verdict != Verdict::NoSemistablePoints,
            verdict,
            components: self
                .components
                .iter()
                .map(tuple)
                .collect::<Result<_, _>>()?,
            criterion_components: Criterion {
                holds: self.criterion_components,
                witnesses: self
                    .witnesses
                    .components
                    .iter()
                    .map(tuple)
                    .collect::<Result<_, _>>()?,
            },
            criterion_runs: Criterion {
                holds: self.criterion_runs,
                witnesses: self.witnesses.rows.clone(),
            },
        })
    }
}
