//! Reports, exhaustive drivers and the command-line front end for
//! [`gitquot_core`].

pub mod cli;
pub mod oracle;
pub mod record;
pub mod render;
pub mod survey;

pub use oracle::{run_oracles, OracleCheck, OracleSummary};
pub use record::AnalyzeRecord;
pub use render::{render, DiagramRendering, RenderOptions};
pub use survey::{survey, SurveyRow};
