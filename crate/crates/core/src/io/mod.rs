//! JSON interchange for representations and rendering of analysis reports.

mod document;
mod report;

pub use document::{
    input_digest, load_rep_file, parse_rep, write_rep, DocumentError, Entry, GeneratorDocument, RepDocument,
    SCHEMA_VERSION,
};
pub use report::{
    analyze_report, certificate_json, certificates_from_value, classify_report, suspend_report, verify_report,
    AnalyzeOptions, Command, CommutantSummary, Report, ReportError, REPORT_SCHEMA_VERSION,
};
