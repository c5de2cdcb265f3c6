//! Parsing of polynomials and problem files, and report serialization.

mod expr;
mod problem;
pub mod report;

pub use expr::parse_polynomial;
pub use problem::{parse_problem_file, ProblemInstance};
pub use report::{
    emit_report, emit_suite, tags, CheckRecord, Expectation, Format, Report, SuiteReport, Summary,
    Verdict,
};
