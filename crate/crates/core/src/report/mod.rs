//! Group specs, analysis reports and table verification.

mod analysis;
mod chartable;
pub mod corpus;
mod fixtures;
mod parse;
pub mod search;
mod verify;

pub use self::analysis::{
    analyze, analyze_full, analyze_group, Analysis, AnalysisReport, AnalyzeOptions, CharacterRecord,
    ClassRecord, TableRow, Timing, ROW_HEADER,
};
pub use self::chartable::{chartable_text, symmetric_residue};
pub use self::corpus::{corpus, CORPUS_SPECS};
pub use self::fixtures::{
    shipped_fixtures, parse_fixtures, CheckMode, FixtureRow, Provenance, FIXTURE_FORMAT_VERSION, EXPECTED_TABLES,
};
pub use self::parse::parse_group_spec;
pub use self::search::{
    search_order32, sweep_small_groups, Order32Hit, Order32Properties, Order32Search, SweepSummary,
};
pub use self::verify::{
    an_formula_row, analyze_corpus, verify_paper, CheckResult, Selector, Status, VerifySummary,
};
