//! The fixed set of test groups used by the invariant suites.

use crate::families::FamilySpec;
use crate::report::parse_group_spec;

/// Specs of the corpus: every family up to order 720, plus direct and
/// semidirect products.
#[rustfmt::skip]
pub const CORPUS_SPECS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12", "C16",
    "D3", "D4", "D5", "D6", "D8", "D10", "D12",
    "Q8",
    "S2", "S3", "S4", "S5", "S6",
    "A3", "A4", "A5", "A6",
    "SL(2,2)", "SL(2,3)", "SL(2,4)", "SL(2,5)", "SL(2,7)", "SL(2,8)", "SL(2,9)",
    "GL(1,4)", "GL(1,9)", "GL(2,2)", "GL(2,3)", "GL(2,4)", "GL(2,5)",
    "C2xC2", "C2xC2xC2", "C2xC4", "C2xQ8", "C2xD4", "C4xC4", "C3xC3",
    "C3xS3", "S3xS3", "C2xA4", "C2xS4", "C3xQ8", "C2xA5", "C2xSL(2,3)", "Q8xQ8",
    "sdp(C3,C4,1)", "sdp(C5,C4,1)", "sdp(C5,C4,2)", "sdp(C7,C3,1)", "sdp(C2xC2,C3,1)",
    "sdp(C4,C4,1)", "sdp(Q8,C2,1)", "sdp(C3xC3,C2,1)",
    "perm:(1 2 3 4 5),(1 2)", "perm:(1 2)(3 4),(1 3)(2 4)", "perm:(1 2 3 4 5 6 7 8),(1 3)(5 7)",
];

pub fn corpus() -> Vec<FamilySpec> {
    CORPUS_SPECS
        .iter()
        .map(|s| parse_group_spec(s).expect("corpus specs parse"))
        .collect()
}
