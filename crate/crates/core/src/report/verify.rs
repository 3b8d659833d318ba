//! Re-checks the published tables and statements against computation.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::analysis::{analyze, AnalysisReport, AnalyzeOptions, TableRow};
use super::corpus::corpus;
use super::fixtures::{shipped_fixtures, CheckMode, FixtureRow};
use super::parse_group_spec;
use super::search::{search_order32, sweep_small_groups};
use crate::budget::Budget;
use crate::counting::{
    an_counts, an_is_ambivalent, gl_class_count, gl_real_class_count, sl2_expected_profile,
    sln_all_real_orthogonal,
};
use crate::families::{construct, FamilySpec};
use crate::group::sylow_two;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Selector {
    An,
    Covers,
    Sl2,
    Gl,
    Plesken,
    Inclusions,
    All,
}

impl Selector {
    pub const NAMES: [&'static str; 7] = ["an", "covers", "sl2", "gl", "plesken", "inclusions", "all"];

    fn parts(self) -> Vec<Selector> {
        match self {
            Selector::All => vec![
                Selector::An,
                Selector::Covers,
                Selector::Sl2,
                Selector::Gl,
                Selector::Plesken,
                Selector::Inclusions,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Selector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "an" => Ok(Selector::An),
            "covers" => Ok(Selector::Covers),
            "sl2" => Ok(Selector::Sl2),
            "gl" => Ok(Selector::Gl),
            "plesken" => Ok(Selector::Plesken),
            "inclusions" => Ok(Selector::Inclusions),
            "all" => Ok(Selector::All),
            other => Err(format!(
                "unknown selector '{other}' (expected one of {})",
                Selector::NAMES.join(", ")
            )),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Selector::An,
            Selector::Covers,
            Selector::Sl2,
            Selector::Gl,
            Selector::Plesken,
            Selector::Inclusions,
            Selector::All,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap();
        f.write_str(Selector::NAMES[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Unverified,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub selector: Selector,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifySummary {
    pub checks: Vec<CheckResult>,
}

impl VerifySummary {
    fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn unverified(&self) -> usize {
        self.count(Status::Unverified)
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<Vec<String>> = vec![vec![
            "status".into(),
            "selector".into(),
            "check".into(),
            "detail".into(),
        ]];
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Unverified => "UNVERIFIED",
            };
            rows.push(vec![
                status.into(),
                c.selector.to_string(),
                c.name.clone(),
                c.detail.clone(),
            ]);
        }
        let mut out = align_left(&rows);
        out.push_str(&format!(
            "\n{} passed, {} failed, {} unverified\n",
            self.passed(),
            self.failed(),
            self.unverified()
        ));
        out
    }
}

/// Left-aligned variant of [`align`] for text columns.
fn align_left(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

struct Checks {
    selector: Selector,
    out: Vec<CheckResult>,
}

impl Checks {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.out.push(CheckResult {
            selector: self.selector,
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn unverified(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.out.push(CheckResult {
            selector: self.selector,
            name: name.into(),
            status: Status::Unverified,
            detail: detail.into(),
        });
    }

    fn error(&mut self, name: impl Into<String>, e: crate::Error) {
        self.push(name, false, format!("error: {e}"));
    }
}

fn options(budget: &Budget, plesken: bool) -> AnalyzeOptions {
    AnalyzeOptions {
        plesken,
        budget: *budget,
    }
}

/// Expected row of `A_n` from the partition formulas alone: real classes
/// are strongly real and every real character is orthogonal.
pub fn an_formula_row(n: usize) -> crate::Result<TableRow> {
    let c = an_counts(n)?;
    Ok(TableRow {
        total: c.total_classes,
        real: c.real_classes,
        strongly_real: c.real_classes,
        orthogonal: c.real_classes,
        symplectic: 0,
        unitary: c.total_classes - c.real_classes,
    })
}

fn check_fixture(checks: &mut Checks, row: &FixtureRow, budget: &Budget) {
    let name = format!("{} [{}]", row.id, row.provenance);
    let Some(spec_text) = &row.spec else {
        checks.unverified(
            name,
            format!("expected {}, no construction available", row.expected),
        );
        return;
    };
    match row.check {
        CheckMode::Skip => checks.unverified(
            name,
            format!("{spec_text}: expected {}, not checked", row.expected),
        ),
        CheckMode::Formula => {
            let computed = match parse_group_spec(spec_text) {
                Ok(FamilySpec::Alternating(n)) => an_formula_row(n),
                Ok(other) => {
                    checks.push(name, false, format!("no formula for {other}"));
                    return;
                }
                Err(e) => Err(e),
            };
            match computed {
                Ok(got) => checks.push(
                    name,
                    got == row.expected,
                    format!("{spec_text} by formula: expected {}, got {got}", row.expected),
                ),
                Err(e) => checks.error(name, e),
            }
        }
        CheckMode::Full | CheckMode::Candidate => {
            let report = parse_group_spec(spec_text).and_then(|s| analyze(&s, &options(budget, false)));
            match report {
                Ok(r) => {
                    let kind = if row.check == CheckMode::Candidate {
                        " (candidate)"
                    } else {
                        ""
                    };
                    checks.push(
                        name,
                        r.row == row.expected,
                        format!("{spec_text}{kind}: expected {}, got {}", row.expected, r.row),
                    )
                }
                Err(e) => checks.error(name, e),
            }
        }
    }
}

fn fixture_rows(prefixes: &[&str]) -> Vec<FixtureRow> {
    shipped_fixtures()
        .into_iter()
        .filter(|r| prefixes.iter().any(|p| r.id.starts_with(p)))
        .collect()
}

fn run_fixtures(checks: &mut Checks, rows: &[FixtureRow], budget: &Budget) {
    // the groups are independent; results are collected in file order
    let results: Vec<Vec<CheckResult>> = rows
        .par_iter()
        .map(|row| {
            let mut local = Checks {
                selector: checks.selector,
                out: Vec::new(),
            };
            check_fixture(&mut local, row, budget);
            local.out
        })
        .collect();
    checks.out.extend(results.into_iter().flatten());
}

fn verify_an(checks: &mut Checks, budget: &Budget) {
    let rows = fixture_rows(&["an."]);
    run_fixtures(checks, &rows, budget);
    for row in rows.iter().filter(|r| r.check == CheckMode::Full) {
        if let Some(Ok(FamilySpec::Alternating(n))) = row.spec.as_deref().map(parse_group_spec) {
            match an_formula_row(n) {
                Ok(f) => checks.push(
                    format!("A{n} formula"),
                    f == row.expected,
                    format!("partition formula gives {f}"),
                ),
                Err(e) => checks.error(format!("A{n} formula"), e),
            }
        }
    }
    let ambivalent: Vec<usize> = (1..=64)
        .filter(|&n| an_is_ambivalent(n).unwrap_or(false))
        .collect();
    checks.push(
        "ambivalent A_n, n <= 64",
        ambivalent == [1, 2, 5, 6, 10, 14],
        format!("{ambivalent:?}"),
    );
}

fn verify_covers(checks: &mut Checks, budget: &Budget) {
    let rows = fixture_rows(&["cover."]);
    run_fixtures(checks, &rows, budget);
}

fn verify_sl2(checks: &mut Checks, budget: &Budget) {
    let qs = [2u32, 3, 4, 5, 7, 8, 9];
    let reports: Vec<_> = qs
        .par_iter()
        .map(|&q| analyze(&FamilySpec::SpecialLinear { n: 2, q }, &options(budget, false)))
        .collect();
    for (&q, report) in qs.iter().zip(reports) {
        let name = format!("SL(2,{q})");
        let report = match report {
            Ok(r) => r,
            Err(e) => {
                checks.error(name, e);
                continue;
            }
        };
        let expected = sl2_expected_profile(q as u64).expect("prime power");
        let r = &report.row;
        let ok = expected.classes == r.total
            && expected.real == r.real
            && expected.strongly_real == r.strongly_real
            && expected.has_symplectic == (r.symplectic > 0)
            && expected.ortho_ambivalent == report.flags.totally_orthogonal;
        checks.push(
            name.clone(),
            ok,
            format!(
                "expected classes {}, real {}, strongly real {}, symplectic {}, all orthogonal {}; got row {r}",
                expected.classes,
                expected.real,
                expected.strongly_real,
                expected.has_symplectic,
                expected.ortho_ambivalent
            ),
        );
        let predicate = sln_all_real_orthogonal(2, q as u64).expect("prime power");
        checks.push(
            format!("{name} real characters orthogonal"),
            predicate == (r.symplectic == 0),
            format!("predicate {predicate}, symplectic characters {}", r.symplectic),
        );
    }
}

fn verify_gl(checks: &mut Checks, budget: &Budget) {
    let qs = [2u32, 3, 4, 5];
    let reports: Vec<_> = qs
        .par_iter()
        .map(|&q| analyze(&FamilySpec::GeneralLinear { n: 2, q }, &options(budget, false)))
        .collect();
    for (&q, report) in qs.iter().zip(reports) {
        let name = format!("GL(2,{q})");
        let r = match report {
            Ok(r) => r.row,
            Err(e) => {
                checks.error(name, e);
                continue;
            }
        };
        let classes = gl_class_count(2, q as u64).expect("prime power");
        let real = gl_real_class_count(2, q as u64).expect("prime power");
        checks.push(
            format!("{name} class formula"),
            classes == r.total,
            format!("formula {classes}, computed {}", r.total),
        );
        checks.push(
            format!("{name} real class formula"),
            real == r.real,
            format!("formula {real}, computed {}", r.real),
        );
        checks.push(
            format!("{name} no symplectic characters"),
            r.symplectic == 0,
            format!("{} symplectic", r.symplectic),
        );
        checks.push(
            format!("{name} real classes strongly real"),
            r.real == r.strongly_real,
            format!("real {}, strongly real {}", r.real, r.strongly_real),
        );
        checks.push(
            format!("{name} strongly real classes = orthogonal characters"),
            r.strongly_real == r.orthogonal,
            format!("strongly real {}, orthogonal {}", r.strongly_real, r.orthogonal),
        );
    }
}

/// Analyzes every corpus group, in parallel.
pub fn analyze_corpus(budget: &Budget, plesken: bool) -> Vec<(FamilySpec, crate::Result<AnalysisReport>)> {
    corpus()
        .into_par_iter()
        .map(|spec| {
            let r = analyze(&spec, &options(budget, plesken));
            (spec, r)
        })
        .collect()
}

fn verify_plesken(checks: &mut Checks, budget: &Budget) {
    let mut agree = 0;
    let mut total = 0;
    for (spec, result) in analyze_corpus(budget, true) {
        total += 1;
        match result {
            Ok(r) => {
                let p = r.plesken.expect("requested");
                let expected = (r.order - r.involution_solutions) / 2;
                if p.dim_bruteforce == p.dim_formula && p.dim_formula == expected {
                    agree += 1;
                } else {
                    checks.push(
                        format!("{spec} Lie algebra dimension"),
                        false,
                        format!(
                            "rank {}, formula {}, (|G| - #involutions)/2 = {expected}",
                            p.dim_bruteforce, p.dim_formula
                        ),
                    );
                }
            }
            Err(e) => checks.error(format!("{spec} Lie algebra dimension"), e),
        }
    }
    checks.push(
        "corpus Lie algebra dimensions",
        agree == total,
        format!("{agree} of {total} groups: rank = character formula = (|G| - #involutions)/2"),
    );
    for (text, expected) in [("Q8", true), ("S3", false)] {
        let spec = parse_group_spec(text).expect("valid");
        match analyze(&spec, &options(budget, true)) {
            Ok(r) => {
                let got = r.plesken.expect("requested").semisimple_predicate;
                checks.push(
                    format!("{text} semisimplicity criterion"),
                    got == expected,
                    format!("expected {expected}, got {got}"),
                );
            }
            Err(e) => checks.error(format!("{text} semisimplicity criterion"), e),
        }
    }
}

fn verify_inclusions(checks: &mut Checks, budget: &Budget) {
    let mut failures = Vec::new();
    let mut n = 0;
    for (spec, result) in analyze_corpus(budget, false) {
        n += 1;
        let r = match result {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{spec}: {e}"));
                continue;
            }
        };
        let f = r.flags;
        if f.sylow2_abelian && f.ambivalent && !(f.strongly_real_group && f.totally_orthogonal) {
            failures.push(format!(
                "{spec}: abelian Sylow 2 and ambivalent, not strongly real and totally orthogonal"
            ));
        }
        if f.ambivalent && !f.generated_by_2elements {
            failures.push(format!("{spec}: ambivalent but not generated by 2-elements"));
        }
        if f.totally_orthogonal && !f.generated_by_involutions {
            failures.push(format!(
                "{spec}: totally orthogonal but not generated by involutions"
            ));
        }
        if f.rational_group != f.characters_rational {
            failures.push(format!(
                "{spec}: rational classes and rational characters disagree"
            ));
        }
        if (f.strongly_real_group || f.totally_orthogonal) && !f.ambivalent {
            failures.push(format!(
                "{spec}: strongly real or totally orthogonal but not ambivalent"
            ));
        }
    }
    checks.push(
        "corpus class inclusions",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{n} groups")
        } else {
            failures.join("; ")
        },
    );

    let examples: [(&str, &[(&str, bool)]); 5] = [
        (
            "S6",
            &[
                ("ambivalent", true),
                ("strongly real", true),
                ("totally orthogonal", true),
                ("rational", true),
            ],
        ),
        ("S5", &[("rational", true)]),
        ("S4", &[("rational", true)]),
        (
            "Q8",
            &[
                ("ambivalent", true),
                ("strongly real", false),
                ("totally orthogonal", false),
            ],
        ),
        (
            "D4",
            &[
                ("strongly real", true),
                ("totally orthogonal", true),
                ("abelian Sylow 2", false),
            ],
        ),
    ];
    for (text, expected) in examples {
        let spec = parse_group_spec(text).expect("valid");
        match analyze(&spec, &options(budget, false)) {
            Ok(r) => {
                let f = r.flags;
                let got = |name: &str| match name {
                    "ambivalent" => f.ambivalent,
                    "strongly real" => f.strongly_real_group,
                    "totally orthogonal" => f.totally_orthogonal,
                    "rational" => f.rational_group && f.characters_rational,
                    _ => f.sylow2_abelian,
                };
                let ok = expected.iter().all(|&(name, v)| got(name) == v);
                let detail: Vec<String> = expected
                    .iter()
                    .map(|&(name, v)| format!("{name} {} (expected {v})", got(name)))
                    .collect();
                checks.push(format!("{text} flags"), ok, detail.join(", "));
            }
            Err(e) => checks.error(format!("{text} flags"), e),
        }
    }
    if let Ok(g) = construct(&FamilySpec::Dihedral(4), budget) {
        let p = sylow_two(&g);
        checks.push(
            "D4 Sylow 2-subgroup is D4",
            p.order() == 8 && !p.is_abelian(),
            format!("order {}", p.order()),
        );
    }
    let rows = fixture_rows(&["example."]);
    run_fixtures(checks, &rows, budget);

    match search_order32(budget) {
        Ok(search) => {
            let good = search.hits.iter().filter(|h| h.properties.all()).count();
            checks.push(
                "order 32: strongly real, not totally orthogonal",
                good >= 1 && good == search.hits.len(),
                format!(
                    "{} involution classes of {} automorphisms, {} hits, {} with exponent 4, |G'| = 2 and degrees 1^16 4",
                    search.involution_classes,
                    search.automorphisms,
                    search.hits.len(),
                    good
                ),
            );
        }
        Err(e) => checks.error("order 32 search", e),
    }
    match sweep_small_groups(budget) {
        Ok(s) => checks.push(
            "no smaller strongly real, non totally orthogonal group",
            s.counterexamples.is_empty(),
            format!(
                "{} groups of order < 32 examined, {} strongly real, counterexamples: {:?}",
                s.groups_examined, s.strongly_real, s.counterexamples
            ),
        ),
        Err(e) => checks.error("small group sweep", e),
    }
}

/// Runs the checks for `selector`. Failures are reported in the summary,
/// never as errors.
pub fn verify_paper(selector: Selector, budget: &Budget) -> VerifySummary {
    let mut summary = VerifySummary::default();
    for part in selector.parts() {
        let mut checks = Checks {
            selector: part,
            out: Vec::new(),
        };
        match part {
            Selector::An => verify_an(&mut checks, budget),
            Selector::Covers => verify_covers(&mut checks, budget),
            Selector::Sl2 => verify_sl2(&mut checks, budget),
            Selector::Gl => verify_gl(&mut checks, budget),
            Selector::Plesken => verify_plesken(&mut checks, budget),
            Selector::Inclusions => verify_inclusions(&mut checks, budget),
            Selector::All => unreachable!(),
        }
        summary.checks.extend(checks.out);
    }
    summary
}
