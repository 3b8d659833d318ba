use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::character::{group_flags, indicator_profile, GroupFlags, IndicatorProfile, ModPCharacterTable};
use crate::classes::{conjugacy_classes, involution_solution_count, ClassTable, RealityProfile};
use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};
use crate::group::{derived_subgroup, FiniteGroup};
use crate::plesken::{plesken_report, PleskenReport};

/// The six table columns: total, real and strongly real classes, then
/// orthogonal, symplectic and unitary characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub total: u64,
    pub real: u64,
    pub strongly_real: u64,
    pub orthogonal: u64,
    pub symplectic: u64,
    pub unitary: u64,
}

impl TableRow {
    pub fn new(profile: &RealityProfile, indicators: &IndicatorProfile) -> Self {
        TableRow {
            total: profile.total_classes as u64,
            real: profile.real_classes as u64,
            strongly_real: profile.strongly_real_classes as u64,
            orthogonal: indicators.orthogonal as u64,
            symplectic: indicators.symplectic as u64,
            unitary: indicators.unitary as u64,
        }
    }

    pub fn as_array(&self) -> [u64; 6] {
        [
            self.total,
            self.real,
            self.strongly_real,
            self.orthogonal,
            self.symplectic,
            self.unitary,
        ]
    }

    pub fn from_array(v: [u64; 6]) -> Self {
        TableRow {
            total: v[0],
            real: v[1],
            strongly_real: v[2],
            orthogonal: v[3],
            symplectic: v[4],
            unitary: v[5],
        }
    }
}

impl std::fmt::Display for TableRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = self.as_array();
        write!(f, "({},{},{},{},{},{})", v[0], v[1], v[2], v[3], v[4], v[5])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub size: u64,
    pub element_order: u64,
    pub representative: String,
    pub real: bool,
    pub strongly_real: bool,
    pub rational: bool,
    pub inverse_class: usize,
    pub square_class: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub degree: u64,
    pub indicator: i8,
    pub real: bool,
    pub rational: bool,
    pub dual: usize,
}

/// Wall-clock milliseconds per stage. The only field that varies between
/// runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub construct_ms: f64,
    pub classes_ms: f64,
    pub characters_ms: f64,
    pub plesken_ms: f64,
    pub total_ms: f64,
}

/// Everything [`analyze`] learns about one group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: String,
    pub order: u64,
    pub exponent: u64,
    pub derived_order: u64,
    pub prime: u64,
    pub row: TableRow,
    pub rational_classes: u64,
    pub cyclic_subgroup_classes: u64,
    pub involution_solutions: u64,
    pub degrees: Vec<u64>,
    pub classes: Vec<ClassRecord>,
    pub characters: Vec<CharacterRecord>,
    pub flags: GroupFlags,
    pub plesken: Option<PleskenReport>,
    pub timing: Timing,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub plesken: bool,
    pub budget: Budget,
}

/// Everything computed for one group, kept for callers that need more than
/// the report (for example the raw residues).
pub struct Analysis {
    pub group: FiniteGroup,
    pub classes: ClassTable,
    pub reality: RealityProfile,
    pub characters: ModPCharacterTable,
    pub report: AnalysisReport,
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn violation(name: &str, what: String) -> Error {
    Error::InvariantViolation(format!("{name}: {what}"))
}

/// Checks the identities that tie the class side to the character side.
fn check_invariants(
    spec: &str,
    group: &FiniteGroup,
    classes: &ClassTable,
    reality: &RealityProfile,
    table: &ModPCharacterTable,
    flags: &GroupFlags,
) -> Result<()> {
    let order = group.order() as u64;
    if table.rows.len() != classes.class_count() {
        return Err(violation(spec, "character count differs from class count".into()));
    }
    let sum_sq: u64 = table.rows.iter().map(|r| r.degree * r.degree).sum();
    if sum_sq != order {
        return Err(violation(
            spec,
            format!("sum of squared degrees {sum_sq} != {order}"),
        ));
    }
    let real_chars = table.rows.iter().filter(|r| r.is_real).count();
    if real_chars != reality.real_classes {
        return Err(violation(
            spec,
            format!(
                "{real_chars} real characters but {} real classes",
                reality.real_classes
            ),
        ));
    }
    let fs: i64 = table
        .rows
        .iter()
        .map(|r| r.indicator as i64 * r.degree as i64)
        .sum();
    let solutions = involution_solution_count(group) as i64;
    if fs != solutions {
        return Err(violation(
            spec,
            format!("indicator-weighted degree sum {fs} != {solutions} solutions of g^2 = e"),
        ));
    }
    if !table.column_orthogonality_holds(classes) {
        return Err(violation(spec, "column orthogonality fails mod p".into()));
    }
    if reality.strongly_real_classes > reality.real_classes || reality.rational_classes > reality.real_classes
    {
        return Err(violation(spec, "class reality counts out of order".into()));
    }
    if flags.rational_group != flags.characters_rational {
        return Err(violation(
            spec,
            "rational classes and rational characters disagree".into(),
        ));
    }
    Ok(())
}

/// Runs construction, classes, characters, indicators, flags and
/// optionally the Lie algebra dimension for one group.
pub fn analyze_full(spec: &FamilySpec, options: &AnalyzeOptions) -> Result<Analysis> {
    let start = Instant::now();
    let group = construct(spec, &options.budget)?;
    let construct_ms = ms(start);
    analyze_group(spec.to_string(), group, options, construct_ms)
}

/// As [`analyze_full`] for an already constructed group.
pub fn analyze_group(
    name: String,
    group: FiniteGroup,
    options: &AnalyzeOptions,
    construct_ms: f64,
) -> Result<Analysis> {
    let start = Instant::now();
    let classes = conjugacy_classes(&group);
    let reality = RealityProfile::compute(&group, &classes);
    let classes_ms = ms(start);

    let t = Instant::now();
    let table = ModPCharacterTable::compute(&group, &classes, &options.budget)?;
    let indicators = indicator_profile(&table);
    let flags = group_flags(&group, &reality, &table);
    let characters_ms = ms(t);
    check_invariants(&name, &group, &classes, &reality, &table, &flags)?;

    let t = Instant::now();
    let plesken = if options.plesken {
        let p = plesken_report(&group, &table)?;
        if p.dim_bruteforce != p.dim_formula {
            return Err(Error::InvariantViolation(format!(
                "{name}: Lie algebra dimension {} by rank but {} from characters",
                p.dim_bruteforce, p.dim_formula
            )));
        }
        Some(p)
    } else {
        None
    };
    let plesken_ms = ms(t);

    let class_records = (0..classes.class_count())
        .map(|k| ClassRecord {
            size: classes.size(k) as u64,
            element_order: classes.element_order(k) as u64,
            representative: group.element(classes.representative(k)).to_string(),
            real: reality.real[k],
            strongly_real: reality.strongly_real[k],
            rational: reality.rational[k],
            inverse_class: classes.inverse_class(k),
            square_class: classes.square_class(k),
        })
        .collect();
    let character_records = table
        .rows
        .iter()
        .map(|r| CharacterRecord {
            degree: r.degree,
            indicator: r.indicator,
            real: r.is_real,
            rational: r.is_rational,
            dual: r.dual,
        })
        .collect();
    let report = AnalysisReport {
        spec: name,
        order: group.order() as u64,
        exponent: group.exponent(),
        derived_order: derived_subgroup(&group).order() as u64,
        prime: table.prime,
        row: TableRow::new(&reality, &indicators),
        rational_classes: reality.rational_classes as u64,
        cyclic_subgroup_classes: classes.cyclic_subgroup_class_count() as u64,
        involution_solutions: involution_solution_count(&group) as u64,
        degrees: table.degrees(),
        classes: class_records,
        characters: character_records,
        flags,
        plesken,
        timing: Timing {
            construct_ms,
            classes_ms,
            characters_ms,
            plesken_ms,
            total_ms: construct_ms + ms(start),
        },
    };
    Ok(Analysis {
        group,
        classes,
        reality,
        characters: table,
        report,
    })
}

pub fn analyze(spec: &FamilySpec, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    analyze_full(spec, options).map(|a| a.report)
}

/// Column header matching [`TableRow`].
pub const ROW_HEADER: [&str; 6] = ["total", "real", "st.real", "orth", "symp", "unit"];

/// Pads every column to its widest cell.
pub fn align(rows: &[Vec<String>]) -> String {
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
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

impl AnalysisReport {
    /// Human-readable report: the six-column row, then the class and
    /// character listings and the flags.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = vec!["group".to_string(), "order".to_string()];
        head.extend(ROW_HEADER.iter().map(|s| s.to_string()));
        let mut line = vec![self.spec.clone(), self.order.to_string()];
        line.extend(self.row.as_array().iter().map(u64::to_string));
        out.push_str(&align(&[head, line]));
        let _ = writeln!(
            out,
            "\nexponent {}, |G'| = {}, prime {}, rational classes {}, cyclic subgroup classes {}, solutions of g^2=e {}",
            self.exponent,
            self.derived_order,
            self.prime,
            self.rational_classes,
            self.cyclic_subgroup_classes,
            self.involution_solutions
        );

        let mut rows = vec![[
            "class", "size", "ord", "real", "st.real", "rational", "inv", "sq", "rep",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
        for (k, c) in self.classes.iter().enumerate() {
            rows.push(vec![
                k.to_string(),
                c.size.to_string(),
                c.element_order.to_string(),
                yes(c.real),
                yes(c.strongly_real),
                yes(c.rational),
                c.inverse_class.to_string(),
                c.square_class.to_string(),
                c.representative.clone(),
            ]);
        }
        out.push('\n');
        out.push_str(&align(&rows));

        let mut rows = vec![["char", "degree", "indicator", "real", "rational", "dual"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        for (i, c) in self.characters.iter().enumerate() {
            rows.push(vec![
                i.to_string(),
                c.degree.to_string(),
                format!("{:+}", c.indicator),
                yes(c.real),
                yes(c.rational),
                c.dual.to_string(),
            ]);
        }
        out.push('\n');
        out.push_str(&align(&rows));

        let f = &self.flags;
        let flags = [
            ("ambivalent", f.ambivalent),
            ("strongly_real_group", f.strongly_real_group),
            ("totally_orthogonal", f.totally_orthogonal),
            ("rational_group", f.rational_group),
            ("sylow2_abelian", f.sylow2_abelian),
            ("generated_by_involutions", f.generated_by_involutions),
            ("generated_by_2elements", f.generated_by_2elements),
            ("characters_rational", f.characters_rational),
        ];
        out.push('\n');
        let rows: Vec<Vec<String>> = flags
            .iter()
            .map(|(name, v)| vec![name.to_string(), yes(*v)])
            .collect();
        out.push_str(&align(&rows));
        if let Some(p) = &self.plesken {
            let _ = writeln!(
                out,
                "\nLie algebra dimension: {} (rank), {} (characters); semisimple by the character criterion: {}",
                p.dim_bruteforce,
                p.dim_formula,
                yes(p.semisimple_predicate)
            );
        }
        let _ = writeln!(out, "\ntime {:.1} ms", self.timing.total_ms);
        out
    }
}
