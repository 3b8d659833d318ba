//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p reality --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use reality::character::{group_flags, ModPCharacterTable};
use reality::classes::{conjugacy_classes, ClassTable, RealityProfile};
use reality::counting::{
    an_counts, an_is_ambivalent, gl_class_count, gl_real_class_count, sl2_expected_profile,
};
use reality::families::{construct, FamilySpec};
use reality::group::FiniteGroup;
use reality::plesken::{plesken_dim_bruteforce, plesken_dim_formula, plesken_semisimple_predicate};
use reality::report::{
    an_formula_row, analyze, corpus, search_order32, sweep_small_groups, AnalyzeOptions, TableRow,
};
use reality::Budget;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn row(v: [u64; 6]) -> TableRow {
    TableRow::from_array(v)
}

fn options() -> AnalyzeOptions {
    AnalyzeOptions::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analyzed_row(spec: &FamilySpec) -> Result<TableRow, String> {
    analyze(spec, &options())
        .map(|r| r.row)
        .map_err(|e| format!("{spec}: {e}"))
}

fn corpus_groups() -> Vec<(FamilySpec, FiniteGroup)> {
    corpus()
        .into_iter()
        .map(|s| {
            let g = construct(&s, &Budget::default()).unwrap();
            (s, g)
        })
        .collect()
}

fn characters(g: &FiniteGroup) -> Result<(ClassTable, ModPCharacterTable), String> {
    let classes = conjugacy_classes(g);
    let table = ModPCharacterTable::compute(g, &classes, &Budget::default()).map_err(|e| e.to_string())?;
    Ok((classes, table))
}

fn criterion_1() -> Outcome {
    let expected = [
        (5, [5, 5, 5, 5, 0, 0]),
        (6, [7, 7, 7, 7, 0, 0]),
        (7, [9, 7, 7, 7, 0, 2]),
        (8, [14, 10, 10, 10, 0, 4]),
        (9, [18, 16, 16, 16, 0, 2]),
        (10, [24, 24, 24, 24, 0, 0]),
    ];
    let mut times = Vec::new();
    for (n, v) in expected {
        let start = Instant::now();
        let got = analyzed_row(&FamilySpec::Alternating(n))?;
        ensure(got == row(v), || format!("A{n}: expected {}, got {got}", row(v)))?;
        times.push(format!("A{n} {:.1}s", start.elapsed().as_secs_f64()));
    }
    Ok(times.join(", "))
}

fn criterion_2() -> Outcome {
    let c = an_counts(14).map_err(|e| e.to_string())?;
    ensure(c.total_classes == 72 && c.real_classes == 72, || {
        format!("an_counts(14) = ({}, {})", c.total_classes, c.real_classes)
    })?;
    ensure(an_is_ambivalent(14).unwrap(), || "A14 not ambivalent".into())?;
    let f = an_formula_row(14).map_err(|e| e.to_string())?;
    ensure(f == row([72, 72, 72, 72, 0, 0]), || format!("formula row {f}"))?;
    Ok("(72,72), ambivalent; character columns at formula level only, group not built".into())
}

fn criterion_3() -> Outcome {
    let cases = [
        (
            "SL(2,3)",
            FamilySpec::SpecialLinear { n: 2, q: 3 },
            [7, 3, 2, 2, 1, 4],
        ),
        (
            "SL(2,5)",
            FamilySpec::SpecialLinear { n: 2, q: 5 },
            [9, 9, 2, 5, 4, 0],
        ),
        (
            "GL(2,3)",
            FamilySpec::GeneralLinear { n: 2, q: 3 },
            [8, 6, 6, 6, 0, 2],
        ),
    ];
    for (name, spec, v) in cases {
        let got = analyzed_row(&spec)?;
        ensure(got == row(v), || {
            format!("{name}: expected {}, got {got}", row(v))
        })?;
    }
    Ok("SL(2,3), SL(2,5), GL(2,3) rows match".into())
}

fn criterion_4() -> Outcome {
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let spec = FamilySpec::SpecialLinear { n: 2, q };
        let report = analyze(&spec, &options()).map_err(|e| e.to_string())?;
        let expected = sl2_expected_profile(q as u64).unwrap();
        let (total, real, strong, _) = class_counts(&build(spec));
        let r = report.row;
        ensure(
            expected.classes == r.total
                && expected.real == r.real
                && expected.strongly_real == r.strongly_real,
            || format!("SL(2,{q}): expected {expected:?}, got {r}"),
        )?;
        ensure(
            (total, real, strong) == (r.total as usize, r.real as usize, r.strongly_real as usize),
            || format!("SL(2,{q}): oracle classes ({total},{real},{strong}), got {r}"),
        )?;
        ensure(q % 2 == 0 || r.strongly_real == 2, || {
            format!("SL(2,{q}): {} strongly real", r.strongly_real)
        })?;
        ensure(
            expected.has_symplectic == (r.symplectic > 0)
                && expected.ortho_ambivalent == report.flags.totally_orthogonal,
            || format!("SL(2,{q}): indicator profile {r} vs {expected:?}"),
        )?;
        ensure(report.flags.totally_orthogonal == (q % 2 == 0), || {
            format!(
                "SL(2,{q}): totally orthogonal {}",
                report.flags.totally_orthogonal
            )
        })?;
    }
    Ok("q in {2,3,4,5,7,8,9}".into())
}

fn criterion_5() -> Outcome {
    for q in [2u32, 3, 4, 5] {
        let spec = FamilySpec::GeneralLinear { n: 2, q };
        let (total, real, strong, _) = class_counts(&build(spec.clone()));
        let classes = gl_class_count(2, q as u64).unwrap() as usize;
        let real_formula = gl_real_class_count(2, q as u64).unwrap() as usize;
        ensure(classes == total && real_formula == real, || {
            format!("GL(2,{q}): formulas ({classes},{real_formula}), brute force ({total},{real})")
        })?;
        ensure(real == strong, || {
            format!("GL(2,{q}): real {real}, strongly real {strong}")
        })?;
        let r = analyzed_row(&spec)?;
        ensure(r.symplectic == 0, || {
            format!("GL(2,{q}): {} symplectic", r.symplectic)
        })?;
    }
    Ok("q in {2,3,4,5}".into())
}

/// `Σ_k |C_k| χ_i(g_k) χ_j(g_k^-1) = δ_ij |G|` mod p.
fn rows_orthogonal(classes: &ClassTable, table: &ModPCharacterTable) -> bool {
    let p = table.prime as u128;
    let n = table.group_order as u128 % p;
    table.rows.iter().enumerate().all(|(i, a)| {
        table.rows.iter().enumerate().all(|(j, b)| {
            let s = (0..classes.class_count()).fold(0u128, |acc, k| {
                let term = classes.size(k) as u128 * a.values[k] as u128 % p
                    * b.values[classes.inverse_class(k)] as u128;
                (acc + term) % p
            });
            s == if i == j { n } else { 0 }
        })
    })
}

fn criterion_6() -> Outcome {
    let groups = corpus_groups();
    ensure(groups.len() >= 40, || {
        format!("corpus has {} groups", groups.len())
    })?;
    for (spec, g) in &groups {
        let (classes, table) = characters(g).map_err(|e| format!("{spec}: {e}"))?;
        let (total, real, _, _) = class_counts(g);
        let real_chars = table.rows.iter().filter(|r| r.is_real).count();
        ensure(table.rows.len() == total && real_chars == real, || {
            format!(
                "{spec}: {total} classes, {real} real; {} characters, {real_chars} real",
                table.rows.len()
            )
        })?;
        let sum_sq: u64 = table.rows.iter().map(|r| r.degree * r.degree).sum();
        ensure(sum_sq == g.order() as u64, || {
            format!("{spec}: sum of squares {sum_sq}")
        })?;
        let nu_d: i64 = table
            .rows
            .iter()
            .map(|r| r.indicator as i64 * r.degree as i64)
            .sum();
        let sols = involution_solutions(g) as i64;
        ensure(nu_d == sols, || {
            format!("{spec}: sum of nu*d {nu_d}, solutions of g^2=e {sols}")
        })?;
        ensure(
            rows_orthogonal(&classes, &table) && table.column_orthogonality_holds(&classes),
            || format!("{spec}: orthogonality fails mod {}", table.prime),
        )?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn criterion_7() -> Outcome {
    let budget = Budget::default();
    let search = search_order32(&budget).map_err(|e| e.to_string())?;
    ensure(!search.hits.is_empty(), || "no hit".into())?;
    for hit in &search.hits {
        let r = &hit.report;
        let ones = r.degrees.iter().filter(|&&d| d == 1).count();
        let fours = r.degrees.iter().filter(|&&d| d == 4).count();
        ensure(
            r.order == 32
                && r.exponent == 4
                && r.derived_order == 2
                && r.flags.strongly_real_group
                && !r.flags.totally_orthogonal
                && ones == 16
                && fours == 1
                && r.degrees.len() == 17,
            || format!("{}: {:?}", hit.spec, hit.properties),
        )?;
        let (total, _, strong, _) =
            class_counts(&build(reality::report::parse_group_spec(&hit.spec).unwrap()));
        ensure(total == strong, || {
            format!("{}: oracle finds a class that is not strongly real", hit.spec)
        })?;
    }
    let sweep = sweep_small_groups(&budget).map_err(|e| e.to_string())?;
    ensure(sweep.counterexamples.is_empty(), || {
        format!("smaller examples: {:?}", sweep.counterexamples)
    })?;
    Ok(format!(
        "{} hit(s), e.g. {}; {} groups of order < 32 swept",
        search.hits.len(),
        search.hits[0].spec,
        sweep.groups_examined
    ))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for (spec, g) in corpus_groups() {
        if g.order() > 720 {
            continue;
        }
        n += 1;
        let (_, table) = characters(&g).map_err(|e| format!("{spec}: {e}"))?;
        let rank = plesken_dim_bruteforce(&g).map_err(|e| e.to_string())? as u64;
        let formula = plesken_dim_formula(&table);
        let expected = (g.order() - involution_solutions(&g)) as u64 / 2;
        ensure(rank == formula && formula == expected, || {
            format!("{spec}: rank {rank}, formula {formula}, expected {expected}")
        })?;
    }
    for (spec, expected) in [(FamilySpec::Quaternion, true), (FamilySpec::Symmetric(3), false)] {
        let (_, table) = characters(&build(spec.clone()))?;
        ensure(plesken_semisimple_predicate(&table) == expected, || {
            format!("{spec}: predicate")
        })?;
    }
    Ok(format!("{n} groups; Q8 true, S3 false"))
}

fn criterion_9() -> Outcome {
    let groups = corpus_groups();
    let mut checked = [0usize; 4];
    for (spec, g) in &groups {
        let (classes, table) = characters(g)?;
        let reality = RealityProfile::compute(g, &classes);
        let f = group_flags(g, &reality, &table);
        if f.sylow2_abelian && f.ambivalent {
            checked[0] += 1;
            ensure(f.strongly_real_group && f.totally_orthogonal, || {
                format!("{spec}: first inclusion")
            })?;
        }
        if f.ambivalent {
            checked[1] += 1;
            ensure(f.generated_by_2elements, || {
                format!("{spec}: ambivalent, not generated by 2-elements")
            })?;
        }
        if f.totally_orthogonal {
            checked[2] += 1;
            ensure(f.generated_by_involutions, || {
                format!("{spec}: totally orthogonal, not generated by involutions")
            })?;
        }
        let (total, _, _, rational) = class_counts(g);
        let chars_rational = table.rows.iter().all(|r| r.is_rational);
        if total == rational {
            checked[3] += 1;
        }
        ensure((total == rational) == chars_rational, || {
            format!("{spec}: rational classes vs characters")
        })?;
    }
    Ok(format!(
        "{} groups; premises held for {}, {}, {}; rational groups {}",
        groups.len(),
        checked[0],
        checked[1],
        checked[2],
        checked[3]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("A_n table, n = 5..10", criterion_1, Duration::from_secs(15 * 60)),
        ("A_14 row by formula", criterion_2, Duration::from_secs(1)),
        ("cover tables", criterion_3, Duration::from_secs(60)),
        ("SL(2,q) closed forms", criterion_4, Duration::from_secs(60)),
        ("GL(2,q) formulas", criterion_5, Duration::from_secs(120)),
        (
            "character invariants on the corpus",
            criterion_6,
            Duration::from_secs(300),
        ),
        ("order 32 search", criterion_7, Duration::from_secs(120)),
        ("Lie algebra dimension", criterion_8, Duration::from_secs(180)),
        ("class inclusions", criterion_9, Duration::from_secs(180)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{elapsed:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{elapsed:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
