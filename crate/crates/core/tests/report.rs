mod common;

use proptest::prelude::*;
use reality::families::FamilySpec;
use reality::report::{
    analyze, analyze_full, chartable_text, shipped_fixtures, parse_fixtures, parse_group_spec, verify_paper,
    AnalysisReport, AnalyzeOptions, CheckMode, Provenance, Selector, Status, CORPUS_SPECS, EXPECTED_TABLES,
};
use reality::{Budget, Error};

fn report(text: &str, plesken: bool) -> AnalysisReport {
    let spec = parse_group_spec(text).unwrap();
    analyze(
        &spec,
        &AnalyzeOptions {
            plesken,
            budget: Budget::default(),
        },
    )
    .unwrap()
}

#[test]
fn grammar_examples() {
    assert_eq!(parse_group_spec("A7").unwrap(), FamilySpec::Alternating(7));
    assert_eq!(
        parse_group_spec(" sl( 2 , 5 ) ").unwrap(),
        FamilySpec::SpecialLinear { n: 2, q: 5 }
    );
    let g = common::build(parse_group_spec("perm:(1 2)(3 4),(1 2 3)").unwrap());
    assert_eq!(g.order(), 12);
    assert_eq!(
        parse_group_spec("q8 X c2").unwrap(),
        FamilySpec::Product(Box::new(FamilySpec::Quaternion), Box::new(FamilySpec::Cyclic(2)))
    );
    assert!(matches!(
        parse_group_spec("sdp(C3,C4,1)").unwrap(),
        FamilySpec::Semidirect(_, _, 1)
    ));
}

#[test]
fn parse_errors_carry_positions() {
    for (text, position) in [
        ("", 0),
        ("Z3", 0),
        ("A", 1),
        ("S4 S4", 3),
        ("GL(2,", 5),
        ("perm:(1 2", 9),
    ] {
        match parse_group_spec(text) {
            Err(Error::Parse { position: p, .. }) => assert_eq!(p, position, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert_eq!(parse_group_spec("S4 S4").unwrap_err().exit_code(), 2);
}

fn spec_strategy() -> impl Strategy<Value = FamilySpec> {
    let leaf = prop_oneof![
        (1usize..8).prop_map(FamilySpec::Symmetric),
        (1usize..8).prop_map(FamilySpec::Alternating),
        (1usize..12).prop_map(FamilySpec::Dihedral),
        (1usize..30).prop_map(FamilySpec::Cyclic),
        Just(FamilySpec::Quaternion),
        prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9])
            .prop_map(|q| FamilySpec::SpecialLinear { n: 2, q }),
        (1usize..4, prop::sample::select(vec![2u32, 3, 4]))
            .prop_map(|(n, q)| FamilySpec::GeneralLinear { n, q }),
    ];
    leaf.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FamilySpec::Product(Box::new(a), Box::new(b))),
            (inner.clone(), inner, 0usize..5).prop_map(|(a, b, k)| FamilySpec::Semidirect(
                Box::new(a),
                Box::new(b),
                k
            )),
        ]
    })
}

proptest! {
    #[test]
    fn display_parses_back(spec in spec_strategy()) {
        prop_assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn parser_never_panics(text in "[ -~]{0,24}") {
        if let Err(e) = parse_group_spec(&text) {
            prop_assert!(matches!(e, Error::Parse { .. }), "{:?}", e);
        }
    }
}

#[test]
fn named_rows() {
    assert_eq!(report("A7", false).row.as_array(), [9, 7, 7, 7, 0, 2]);
    assert_eq!(report("Q8", false).row.as_array(), [5, 5, 2, 4, 1, 0]);
    assert_eq!(report("GL(2,3)", false).row.as_array(), [8, 6, 6, 6, 0, 2]);
}

#[test]
fn report_matches_oracles() {
    for spec in common::small_corpus() {
        let g = common::build(spec.clone());
        let r = report(&spec.to_string(), true);
        let (total, real, strong, rational) = common::class_counts(&g);
        assert_eq!(r.row.total as usize, total);
        assert_eq!(r.row.real as usize, real);
        assert_eq!(r.row.strongly_real as usize, strong);
        assert_eq!(r.rational_classes as usize, rational);
        assert_eq!(
            r.cyclic_subgroup_classes as usize,
            common::cyclic_subgroup_classes(&g)
        );
        assert_eq!(r.involution_solutions as usize, common::involution_solutions(&g));
        assert_eq!(r.classes.len(), total);
        assert_eq!(r.classes.iter().map(|c| c.size).sum::<u64>(), r.order);
        let p = r.plesken.unwrap();
        assert_eq!(p.dim_bruteforce, (r.order - r.involution_solutions) / 2);
    }
}

#[test]
fn json_round_trip() {
    for text in ["S4", "Q8", "SL(2,3)"] {
        let r = report(text, true);
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in [
            "order",
            "classes",
            "characters",
            "flags",
            "plesken",
            "row",
            "timing",
        ] {
            assert!(value.get(key).is_some(), "{key}");
        }
        assert_eq!(value["order"], r.order);
        assert_eq!(value["classes"].as_array().unwrap().len(), r.classes.len());
        assert_eq!(value["flags"]["ambivalent"], r.flags.ambivalent);
    }
}

#[test]
fn text_and_json_agree() {
    let r = report("SL(2,3)", true);
    let text = r.to_text();
    let header = text.lines().nth(1).unwrap();
    let fields: Vec<&str> = header.split_whitespace().collect();
    assert_eq!(fields[0], "SL(2,3)");
    let numbers: Vec<u64> = fields[1..].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(numbers[0], r.order);
    assert_eq!(numbers[1..], r.row.as_array());
    assert!(text.contains(&format!(
        "Lie algebra dimension: {}",
        r.plesken.unwrap().dim_bruteforce
    )));
}

#[test]
fn analysis_is_deterministic() {
    for text in ["S5", "SL(2,5)", "sdp(C2xQ8,C2,1)"] {
        let mut a = serde_json::to_value(report(text, false)).unwrap();
        let mut b = serde_json::to_value(report(text, false)).unwrap();
        a.as_object_mut().unwrap().remove("timing");
        b.as_object_mut().unwrap().remove("timing");
        assert_eq!(a, b);
    }
}

#[test]
fn chartable_rendering() {
    let spec = parse_group_spec("S3").unwrap();
    let analysis = analyze_full(&spec, &AnalyzeOptions::default()).unwrap();
    let text = chartable_text(&analysis, false);
    // classes ordered by size: identity, 3-cycles, transpositions
    let rows: Vec<Vec<&str>> = text
        .lines()
        .filter(|l| l.trim_start().starts_with('X'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(
        rows,
        [
            vec!["X0", "+1", "1", "1", "1"],
            vec!["X1", "+1", "1", "1", "-1"],
            vec!["X2", "+1", "2", "-1", "0"],
        ]
    );
    let raw = chartable_text(&analysis, true);
    assert!(raw.contains("mod 7"));
    assert!(raw
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["X1", "+1", "1", "1", "6"]));

    let spec = parse_group_spec("C3").unwrap();
    let analysis = analyze_full(&spec, &AnalyzeOptions::default()).unwrap();
    assert!(chartable_text(&analysis, false).contains("* irrational value"));
}

#[test]
fn fixture_file_is_consistent() {
    let rows = shipped_fixtures();
    assert!(EXPECTED_TABLES.lines().any(|l| l.trim() == "format-version 1"));
    let mut ids: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), rows.len());
    for r in &rows {
        let a = r.expected;
        assert_eq!(a.orthogonal + a.symplectic + a.unitary, a.total, "{}", r.id);
        assert_eq!(a.orthogonal + a.symplectic, a.real, "{}", r.id);
        assert!(a.strongly_real <= a.real, "{}", r.id);
        if r.provenance == Provenance::Unverified {
            assert_eq!(r.check, CheckMode::Skip);
        }
        if let Some(spec) = &r.spec {
            parse_group_spec(spec).unwrap();
        }
    }
    assert!(parse_fixtures("format-version 1\n# empty\n").unwrap().is_empty());
}

#[test]
fn corpus_is_large_enough() {
    assert!(CORPUS_SPECS.len() >= 40);
    for text in CORPUS_SPECS {
        let g = common::build(parse_group_spec(text).unwrap());
        assert!(g.order() <= 720, "{text}");
    }
}

#[test]
fn verify_selectors() {
    assert_eq!("ALL".parse::<Selector>().unwrap(), Selector::All);
    assert!("tables".parse::<Selector>().is_err());
    let summary = verify_paper(Selector::Covers, &Budget::default());
    assert!(summary.is_success());
    assert_eq!(summary.unverified(), 1);
    assert!(summary
        .checks
        .iter()
        .any(|c| c.status == Status::Unverified && c.name.starts_with("cover.stilde5")));
    let summary = verify_paper(Selector::Gl, &Budget::default());
    assert_eq!(summary.failed(), 0);
    assert!(summary.passed() >= 8);
}
