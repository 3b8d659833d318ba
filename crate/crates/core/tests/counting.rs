mod common;

use common::*;
use proptest::prelude::*;
use reality::character::{indicator_profile, ModPCharacterTable};
use reality::classes::{conjugacy_classes, reality_profile};
use reality::counting::*;
use reality::families::FamilySpec;
use reality::Budget;

/// Partition numbers by the standard recurrence over largest part.
fn partition_number(n: usize) -> usize {
    let mut p = vec![vec![0usize; n + 1]; n + 1];
    // p[k][m]: partitions of m with parts <= k
    for k in 0..=n {
        p[k][0] = 1;
    }
    for k in 1..=n {
        for m in 1..=n {
            p[k][m] = p[k - 1][m] + if m >= k { p[k][m - k] } else { 0 };
        }
    }
    p[n][n]
}

#[test]
fn partition_counts() {
    assert_eq!(partitions(7).len(), 15);
    assert_eq!(partitions(1).len(), 1);
    assert_eq!(partitions(5).len(), 7);
}

#[test]
fn partitions_of_seven_match_listing() {
    // the odd partition 1^5 2 is printed as 1^6 2 in the usual listing

    let listed = [
        "1^7", "1^5 2", "1^4 3", "1^3 2^2", "1^2 2 3", "1 3^2", "2^2 3", "3 4", "2 5", "1 2 4", "1 6", "7",
        "1^2 5", "1^3 4", "1 2^3",
    ];
    let mut got: Vec<String> = partitions(7).iter().map(|p| p.to_string()).collect();
    let mut want: Vec<String> = listed.iter().map(|s| s.to_string()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    let even: Vec<String> = partitions(7)
        .iter()
        .map(an_partition_report)
        .filter(|r| r.in_an)
        .map(|r| r.partition.to_string())
        .collect();
    let mut even_sorted = even.clone();
    even_sorted.sort();
    let mut listed_even: Vec<String> = ["1^7", "1^4 3", "1^3 2^2", "1 3^2", "2^2 3", "1 2 4", "7", "1^2 5"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    listed_even.sort();
    assert_eq!(even_sorted, listed_even);
}

proptest! {
    #[test]
    fn partitions_are_distinct_and_complete(n in 1usize..24) {
        let ps = partitions(n);
        prop_assert_eq!(ps.len(), partition_number(n));
        let mut seen = std::collections::HashSet::new();
        for p in &ps {
            prop_assert_eq!(p.size(), n);
            prop_assert!(seen.insert(p.clone()));
            let parts = p.parts();
            prop_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn an_reports_are_consistent(n in 1usize..30) {
        for p in partitions(n) {
            let r = an_partition_report(&p);
            prop_assert!(!r.nonreal || r.splits);
            prop_assert!(!r.splits || r.in_an);
        }
        let c = an_counts(n).unwrap();
        prop_assert!(c.real_classes <= c.total_classes);
    }

    #[test]
    fn reciprocity_conventions_nest(m in 0usize..5, qi in 0usize..5) {
        let q = [2u64, 3, 4, 5, 7][qi];
        let pal = self_reciprocal_count(q, m, Reciprocity::Palindrome).unwrap();
        let up = self_reciprocal_count(q, m, Reciprocity::UpToScalar).unwrap();
        prop_assert!(pal <= up);
        if q.is_multiple_of(2) {
            // -1 = 1 in characteristic 2, so a_m^2 = 1 forces a_m = 1
            prop_assert_eq!(pal, up);
        }
    }
}

#[test]
fn an_partition_examples() {
    let seven = an_partition_report(&Partition::from_parts(&[7]));
    assert!(seven.in_an && seven.splits && seven.nonreal);
    let r = an_partition_report(&Partition::from_parts(&[3, 1, 1, 1, 1]));
    assert!(r.in_an && !r.splits && !r.nonreal);
    let odd = an_partition_report(&Partition::from_parts(&[2, 1, 1, 1, 1, 1, 1]));
    assert!(!odd.in_an);
    // in A_7 the 7-cycles are the only non-real classes
    for p in partitions(7) {
        let r = an_partition_report(&p);
        assert_eq!(r.nonreal, p.parts() == vec![7]);
    }
}

#[test]
fn an_count_values() {
    let c = |n| {
        let c = an_counts(n).unwrap();
        (c.total_classes, c.real_classes)
    };
    assert_eq!(c(7), (9, 7));
    assert_eq!(c(10), (24, 24));
    assert_eq!(c(14), (72, 72));
    assert_eq!(c(1), (1, 1));
    assert!(an_is_ambivalent(14).unwrap());
    assert!(!an_is_ambivalent(7).unwrap());
    assert!(an_is_ambivalent(1).unwrap());
    let ambivalent: Vec<usize> = (1..=40).filter(|&n| an_is_ambivalent(n).unwrap()).collect();
    assert_eq!(ambivalent, vec![1, 2, 5, 6, 10, 14]);
}

#[test]
fn an_counts_match_computed_classes() {
    for n in 3..=9 {
        let g = build(FamilySpec::Alternating(n));
        let p = reality_profile(&g);
        let c = an_counts(n).unwrap();
        assert_eq!(c.total_classes, p.total_classes as u64, "A{n}");
        assert_eq!(c.real_classes, p.real_classes as u64, "A{n}");
        assert_eq!(p.real_classes, p.strongly_real_classes, "A{n}");
    }
}

#[test]
fn gl_counts() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        assert_eq!(gl_class_count(1, q).unwrap(), q - 1);
    }
    assert_eq!(gl_class_count(2, 2).unwrap(), 3);
    assert_eq!(gl_class_count(2, 3).unwrap(), 8);
    assert_eq!(gl_real_class_count(2, 3).unwrap(), 6);
    assert_eq!(gl_real_class_count(2, 2).unwrap(), 3);
    assert_eq!(gl_real_class_count(1, 3).unwrap(), 2);
    assert_eq!(
        gl_class_count(2, 6).unwrap_err(),
        reality::Error::NotPrimePower(6)
    );
    assert!(gl_real_class_count(3, 2).is_ok());
}

#[test]
fn reciprocal_examples() {
    assert_eq!(self_reciprocal_count(3, 2, Reciprocity::Palindrome).unwrap(), 3);
    for q in [2, 3, 4, 5, 7, 8, 9] {
        for conv in [Reciprocity::Palindrome, Reciprocity::UpToScalar] {
            assert_eq!(self_reciprocal_count(q, 0, conv).unwrap(), 1);
        }
    }
    assert_eq!(self_reciprocal_count(2, 1, Reciprocity::Palindrome).unwrap(), 1);
    assert_eq!(self_reciprocal_count(2, 1, Reciprocity::UpToScalar).unwrap(), 1);
    // the palindrome reading undercounts GL_2(3)
    assert_eq!(
        gl_real_class_count_with(2, 3, Reciprocity::Palindrome).unwrap(),
        4
    );
}

#[test]
fn gl_formulas_match_brute_force() {
    for q in [2u32, 3, 4, 5] {
        let g = build(FamilySpec::GeneralLinear { n: 2, q });
        let t = conjugacy_classes(&g);
        let p = reality_profile(&g);
        assert_eq!(
            gl_class_count(2, q as u64).unwrap(),
            t.class_count() as u64,
            "q={q}"
        );
        assert_eq!(
            gl_real_class_count(2, q as u64).unwrap(),
            p.real_classes as u64,
            "q={q}"
        );
        assert_eq!(p.real_classes, p.strongly_real_classes, "q={q}");
        let chars = ModPCharacterTable::compute(&g, &t, &Budget::default()).unwrap();
        assert_eq!(indicator_profile(&chars).symplectic, 0, "q={q}");
    }
    let g = build(FamilySpec::GeneralLinear { n: 1, q: 7 });
    assert_eq!(
        gl_class_count(1, 7).unwrap(),
        conjugacy_classes(&g).class_count() as u64
    );
    assert_eq!(
        gl_real_class_count(1, 7).unwrap(),
        reality_profile(&g).real_classes as u64
    );
}

#[test]
fn sl2_profiles() {
    let p = |q| {
        let s = sl2_expected_profile(q).unwrap();
        (
            s.classes,
            s.real,
            s.strongly_real,
            s.has_symplectic,
            s.ortho_ambivalent,
        )
    };
    assert_eq!(p(4), (5, 5, 5, false, true));
    assert_eq!(p(5), (9, 9, 2, true, false));
    assert_eq!(p(3), (7, 3, 2, true, false));
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let g = build(FamilySpec::SpecialLinear { n: 2, q });
        let t = conjugacy_classes(&g);
        let r = reality_profile(&g);
        let c = ModPCharacterTable::compute(&g, &t, &Budget::default()).unwrap();
        let ip = indicator_profile(&c);
        let e = sl2_expected_profile(q as u64).unwrap();
        assert_eq!(e.classes, r.total_classes as u64, "q={q}");
        assert_eq!(e.real, r.real_classes as u64, "q={q}");
        assert_eq!(e.strongly_real, r.strongly_real_classes as u64, "q={q}");
        assert_eq!(e.has_symplectic, ip.symplectic > 0, "q={q}");
        assert_eq!(e.ortho_ambivalent, ip.orthogonal == t.class_count(), "q={q}");
    }
}

#[test]
fn sln_predicate() {
    for q in [2, 3, 4, 5, 7, 9] {
        assert!(sln_all_real_orthogonal(3, q).unwrap());
        assert!(sln_all_real_orthogonal(4, q).unwrap());
    }
    assert!(sln_all_real_orthogonal(2, 4).unwrap());
    assert!(!sln_all_real_orthogonal(2, 5).unwrap());
    assert!(!sln_all_real_orthogonal(2, 3).unwrap());
    assert!(sln_all_real_orthogonal(2, 6).is_err());
    // agrees with the computed SL_2(q) tables: symplectic characters
    // appear exactly when the predicate fails
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let g = build(FamilySpec::SpecialLinear { n: 2, q });
        let t = conjugacy_classes(&g);
        let c = ModPCharacterTable::compute(&g, &t, &Budget::default()).unwrap();
        let symplectic = indicator_profile(&c).symplectic;
        assert_eq!(
            sln_all_real_orthogonal(2, q as u64).unwrap(),
            symplectic == 0,
            "q={q}"
        );
    }
}
