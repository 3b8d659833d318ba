mod common;

use common::*;
use proptest::prelude::*;
use reality::character::ModPCharacterTable;
use reality::classes::{conjugacy_classes, involution_solution_count};
use reality::families::FamilySpec;
use reality::plesken::*;
use reality::Budget;

fn table(spec: FamilySpec) -> (reality::group::FiniteGroup, ModPCharacterTable) {
    let g = build(spec);
    let t = conjugacy_classes(&g);
    let c = ModPCharacterTable::compute(&g, &t, &Budget::default()).unwrap();
    (g, c)
}

/// Dense rank over Q via Gaussian elimination with exact rationals kept
/// as (numerator, denominator) pairs scaled to a common row multiple.
fn dense_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #[test]
    fn sparse_rank_matches_dense_rank(entries in proptest::collection::vec(-3i64..4, 20)) {
        let dense: Vec<Vec<i128>> = entries.chunks(5).map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        let mut sparse = RationalRank::new();
        for row in entries.chunks(5) {
            let e: Vec<(usize, i64)> = row.iter().copied().enumerate().collect();
            sparse.insert(&e).unwrap();
        }
        prop_assert_eq!(sparse.rank(), dense_rank(dense));
    }
}

#[test]
fn small_examples() {
    let (c2, t) = table(FamilySpec::Cyclic(2));
    assert_eq!(plesken_dim_bruteforce(&c2).unwrap(), 0);
    assert!(plesken_semisimple_predicate(&t));
    let (q8, tq) = table(FamilySpec::Quaternion);
    assert_eq!(plesken_dim_bruteforce(&q8).unwrap(), 3);
    assert_eq!(plesken_dim_formula(&tq), 3);
    assert!(plesken_semisimple_predicate(&tq));
    let (s3, ts) = table(FamilySpec::Symmetric(3));
    assert_eq!(plesken_dim_bruteforce(&s3).unwrap(), 1);
    assert_eq!(plesken_dim_formula(&ts), 1);
    assert!(!plesken_semisimple_predicate(&ts));
    let (_, t1) = table(FamilySpec::Cyclic(1));
    assert_eq!(plesken_dim_formula(&t1), 0);
}

#[test]
fn both_dimensions_agree_on_small_corpus() {
    for spec in small_corpus() {
        let (g, t) = table(spec.clone());
        let r = plesken_report(&g, &t).unwrap();
        assert_eq!(r.dim_bruteforce, r.dim_formula, "{spec}");
        assert_eq!(
            r.dim_bruteforce as usize,
            (g.order() - involution_solution_count(&g)) / 2,
            "{spec}"
        );
    }
}

#[test]
fn order_guard() {
    let g = build(FamilySpec::Symmetric(8));
    assert_eq!(plesken_dim_bruteforce(&g).unwrap_err().exit_code(), 3);
}
