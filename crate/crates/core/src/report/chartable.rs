//! Text rendering of a computed character table.

use std::fmt::Write as _;

use super::analysis::{align, Analysis};
use crate::classes::ClassTable;
use crate::group::gcd;

/// `v mod p` as the integer of least absolute value.
pub fn symmetric_residue(v: u64, p: u64) -> i64 {
    if v > p / 2 {
        v as i64 - p as i64
    } else {
        v as i64
    }
}

/// Classes `g^e` for `e` prime to the order of `g`.
fn galois_orbit(classes: &ClassTable, k: usize) -> Vec<usize> {
    let n = classes.element_order(k) as u64;
    (1..=n.max(1))
        .filter(|&e| gcd(e, n) == 1)
        .map(|e| classes.power_class(k, e))
        .collect()
}

/// Character table with one column per class. Rational values are printed
/// as integers, irrational ones as `*`; with `raw` every value is the
/// residue mod p.
pub fn chartable_text(analysis: &Analysis, raw: bool) -> String {
    let table = &analysis.characters;
    let classes = &analysis.classes;
    let p = table.prime;
    let orbits: Vec<Vec<usize>> = (0..classes.class_count())
        .map(|k| galois_orbit(classes, k))
        .collect();

    let mut rows = Vec::new();
    let mut head = vec!["".to_string(), "nu".to_string()];
    head.extend((0..classes.class_count()).map(|k| format!("c{k}")));
    rows.push(head);
    let mut sizes = vec!["size".to_string(), "".to_string()];
    sizes.extend(classes.sizes().iter().map(usize::to_string));
    rows.push(sizes);
    let mut orders = vec!["ord".to_string(), "".to_string()];
    orders.extend((0..classes.class_count()).map(|k| classes.element_order(k).to_string()));
    rows.push(orders);
    for (i, row) in table.rows.iter().enumerate() {
        let mut line = vec![format!("X{i}"), format!("{:+}", row.indicator)];
        for (k, &v) in row.values.iter().enumerate() {
            let rational = orbits[k].iter().all(|&m| row.values[m] == v);
            line.push(if raw {
                v.to_string()
            } else if rational {
                symmetric_residue(v, p).to_string()
            } else {
                "*".to_string()
            });
        }
        rows.push(line);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: order {}, {} classes, values mod {}",
        analysis.report.spec,
        analysis.report.order,
        classes.class_count(),
        p
    );
    out.push_str(&align(&rows));
    if !raw
        && table.rows.iter().any(|r| {
            r.values
                .iter()
                .enumerate()
                .any(|(k, &v)| orbits[k].iter().any(|&m| r.values[m] != v))
        })
    {
        out.push_str("* irrational value\n");
    }
    out
}
