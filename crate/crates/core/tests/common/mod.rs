//! Brute-force oracles shared by the integration tests. They use only the
//! multiplication of the group, never the class or character machinery.

#![allow(dead_code)]

use reality::families::{construct, FamilySpec};
use reality::group::FiniteGroup;
use reality::Budget;

pub fn build(spec: FamilySpec) -> FiniteGroup {
    construct(&spec, &Budget::default()).unwrap()
}

pub fn inverse_of(g: &FiniteGroup, x: usize) -> usize {
    g.elements().find(|&y| g.mul(x, y) == 0).unwrap()
}

/// Conjugacy classes as sorted element lists, by full conjugation.
pub fn classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = g
            .elements()
            .map(|t| g.mul(g.mul(t, x), inverse_of(g, t)))
            .collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class);
    }
    out
}

pub fn conjugate_in(g: &FiniteGroup, x: usize, y: usize) -> bool {
    g.elements().any(|t| g.mul(g.mul(t, x), inverse_of(g, t)) == y)
}

pub fn power(g: &FiniteGroup, x: usize, e: usize) -> usize {
    (0..e).fold(0, |acc, _| g.mul(acc, x))
}

pub fn order_of(g: &FiniteGroup, x: usize) -> usize {
    let mut y = x;
    let mut n = 1;
    while y != 0 {
        y = g.mul(y, x);
        n += 1;
    }
    n
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// (total, real, strongly real, rational) class counts from the
/// definitions: `x ~ x^-1`; `x = s t` with `s^2 = t^2 = e`; `x ~ x^i`.
pub fn class_counts(g: &FiniteGroup) -> (usize, usize, usize, usize) {
    let cls = classes(g);
    let sols: Vec<usize> = g.elements().filter(|&x| g.mul(x, x) == 0).collect();
    let mut products = vec![false; g.order()];
    for &s in &sols {
        for &t in &sols {
            products[g.mul(s, t)] = true;
        }
    }
    let mut real = 0;
    let mut strong = 0;
    let mut rational = 0;
    for class in &cls {
        let x = class[0];
        if class.binary_search(&inverse_of(g, x)).is_ok() {
            real += 1;
        }
        if products[x] {
            strong += 1;
        }
        let n = order_of(g, x);
        if (1..n.max(2))
            .filter(|&i| gcd(i, n) == 1)
            .all(|i| class.binary_search(&power(g, x, i)).is_ok())
        {
            rational += 1;
        }
    }
    (cls.len(), real, strong, rational)
}

pub fn involution_solutions(g: &FiniteGroup) -> usize {
    g.elements().filter(|&x| g.mul(x, x) == 0).count()
}

/// Conjugacy classes of cyclic subgroups, from the subgroups themselves.
pub fn cyclic_subgroup_classes(g: &FiniteGroup) -> usize {
    let mut subgroups: Vec<Vec<usize>> = g
        .elements()
        .map(|x| {
            let mut s: Vec<usize> = (0..order_of(g, x)).map(|e| power(g, x, e)).collect();
            s.sort_unstable();
            s
        })
        .collect();
    subgroups.sort();
    subgroups.dedup();
    let mut seen = vec![false; subgroups.len()];
    let mut count = 0;
    for i in 0..subgroups.len() {
        if seen[i] {
            continue;
        }
        count += 1;
        for t in g.elements() {
            let ti = inverse_of(g, t);
            let mut c: Vec<usize> = subgroups[i].iter().map(|&x| g.mul(g.mul(t, x), ti)).collect();
            c.sort_unstable();
            let j = subgroups.binary_search(&c).unwrap();
            seen[j] = true;
        }
    }
    count
}

/// A small corpus for the oracle comparisons.
pub fn small_corpus() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Cyclic(1),
        Cyclic(2),
        Cyclic(3),
        Cyclic(6),
        Symmetric(3),
        Symmetric(4),
        Alternating(4),
        Alternating(5),
        Dihedral(4),
        Dihedral(5),
        Quaternion,
        SpecialLinear { n: 2, q: 3 },
        GeneralLinear { n: 2, q: 2 },
        GeneralLinear { n: 2, q: 3 },
        Product(Box::new(Cyclic(2)), Box::new(Quaternion)),
        Product(Box::new(Cyclic(3)), Box::new(Symmetric(3))),
    ]
}
