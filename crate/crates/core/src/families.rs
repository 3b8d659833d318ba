//! Named constructors for the group families used throughout the crate.

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::group::automorphism::{actions, enumerate_automorphisms};
use crate::group::{
    direct_product, make_cayley_group, make_matrix_group, make_permutation_group, semidirect_product,
    FiniteGroup, FqField, Matrix, Permutation,
};

/// Largest degree for the symmetric and alternating families.
pub const MAX_SYMMETRIC_DEGREE: usize = 10;
/// Largest `n` for the cyclic and dihedral families.
pub const MAX_CYCLIC_ORDER: usize = 512;
/// Largest field order for the linear families.
pub const MAX_LINEAR_FIELD: u32 = 9;

/// A symbolic description of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `S_n`, all permutations of `n` points.
    Symmetric(usize),
    /// `A_n`, even permutations of `n` points.
    Alternating(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Cyclic(usize),
    Quaternion,
    SpecialLinear {
        n: usize,
        q: u32,
    },
    GeneralLinear {
        n: usize,
        q: u32,
    },
    Product(Box<FamilySpec>, Box<FamilySpec>),
    /// `A ⋊ B` using the `index`-th homomorphism `B -> Aut(A)` in the order
    /// produced by [`crate::group::automorphism::actions`].
    Semidirect(Box<FamilySpec>, Box<FamilySpec>, usize),
    /// Permutation group on `degree` points (0-based generators).
    Permutation {
        degree: usize,
        generators: Vec<Permutation>,
    },
    Cayley(Vec<Vec<usize>>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Symmetric(n) => write!(f, "S{n}"),
            FamilySpec::Alternating(n) => write!(f, "A{n}"),
            FamilySpec::Dihedral(n) => write!(f, "D{n}"),
            FamilySpec::Cyclic(n) => write!(f, "C{n}"),
            FamilySpec::Quaternion => write!(f, "Q8"),
            FamilySpec::SpecialLinear { n, q } => write!(f, "SL({n},{q})"),
            FamilySpec::GeneralLinear { n, q } => write!(f, "GL({n},{q})"),
            FamilySpec::Product(a, b) => {
                write!(f, "{a}x")?;
                if matches!(**b, FamilySpec::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            FamilySpec::Semidirect(a, b, k) => write!(f, "sdp({a},{b},{k})"),
            FamilySpec::Permutation { generators, .. } => {
                write!(f, "perm:")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write_one_based_cycles(f, g)?;
                }
                Ok(())
            }
            FamilySpec::Cayley(table) => write!(f, "cayley[{}]", table.len()),
        }
    }
}

fn write_one_based_cycles(f: &mut fmt::Formatter<'_>, p: &Permutation) -> fmt::Result {
    let mut seen = vec![false; p.degree()];
    let mut any = false;
    for start in 0..p.degree() {
        if seen[start] || p.image(start) == start {
            continue;
        }
        any = true;
        write!(f, "(")?;
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
            first = false;
            x = p.image(x);
        }
        write!(f, ")")?;
    }
    if !any {
        write!(f, "()")?;
    }
    Ok(())
}

/// `F_q` for a prime power `q`.
pub fn make_field(q: u32) -> Result<FqField> {
    FqField::new(q)
}

fn too_big(what: &'static str, limit: u64) -> Error {
    Error::BudgetExceeded { what, limit }
}

fn permutation(degree: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("family generators are valid")
}

fn symmetric(n: usize, budget: &Budget) -> Result<FiniteGroup> {
    let gens = if n < 2 {
        Vec::new()
    } else {
        let cycle: Vec<usize> = (0..n).collect();
        vec![permutation(n, &[&[0, 1]]), permutation(n, &[&cycle])]
    };
    make_permutation_group(n, &gens, budget)
}

fn alternating(n: usize, budget: &Budget) -> Result<FiniteGroup> {
    let gens: Vec<Permutation> = (2..n).map(|i| permutation(n, &[&[0, 1, i]])).collect();
    make_permutation_group(n, &gens, budget)
}

fn cayley_from<F: Fn(usize, usize) -> usize>(order: usize, mul: F) -> Result<FiniteGroup> {
    let table: Vec<Vec<usize>> = (0..order)
        .map(|a| (0..order).map(|b| mul(a, b)).collect())
        .collect();
    make_cayley_group(&table)
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    cayley_from(n, |a, b| (a + b) % n)
}

/// Elements `r^a s^b` stored as `a + n b`.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    cayley_from(2 * n, |x, y| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        rot + n * ((b + d) % 2)
    })
}

/// `±1, ±i, ±j, ±k` as labels `0..8` in that order.
fn quaternion() -> Result<FiniteGroup> {
    // unit index 0..4 = 1, i, j, k; sign bit separate
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    cayley_from(8, |x, y| {
        let (ux, sx) = (x / 2, x % 2 == 1);
        let (uy, sy) = (y / 2, y % 2 == 1);
        let (u, s) = UNIT[ux][uy];
        2 * u + (s ^ sx ^ sy) as usize
    })
}

fn linear(special: bool, n: usize, q: u32, budget: &Budget) -> Result<FiniteGroup> {
    let field = make_field(q)?;
    if q > MAX_LINEAR_FIELD {
        return Err(too_big("linear group field order", MAX_LINEAR_FIELD as u64));
    }
    let z = field.primitive_element();
    let gens = match (n, special) {
        (1, true) => Vec::new(),
        (1, false) => vec![Matrix::new(1, vec![z])],
        (2, _) => {
            let mut gens = vec![
                Matrix::new(2, vec![1, 1, 0, 1]),
                Matrix::new(2, vec![1, 0, 1, 1]),
                Matrix::new(2, vec![z, 0, 0, field.inv(z).unwrap()]),
            ];
            if !special {
                gens.push(Matrix::new(2, vec![z, 0, 0, 1]));
            }
            gens
        }
        _ => return Err(too_big("linear group dimension", 2)),
    };
    make_matrix_group(n, &field, &gens, budget)
}

/// Builds the group described by `spec`.
pub fn construct(spec: &FamilySpec, budget: &Budget) -> Result<FiniteGroup> {
    match spec {
        FamilySpec::Symmetric(n) | FamilySpec::Alternating(n) => {
            if *n == 0 {
                return Err(Error::UnknownFamily(spec.to_string()));
            }
            if *n > MAX_SYMMETRIC_DEGREE {
                return Err(too_big("symmetric degree", MAX_SYMMETRIC_DEGREE as u64));
            }
            if matches!(spec, FamilySpec::Symmetric(_)) {
                symmetric(*n, budget)
            } else {
                alternating(*n, budget)
            }
        }
        FamilySpec::Dihedral(n) | FamilySpec::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::UnknownFamily(spec.to_string()));
            }
            if *n > MAX_CYCLIC_ORDER {
                return Err(too_big("cyclic/dihedral parameter", MAX_CYCLIC_ORDER as u64));
            }
            if matches!(spec, FamilySpec::Dihedral(_)) {
                dihedral(*n)
            } else {
                cyclic(*n)
            }
        }
        FamilySpec::Quaternion => quaternion(),
        FamilySpec::SpecialLinear { n, q } => linear(true, *n, *q, budget),
        FamilySpec::GeneralLinear { n, q } => linear(false, *n, *q, budget),
        FamilySpec::Product(a, b) => direct_product(&construct(a, budget)?, &construct(b, budget)?, budget),
        FamilySpec::Semidirect(a, b, index) => {
            let normal = construct(a, budget)?;
            let top = construct(b, budget)?;
            let auts = enumerate_automorphisms(&normal)?;
            let mut all = actions(&top, &auts);
            if *index >= all.len() {
                return Err(Error::InvalidGenerator(format!(
                    "action index {index} out of range: {} homomorphisms {b} -> Aut({a})",
                    all.len()
                )));
            }
            semidirect_product(&normal, &top, all.swap_remove(*index), budget)
        }
        FamilySpec::Permutation { degree, generators } => make_permutation_group(*degree, generators, budget),
        FamilySpec::Cayley(table) => make_cayley_group(table),
    }
}

/// Concrete stand-ins for the double covers: `SL(2,3)` and `SL(2,5)` are
/// the double covers of `A_4` and `A_5`; `GL(2,3)` is only a candidate for
/// a double cover of `S_4`.
pub fn cover_candidates(budget: &Budget) -> Result<Vec<(&'static str, FiniteGroup)>> {
    Ok(vec![
        ("Atilde4", linear(true, 2, 3, budget)?),
        ("Atilde5", linear(true, 2, 5, budget)?),
        ("Stilde4-candidate", linear(false, 2, 3, budget)?),
    ])
}
