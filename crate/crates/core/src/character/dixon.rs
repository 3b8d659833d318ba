//! Irreducible characters modulo a prime by simultaneous diagonalisation
//! of the class matrices.
//!
//! With `p ≡ 1 (mod exp G)` every central character
//! `ω_k = |C_k| χ(g_k) / χ(1)` reduces to an element of `F_p`, and the
//! vectors `(ω_k)_k` are exactly the common eigenvectors of the class
//! matrices, normalised to `ω_0 = 1`. Degrees follow from
//! `Σ_k ω_k ω_{k'} / |C_k| = |G| / χ(1)^2` (`k'` the inverse class), and
//! since `χ(1) <= sqrt|G| < p/2` the square root is unambiguous.

use std::collections::HashMap;

use serde::Serialize;

use super::modp::{char_poly, eval_poly, nullspace, row_reduce, PrimeField};
use super::structure::ClassMatrices;
use crate::classes::ClassTable;
use crate::error::{Error, Result};
use crate::group::gcd;

/// One irreducible character, values reduced modulo the table's prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterRow {
    pub degree: u64,
    /// Central character `|C_k| χ(g_k) / χ(1) mod p`.
    pub omega: Vec<u64>,
    /// `χ(g_k) mod p`.
    pub values: Vec<u64>,
    pub is_real: bool,
    pub is_rational: bool,
    /// Frobenius-Schur indicator: `1` orthogonal, `-1` symplectic, `0` unitary.
    pub indicator: i8,
    /// Row index of the complex conjugate character.
    pub dual: usize,
}

/// Irreducible characters of a group computed modulo `prime`.
#[derive(Clone, Debug, Serialize)]
pub struct ModPCharacterTable {
    pub prime: u64,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    pub rows: Vec<CharacterRow>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2 ⌈sqrt(order)⌉`.
pub fn choose_prime(order: u64, exponent: u64) -> Result<u64> {
    let root = isqrt(order);
    let ceil_root = if root * root == order { root } else { root + 1 };
    let bound = 2 * ceil_root;
    let mut p = bound / exponent * exponent + 1;
    while p < 1 << 31 {
        if p > bound && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::SearchExhausted)
}

/// A subspace of `F_p^r` held as a reduced echelon basis.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_vectors(f: PrimeField, mut vectors: Vec<Vec<u64>>) -> Self {
        let pivots = row_reduce(f, &mut vectors);
        Subspace {
            basis: vectors,
            pivots,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits into eigenspaces of `matrix` (row-major, `r x r`) acting on
    /// column vectors. The subspace must be invariant and the restricted
    /// map diagonalisable over `F_p`.
    fn split(&self, f: PrimeField, matrix: &[u64], r: usize) -> Result<Vec<Subspace>> {
        let m = self.dim();
        // restricted[l][j]: coordinate l of M b_j
        let mut restricted = vec![vec![0u64; m]; m];
        for (j, b) in self.basis.iter().enumerate() {
            let image: Vec<u64> = (0..r)
                .map(|a| {
                    let row = &matrix[a * r..(a + 1) * r];
                    row.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                })
                .collect();
            for (l, &pc) in self.pivots.iter().enumerate() {
                restricted[l][j] = image[pc];
            }
            // the coordinates must reproduce the image exactly
            for (a, &value) in image.iter().enumerate() {
                let rebuilt = self
                    .basis
                    .iter()
                    .zip(&restricted)
                    .fold(0, |acc, (bl, row)| f.add(acc, f.mul(row[j], bl[a])));
                if rebuilt != value {
                    return Err(Error::SplitFailure("subspace is not invariant".into()));
                }
            }
        }
        let poly = char_poly(f, &restricted);
        let mut pieces = Vec::new();
        let mut total = 0;
        for lambda in 0..f.modulus() {
            if eval_poly(f, &poly, lambda) != 0 {
                continue;
            }
            let shifted: Vec<Vec<u64>> = restricted
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &v)| if i == j { f.sub(v, lambda) } else { v })
                        .collect()
                })
                .collect();
            let vectors: Vec<Vec<u64>> = nullspace(f, &shifted, m)
                .into_iter()
                .map(|coords| {
                    (0..r)
                        .map(|a| {
                            coords
                                .iter()
                                .zip(&self.basis)
                                .fold(0, |acc, (&c, b)| f.add(acc, f.mul(c, b[a])))
                        })
                        .collect()
                })
                .collect();
            total += vectors.len();
            pieces.push(Subspace::from_vectors(f, vectors));
        }
        if total != m {
            return Err(Error::SplitFailure(format!(
                "eigenspaces span {total} of {m} dimensions"
            )));
        }
        Ok(pieces)
    }
}

/// Computes the irreducible characters modulo `prime` (from
/// [`choose_prime`]) by splitting `F_p^r` into common eigenspaces of the
/// class matrices.
pub fn dixon_character_table(
    classes: &ClassTable,
    matrices: &impl ClassMatrices,
    prime: u64,
) -> Result<ModPCharacterTable> {
    let f = PrimeField::new(prime);
    let r = classes.class_count();
    let order: u64 = classes.sizes().iter().map(|&s| s as u64).sum();
    let identity_basis = (0..r)
        .map(|i| (0..r).map(|j| (i == j) as u64).collect())
        .collect();
    let mut spaces = vec![Subspace::from_vectors(f, identity_basis)];
    for i in 1..r {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let matrix: Vec<u64> = matrices
            .class_matrix(i)
            .into_iter()
            .map(|v| f.reduce(v as u64))
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
            } else {
                next.extend(space.split(f, &matrix, r)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::SplitFailure(format!(
            "{} common eigenspaces for {r} classes",
            spaces.len()
        )));
    }

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let size_inv: Vec<u64> = sizes.iter().map(|&s| f.inv(f.reduce(s))).collect();
    let max_degree = isqrt(order);
    let mut rows = Vec::with_capacity(r);
    for (index, space) in spaces.into_iter().enumerate() {
        let omega = space.basis.into_iter().next().unwrap();
        if omega[0] != 1 {
            return Err(Error::SplitFailure(
                "central character vanishes on the identity class".into(),
            ));
        }
        let norm = (0..r).fold(0, |acc, k| {
            let term = f.mul(f.mul(omega[k], omega[classes.inverse_class(k)]), size_inv[k]);
            f.add(acc, term)
        });
        if norm == 0 {
            return Err(Error::DegreeNotFound(index));
        }
        let target = f.mul(f.reduce(order), f.inv(norm));
        let degree = (1..=max_degree)
            .find(|&d| f.mul(d, d) == target)
            .ok_or(Error::DegreeNotFound(index))?;
        let values = (0..r)
            .map(|k| f.mul(f.mul(degree, omega[k]), size_inv[k]))
            .collect();
        rows.push(CharacterRow {
            degree,
            omega,
            values,
            is_real: false,
            is_rational: false,
            indicator: 0,
            dual: 0,
        });
    }
    rows.sort_by(|a, b| (a.degree, &a.values).cmp(&(b.degree, &b.values)));

    let mut table = ModPCharacterTable {
        prime,
        group_order: order,
        class_sizes: sizes,
        rows,
    };
    table.fill_derived_columns(classes)?;
    Ok(table)
}

impl ModPCharacterTable {
    fn fill_derived_columns(&mut self, classes: &ClassTable) -> Result<()> {
        let position: HashMap<Vec<u64>, usize> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| (row.values.clone(), i))
            .collect();
        let galois = galois_class_maps(classes);
        for i in 0..self.rows.len() {
            let values = &self.rows[i].values;
            let conjugate: Vec<u64> = (0..values.len())
                .map(|k| values[classes.inverse_class(k)])
                .collect();
            let dual = *position
                .get(&conjugate)
                .ok_or_else(|| Error::InvariantViolation(format!("row {i} has no dual row")))?;
            let is_real = dual == i;
            let is_rational = galois
                .iter()
                .all(|map| map.iter().enumerate().all(|(k, &m)| values[m] == values[k]));
            let indicator = self.indicator_of(i, classes)?;
            let row = &mut self.rows[i];
            row.dual = dual;
            row.is_real = is_real;
            row.is_rational = is_rational;
            row.indicator = indicator;
        }
        Ok(())
    }

    /// Frobenius-Schur indicator of row `i`. The exact sum
    /// `Σ_g χ(g^2)` is one of `-|G|, 0, |G|`, which stay distinct mod `p`.
    pub fn indicator_of(&self, i: usize, classes: &ClassTable) -> Result<i8> {
        let f = PrimeField::new(self.prime);
        let values = &self.rows[i].values;
        let sum = (0..values.len()).fold(0, |acc, k| {
            let term = f.mul(f.reduce(self.class_sizes[k]), values[classes.square_class(k)]);
            f.add(acc, term)
        });
        let order = f.reduce(self.group_order);
        if sum == 0 {
            Ok(0)
        } else if sum == order {
            Ok(1)
        } else if sum == f.neg(order) {
            Ok(-1)
        } else {
            Err(Error::IndicatorAmbiguous(i))
        }
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|row| row.degree).collect()
    }

    /// `Σ_χ χ(g_j) χ(g_j^-1) ≡ |G| / |C_j| (mod p)` for every class.
    pub fn column_orthogonality_holds(&self, classes: &ClassTable) -> bool {
        let f = PrimeField::new(self.prime);
        (0..self.class_sizes.len()).all(|j| {
            let jj = classes.inverse_class(j);
            let sum = self
                .rows
                .iter()
                .fold(0, |acc, row| f.add(acc, f.mul(row.values[j], row.values[jj])));
            sum == f.reduce(self.group_order / self.class_sizes[j])
        })
    }
}

/// Distinct class permutations `k -> class of g_k^i` for `i` coprime to
/// the exponent.
fn galois_class_maps(classes: &ClassTable) -> Vec<Vec<usize>> {
    let e = classes.exponent();
    let mut maps: Vec<Vec<usize>> = (2..e)
        .filter(|&i| gcd(i, e) == 1)
        .map(|i| {
            (0..classes.class_count())
                .map(|k| classes.power_class(k, i))
                .collect()
        })
        .collect();
    maps.sort();
    maps.dedup();
    maps
}

/// Whether a row is fixed by every Galois automorphism `χ ↦ χ(·^i)`,
/// i.e. whether the character is rational valued.
pub fn character_is_rational(row: &CharacterRow, classes: &ClassTable) -> bool {
    galois_class_maps(classes).iter().all(|map| {
        map.iter()
            .enumerate()
            .all(|(k, &m)| row.values[m] == row.values[k])
    })
}
