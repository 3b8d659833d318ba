//! Dimension of the Lie algebra spanned by `g - g^-1` in the group algebra,
//! computed from the group and from the character data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::character::ModPCharacterTable;
use crate::error::{Error, Result};
use crate::group::{gcd, FiniteGroup};

/// Largest group order accepted by [`plesken_dim_bruteforce`].
pub const MAX_BRUTEFORCE_ORDER: usize = 5000;

/// A sparse integer vector, sorted by column, no zero entries.
type SparseRow = Vec<(usize, i128)>;

/// Rank over `Q` of integer vectors, by fraction-free elimination keyed on
/// the leading column. Each stored row is divided by the gcd of its
/// entries to keep coefficients small.
#[derive(Default)]
pub struct RationalRank {
    pivots: BTreeMap<usize, SparseRow>,
}

fn combine(a: i128, x: &SparseRow, b: i128, y: &SparseRow) -> Result<SparseRow> {
    // a x - b y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                i += 1;
                (cx, a.checked_mul(vx).ok_or(Error::Overflow)?)
            }
            (Some(&(cx, vx)), Some(&(cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                let l = a.checked_mul(vx).ok_or(Error::Overflow)?;
                let r = b.checked_mul(vy).ok_or(Error::Overflow)?;
                (cx, l.checked_sub(r).ok_or(Error::Overflow)?)
            }
            (_, Some(&(cy, vy))) => {
                j += 1;
                (
                    cy,
                    b.checked_mul(vy)
                        .ok_or(Error::Overflow)?
                        .checked_neg()
                        .ok_or(Error::Overflow)?,
                )
            }
            (Some(&(cx, vx)), None) => {
                i += 1;
                (cx, a.checked_mul(vx).ok_or(Error::Overflow)?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((col, v));
        }
    }
    Ok(out)
}

fn normalize(row: &mut SparseRow) {
    let g = row
        .iter()
        .fold(0u64, |acc, &(_, v)| gcd(acc, v.unsigned_abs() as u64));
    if g > 1 {
        for (_, v) in row.iter_mut() {
            *v /= g as i128;
        }
    }
}

impl RationalRank {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a row (any column order, zero entries allowed); returns whether
    /// the rank grew.
    pub fn insert(&mut self, entries: &[(usize, i64)]) -> Result<bool> {
        let mut row: SparseRow = entries
            .iter()
            .filter(|&&(_, v)| v != 0)
            .map(|&(c, v)| (c, v as i128))
            .collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        row.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        row.retain(|&(_, v)| v != 0);
        loop {
            let Some(&(lead, value)) = row.first() else {
                return Ok(false);
            };
            match self.pivots.get(&lead) {
                None => {
                    normalize(&mut row);
                    self.pivots.insert(lead, row);
                    return Ok(true);
                }
                Some(pivot) => {
                    let pv = pivot[0].1;
                    let g = gcd(pv.unsigned_abs() as u64, value.unsigned_abs() as u64) as i128;
                    row = combine(pv / g, &row, value / g, pivot)?;
                    normalize(&mut row);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of `{g - g^-1 : g ∈ G}` as integer vectors indexed by the elements.
pub fn plesken_dim_bruteforce(group: &FiniteGroup) -> Result<usize> {
    if group.order() > MAX_BRUTEFORCE_ORDER {
        return Err(Error::BudgetExceeded {
            what: "Lie algebra rank order",
            limit: MAX_BRUTEFORCE_ORDER as u64,
        });
    }
    let mut rank = RationalRank::new();
    for g in group.elements() {
        let inv = group.inverse(g);
        rank.insert(&[(g, 1), (inv, -1)])?;
    }
    Ok(rank.rank())
}

/// `Σ_{ν=+1} d(d-1)/2 + Σ_{ν=-1} d(d+1)/2 + Σ_{dual pairs} d^2`, one term
/// per pair of complex conjugate characters.
pub fn plesken_dim_formula(table: &ModPCharacterTable) -> u64 {
    table
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let d = row.degree;
            match row.indicator {
                1 => d * (d - 1) / 2,
                -1 => d * (d + 1) / 2,
                _ if i < row.dual => d * d,
                _ => 0,
            }
        })
        .sum()
}

/// No non-real characters and every non-linear character symplectic.
pub fn plesken_semisimple_predicate(table: &ModPCharacterTable) -> bool {
    table
        .rows
        .iter()
        .all(|row| row.indicator != 0 && (row.degree == 1 || row.indicator == -1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PleskenReport {
    pub dim_bruteforce: u64,
    pub dim_formula: u64,
    pub semisimple_predicate: bool,
}

pub fn plesken_report(group: &FiniteGroup, table: &ModPCharacterTable) -> Result<PleskenReport> {
    Ok(PleskenReport {
        dim_bruteforce: plesken_dim_bruteforce(group)? as u64,
        dim_formula: plesken_dim_formula(table),
        semisimple_predicate: plesken_semisimple_predicate(table),
    })
}
