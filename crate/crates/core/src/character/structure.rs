//! Class multiplication coefficients: the structure constants of the
//! centre of the group algebra in the basis of class sums.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::classes::ClassTable;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Source of class matrices `M_i`, `(M_i)[j][k] = a[i][j][k]`, row-major.
pub trait ClassMatrices {
    fn class_count(&self) -> usize;
    fn class_matrix(&self, i: usize) -> Vec<u32>;
}

/// `a[i][j][k]`: for a fixed `z` in class `k`, the number of `x` in class
/// `i` with `x^-1 z` in class `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    r: usize,
    data: Vec<u32>,
}

/// Column `k` of `M_i`: fix `z = rep_k` and sweep class `i`.
fn class_matrix_columns(group: &FiniteGroup, classes: &ClassTable, i: usize) -> Vec<u32> {
    let r = classes.class_count();
    let columns: Vec<Vec<u32>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let z = classes.representative(k);
            let mut col = vec![0u32; r];
            for &x in classes.members(i) {
                let y = group.mul(group.inverse(x as usize), z);
                col[classes.class_of(y)] += 1;
            }
            col
        })
        .collect();
    let mut m = vec![0u32; r * r];
    for (k, col) in columns.iter().enumerate() {
        for (j, &v) in col.iter().enumerate() {
            m[j * r + k] = v;
        }
    }
    m
}

fn check_work(group: &FiniteGroup, classes: &ClassTable, budget: &Budget) -> Result<()> {
    let work = group.order() as u64 * classes.class_count() as u64;
    if work > budget.work {
        return Err(Error::BudgetExceeded {
            what: "structure constant work",
            limit: budget.work,
        });
    }
    Ok(())
}

/// Full table of structure constants, `|G| * r` group multiplications.
pub fn structure_constants(
    group: &FiniteGroup,
    classes: &ClassTable,
    budget: &Budget,
) -> Result<StructureConstants> {
    check_work(group, classes, budget)?;
    let r = classes.class_count();
    if (r as u64).pow(3) > budget.work {
        return Err(Error::BudgetExceeded {
            what: "structure constant storage",
            limit: budget.work,
        });
    }
    let data = (0..r)
        .flat_map(|i| class_matrix_columns(group, classes, i))
        .collect();
    Ok(StructureConstants { r, data })
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

impl ClassMatrices for StructureConstants {
    fn class_count(&self) -> usize {
        self.r
    }

    fn class_matrix(&self, i: usize) -> Vec<u32> {
        let len = self.r * self.r;
        self.data[i * len..(i + 1) * len].to_vec()
    }
}

/// Computes each class matrix only when asked for. Character tables
/// usually split after a handful of matrices, so this avoids the full
/// `r^3` table.
pub struct LazyClassMatrices<'a> {
    group: &'a FiniteGroup,
    classes: &'a ClassTable,
}

impl<'a> LazyClassMatrices<'a> {
    pub fn new(group: &'a FiniteGroup, classes: &'a ClassTable, budget: &Budget) -> Result<Self> {
        check_work(group, classes, budget)?;
        Ok(LazyClassMatrices { group, classes })
    }
}

impl ClassMatrices for LazyClassMatrices<'_> {
    fn class_count(&self) -> usize {
        self.classes.class_count()
    }

    fn class_matrix(&self, i: usize) -> Vec<u32> {
        class_matrix_columns(self.group, self.classes, i)
    }
}
