//! Irreducible characters modulo a prime, Frobenius-Schur indicators and
//! group-level reality flags.

mod dixon;
mod modp;
pub mod structure;

use serde::{Deserialize, Serialize};

pub use self::dixon::{
    character_is_rational, choose_prime, dixon_character_table, CharacterRow, ModPCharacterTable,
};
pub use self::structure::{structure_constants, ClassMatrices, LazyClassMatrices, StructureConstants};

use crate::budget::Budget;
use crate::classes::{ClassTable, RealityProfile};
use crate::error::{Error, Result};
use crate::group::{subgroup_closure, sylow_two, FiniteGroup};

/// Largest class count handed to the eigenspace splitter. Splitting costs
/// roughly `r^4` field operations, which is checked against the work budget.
fn check_split_work(r: usize, budget: &Budget) -> Result<()> {
    if (r as u64).saturating_pow(4) > budget.work {
        return Err(Error::BudgetExceeded {
            what: "eigenspace splitting work",
            limit: budget.work,
        });
    }
    Ok(())
}

impl ModPCharacterTable {
    /// Chooses the prime and runs the modular method with lazily built
    /// class matrices.
    pub fn compute(group: &FiniteGroup, classes: &ClassTable, budget: &Budget) -> Result<Self> {
        check_split_work(classes.class_count(), budget)?;
        let prime = choose_prime(group.order() as u64, classes.exponent())?;
        let matrices = LazyClassMatrices::new(group, classes, budget)?;
        dixon_character_table(classes, &matrices, prime)
    }

    pub fn indicator_profile(&self) -> IndicatorProfile {
        indicator_profile(self)
    }
}

/// Frobenius-Schur indicator of row `i` of `table`.
pub fn frobenius_schur_indicator(table: &ModPCharacterTable, i: usize, classes: &ClassTable) -> Result<i8> {
    table.indicator_of(i, classes)
}

/// Counts of characters by indicator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorProfile {
    pub orthogonal: usize,
    pub symplectic: usize,
    pub unitary: usize,
}

pub fn indicator_profile(table: &ModPCharacterTable) -> IndicatorProfile {
    let mut profile = IndicatorProfile::default();
    for row in &table.rows {
        match row.indicator {
            1 => profile.orthogonal += 1,
            -1 => profile.symplectic += 1,
            _ => profile.unitary += 1,
        }
    }
    profile
}

/// Group-level reality flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFlags {
    pub ambivalent: bool,
    pub strongly_real_group: bool,
    pub totally_orthogonal: bool,
    pub rational_group: bool,
    pub sylow2_abelian: bool,
    pub generated_by_involutions: bool,
    pub generated_by_2elements: bool,
    /// Every character is rational valued; agrees with `rational_group`.
    pub characters_rational: bool,
}

pub fn group_flags(group: &FiniteGroup, profile: &RealityProfile, table: &ModPCharacterTable) -> GroupFlags {
    let involutions = group.elements().filter(|&g| group.element_order(g) == 2);
    let two_elements = group
        .elements()
        .filter(|&g| group.element_order(g).is_power_of_two() && g != 0);
    GroupFlags {
        ambivalent: profile.real_classes == profile.total_classes,
        strongly_real_group: profile.strongly_real_classes == profile.total_classes,
        totally_orthogonal: table.rows.iter().all(|row| row.indicator == 1),
        rational_group: profile.rational_classes == profile.total_classes,
        sylow2_abelian: sylow_two(group).is_abelian(),
        generated_by_involutions: subgroup_closure(group, involutions).order() == group.order(),
        generated_by_2elements: subgroup_closure(group, two_elements).order() == group.order(),
        characters_rational: table.rows.iter().all(|row| row.is_rational),
    }
}
