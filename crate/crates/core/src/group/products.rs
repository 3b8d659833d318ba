use super::{Automorphism, FiniteGroup};
use crate::budget::Budget;
use crate::error::{Error, Result};

fn check_budget(a: &FiniteGroup, b: &FiniteGroup, budget: &Budget) -> Result<()> {
    match a.order().checked_mul(b.order()) {
        Some(n) if n <= budget.elements => Ok(()),
        _ => Err(Error::BudgetExceeded {
            what: "product order",
            limit: budget.elements as u64,
        }),
    }
}

/// `A × B` with componentwise multiplication. Element `(a, b)` has index
/// `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, budget: &Budget) -> Result<FiniteGroup> {
    check_budget(a, b, budget)?;
    Ok(FiniteGroup::from_product(a.clone(), b.clone(), None))
}

/// `A ⋊ B` where `action[b]` is the automorphism of `A` induced by the
/// element of `B` with index `b`. The product is
/// `(a, b)(a', b') = (a · action[b](a'), b b')`, and elements are indexed
/// as in [`direct_product`].
pub fn semidirect_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    action: Vec<Automorphism>,
    budget: &Budget,
) -> Result<FiniteGroup> {
    check_budget(a, b, budget)?;
    if action.len() != b.order() {
        return Err(Error::InvalidGenerator(format!(
            "action covers {} elements, the acting group has {}",
            action.len(),
            b.order()
        )));
    }
    for (x, phi) in action.iter().enumerate() {
        // validates bijectivity and the homomorphism property on A
        Automorphism::new(a, (0..a.order()).map(|g| phi.apply(g)).collect())
            .map_err(|_| Error::NotAHomomorphism { b: x, s: x })?;
    }
    if !action[0].is_identity() {
        return Err(Error::NotAHomomorphism { b: 0, s: 0 });
    }
    for x in b.elements() {
        for &s in b.generators() {
            if action[b.mul(x, s)] != action[x].compose(&action[s]) {
                return Err(Error::NotAHomomorphism { b: x, s });
            }
        }
    }
    Ok(FiniteGroup::from_product(a.clone(), b.clone(), Some(action)))
}
