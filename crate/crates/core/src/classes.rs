//! Conjugacy classes and their reality, strong reality and rationality.

use serde::Serialize;

use crate::group::{gcd, FiniteGroup};

/// Conjugacy classes of an enumerated group with inverse and power maps.
///
/// Classes are ordered by `(size, smallest element index)`, so the identity
/// class is always class `0`.
#[derive(Clone, Debug)]
pub struct ClassTable {
    representatives: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    inverse_map: Vec<usize>,
    /// `power_maps[k][e]` is the class of `rep_k^e` for `0 <= e < ord(rep_k)`.
    power_maps: Vec<Vec<u32>>,
}

/// Computes the conjugacy classes by sweeping the elements in index order
/// and closing each new element under conjugation by the generators.
pub fn conjugacy_classes(group: &FiniteGroup) -> ClassTable {
    const UNSEEN: u32 = u32::MAX;
    let mut mark = vec![UNSEEN; group.order()];
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for start in group.elements() {
        if mark[start] != UNSEEN {
            continue;
        }
        let id = orbits.len() as u32;
        mark[start] = id;
        let mut orbit = vec![start as u32];
        let mut next = 0;
        while next < orbit.len() {
            let x = orbit[next] as usize;
            next += 1;
            for &t in group.generators() {
                let y = group.conjugate(t, x);
                if mark[y] == UNSEEN {
                    mark[y] = id;
                    orbit.push(y as u32);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    // orbit[0] is the smallest member because the sweep runs in index order
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&c| (orbits[c].len(), orbits[c][0]));
    let mut relabel = vec![0u32; orbits.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as u32;
    }
    let class_of: Vec<u32> = mark.into_iter().map(|c| relabel[c as usize]).collect();
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); orbits.len()];
    for (old, orbit) in orbits.into_iter().enumerate() {
        members[relabel[old] as usize] = orbit;
    }
    let representatives: Vec<usize> = members.iter().map(|m| m[0] as usize).collect();
    let sizes = members.iter().map(Vec::len).collect();
    let inverse_map = representatives
        .iter()
        .map(|&g| class_of[group.inverse(g)] as usize)
        .collect();
    let power_maps = representatives
        .iter()
        .map(|&g| {
            let mut powers = Vec::with_capacity(group.element_order(g));
            let mut x = 0;
            for _ in 0..group.element_order(g) {
                powers.push(class_of[x]);
                x = group.mul(x, g);
            }
            powers
        })
        .collect();
    ClassTable {
        representatives,
        sizes,
        class_of,
        members,
        inverse_map,
        power_maps,
    }
}

impl ClassTable {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative(&self, k: usize) -> usize {
        self.representatives[k]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn size(&self, k: usize) -> usize {
        self.sizes[k]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    #[inline]
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }

    /// Members of class `k` in increasing index order.
    pub fn members(&self, k: usize) -> &[u32] {
        &self.members[k]
    }

    /// Class of the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_map[k]
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse_map
    }

    pub fn square_class(&self, k: usize) -> usize {
        self.power_class(k, 2)
    }

    pub fn square_map(&self) -> Vec<usize> {
        (0..self.class_count()).map(|k| self.square_class(k)).collect()
    }

    /// Class of `g^e` for `g` in class `k`.
    pub fn power_class(&self, k: usize, e: u64) -> usize {
        let powers = &self.power_maps[k];
        powers[(e % powers.len() as u64) as usize] as usize
    }

    /// Order of the elements of class `k`.
    pub fn element_order(&self, k: usize) -> usize {
        self.power_maps[k].len()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.class_count()).fold(1, |acc, k| crate::group::lcm(acc, self.element_order(k) as u64))
    }

    /// Class `k` contains the inverses of its elements.
    pub fn is_real(&self, k: usize) -> bool {
        self.inverse_map[k] == k
    }

    /// Some solution of `t^2 = e` conjugates the representative to its
    /// inverse; equivalently the representative is a product of two such
    /// solutions, since `g = t (t g)` and `(t g)^2 = e` exactly when
    /// `t g t = g^-1`.
    pub fn is_strongly_real(&self, group: &FiniteGroup, k: usize) -> bool {
        let involutions = involution_solutions(group);
        self.is_strongly_real_with(group, &involutions, k)
    }

    fn is_strongly_real_with(&self, group: &FiniteGroup, involutions: &[usize], k: usize) -> bool {
        let g = self.representatives[k];
        let g_inv = group.inverse(g);
        involutions
            .iter()
            .any(|&t| group.mul(group.mul(t, g), t) == g_inv)
    }

    /// `rep^i` lies in class `k` for every `i` coprime to the order.
    pub fn is_rational(&self, k: usize) -> bool {
        let ord = self.element_order(k) as u64;
        (1..ord.max(2))
            .filter(|&i| gcd(i, ord) == 1)
            .all(|i| self.power_class(k, i) == k)
    }

    /// Classes under the equivalence `k ~ power_class(k, i)`, `i` coprime to
    /// the element order. Each such orbit is the set of classes meeting one
    /// conjugacy class of cyclic subgroups, so the orbit count is the number
    /// of conjugacy classes of cyclic subgroups.
    pub fn cyclic_subgroup_class_count(&self) -> usize {
        let mut seen = vec![false; self.class_count()];
        let mut count = 0;
        for k in 0..self.class_count() {
            if seen[k] {
                continue;
            }
            count += 1;
            let ord = self.element_order(k) as u64;
            for i in (1..ord.max(2)).filter(|&i| gcd(i, ord) == 1) {
                seen[self.power_class(k, i)] = true;
            }
        }
        count
    }
}

pub fn is_real_class(table: &ClassTable, k: usize) -> bool {
    table.is_real(k)
}

pub fn is_strongly_real_class(group: &FiniteGroup, table: &ClassTable, k: usize) -> bool {
    table.is_strongly_real(group, k)
}

pub fn is_rational_class(table: &ClassTable, k: usize) -> bool {
    table.is_rational(k)
}

/// Every solution of `g^2 = e`, identity included.
pub fn involution_solutions(group: &FiniteGroup) -> Vec<usize> {
    group
        .elements()
        .filter(|&g| group.element_order(g) <= 2)
        .collect()
}

/// `#{g : g^2 = e}`, identity included.
pub fn involution_solution_count(group: &FiniteGroup) -> usize {
    group.element_orders().iter().filter(|&&o| o <= 2).count()
}

/// Number of conjugacy classes of cyclic subgroups.
pub fn cyclic_subgroup_class_count(group: &FiniteGroup) -> usize {
    conjugacy_classes(group).cyclic_subgroup_class_count()
}

/// Per-class reality flags and their totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealityProfile {
    pub total_classes: usize,
    pub real_classes: usize,
    pub strongly_real_classes: usize,
    pub rational_classes: usize,
    pub real: Vec<bool>,
    pub strongly_real: Vec<bool>,
    pub rational: Vec<bool>,
}

impl RealityProfile {
    pub fn compute(group: &FiniteGroup, table: &ClassTable) -> Self {
        let involutions = involution_solutions(group);
        let r = table.class_count();
        let real: Vec<bool> = (0..r).map(|k| table.is_real(k)).collect();
        let strongly_real: Vec<bool> = (0..r)
            .map(|k| table.is_strongly_real_with(group, &involutions, k))
            .collect();
        let rational: Vec<bool> = (0..r).map(|k| table.is_rational(k)).collect();
        let count = |v: &[bool]| v.iter().filter(|&&b| b).count();
        RealityProfile {
            total_classes: r,
            real_classes: count(&real),
            strongly_real_classes: count(&strongly_real),
            rational_classes: count(&rational),
            real,
            strongly_real,
            rational,
        }
    }
}

pub fn reality_profile(group: &FiniteGroup) -> RealityProfile {
    RealityProfile::compute(group, &conjugacy_classes(group))
}
