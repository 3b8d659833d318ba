//! Subgroups as element subsets of an enumerated parent group.

use super::FiniteGroup;

/// Incrementally grown subgroup: each added generator triggers a
/// breadth-first re-closure under right multiplication by the generators
/// kept so far. Only elements that enlarge the subgroup become generators,
/// so at most `log2 |G|` of them are ever stored.
pub(crate) struct Closure<'g> {
    group: &'g FiniteGroup,
    member: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(group: &'g FiniteGroup) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        Closure {
            group,
            member,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    /// Adjoins `g`; returns whether the subgroup grew.
    pub(crate) fn add(&mut self, g: usize) -> bool {
        if self.member[g] {
            return false;
        }
        self.generators.push(g);
        let mut next = 0;
        while next < self.elements.len() {
            let x = self.elements[next];
            for &s in &self.generators {
                let y = self.group.mul(x, s);
                if !self.member[y] {
                    self.member[y] = true;
                    self.elements.push(y);
                }
            }
            next += 1;
        }
        true
    }

    pub(crate) fn into_generators(self) -> Vec<usize> {
        self.generators
    }

    fn into_handle(self) -> SubgroupHandle<'g> {
        let mut elements = self.elements;
        elements.sort_unstable();
        SubgroupHandle {
            parent: self.group,
            elements,
            member: self.member,
            generators: self.generators,
        }
    }
}

/// A subgroup of an enumerated group, stored as a sorted index set.
#[derive(Clone)]
pub struct SubgroupHandle<'g> {
    parent: &'g FiniteGroup,
    elements: Vec<usize>,
    member: Vec<bool>,
    generators: Vec<usize>,
}

impl std::fmt::Debug for SubgroupHandle<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupHandle")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl<'g> SubgroupHandle<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Member indices in increasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    /// A generating set of the subgroup.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.parent;
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Whether `t` normalises the subgroup.
    pub fn is_normalized_by(&self, t: usize) -> bool {
        self.generators
            .iter()
            .all(|&h| self.member[self.parent.conjugate(t, h)])
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generators().iter().all(|&t| self.is_normalized_by(t))
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure<'g>(
    group: &'g FiniteGroup,
    seed: impl IntoIterator<Item = usize>,
) -> SubgroupHandle<'g> {
    let mut closure = Closure::new(group);
    for g in seed {
        if closure.len() == group.order() {
            break;
        }
        closure.add(g);
    }
    closure.into_handle()
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure<'g>(
    group: &'g FiniteGroup,
    seed: impl IntoIterator<Item = usize>,
) -> SubgroupHandle<'g> {
    let mut closure = Closure::new(group);
    for g in seed {
        closure.add(g);
    }
    // conjugates of the generators by the parent's generators, until stable
    let mut checked = 0;
    while checked < closure.generators.len() {
        let h = closure.generators[checked];
        for &t in group.generators() {
            let c = group.conjugate(t, h);
            closure.add(c);
        }
        checked += 1;
    }
    closure.into_handle()
}

/// The commutator subgroup: normal closure of the commutators of the
/// generators, which equals the subgroup generated by all commutators.
pub fn derived_subgroup(group: &FiniteGroup) -> SubgroupHandle<'_> {
    let gens = group.generators();
    let seed: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| group.commutator(a, b))
        .collect();
    normal_closure(group, seed)
}

/// A Sylow 2-subgroup, grown one step at a time: while some `x` outside
/// the current 2-subgroup `P` normalises it and has `x^2` in `P`,
/// replace `P` by `<P, x>`. No such `x` exists exactly when `|N(P):P|` is
/// odd, i.e. when `P` is already Sylow.
pub fn sylow_two(group: &FiniteGroup) -> SubgroupHandle<'_> {
    let target = 1usize << group.order().trailing_zeros();
    let mut closure = Closure::new(group);
    while closure.len() < target {
        let found = group.elements().find(|&x| {
            !closure.contains(x)
                && closure.contains(group.mul(x, x))
                && closure
                    .generators
                    .iter()
                    .all(|&h| closure.contains(group.conjugate(x, h)))
        });
        match found {
            Some(x) => {
                closure.add(x);
            }
            None => unreachable!("a non-Sylow 2-subgroup has even index in its normaliser"),
        }
    }
    closure.into_handle()
}
