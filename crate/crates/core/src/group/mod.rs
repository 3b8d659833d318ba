//! Finite groups with fully enumerated element sets.
//!
//! Every group is materialised once at construction. Afterwards elements
//! are addressed by dense indices `0..order`, with the identity at index
//! `0`, and all algorithms in the crate work on those indices. The index
//! order is deterministic and serves as the canonical element ordering.

pub mod automorphism;
mod element;
pub mod field;
pub mod products;
mod store;
pub mod subgroup;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rayon::prelude::*;

pub use self::automorphism::{enumerate_automorphisms, Automorphism};
pub use self::element::{GroupElement, Matrix, Permutation, MAX_DEGREE};
pub use self::field::FqField;
pub use self::products::{direct_product, semidirect_product};
pub use self::subgroup::{derived_subgroup, subgroup_closure, sylow_two, SubgroupHandle};

use self::store::WordStore;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Groups up to this order cache their full multiplication table.
const TABLE_CACHE_LIMIT: usize = 1024;
/// Cayley tables up to this order are checked for associativity exhaustively.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;
/// Random triples tested for larger Cayley tables.
const ASSOCIATIVITY_SAMPLES: usize = 200_000;

#[derive(Clone)]
enum Kind {
    Permutation {
        degree: usize,
        store: WordStore,
    },
    Matrix {
        n: usize,
        field: Arc<FqField>,
        store: WordStore,
    },
    Cayley {
        /// Original row label of each element index.
        labels: Vec<u32>,
    },
    Product {
        normal: Arc<FiniteGroup>,
        top: Arc<FiniteGroup>,
        /// `action[b]` is the automorphism of `normal` by which top element
        /// `b` acts; `None` for a direct product.
        action: Option<Arc<Vec<Automorphism>>>,
    },
}

/// A finite group with every element materialised.
#[derive(Clone)]
pub struct FiniteGroup {
    kind: Kind,
    order: usize,
    generators: Vec<usize>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.kind {
            Kind::Permutation { degree, .. } => format!("permutation group of degree {degree}"),
            Kind::Matrix { n, field, .. } => format!("{n}x{n} matrix group over F_{}", field.order()),
            Kind::Cayley { .. } => "Cayley table group".to_string(),
            Kind::Product { action: None, .. } => "direct product".to_string(),
            Kind::Product { .. } => "semidirect product".to_string(),
        };
        f.debug_struct("FiniteGroup")
            .field("kind", &kind)
            .field("order", &self.order)
            .finish()
    }
}

/// Builds a permutation group of the given degree by breadth-first closure.
pub fn make_permutation_group(
    degree: usize,
    generators: &[Permutation],
    budget: &Budget,
) -> Result<FiniteGroup> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::InvalidGenerator(format!(
            "degree must lie in 1..={MAX_DEGREE}, got {degree}"
        )));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidGenerator(format!(
                "{g:?} acts on {} points, expected {degree}",
                g.degree()
            )));
        }
    }
    let gens: Vec<Vec<u8>> = generators.iter().map(|g| g.as_bytes().to_vec()).collect();
    let identity = Permutation::identity(degree).as_bytes().to_vec();
    let store = WordStore::close(&identity, &gens, budget.elements, compose_permutations)?;
    let generators = gens.iter().map(|w| store.lookup(w).unwrap()).collect();
    Ok(FiniteGroup::finish(
        Kind::Permutation { degree, store },
        generators,
    ))
}

/// Builds the group generated by invertible `n x n` matrices over `field`.
pub fn make_matrix_group(
    n: usize,
    field: &FqField,
    generators: &[Matrix],
    budget: &Budget,
) -> Result<FiniteGroup> {
    if n == 0 || n * n > store::MAX_WIDTH {
        return Err(Error::InvalidGenerator(format!("matrix size {n} unsupported")));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.size() != n {
            return Err(Error::InvalidGenerator(format!(
                "generator {i} is {}x{}, expected {n}x{n}",
                g.size(),
                g.size()
            )));
        }
        if g.entries().iter().any(|&e| e as u32 >= field.order()) {
            return Err(Error::InvalidGenerator(format!(
                "generator {i} has entries outside F_{}",
                field.order()
            )));
        }
        if determinant(field, n, g.entries()) == 0 {
            return Err(Error::SingularGenerator(i));
        }
    }
    let field = Arc::new(field.clone());
    let gens: Vec<Vec<u8>> = generators.iter().map(|g| g.entries().to_vec()).collect();
    let identity = Matrix::identity(n).entries().to_vec();
    let f = field.clone();
    let store = WordStore::close(&identity, &gens, budget.elements, move |a, b, out| {
        multiply_matrices(&f, n, a, b, out)
    })?;
    let generators = gens.iter().map(|w| store.lookup(w).unwrap()).collect();
    Ok(FiniteGroup::finish(Kind::Matrix { n, field, store }, generators))
}

/// Builds a group from its multiplication table, `table[a][b] = a * b`.
///
/// The table must be a Latin square with a two-sided identity and an
/// associative product. Associativity is checked on every triple up to
/// order 256. Larger tables are checked on 200 000 random triples (fixed
/// seed), so a table in which a fraction `f` of triples fails associativity
/// is accepted with probability at most `(1 - f)^200000`.
pub fn make_cayley_group(table: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if n > u32::MAX as usize {
        return Err(Error::TooLarge {
            order: n,
            limit: u32::MAX as usize,
        });
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {a} has length {}", row.len())));
        }
        let mut seen = vec![false; n];
        for &x in row {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAGroup(format!("row {a} is not a permutation")));
            }
        }
    }
    for b in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            if std::mem::replace(&mut seen[row[b]], true) {
                return Err(Error::NotAGroup(format!("column {b} is not a permutation")));
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
    } else {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !assoc(a, b, c) {
                return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
        }
    }

    // identity first, then the remaining labels in their given order
    let labels: Vec<u32> = std::iter::once(e)
        .chain((0..n).filter(|&x| x != e))
        .map(|x| x as u32)
        .collect();
    let mut position = vec![0u32; n];
    for (i, &l) in labels.iter().enumerate() {
        position[l as usize] = i as u32;
    }
    let mut indexed = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            indexed[a * n + b] = position[table[labels[a] as usize][labels[b] as usize]];
        }
    }
    let mut group = FiniteGroup {
        kind: Kind::Cayley { labels },
        order: n,
        generators: Vec::new(),
        inverses: Vec::new(),
        orders: Vec::new(),
        table: Some(indexed),
    };
    group.fill_orders();
    group.generators = group.greedy_generators();
    Ok(group)
}

impl FiniteGroup {
    fn finish(kind: Kind, generators: Vec<usize>) -> FiniteGroup {
        let order = match &kind {
            Kind::Permutation { store, .. } | Kind::Matrix { store, .. } => store.len(),
            Kind::Cayley { labels } => labels.len(),
            Kind::Product { normal, top, .. } => normal.order() * top.order(),
        };
        let mut group = FiniteGroup {
            kind,
            order,
            generators,
            inverses: Vec::new(),
            orders: Vec::new(),
            table: None,
        };
        if order <= TABLE_CACHE_LIMIT {
            let table: Vec<u32> = (0..order * order)
                .into_par_iter()
                .map(|ab| group.mul(ab / order, ab % order) as u32)
                .collect();
            group.table = Some(table);
        }
        group.fill_orders();
        group
    }

    fn fill_orders(&mut self) {
        let pairs: Vec<(u32, u32)> = (0..self.order)
            .into_par_iter()
            .map(|g| {
                if g == 0 {
                    return (1, 0);
                }
                let mut prev = g;
                let mut x = self.mul(g, g);
                let mut k = 2u32;
                while x != 0 {
                    prev = x;
                    x = self.mul(x, g);
                    k += 1;
                }
                (k, prev as u32)
            })
            .collect();
        self.orders = pairs.iter().map(|p| p.0).collect();
        self.inverses = pairs.iter().map(|p| p.1).collect();
    }

    /// Greedy generating set: scan elements by decreasing order and keep
    /// those not already generated.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(self.orders[g]), g));
        let mut closure = subgroup::Closure::new(self);
        for g in candidates {
            if closure.len() == self.order {
                break;
            }
            closure.add(g);
        }
        closure.into_generators()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the identity; always `0`.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(table) = &self.table {
            return table[a * self.order + b] as usize;
        }
        match &self.kind {
            Kind::Permutation { store, .. } => {
                let mut buf = [0u8; store::MAX_WIDTH];
                let out = &mut buf[..store.width()];
                compose_permutations(store.word(a), store.word(b), out);
                store.lookup(out).expect("group is closed")
            }
            Kind::Matrix { n, field, store } => {
                let mut buf = [0u8; store::MAX_WIDTH];
                let out = &mut buf[..store.width()];
                multiply_matrices(field, *n, store.word(a), store.word(b), out);
                store.lookup(out).expect("group is closed")
            }
            Kind::Cayley { .. } => unreachable!("Cayley groups always carry a table"),
            Kind::Product { normal, top, action } => {
                let nt = top.order();
                let (a1, b1) = (a / nt, a % nt);
                let (a2, b2) = (b / nt, b % nt);
                let twisted = match action {
                    Some(action) => action[b1].apply(a2),
                    None => a2,
                };
                normal.mul(a1, twisted) * nt + top.mul(b1, b2)
            }
        }
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g] as usize
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn pow(&self, g: usize, e: u64) -> usize {
        let e = e % self.orders[g] as u64;
        let mut acc = 0;
        let mut base = g;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `t g t^-1`.
    #[inline]
    pub fn conjugate(&self, t: usize, g: usize) -> usize {
        self.mul(self.mul(t, g), self.inverse(t))
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        self.mul(self.inverse(hg), gh)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        let mut orders: Vec<u32> = self.orders.clone();
        orders.sort_unstable();
        orders.dedup();
        orders.into_iter().fold(1u64, |acc, o| lcm(acc, o as u64))
    }

    /// Checks commutation of every pair of generators.
    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The concrete element at an index.
    pub fn element(&self, g: usize) -> GroupElement {
        match &self.kind {
            Kind::Permutation { store, .. } => {
                GroupElement::Permutation(Permutation::from_bytes(store.word(g)))
            }
            Kind::Matrix { n, store, .. } => GroupElement::Matrix(Matrix::new(*n, store.word(g).to_vec())),
            Kind::Cayley { labels } => GroupElement::Cayley(labels[g]),
            Kind::Product { normal, top, .. } => {
                let nt = top.order();
                GroupElement::Pair(Box::new(normal.element(g / nt)), Box::new(top.element(g % nt)))
            }
        }
    }

    pub fn identity_element(&self) -> GroupElement {
        self.element(0)
    }

    /// Index of a concrete element, if it belongs to the group.
    pub fn index_of(&self, element: &GroupElement) -> Option<usize> {
        match (&self.kind, element) {
            (Kind::Permutation { store, .. }, GroupElement::Permutation(p)) => {
                if p.as_bytes().len() == store.width() {
                    store.lookup(p.as_bytes())
                } else {
                    None
                }
            }
            (Kind::Matrix { n, store, .. }, GroupElement::Matrix(m)) => {
                if m.size() == *n {
                    store.lookup(m.entries())
                } else {
                    None
                }
            }
            (Kind::Cayley { labels }, GroupElement::Cayley(l)) => labels.iter().position(|x| x == l),
            (Kind::Product { normal, top, .. }, GroupElement::Pair(a, b)) => {
                Some(normal.index_of(a)? * top.order() + top.index_of(b)?)
            }
            _ => None,
        }
    }

    /// Components `(normal index, top index)` of a product element.
    pub fn product_components(&self, g: usize) -> Option<(usize, usize)> {
        match &self.kind {
            Kind::Product { top, .. } => Some((g / top.order(), g % top.order())),
            _ => None,
        }
    }

    pub(crate) fn from_product(
        normal: FiniteGroup,
        top: FiniteGroup,
        action: Option<Vec<Automorphism>>,
    ) -> FiniteGroup {
        let nt = top.order();
        let mut generators: Vec<usize> = normal.generators().iter().map(|&a| a * nt).collect();
        generators.extend(top.generators().iter().copied());
        FiniteGroup::finish(
            Kind::Product {
                normal: Arc::new(normal),
                top: Arc::new(top),
                action: action.map(Arc::new),
            },
            generators,
        )
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[inline]
fn compose_permutations(a: &[u8], b: &[u8], out: &mut [u8]) {
    for (o, &x) in out.iter_mut().zip(b) {
        *o = a[x as usize];
    }
}

fn multiply_matrices(field: &FqField, n: usize, a: &[u8], b: &[u8], out: &mut [u8]) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u8;
            for k in 0..n {
                acc = field.add(acc, field.mul(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = acc;
        }
    }
}

/// Determinant by Gaussian elimination over the field.
pub(crate) fn determinant(field: &FqField, n: usize, entries: &[u8]) -> u8 {
    let mut m = entries.to_vec();
    let mut det = 1u8;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for j in 0..n {
                m.swap(pivot * n + j, col * n + j);
            }
            det = field.neg(det);
        }
        let p = m[col * n + col];
        det = field.mul(det, p);
        let p_inv = field.inv(p).unwrap();
        for r in col + 1..n {
            let factor = field.mul(m[r * n + col], p_inv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let v = field.mul(factor, m[col * n + j]);
                m[r * n + j] = field.sub(m[r * n + j], v);
            }
        }
    }
    det
}
