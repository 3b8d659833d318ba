//! Brute-force automorphisms of small groups and actions built from them.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Largest group order accepted by [`enumerate_automorphisms`].
pub const AUTOMORPHISM_ORDER_LIMIT: usize = 16;

/// A bijective endomorphism, stored as the image of every element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<u32>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            images: (0..order as u32).collect(),
        }
    }

    /// Validates that `images` defines an automorphism of `group`.
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if images.len() != n {
            return Err(Error::InvalidGenerator(format!(
                "automorphism needs {n} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGenerator("images are not a bijection".into()));
            }
        }
        for x in group.elements() {
            for &s in group.generators() {
                if images[group.mul(x, s)] != group.mul(images[x], images[s]) {
                    return Err(Error::InvalidGenerator(format!(
                        "images do not respect the product {x}*{s}"
                    )));
                }
            }
        }
        Ok(Automorphism {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.images[g] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Automorphism { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(self);
            k += 1;
        }
        k
    }
}

/// Extends an assignment of generator images to a homomorphism
/// `source -> target`, walking the Cayley graph of `source`. Returns `None`
/// when some edge gives conflicting images, i.e. when the assignment does
/// not respect the relations of `source`.
pub fn extend_homomorphism<F>(
    source: &FiniteGroup,
    generator_images: &[usize],
    target_mul: F,
    target_identity: usize,
) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> usize,
{
    const UNSET: usize = usize::MAX;
    let gens = source.generators();
    debug_assert_eq!(gens.len(), generator_images.len());
    let mut image = vec![UNSET; source.order()];
    image[0] = target_identity;
    let mut queue = vec![0];
    let mut next = 0;
    while next < queue.len() {
        let x = queue[next];
        next += 1;
        for (&s, &img_s) in gens.iter().zip(generator_images) {
            let y = source.mul(x, s);
            let img_y = target_mul(image[x], img_s);
            if image[y] == UNSET {
                image[y] = img_y;
                queue.push(y);
            } else if image[y] != img_y {
                return None;
            }
        }
    }
    Some(image)
}

/// All automorphisms of a group of order at most 16, sorted by image
/// vector (so the identity comes first).
pub fn enumerate_automorphisms(group: &FiniteGroup) -> Result<Vec<Automorphism>> {
    let n = group.order();
    if n > AUTOMORPHISM_ORDER_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: AUTOMORPHISM_ORDER_LIMIT,
        });
    }
    let gens = group.generators().to_vec();
    // candidate images for each generator: elements of the same order
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            group
                .elements()
                .filter(|&x| group.element_order(x) == group.element_order(s))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cands)| cands[c])
            .collect();
        if let Some(map) = extend_homomorphism(group, &images, |a, b| group.mul(a, b), 0) {
            let mut hit = vec![false; n];
            if map.iter().all(|&x| !std::mem::replace(&mut hit[x], true)) {
                out.push(Automorphism {
                    images: map.into_iter().map(|x| x as u32).collect(),
                });
            }
        }
        // odometer over the candidate lists
        let mut i = 0;
        loop {
            if i == choice.len() {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Every homomorphism `top -> Aut(normal)`, each given as the automorphism
/// assigned to every element of `top`, in a deterministic order that
/// starts with the trivial action.
pub fn actions(top: &FiniteGroup, automorphisms: &[Automorphism]) -> Vec<Vec<Automorphism>> {
    let k = top.generators().len();
    let m = automorphisms.len();
    if m == 0 {
        return Vec::new();
    }
    let identity = automorphisms
        .iter()
        .position(Automorphism::is_identity)
        .expect("automorphism lists contain the identity");
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let compose = |a: usize, b: usize| {
            let c = automorphisms[a].compose(&automorphisms[b]);
            automorphisms
                .iter()
                .position(|x| *x == c)
                .expect("closed under composition")
        };
        if let Some(map) = extend_homomorphism(top, &choice, compose, identity) {
            out.push(map.into_iter().map(|i| automorphisms[i].clone()).collect());
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
