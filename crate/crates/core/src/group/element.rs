use std::fmt;

use crate::error::{Error, Result};

/// Largest permutation degree; points are stored as bytes.
pub const MAX_DEGREE: usize = 255;

/// A permutation of `{0, .., n-1}` given by its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidGenerator(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGenerator(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint-or-not cycles
    /// on 0-based points. Cycles are applied right to left.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGenerator(format!(
                        "bad cycle {cycle:?} on {degree} points"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            perm = Permutation::from_images(&images)?.compose(&perm);
        }
        Ok(perm)
    }

    pub(crate) fn from_bytes(images: &[u8]) -> Self {
        Permutation {
            images: images.to_vec(),
        }
    }

    pub(crate) fn as_bytes(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Cycle lengths, longest first, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        transpositions.is_multiple_of(2)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
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
                write!(f, "{x}")?;
                first = false;
                x = self.image(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A square matrix over a finite field, entries in the field's byte encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    entries: Vec<u8>,
}

impl Matrix {
    /// Row-major entries.
    pub fn new(n: usize, entries: Vec<u8>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix must have n*n entries");
        Matrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }
}

/// A group element in one of the supported concrete representations.
///
/// Equality and hashing are structural, which matches group equality
/// because every representation here is faithful.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Permutation(Permutation),
    Matrix(Matrix),
    /// Row label in a user supplied multiplication table.
    Cayley(u32),
    /// Element of a direct or semidirect product, as (normal part, top part).
    Pair(Box<GroupElement>, Box<GroupElement>),
}

/// Permutations in 1-based cycle notation, matrices row by row,
/// table elements as `#k`, pairs as `(a, b)`.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Permutation(p) => {
                let mut any = false;
                let mut seen = vec![false; p.degree()];
                for start in 0..p.degree() {
                    if seen[start] || p.image(start) == start {
                        continue;
                    }
                    any = true;
                    let mut x = start;
                    let mut cycle = Vec::new();
                    while !seen[x] {
                        seen[x] = true;
                        cycle.push((x + 1).to_string());
                        x = p.image(x);
                    }
                    write!(f, "({})", cycle.join(" "))?;
                }
                if !any {
                    write!(f, "()")?;
                }
                Ok(())
            }
            GroupElement::Matrix(m) => {
                let rows: Vec<String> = (0..m.size())
                    .map(|i| {
                        (0..m.size())
                            .map(|j| m.entry(i, j).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                write!(f, "[{}]", rows.join("; "))
            }
            GroupElement::Cayley(k) => write!(f, "#{k}"),
            GroupElement::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}
