use std::hash::BuildHasher;

use hashbrown::HashTable;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};

/// Widest element encoding in bytes (permutations of degree 255 or 16x16
/// matrices).
pub(crate) const MAX_WIDTH: usize = 256;

/// Fixed-width byte words in insertion order with a hash index.
#[derive(Clone)]
pub(crate) struct WordStore {
    width: usize,
    data: Vec<u8>,
    index: HashTable<u32>,
    hasher: FxBuildHasher,
}

impl WordStore {
    fn new(width: usize) -> Self {
        WordStore {
            width,
            data: Vec::new(),
            index: HashTable::new(),
            hasher: FxBuildHasher,
        }
    }

    /// Breadth-first closure of `identity` under right multiplication by
    /// `generators`.
    pub(crate) fn close<F>(identity: &[u8], generators: &[Vec<u8>], budget: usize, compose: F) -> Result<Self>
    where
        F: Fn(&[u8], &[u8], &mut [u8]),
    {
        let width = identity.len();
        assert!(width <= MAX_WIDTH);
        let mut store = WordStore::new(width);
        store.insert(identity);
        let mut buf = vec![0u8; width];
        let mut next = 0;
        while next < store.len() {
            for g in generators {
                compose(store.word(next), g, &mut buf);
                if store.lookup(&buf).is_none() {
                    if store.len() >= budget {
                        return Err(Error::BudgetExceeded {
                            what: "group enumeration",
                            limit: budget as u64,
                        });
                    }
                    store.insert(&buf);
                }
            }
            next += 1;
        }
        store.data.shrink_to_fit();
        Ok(store)
    }

    fn insert(&mut self, word: &[u8]) -> usize {
        let idx = self.len();
        self.data.extend_from_slice(word);
        let hash = self.hasher.hash_one(word);
        let (data, width, hasher) = (&self.data, self.width, &self.hasher);
        self.index.insert_unique(hash, idx as u32, |&i| {
            let i = i as usize;
            hasher.hash_one(&data[i * width..(i + 1) * width])
        });
        idx
    }

    pub(crate) fn width(&self) -> usize {
        self.width
    }

    pub(crate) fn len(&self) -> usize {
        self.data.len() / self.width
    }

    #[inline]
    pub(crate) fn word(&self, i: usize) -> &[u8] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    #[inline]
    pub(crate) fn lookup(&self, word: &[u8]) -> Option<usize> {
        let hash = self.hasher.hash_one(word);
        self.index
            .find(hash, |&i| self.word(i as usize) == word)
            .map(|&i| i as usize)
    }
}
