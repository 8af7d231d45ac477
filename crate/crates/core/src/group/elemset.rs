use std::fmt;

use serde::{Serialize, Serializer};

use super::ElemId;

const WORDS: usize = 6;

/// Bit set over the 336 element ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const CAPACITY: usize = WORDS * 64;

    pub fn new() -> Self {
        ElemSet::default()
    }

    pub fn insert(&mut self, id: ElemId) -> bool {
        let (w, b) = (id / 64, id % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.0[id / 64] & (1 << (id % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits & (1 << b) != 0).map(move |b| w * 64 + b))
    }

    pub fn to_vec(&self) -> Vec<ElemId> {
        self.iter().collect()
    }
}

impl FromIterator<ElemId> for ElemSet {
    fn from_iter<I: IntoIterator<Item = ElemId>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
