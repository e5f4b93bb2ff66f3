//! Small fixed-width bitsets.
//!
//! Lattice subsets are plain `u64` masks (lattices are capped at 64
//! elements). Module element sets need up to 256 bits and use [`ElemSet`].

use std::fmt;

/// Iterate the set bit positions of a `u64` mask in increasing order.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub fn has(mask: u64, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub const ELEM_WORDS: usize = 4;
/// Maximum number of elements an [`ElemSet`] can hold.
pub const ELEM_CAP: usize = 64 * ELEM_WORDS;

/// A 256-bit set of module element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet([u64; ELEM_WORDS]);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet([0; ELEM_WORDS]);

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(i);
        s
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::EMPTY;
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= *b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= *b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| mask_iter(word).map(move |i| w * 64 + i))
    }

    /// Key ordering sets by their value read as a 256-bit number.
    pub fn numeric_key(&self) -> [u64; ELEM_WORDS] {
        let mut k = self.0;
        k.reverse();
        k
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Self::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}
