//! Candidate solution: one indicator bit per active row.

use std::ops::Range;

/// A subset of active rows, stored as a packed bitset with a cached
/// cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Individual {
    words: Vec<u64>,
    len: usize,
    cardinality: usize,
}

impl Individual {
    pub fn empty(len: usize) -> Self {
        Individual {
            words: vec![0; len.div_ceil(64)],
            len,
            cardinality: 0,
        }
    }

    pub fn full(len: usize) -> Self {
        Self::from_rows(len, 0..len)
    }

    /// Builds an individual with the given rows set. Panics on an
    /// out-of-range row.
    pub fn from_rows<I: IntoIterator<Item = usize>>(len: usize, rows: I) -> Self {
        let mut ind = Self::empty(len);
        for r in rows {
            ind.insert(r);
        }
        ind
    }

    pub fn from_indicator(flags: &[bool]) -> Self {
        Self::from_rows(
            flags.len(),
            flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i),
        )
    }

    pub fn indicator(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.contains(i)).collect()
    }

    /// Number of rows the indicator spans (the graph's active count).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of set rows.
    pub fn cardinality(&self) -> usize {
        self.cardinality
    }

    pub fn contains(&self, row: usize) -> bool {
        row < self.len && self.words[row / 64] >> (row % 64) & 1 == 1
    }

    /// Sets `row`; returns whether it was newly set.
    pub fn insert(&mut self, row: usize) -> bool {
        assert!(row < self.len, "row {row} out of range {}", self.len);
        let (w, b) = (row / 64, 1u64 << (row % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        self.cardinality += usize::from(fresh);
        fresh
    }

    /// Clears `row`; returns whether it was set.
    pub fn remove(&mut self, row: usize) -> bool {
        if row >= self.len {
            return false;
        }
        let (w, b) = (row / 64, 1u64 << (row % 64));
        let was = self.words[w] & b != 0;
        self.words[w] &= !b;
        self.cardinality -= usize::from(was);
        was
    }

    /// Set rows, ascending.
    pub fn ones(&self) -> Ones<'_> {
        self.ones_in(0..self.len)
    }

    /// Set rows within `range`, ascending.
    pub fn ones_in(&self, range: Range<usize>) -> Ones<'_> {
        let end = range.end.min(self.len);
        let start = range.start.min(end);
        let word = start / 64;
        let current = if start < end {
            self.words[word] & (!0u64 << (start % 64))
        } else {
            0
        };
        Ones {
            words: &self.words,
            word,
            current,
            end,
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Swaps the bits selected by `mask` in word `w` between two individuals.
    pub(crate) fn swap_masked(a: &mut Individual, b: &mut Individual, w: usize, mask: u64) {
        let diff = (a.words[w] ^ b.words[w]) & mask;
        if diff == 0 {
            return;
        }
        let a_ones = (a.words[w] & diff).count_ones() as usize;
        let b_ones = (b.words[w] & diff).count_ones() as usize;
        a.words[w] ^= diff;
        b.words[w] ^= diff;
        a.cardinality = a.cardinality - a_ones + b_ones;
        b.cardinality = b.cardinality - b_ones + a_ones;
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
    end: usize,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                let row = self.word * 64 + bit;
                if row >= self.end {
                    self.current = 0;
                    return None;
                }
                self.current &= self.current - 1;
                return Some(row);
            }
            self.word += 1;
            if self.word * 64 >= self.end {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_remove_track_cardinality() {
        let mut ind = Individual::empty(130);
        assert!(ind.insert(3));
        assert!(!ind.insert(3));
        assert!(ind.insert(129));
        assert_eq!(ind.cardinality(), 2);
        assert!(ind.remove(3));
        assert!(!ind.remove(3));
        assert_eq!(ind.cardinality(), 1);
        assert_eq!(ind.ones().collect::<Vec<_>>(), vec![129]);
    }

    #[test]
    fn empty_ranges() {
        let ind = Individual::full(10);
        assert_eq!(ind.ones_in(4..4).count(), 0);
        assert_eq!(ind.ones_in(8..100).collect::<Vec<_>>(), vec![8, 9]);
        assert_eq!(Individual::empty(0).ones().count(), 0);
    }

    proptest! {
        #[test]
        fn ones_in_matches_filter(
            flags in proptest::collection::vec(any::<bool>(), 0..300),
            a in 0usize..320,
            b in 0usize..320,
        ) {
            let ind = Individual::from_indicator(&flags);
            let (lo, hi) = (a.min(b), a.max(b));
            let expect: Vec<usize> = (lo..hi.min(flags.len())).filter(|&i| flags[i]).collect();
            prop_assert_eq!(ind.ones_in(lo..hi).collect::<Vec<_>>(), expect);
            prop_assert_eq!(ind.cardinality(), flags.iter().filter(|&&f| f).count());
            prop_assert_eq!(ind.indicator(), flags);
        }
    }
}
