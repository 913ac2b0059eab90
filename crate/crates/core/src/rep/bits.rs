use crate::set::IntegerSet;

/// Fixed-length bit vector, bit `i` stored in word `i / 64` at position `i % 64`.
/// Bits past `len` are always zero.
pub(crate) struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    /// Membership of `0..len`.
    pub(crate) fn membership(set: &IntegerSet, len: usize) -> Self {
        let mut words = vec![0u64; len.div_ceil(64)];
        if len > 0 {
            for k in set.members_in(0, len as u64 - 1) {
                let k = k as usize;
                words[k / 64] |= 1 << (k % 64);
            }
        }
        BitVec { words, len }
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn reversed(&self) -> Self {
        let mut words = vec![0u64; self.words.len()];
        for i in 0..self.len {
            if self.get(i) {
                let j = self.len - 1 - i;
                words[j / 64] |= 1 << (j % 64);
            }
        }
        BitVec {
            words,
            len: self.len,
        }
    }

    /// The 64 bits starting at `bit`, zero-filled past the end.
    #[inline]
    pub(crate) fn word_at(&self, bit: usize) -> u64 {
        let wi = bit / 64;
        let off = bit % 64;
        let lo = match self.words.get(wi) {
            Some(w) => w >> off,
            None => return 0,
        };
        if off == 0 {
            return lo;
        }
        let hi = self.words.get(wi + 1).map_or(0, |w| w << (64 - off));
        lo | hi
    }

    /// `#{a <= n : self[a] && self[n - a]}`, given `rev` as the reversal of `self`.
    ///
    /// With `L = len - 1`, `self[n - a] = rev[L - n + a]`, so the count is the
    /// overlap of `self` with `rev` shifted by `L - n` bits. Bits of `self`
    /// beyond `n` meet bits of `rev` beyond `L`, which are zero.
    #[inline]
    pub(crate) fn self_overlap(&self, rev: &BitVec, n: usize) -> u64 {
        debug_assert!(n < self.len);
        let shift = self.len - 1 - n;
        let mut count = 0u64;
        for w in 0..=n / 64 {
            count += u64::from((self.words[w] & rev.word_at(shift + 64 * w)).count_ones());
        }
        count
    }
}
