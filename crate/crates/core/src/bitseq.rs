//! Packed circular binary sequences.
//!
//! [`BitSeq`] is the carrier type for every construction and analysis in the
//! crate. Bits are packed 64 per word; index 0 is always the first bit a
//! construction emitted. All window and substring reads are circular.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// An immutable circular binary sequence of explicit length.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSeq {
    words: Vec<u64>,
    len: usize,
}

/// Single-owner builder for [`BitSeq`].
#[derive(Clone, Debug, Default)]
pub struct BitSeqBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitSeqBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            words: Vec::with_capacity(bits.div_ceil(WORD_BITS)),
            len: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        let (w, b) = (self.len / WORD_BITS, self.len % WORD_BITS);
        if b == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[w] |= 1 << b;
        }
        self.len += 1;
    }

    /// Pushes `count` copies of `bit`.
    pub fn push_run(&mut self, bit: bool, count: usize) {
        for _ in 0..count {
            self.push(bit);
        }
    }

    /// Pushes the low `width` bits of `value`, most significant first.
    pub fn push_word(&mut self, value: u64, width: usize) {
        for i in (0..width).rev() {
            self.push((value >> i) & 1 == 1);
        }
    }

    pub fn extend_from_seq(&mut self, seq: &BitSeq) {
        for bit in seq.iter() {
            self.push(bit);
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The most recently pushed bit.
    pub fn last(&self) -> Option<bool> {
        let i = self.len.checked_sub(1)?;
        Some((self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1)
    }

    pub fn finish(self) -> BitSeq {
        BitSeq {
            words: self.words,
            len: self.len,
        }
    }
}

impl Extend<bool> for BitSeqBuilder {
    fn extend<I: IntoIterator<Item = bool>>(&mut self, iter: I) {
        for bit in iter {
            self.push(bit);
        }
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut b = BitSeqBuilder::new();
        b.extend(iter);
        b.finish()
    }
}

impl BitSeq {
    /// Builds a sequence from 0/1 bytes.
    pub fn from_bits(bits: &[u8]) -> Self {
        bits.iter().map(|&b| b != 0).collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at `i`. Panics if `i >= len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// Bit at `i` modulo the length.
    #[inline]
    pub fn get_circular(&self, i: usize) -> bool {
        self.get(i % self.len)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { seq: self, pos: 0 }
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.count_ones() == self.len
    }

    /// The `n` bits starting at `start`, wrapping circularly.
    pub fn window(&self, start: usize, n: usize) -> Result<BitSeq> {
        if n == 0 || n > self.len {
            return Err(Error::WindowLength { n, len: self.len });
        }
        Ok((0..n).map(|k| self.get_circular(start + k)).collect())
    }

    /// The circular window at `start` read as an integer, first bit most
    /// significant. Requires `1 <= n <= min(64, len)`.
    pub fn window_value(&self, start: usize, n: usize) -> Result<u64> {
        if n == 0 || n > self.len || n > WORD_BITS {
            return Err(Error::WindowLength { n, len: self.len });
        }
        Ok((0..n).fold(0u64, |acc, k| {
            (acc << 1) | u64::from(self.get_circular(start + k))
        }))
    }

    /// Iterates the values of all `len` circular windows of width `n`, in
    /// start order. Same bounds as [`BitSeq::window_value`].
    pub fn window_values(&self, n: usize) -> Result<impl Iterator<Item = u64> + '_> {
        let first = self.window_value(0, n)?;
        let mask = if n == WORD_BITS {
            u64::MAX
        } else {
            (1u64 << n) - 1
        };
        let mut cur = first;
        Ok(std::iter::once(first).chain((1..self.len).map(move |i| {
            cur = ((cur << 1) | u64::from(self.get_circular(i + n - 1))) & mask;
            cur
        })))
    }

    /// The rotation starting at index `k mod len`.
    pub fn rotate(&self, k: usize) -> BitSeq {
        if self.len == 0 {
            return self.clone();
        }
        let k = k % self.len;
        if k == 0 {
            return self.clone();
        }
        (0..self.len).map(|i| self.get_circular(i + k)).collect()
    }

    pub fn complement(&self) -> BitSeq {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        BitSeq {
            words,
            len: self.len,
        }
    }

    pub fn concat(&self, other: &BitSeq) -> BitSeq {
        let mut b = BitSeqBuilder::with_capacity(self.len + other.len);
        b.extend_from_seq(self);
        b.extend_from_seq(other);
        b.finish()
    }

    pub fn starts_with(&self, prefix: &BitSeq) -> bool {
        prefix.len <= self.len && prefix.iter().enumerate().all(|(i, b)| self.get(i) == b)
    }

    pub fn ends_with(&self, suffix: &BitSeq) -> bool {
        let off = match self.len.checked_sub(suffix.len) {
            Some(o) => o,
            None => return false,
        };
        suffix
            .iter()
            .enumerate()
            .all(|(i, b)| self.get(off + i) == b)
    }

    /// Offset `k` such that `self.rotate(k) == *other`, if any.
    pub fn rotation_offset(&self, other: &BitSeq) -> Option<usize> {
        if self.len != other.len {
            return None;
        }
        if self.len == 0 {
            return Some(0);
        }
        // KMP search for `other` in `self` doubled.
        let pat = other.to_bits();
        let m = pat.len();
        let mut fail = vec![0usize; m];
        let mut k = 0;
        for i in 1..m {
            while k > 0 && pat[i] != pat[k] {
                k = fail[k - 1];
            }
            if pat[i] == pat[k] {
                k += 1;
            }
            fail[i] = k;
        }
        let mut q = 0;
        for i in 0..(2 * m - 1) {
            let c = u8::from(self.get_circular(i));
            while q > 0 && c != pat[q] {
                q = fail[q - 1];
            }
            if c == pat[q] {
                q += 1;
            }
            if q == m {
                return Some(i + 1 - m);
            }
        }
        None
    }

    /// Equality up to rotation.
    pub fn is_rotation_of(&self, other: &BitSeq) -> bool {
        self.rotation_offset(other).is_some()
    }
}

pub struct Iter<'a> {
    seq: &'a BitSeq,
    pos: usize,
}

impl Iterator for Iter<'_> {
    type Item = bool;

    #[inline]
    fn next(&mut self) -> Option<bool> {
        if self.pos < self.seq.len {
            let b = self.seq.get(self.pos);
            self.pos += 1;
            Some(b)
        } else {
            None
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.seq.len - self.pos;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Iter<'_> {}

impl<'a> IntoIterator for &'a BitSeq {
    type Item = bool;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "BitSeq({self})")
        } else {
            write!(f, "BitSeq(len={}, ones={})", self.len, self.count_ones())
        }
    }
}

impl FromStr for BitSeq {
    type Err = Error;

    /// Parses ASCII `0`/`1`. Whitespace, `·` and `.` group separators are
    /// ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut b = BitSeqBuilder::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => b.push(false),
                '1' => b.push(true),
                '·' | '.' => {}
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::Parse(format!(
                        "unexpected character {c:?} in bit string"
                    )))
                }
            }
        }
        if b.is_empty() {
            return Err(Error::Parse("empty bit string".into()));
        }
        Ok(b.finish())
    }
}

/// Packed fixed-size bit set, used as the visited/seen set over `2^n`
/// window values.
#[derive(Clone, Debug)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// Inserts `i`, returning `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / WORD_BITS];
        let m = 1u64 << (i % WORD_BITS);
        let fresh = *w & m == 0;
        *w |= m;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// True iff `seq` has length `2^n` and its `2^n` circular windows of width
/// `n` are pairwise distinct.
pub fn is_de_bruijn(seq: &BitSeq, n: usize) -> bool {
    if n == 0 || n >= usize::BITS as usize || n > WORD_BITS || seq.len() != 1usize << n {
        return false;
    }
    let mut seen = BitSet::new(seq.len());
    match seq.window_values(n) {
        Ok(mut it) => it.all(|w| seen.insert(w as usize)),
        Err(_) => false,
    }
}

/// Balance and run counts; runs are counted circularly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GolombStats {
    pub ones: usize,
    pub zeros: usize,
    pub zero_runs: usize,
    pub one_runs: usize,
}

impl GolombStats {
    /// The balance and run equalities every de Bruijn sequence of order `n`
    /// satisfies.
    pub fn holds_for_order(&self, n: usize) -> bool {
        if n == 0 {
            return false;
        }
        let half = 1usize << (n - 1);
        let runs = if n >= 2 { 1usize << (n - 2) } else { 1 };
        self.ones == half && self.zeros == half && self.one_runs == runs && self.zero_runs == runs
    }
}

pub fn golomb_stats(seq: &BitSeq) -> GolombStats {
    let ones = seq.count_ones();
    let zeros = seq.len() - ones;
    let (mut zero_runs, mut one_runs) = (0, 0);
    let len = seq.len();
    for i in 0..len {
        let b = seq.get(i);
        let prev = seq.get((i + len - 1) % len);
        if b != prev {
            if b {
                one_runs += 1;
            } else {
                zero_runs += 1;
            }
        }
    }
    // A constant sequence is one run of its symbol.
    if len > 0 && zero_runs == 0 && one_runs == 0 {
        if ones > 0 {
            one_runs = 1;
        } else {
            zero_runs = 1;
        }
    }
    GolombStats {
        ones,
        zeros,
        zero_runs,
        one_runs,
    }
}
