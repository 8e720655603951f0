//! Necklaces, co-necklaces and the word orders the concatenation
//! constructions need.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::bitseq::BitSet;
use crate::error::{Error, Result};

/// Longest word a [`Word`] can hold.
pub const MAX_WORD_LEN: usize = 64;

/// A short binary word packed into a `u64`, first symbol most significant.
///
/// Ordering is lexicographic (0 < 1); for equal lengths that is numeric
/// order of `bits`, and a proper prefix sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: u32,
}

impl Word {
    /// `len` symbols taken from the low bits of `bits`.
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(
            len <= MAX_WORD_LEN,
            "word length {len} exceeds {MAX_WORD_LEN}"
        );
        Self {
            bits: bits & mask(len),
            len: len as u32,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Self {
        Self::new(u64::MAX, len)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let v = bits
            .iter()
            .fold(0u64, |acc, &b| (acc << 1) | u64::from(b != 0));
        Self::new(v, bits.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at position `i` (0-based from the left).
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn complement(&self) -> Self {
        Self::new(!self.bits, self.len())
    }

    pub fn reversed(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        Self::new(
            self.bits.reverse_bits() >> (MAX_WORD_LEN - self.len()),
            self.len(),
        )
    }

    pub fn concat(&self, other: &Word) -> Self {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "concatenation too long");
        let hi = if other.len() == 64 {
            0
        } else {
            self.bits << other.len()
        };
        Self::new(hi | other.bits, len)
    }

    /// First `k` symbols.
    pub fn prefix(&self, k: usize) -> Self {
        assert!(k <= self.len());
        if k == 0 {
            return Self::zeros(0);
        }
        Self::new(self.bits >> (self.len() - k), k)
    }

    /// Left rotation by one symbol.
    pub fn rotate_left(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        let top = (self.bits >> (self.len() - 1)) & 1;
        Self::new((self.bits << 1) | top, self.len())
    }

    /// Number of leading zeros within the word.
    pub fn leading_zeros(&self) -> usize {
        (0..self.len()).take_while(|&i| !self.get(i)).count()
    }

    /// Colex comparison: lexicographic on the reversed words.
    pub fn cmp_colex(&self, other: &Word) -> Ordering {
        self.reversed().cmp(&other.reversed())
    }

    /// Lexicographically smallest rotation check.
    pub fn is_necklace(&self) -> bool {
        let mut r = *self;
        for _ in 1..self.len() {
            r = r.rotate_left();
            if r < *self {
                return false;
            }
        }
        true
    }
}

#[inline]
fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len().min(other.len());
        let a = self.prefix(common).bits;
        let b = other.prefix(common).bits;
        a.cmp(&b).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<u8> = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '·')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                c => Err(Error::Parse(format!("unexpected character {c:?} in word"))),
            })
            .collect::<Result<_>>()?;
        if bits.len() > MAX_WORD_LEN {
            return Err(Error::Parse(format!("word longer than {MAX_WORD_LEN}")));
        }
        Ok(Word::from_bits(&bits))
    }
}

/// Shortest prefix `β` with `word = β^j`.
pub fn periodic_reduction(word: Word) -> Word {
    let n = word.len();
    for p in 1..=n {
        if !n.is_multiple_of(p) {
            continue;
        }
        let beta = word.prefix(p);
        let mut rep = Word::zeros(0);
        for _ in 0..n / p {
            rep = rep.concat(&beta);
        }
        if rep == word {
            return beta;
        }
    }
    word
}

/// A necklace with its period and weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NecklaceRep {
    pub word: Word,
    pub period: usize,
    pub weight: usize,
}

impl NecklaceRep {
    /// The periodic reduction, `word[..period]`.
    pub fn reduced(&self) -> Word {
        self.word.prefix(self.period)
    }
}

/// All necklaces of length `n` with weight at least `d`, in lexicographic
/// order.
///
/// Pre-necklace recursion: position `t` may copy `a[t-p]` or, when that is
/// 0, take a 1 and reset the period to `t`. A 0 is only placed while the
/// remaining positions can still reach weight `d`. Words are emitted when
/// the period divides `n`.
pub fn necklaces_lex_minweight(n: usize, d: usize) -> Result<Vec<NecklaceRep>> {
    if n == 0 || n > MAX_WORD_LEN {
        return Err(Error::Precondition(format!(
            "necklace length {n} out of range 1..=64"
        )));
    }
    if d > n {
        return Err(Error::Precondition(format!(
            "minimum weight {d} exceeds length {n}"
        )));
    }
    let mut gen = MinWeightGen {
        n,
        d,
        a: vec![0u8; n + 1],
        out: Vec::new(),
    };
    gen.run(1, 1, 0);
    Ok(gen.out)
}

struct MinWeightGen {
    n: usize,
    d: usize,
    a: Vec<u8>,
    out: Vec<NecklaceRep>,
}

impl MinWeightGen {
    fn run(&mut self, t: usize, p: usize, w: usize) {
        let n = self.n;
        if t > n {
            if n.is_multiple_of(p) {
                self.out.push(NecklaceRep {
                    word: Word::from_bits(&self.a[1..=n]),
                    period: p,
                    weight: w,
                });
            }
            return;
        }
        self.a[t] = 0;
        // a[0] is a 0 sentinel for t - p == 0.
        if self.a[t - p] == 0 && self.d.saturating_sub(w) < n - t + 1 {
            self.run(t + 1, p, w);
        }
        self.a[t] = 1;
        if self.a[t - p] == 1 {
            self.run(t + 1, p, w + 1);
        } else {
            self.run(t + 1, t, w + 1);
        }
    }
}

/// One step of the complemented cycling register:
/// `a1 a2 … an -> a2 … an (1 ⊕ a1)`.
pub fn ccr_step(word: Word) -> Word {
    let n = word.len();
    let first = word.get(0);
    Word::new((word.bits() << 1) | u64::from(!first), n)
}

/// An orbit of [`ccr_step`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoNecklaceClass {
    /// Members in orbit order starting from `rep_lex`.
    pub members: Vec<Word>,
    pub rep_lex: Word,
    pub rep_ccr3: Word,
}

/// Strips the maximal `0^j` prefix and appends `1^j`. `0^n` maps to `1^n`.
pub fn rep_ccr3(rep_lex: Word) -> Word {
    let n = rep_lex.len();
    let j = rep_lex.leading_zeros();
    Word::new((rep_lex.bits() << j) | mask(j), n)
}

/// Partition of all length-`n` words into CCR orbits, ordered by `rep_lex`.
pub fn conecklace_classes(n: usize) -> Result<Vec<CoNecklaceClass>> {
    if n == 0 || n > 30 {
        return Err(Error::Precondition(format!(
            "co-necklace order {n} out of range 1..=30"
        )));
    }
    let total = 1usize << n;
    let mut seen = BitSet::new(total);
    let mut classes = Vec::new();
    // Scanning in increasing value order means the first unseen word of each
    // orbit is its lexicographic minimum.
    for v in 0..total {
        if seen.contains(v) {
            continue;
        }
        let start = Word::new(v as u64, n);
        let mut members = vec![start];
        seen.insert(v);
        let mut cur = ccr_step(start);
        while cur != start {
            seen.insert(cur.bits() as usize);
            members.push(cur);
            cur = ccr_step(cur);
        }
        classes.push(CoNecklaceClass {
            members,
            rep_lex: start,
            rep_ccr3: rep_ccr3(start),
        });
    }
    Ok(classes)
}

/// Sorts equal-length words in colex order (lexicographic on reversals).
pub fn colex_sort(mut words: Vec<Word>) -> Result<Vec<Word>> {
    if let Some(first) = words.first() {
        let n = first.len();
        if let Some(bad) = words.iter().find(|w| w.len() != n) {
            return Err(Error::Precondition(format!(
                "colex_sort needs equal lengths, got {n} and {}",
                bad.len()
            )));
        }
    }
    words.sort_by(Word::cmp_colex);
    Ok(words)
}
