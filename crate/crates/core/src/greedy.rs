//! Greedy de Bruijn generators over a `2^n`-bit visited-window set.
//!
//! Each generator appends one bit at a time, choosing between the two
//! extensions of the current window by a preference rule and skipping any
//! extension whose window was already produced.

use crate::bitseq::{BitSeq, BitSeqBuilder, BitSet};
use crate::error::{Error, Result};

/// Largest order the greedy generators accept (8 MiB visited set).
pub const MAX_GREEDY_ORDER: usize = 26;

/// Working state of a greedy run.
///
/// Windows are read as `n`-bit integers with the most recent bit in the low
/// position.
#[derive(Clone, Debug)]
pub struct GreedyState {
    n: usize,
    mask: u64,
    visited: BitSet,
    current_window: u64,
    out: BitSeqBuilder,
}

impl GreedyState {
    /// Starts from `seed`, which must be exactly `n` bits; its window counts
    /// as visited.
    pub fn new(n: usize, seed: &[bool]) -> Result<Self> {
        check_order(n, 1)?;
        if seed.len() != n {
            return Err(Error::Precondition(format!(
                "seed has {} bits, expected {n}",
                seed.len()
            )));
        }
        let total = (1usize << n) + n - 1;
        let mut out = BitSeqBuilder::with_capacity(total);
        let mut window = 0u64;
        for &b in seed {
            out.push(b);
            window = (window << 1) | u64::from(b);
        }
        let mut visited = BitSet::new(1 << n);
        visited.insert(window as usize);
        Ok(Self {
            n,
            mask: (1u64 << n) - 1,
            visited,
            current_window: window,
            out,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bits emitted so far, seed included.
    pub fn emitted(&self) -> usize {
        self.out.len()
    }

    pub fn visited_count(&self) -> usize {
        self.visited.count()
    }

    pub fn current_window(&self) -> u64 {
        self.current_window
    }

    /// Appends the first bit of `prefs` whose window is unvisited. Returns
    /// `false` when neither extension is available.
    pub fn step(&mut self, prefs: [bool; 2]) -> bool {
        for bit in prefs {
            let next = ((self.current_window << 1) | u64::from(bit)) & self.mask;
            if self.visited.insert(next as usize) {
                self.current_window = next;
                self.out.push(bit);
                return true;
            }
        }
        false
    }

    /// Runs `rule` (mapping the last emitted bit to a preference pair) until
    /// it stalls.
    pub fn run<F: Fn(bool) -> [bool; 2]>(&mut self, rule: F) {
        loop {
            let last = self.out.last().unwrap_or(false);
            if !self.step(rule(last)) {
                break;
            }
        }
    }

    pub fn into_linear(self) -> BitSeq {
        self.out.finish()
    }
}

fn check_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { n, min });
    }
    if n > MAX_GREEDY_ORDER {
        return Err(Error::Capacity {
            n,
            max: MAX_GREEDY_ORDER,
        });
    }
    Ok(())
}

/// Drops the trailing `n - 1` bits of a linear greedy output of length
/// `cycle_len + n - 1`, which repeat its head.
fn close_cycle(linear: &BitSeq, n: usize, cycle_len: usize) -> Result<BitSeq> {
    let expected = cycle_len + n - 1;
    if linear.len() != expected {
        return Err(Error::ConstructionFailure {
            emitted: linear.len(),
            expected,
        });
    }
    Ok(linear.iter().take(cycle_len).collect())
}

/// Prefer-1: seed `0^n`, always try a 1 first. The output is rotated so the
/// seed sits at the end, so it begins with `1^n`.
pub fn prefer_one(n: usize) -> Result<BitSeq> {
    check_order(n, 1)?;
    let mut st = GreedyState::new(n, &vec![false; n])?;
    st.run(|_| [true, false]);
    let cycle = close_cycle(&st.into_linear(), n, 1 << n)?;
    Ok(cycle.rotate(n))
}

/// Prefer-same: repeat the last bit when its window is new, else flip it.
///
/// Seeded with the alternating string of length `n` ending in 1; the output
/// starts at that final seed bit, so it opens with `1^n 0^n`.
pub fn prefer_same(n: usize) -> Result<BitSeq> {
    check_order(n, 2)?;
    let seed: Vec<bool> = (0..n).map(|i| (n - 1 - i).is_multiple_of(2)).collect();
    let mut st = GreedyState::new(n, &seed)?;
    st.run(|last| [last, !last]);
    let cycle = close_cycle(&st.into_linear(), n, 1 << n)?;
    Ok(cycle.rotate(n - 1))
}

/// Prefer-opposite: flip the last bit when its window is new, else repeat it.
///
/// From seed `0^n` the greedy run covers every window except `1^n`, which is
/// then spliced in by lengthening the unique run `1^(n-1)`. The output is
/// rotated by `n - 1` so that it ends with `1 0^(n-1)`.
pub fn prefer_opposite(n: usize) -> Result<BitSeq> {
    check_order(n, 2)?;
    let mut st = GreedyState::new(n, &vec![false; n])?;
    st.run(|last| [!last, last]);
    let short = close_cycle(&st.into_linear(), n, (1 << n) - 1)?;
    let m = short.len();
    let run_start = (0..m)
        .find(|&i| (0..n - 1).all(|k| short.get_circular(i + k)))
        .ok_or_else(|| Error::ConstructionFailure {
            emitted: m,
            expected: 1 << n,
        })?;
    let mut b = BitSeqBuilder::with_capacity(m + 1);
    for (i, bit) in short.iter().enumerate() {
        if i == run_start {
            b.push(true);
        }
        b.push(bit);
    }
    Ok(b.finish().rotate(n - 1))
}
