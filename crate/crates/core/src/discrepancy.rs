//! Discrepancy of circular binary sequences.
//!
//! The discrepancy of a circular string is the largest value of
//! `| #1s(u) - #0s(u) |` over its circular substrings `u`. Three routes are
//! provided:
//!
//! * [`disc_oracle`] scans every prefix of every rotation, `O(m^2)`. Reference
//!   only.
//! * [`disc_general`] handles any sequence in `O(m)` with sliding-window
//!   extrema over the doubled prefix sums.
//! * [`disc_linear`] is the single-pass method for balanced sequences: with
//!   running sums `j_i`, the discrepancy is `max j_i - min j_i`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::bitseq::BitSeq;
use crate::error::{Error, Result};

/// Prefix extrema of the running `#1s - #0s` sum for one linearization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// Largest prefix excess of 1s over 0s.
    pub d1: u64,
    /// Largest prefix excess of 0s over 1s.
    pub d0: u64,
    pub discrepancy: u64,
    /// Running sums `j_0..=j_len`, when requested.
    pub profile: Option<Vec<i64>>,
}

#[inline]
fn step(bit: bool) -> i64 {
    if bit {
        1
    } else {
        -1
    }
}

/// Running sums `j_0 = 0, j_i = #1s - #0s` over the first `i` bits.
pub fn prefix_profile(seq: &BitSeq) -> Vec<i64> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    let mut j = 0i64;
    out.push(j);
    for b in seq {
        j += step(b);
        out.push(j);
    }
    out
}

/// Brute-force circular discrepancy: every rotation, every prefix.
pub fn disc_oracle(seq: &BitSeq) -> u64 {
    let m = seq.len();
    let mut best = 0u64;
    for start in 0..m {
        let mut j = 0i64;
        for k in 0..m {
            j += step(seq.get_circular(start + k));
            best = best.max(j.unsigned_abs());
        }
    }
    best
}

fn linear_scan(seq: &BitSeq, keep_profile: bool) -> Result<DiscrepancyReport> {
    let ones = seq.count_ones();
    let zeros = seq.len() - ones;
    if ones != zeros {
        return Err(Error::Unbalanced { ones, zeros });
    }
    let mut profile = keep_profile.then(|| Vec::with_capacity(seq.len() + 1));
    let (mut j, mut hi, mut lo) = (0i64, 0i64, 0i64);
    if let Some(p) = profile.as_mut() {
        p.push(0);
    }
    for b in seq {
        j += step(b);
        hi = hi.max(j);
        lo = lo.min(j);
        if let Some(p) = profile.as_mut() {
            p.push(j);
        }
    }
    debug_assert_eq!(j, 0);
    let (d1, d0) = (hi as u64, (-lo) as u64);
    Ok(DiscrepancyReport {
        d1,
        d0,
        discrepancy: d1 + d0,
        profile,
    })
}

/// Single-pass discrepancy of a balanced sequence, with the `d1`/`d0` split
/// for the given linearization. Unbalanced input is rejected; use
/// [`disc_general`] for those.
pub fn disc_linear(seq: &BitSeq) -> Result<DiscrepancyReport> {
    linear_scan(seq, false)
}

/// [`disc_linear`] that also keeps the running-sum profile.
pub fn disc_linear_profiled(seq: &BitSeq) -> Result<DiscrepancyReport> {
    linear_scan(seq, true)
}

/// Exact circular discrepancy of an arbitrary sequence in `O(m)`.
///
/// Over the doubled prefix sums `s_0..=s_2m`, returns the maximum of
/// `|s_j - s_i|` for `i < j <= i + m`, tracking window max/min of `s_i` with
/// monotone deques.
pub fn disc_general(seq: &BitSeq) -> u64 {
    let m = seq.len();
    if m == 0 {
        return 0;
    }
    let mut maxq: VecDeque<(usize, i64)> = VecDeque::new();
    let mut minq: VecDeque<(usize, i64)> = VecDeque::new();
    let mut best = 0i64;
    let mut s = 0i64;
    // s_0 enters the window before the first j.
    maxq.push_back((0, 0));
    minq.push_back((0, 0));
    for j in 1..=2 * m {
        s += step(seq.get_circular(j - 1));
        let lo_idx = j.saturating_sub(m);
        while maxq.front().is_some_and(|&(i, _)| i < lo_idx) {
            maxq.pop_front();
        }
        while minq.front().is_some_and(|&(i, _)| i < lo_idx) {
            minq.pop_front();
        }
        if let (Some(&(_, hi)), Some(&(_, lo))) = (maxq.front(), minq.front()) {
            best = best.max(s - lo).max(hi - s);
        }
        while maxq.back().is_some_and(|&(_, v)| v <= s) {
            maxq.pop_back();
        }
        maxq.push_back((j, s));
        while minq.back().is_some_and(|&(_, v)| v >= s) {
            minq.pop_back();
        }
        minq.push_back((j, s));
    }
    best as u64
}

/// Circular discrepancy, taking the linear route when the sequence is
/// balanced.
pub fn discrepancy(seq: &BitSeq) -> u64 {
    match disc_linear(seq) {
        Ok(r) => r.discrepancy,
        Err(_) => disc_general(seq),
    }
}

/// CSV of the running sums: header `index,diff`, then `i,j_i` for
/// `i = 0..=len`, LF line endings.
pub fn profile_csv(seq: &BitSeq) -> String {
    let profile = prefix_profile(seq);
    let mut out = String::with_capacity(profile.len() * 8 + 12);
    out.push_str("index,diff\n");
    for (i, j) in profile.iter().enumerate() {
        // Writing to a String cannot fail.
        let _ = writeln!(out, "{i},{j}");
    }
    out
}
