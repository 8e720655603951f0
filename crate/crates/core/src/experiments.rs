//! Table regeneration, the random baseline and conjecture reports.
//!
//! Every value here is recomputed from the constructions; nothing is
//! tabulated.

use std::fmt;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitseq::{BitSeq, BitSeqBuilder, BitSet};
use crate::constructions::{ccr2, ccr3, weight_range_bound, weight_range_db};
use crate::discrepancy::{disc_general, disc_linear};
use crate::error::{Error, Result};
use crate::greedy::{prefer_one, prefer_opposite, prefer_same};
use crate::lfsr::{sweep, SweepStats};

/// The constructions that appear as table columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    Ccr2,
    Ccr3,
    PrefSame,
    PrefOpposite,
    PreferOne,
    WeightRange,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::Ccr2,
        Construction::Ccr3,
        Construction::PrefSame,
        Construction::PrefOpposite,
        Construction::PreferOne,
        Construction::WeightRange,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Construction::Ccr2 => "ccr2",
            Construction::Ccr3 => "ccr3",
            Construction::PrefSame => "pref-same",
            Construction::PrefOpposite => "pref-opposite",
            Construction::PreferOne => "prefer-1",
            Construction::WeightRange => "weight-range",
        }
    }

    /// Smallest order the construction supports.
    pub fn min_order(&self) -> usize {
        match self {
            Construction::Ccr2 | Construction::Ccr3 | Construction::PreferOne => 1,
            _ => 2,
        }
    }

    pub fn build(&self, n: usize) -> Result<BitSeq> {
        match self {
            Construction::Ccr2 => ccr2(n),
            Construction::Ccr3 => ccr3(n),
            Construction::PrefSame => prefer_same(n),
            Construction::PrefOpposite => prefer_opposite(n),
            Construction::PreferOne => prefer_one(n),
            Construction::WeightRange => weight_range_db(n),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Construction::ALL
            .into_iter()
            .find(|c| c.id() == key)
            .or(match key.as_str() {
                "prefer-same" => Some(Construction::PrefSame),
                "prefer-opposite" | "pref-opp" => Some(Construction::PrefOpposite),
                "prefer-one" | "pcr1" => Some(Construction::PreferOne),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownConstruction(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub construction: Construction,
    pub discrepancy: u64,
    pub d1: u64,
    pub d0: u64,
}

/// Discrepancy rows for each construction and order, ordered by
/// (construction, n).
pub fn table1(ns: RangeInclusive<usize>, constructions: &[Construction]) -> Result<Vec<TableRow>> {
    let jobs: Vec<(Construction, usize)> = constructions
        .iter()
        .flat_map(|&c| ns.clone().map(move |n| (c, n)))
        .collect();
    jobs.par_iter()
        .map(|&(construction, n)| {
            let seq = construction.build(n)?;
            let r = disc_linear(&seq)?;
            Ok(TableRow {
                n,
                construction,
                discrepancy: r.discrepancy,
                d1: r.d1,
                d0: r.d0,
            })
        })
        .collect()
}

pub const TABLE1_CSV_HEADER: &str = "construction,n,discrepancy,d1,d0";

pub fn table1_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(TABLE1_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.construction, r.n, r.discrepancy, r.d1, r.d0
        );
    }
    out
}

/// LFSR sweep statistics per degree.
pub fn table2(ns: RangeInclusive<usize>) -> Result<Vec<SweepStats>> {
    ns.map(sweep).collect()
}

pub const TABLE2_CSV_HEADER: &str = "n,min,avg,max,lfsrs";

pub fn table2_csv(rows: &[SweepStats]) -> String {
    let mut out = String::from(TABLE2_CSV_HEADER);
    out.push('\n');
    for s in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            s.n,
            s.min_disc,
            s.mean_rounded(),
            s.max_disc,
            s.count
        );
    }
    out
}

/// Mean circular discrepancy of `samples` uniform random bit strings of
/// length `2^n`, reproducible from `seed`.
pub fn random_baseline(n: usize, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::Precondition("need at least one sample".into()));
    }
    if n > 30 {
        return Err(Error::Capacity { n, max: 30 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = 1usize << n;
    let mut total = 0u64;
    for _ in 0..samples {
        let mut b = BitSeqBuilder::with_capacity(len);
        let mut left = len;
        while left > 0 {
            let take = left.min(64);
            b.push_word(rng.random::<u64>(), take);
            left -= take;
        }
        total += disc_general(&b.finish());
    }
    Ok(total as f64 / samples as f64)
}

/// Coefficients `a(0..len)` of `x(1+x^4) / ((1-x)^2 (1-x^4))`.
pub fn a008811(len: usize) -> Vec<i64> {
    // Denominator 1 - 2x + x^2 - x^4 + 2x^5 - x^6.
    const DEN: [i64; 7] = [1, -2, 1, 0, -1, 2, -1];
    let mut a = vec![0i64; len];
    for i in 0..len {
        let num = i64::from(i == 1 || i == 5);
        let acc: i64 = (1..DEN.len())
            .filter(|&k| k <= i)
            .map(|k| DEN[k] * a[i - k])
            .sum();
        a[i] = num - acc;
    }
    a
}

/// `⌊(n-4)²/4⌋ + ⌊(n-2)²/4⌋ + 2`.
pub fn pref_opposite_formula(n: usize) -> u64 {
    let n = n as i64;
    (((n - 4) * (n - 4)) / 4 + ((n - 2) * (n - 2)) / 4 + 2) as u64
}

/// `0^j 1^(n-j) · 0^(j-1) 1^(n-j+1) ⋯ 0 1^(n-1) · 1 0^(n-1)` with
/// `j = ⌈n/3⌉`.
pub fn pref_opposite_suffix(n: usize) -> BitSeq {
    let j = n.div_ceil(3);
    let mut b = BitSeqBuilder::new();
    for k in (1..=j).rev() {
        b.push_run(false, k);
        b.push_run(true, n - k);
    }
    b.push(true);
    b.push_run(false, n - 1);
    b.finish()
}

/// Largest order [`all_de_bruijn`] will enumerate.
pub const MAX_EXHAUSTIVE_ORDER: usize = 5;

/// Every de Bruijn sequence of order `n`, each in its unique rotation that
/// starts with `0^n`.
pub fn all_de_bruijn(n: usize) -> Result<Vec<BitSeq>> {
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity {
            n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    let total = 1usize << n;
    let mask = total - 1;
    let mut bits = vec![false; n];
    let mut seen = BitSet::new(total);
    seen.insert(0);
    let mut out = Vec::new();
    extend_all(n, mask, 0, &mut bits, &mut seen, &mut out);
    Ok(out)
}

fn extend_all(
    n: usize,
    mask: usize,
    window: usize,
    bits: &mut Vec<bool>,
    seen: &mut BitSet,
    out: &mut Vec<BitSeq>,
) {
    let total = mask + 1;
    if bits.len() == total {
        // The n - 1 wrap-around windows must also be new; with all
        // 2^n windows in the linear part already distinct they are the
        // only ones left to check.
        let mut w = window;
        let mut fresh = BitSet::new(total);
        for &bit in &bits[..n - 1] {
            w = ((w << 1) | usize::from(bit)) & mask;
            if seen.contains(w) || !fresh.insert(w) {
                return;
            }
        }
        out.push(bits.iter().copied().collect());
        return;
    }
    for bit in [false, true] {
        let next = ((window << 1) | usize::from(bit)) & mask;
        if seen.insert(next) {
            bits.push(bit);
            extend_all(n, mask, next, bits, seen, out);
            bits.pop();
            seen.remove(next);
        }
    }
}

/// One predicted-vs-measured line of a conjecture report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub name: &'static str,
    pub n: usize,
    pub predicted: u64,
    pub measured: u64,
}

impl ConjectureRow {
    pub fn matches(&self) -> bool {
        self.predicted == self.measured
    }
}

pub const PREF_OPPOSITE_FORMULA: &str = "pref-opposite-formula";
pub const PREF_OPPOSITE_SUFFIX: &str = "pref-opposite-suffix";
pub const PREF_SAME_A008811: &str = "pref-same-a008811";
pub const WEIGHT_RANGE_EQUALITY: &str = "weight-range-equality";
pub const WEIGHT_RANGE_MAXIMUM: &str = "weight-range-maximum";

/// Predicted and measured values for the open conjectures and observations
/// over `ns`.
///
/// * Pref-opposite discrepancy against the quarter-squares formula.
/// * Pref-opposite suffix pattern (1 = present).
/// * Pref-same `d1` against A008811 at offset 1, `d1(n) = a(n-1)`.
/// * Weight-range discrepancy against `C(n-1,⌊n/2⌋) + ⌊n/2⌋`.
/// * For `n <= 4` in range: the maximum discrepancy over all de Bruijn
///   sequences against the weight-range value.
pub fn conjecture_report(ns: RangeInclusive<usize>) -> Result<Vec<ConjectureRow>> {
    let series = a008811(ns.end() + 2);
    let mut rows = Vec::new();
    for n in ns.clone() {
        if n < 2 {
            continue;
        }
        let opp = prefer_opposite(n)?;
        rows.push(ConjectureRow {
            name: PREF_OPPOSITE_FORMULA,
            n,
            predicted: pref_opposite_formula(n),
            measured: disc_linear(&opp)?.discrepancy,
        });
        rows.push(ConjectureRow {
            name: PREF_OPPOSITE_SUFFIX,
            n,
            predicted: 1,
            measured: u64::from(opp.ends_with(&pref_opposite_suffix(n))),
        });
        rows.push(ConjectureRow {
            name: PREF_SAME_A008811,
            n,
            predicted: series[n - 1].max(0) as u64,
            measured: disc_linear(&prefer_same(n)?)?.d1,
        });
        let wr = disc_linear(&weight_range_db(n)?)?.discrepancy;
        rows.push(ConjectureRow {
            name: WEIGHT_RANGE_EQUALITY,
            n,
            predicted: weight_range_bound(n)?,
            measured: wr,
        });
        if n <= 4 {
            let max = all_de_bruijn(n)?
                .iter()
                .map(|s| disc_linear(s).map(|r| r.discrepancy))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap_or(0);
            rows.push(ConjectureRow {
                name: WEIGHT_RANGE_MAXIMUM,
                n,
                predicted: wr,
                measured: max,
            });
        }
    }
    Ok(rows)
}

pub const CONJECTURE_CSV_HEADER: &str = "name,n,predicted,measured,match";

pub fn conjecture_csv(rows: &[ConjectureRow]) -> String {
    let mut out = String::from(CONJECTURE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.name,
            r.n,
            r.predicted,
            r.measured,
            r.matches()
        );
    }
    out
}
