//! Concatenation constructions: CCR2, CCR3, minimum/maximum-weight cycles and
//! the weight-range join.

use crate::bitseq::{BitSeq, BitSeqBuilder};
use crate::error::{Error, Result};
use crate::necklaces::{
    colex_sort, conecklace_classes, necklaces_lex_minweight, periodic_reduction, Word,
};

/// Largest order accepted by the co-necklace constructions (`α·ᾱ` must fit
/// in a [`Word`]).
pub const MAX_CCR_ORDER: usize = 30;

/// Largest order accepted by the weight-based constructions.
pub const MAX_WEIGHT_ORDER: usize = 30;

/// Weight split of the weight-range join.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightRangeParams {
    /// Min-weight parameter of the complemented half, `⌊n/2⌋ + 1`.
    pub d: usize,
    /// Min-weight parameter of the rotated half, `⌈n/2⌉`.
    pub d_prime: usize,
}

impl WeightRangeParams {
    pub fn for_order(n: usize) -> Self {
        Self {
            d: n / 2 + 1,
            d_prime: n.div_ceil(2),
        }
    }
}

fn check_order(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { n, min });
    }
    if n > max {
        return Err(Error::Capacity { n, max });
    }
    Ok(())
}

/// `pr(α·ᾱ)` blocks concatenated in the given order.
fn concat_doubled_blocks(reps: &[Word], n: usize) -> BitSeq {
    let mut b = BitSeqBuilder::with_capacity(1 << n);
    for &alpha in reps {
        let block = periodic_reduction(alpha.concat(&alpha.complement()));
        debug_assert_eq!(2 * block.weight(), block.len());
        b.push_word(block.bits(), block.len());
    }
    b.finish()
}

/// CCR2: lexicographically smallest member of each co-necklace class,
/// classes taken in colex order of those representatives.
pub fn ccr2(n: usize) -> Result<BitSeq> {
    check_order(n, 1, MAX_CCR_ORDER)?;
    let reps = conecklace_classes(n)?
        .into_iter()
        .map(|c| c.rep_lex)
        .collect();
    let reps = colex_sort(reps)?;
    Ok(concat_doubled_blocks(&reps, n))
}

/// CCR3: each class represented by its smallest member with the leading
/// `0^j` moved to the end as `1^j`, in lexicographic order.
pub fn ccr3(n: usize) -> Result<BitSeq> {
    check_order(n, 1, MAX_CCR_ORDER)?;
    let mut reps: Vec<Word> = conecklace_classes(n)?
        .into_iter()
        .map(|c| c.rep_ccr3)
        .collect();
    reps.sort();
    Ok(concat_doubled_blocks(&reps, n))
}

/// `D_d(n)`: periodic reductions of the weight-`≥ d` necklaces in
/// lexicographic order. Contains each length-`n` string of weight at least
/// `d` exactly once, circularly.
pub fn min_weight_db(n: usize, d: usize) -> Result<BitSeq> {
    check_order(n, 1, MAX_WEIGHT_ORDER)?;
    let mut b = BitSeqBuilder::new();
    for neck in necklaces_lex_minweight(n, d)? {
        let r = neck.reduced();
        b.push_word(r.bits(), r.len());
    }
    Ok(b.finish())
}

/// Complement of [`min_weight_db`]: every string of weight at most `n - d`
/// exactly once.
pub fn max_weight_db(n: usize, d: usize) -> Result<BitSeq> {
    Ok(min_weight_db(n, d)?.complement())
}

/// Moves the trailing `1^(d-1)` to the front.
pub fn rotate_suffix_ones(seq: &BitSeq, d: usize) -> Result<BitSeq> {
    let k = d.saturating_sub(1);
    if k > seq.len() {
        return Err(Error::Precondition(format!(
            "cannot rotate {k} bits of a length-{} sequence",
            seq.len()
        )));
    }
    let off = seq.len() - k;
    if !(off..seq.len()).all(|i| seq.get(i)) {
        return Err(Error::Precondition(format!(
            "sequence does not end with 1^{k}"
        )));
    }
    Ok(seq.rotate(off))
}

/// Weight-range join `D̄_d(n) · D^r_{d'}(n)` with `d = ⌊n/2⌋ + 1`,
/// `d' = ⌈n/2⌉`.
pub fn weight_range_db(n: usize) -> Result<BitSeq> {
    check_order(n, 2, MAX_WEIGHT_ORDER)?;
    let p = WeightRangeParams::for_order(n);
    let low = max_weight_db(n, p.d)?;
    let high = rotate_suffix_ones(&min_weight_db(n, p.d_prime)?, p.d_prime)?;
    Ok(low.concat(&high))
}

/// Exact binomial coefficient via Pascal's rule.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as usize;
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            row[j] = row[j]
                .checked_add(row[j - 1])
                .ok_or_else(|| Error::Overflow(format!("C({n}, {k})")))?;
        }
    }
    Ok(row[k])
}

/// `C(n-1, d)`: zeros minus ones of a maximum-weight cycle of order `n`
/// with maximum weight `d`.
pub fn binomial_imbalance(n: usize, d: usize) -> Result<u64> {
    if n == 0 || d > n - 1 {
        return Err(Error::Precondition(format!(
            "max weight {d} out of range for order {n}"
        )));
    }
    binomial(n as u64 - 1, d as u64)
}

/// `C(n-1, ⌊n/2⌋) + ⌊n/2⌋`.
pub fn weight_range_bound(n: usize) -> Result<u64> {
    Ok(binomial_imbalance(n, n / 2)? + (n / 2) as u64)
}
