//! GF(2) polynomials, primitivity, and LFSR-based de Bruijn sequences.
//!
//! A degree-`n` polynomial `c_0 + c_1 x + … + c_n x^n` drives the feedback
//! `f(a_1 … a_n) = c_n a_1 ⊕ c_{n-1} a_2 ⊕ … ⊕ c_1 a_n`. The register
//! outputs `a_1`, then shifts in `f`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bitseq::{BitSeq, BitSeqBuilder};
use crate::discrepancy::disc_linear;
use crate::error::{Error, Result};

/// Largest degree [`enumerate_primitive`] and [`sweep`] accept.
pub const MAX_SWEEP_DEGREE: usize = 20;

/// Largest register width for LFSR stepping.
pub const MAX_LFSR_ORDER: usize = 32;

/// A polynomial over GF(2); bit `i` of `coeffs` is `c_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly2 {
    coeffs: u64,
}

impl Poly2 {
    pub fn from_coeffs(coeffs: u64) -> Self {
        Self { coeffs }
    }

    /// Builds `Σ x^e` over the given exponents.
    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut coeffs = 0u64;
        for &e in exps {
            if e >= 64 {
                return Err(Error::Parse(format!("exponent {e} too large")));
            }
            coeffs ^= 1 << e;
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> u64 {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (self.coeffs != 0).then(|| 63 - self.coeffs.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < 64 && (self.coeffs >> i) & 1 == 1
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.coeff(i))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs == 0 {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    /// Accepts an exponent list such as `1+x^2+x^5` or a hex coefficient
    /// mask such as `0x25`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            return u64::from_str_radix(hex, 16)
                .map(Poly2::from_coeffs)
                .map_err(|e| Error::Parse(format!("bad hex polynomial {s:?}: {e}")));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut exps = Vec::new();
        for term in s.split('+') {
            let e = match term {
                "1" => 0,
                "x" => 1,
                t => t
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad polynomial term {t:?}")))?,
            };
            exps.push(e);
        }
        Poly2::from_exponents(&exps)
    }
}

/// Carry-less product `a · b mod m`. Requires `deg a, deg b < deg m`.
pub fn poly_mulmod(a: u64, b: u64, m: Poly2) -> u64 {
    let n = m.degree().expect("modulus must be nonzero");
    let top = 1u64 << n;
    let (mut a, mut b, mut r) = (a, b, 0u64);
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= m.coeffs;
        }
    }
    r
}

/// `x^e mod m` by square-and-multiply.
pub fn x_pow_mod(mut e: u64, m: Poly2) -> u64 {
    let n = m.degree().expect("modulus must be nonzero");
    if n == 0 {
        return 0;
    }
    let mut base = if n == 1 { m.coeffs & 1 } else { 0b10 };
    let mut r = 1u64;
    while e != 0 {
        if e & 1 == 1 {
            r = poly_mulmod(r, base, m);
        }
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    r
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// True iff `x` has multiplicative order exactly `2^n - 1` modulo `p`.
pub fn is_primitive(p: Poly2) -> bool {
    let n = match p.degree() {
        Some(n) if (1..=63).contains(&n) => n,
        _ => return false,
    };
    if !p.coeff(0) {
        return false;
    }
    let order = (1u64 << n) - 1;
    if x_pow_mod(order, p) != 1 {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|q| x_pow_mod(order / q, p) != 1)
}

/// All primitive polynomials of degree `n`, ascending by coefficient mask.
pub fn enumerate_primitive(n: usize) -> Result<Vec<Poly2>> {
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    if n > MAX_SWEEP_DEGREE {
        return Err(Error::Capacity {
            n,
            max: MAX_SWEEP_DEGREE,
        });
    }
    let lead = 1u64 << n;
    // Candidates have c_n = c_0 = 1.
    let polys: Vec<Poly2> = (0..lead / 2)
        .into_par_iter()
        .map(|mid| Poly2::from_coeffs(lead | (mid << 1) | 1))
        .filter(|&p| is_primitive(p))
        .collect();
    Ok(polys)
}

/// Register positions (1-based, `a_1` oldest) entering the feedback sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FeedbackTaps {
    taps: Vec<usize>,
    n: usize,
}

impl FeedbackTaps {
    pub fn new(n: usize, mut taps: Vec<usize>) -> Result<Self> {
        if n == 0 || n > MAX_LFSR_ORDER {
            return Err(Error::Precondition(format!(
                "register width {n} out of range"
            )));
        }
        taps.sort_unstable();
        taps.dedup();
        if let Some(&t) = taps.iter().find(|&&t| t == 0 || t > n) {
            return Err(Error::Precondition(format!("tap a{t} outside a1..a{n}")));
        }
        Ok(Self { taps, n })
    }

    /// Tap `a_i` is present iff `c_{n+1-i} = 1`.
    pub fn from_poly(p: Poly2) -> Result<Self> {
        let n = p
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Precondition(format!("polynomial {p} has degree < 1")))?;
        let taps = (1..=n).filter(|&i| p.coeff(n + 1 - i)).collect();
        Self::new(n, taps)
    }

    /// Inverse of [`FeedbackTaps::from_poly`], with `c_0 = 1`.
    pub fn to_poly(&self) -> Poly2 {
        let coeffs = self
            .taps
            .iter()
            .fold(1u64, |acc, &i| acc | 1 << (self.n + 1 - i));
        Poly2::from_coeffs(coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn taps(&self) -> &[usize] {
        &self.taps
    }

    /// Parses `a1^a4` (also accepts `⊕` or `+` separators); width is the
    /// given `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let taps = s
            .split(['^', '+', '⊕'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.strip_prefix('a')
                    .and_then(|i| i.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad tap {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, taps)
    }

    /// State mask with bit `n - i` set for each tap `a_i`.
    fn state_mask(&self) -> u64 {
        self.taps.iter().fold(0u64, |m, &i| m | 1 << (self.n - i))
    }
}

impl fmt::Display for FeedbackTaps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.taps.iter().map(|t| format!("a{t}")).collect();
        f.write_str(&parts.join("^"))
    }
}

impl fmt::Debug for FeedbackTaps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FeedbackTaps(n={}, {self})", self.n)
    }
}

/// A running register; state bit `n - 1` is `a_1`.
#[derive(Clone, Debug)]
pub struct Lfsr {
    state: u64,
    taps_mask: u64,
    width_mask: u64,
    n: usize,
}

impl Lfsr {
    /// `seed` holds `a_1 … a_n` with `a_1` most significant.
    pub fn new(taps: &FeedbackTaps, seed: u64) -> Self {
        let n = taps.n();
        let width_mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            state: seed & width_mask,
            taps_mask: taps.state_mask(),
            width_mask,
            n,
        }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    /// Outputs `a_1`, then shifts in the feedback bit.
    #[inline]
    pub fn step(&mut self) -> bool {
        let out = (self.state >> (self.n - 1)) & 1 == 1;
        let fb = u64::from((self.state & self.taps_mask).count_ones() & 1);
        self.state = ((self.state << 1) | fb) & self.width_mask;
        out
    }
}

/// The `2^n - 1` outputs of the register from `seed`.
pub fn lfsr_m_sequence(taps: &FeedbackTaps, seed: u64) -> Result<BitSeq> {
    let n = taps.n();
    if seed & ((1u64 << n) - 1) == 0 {
        return Err(Error::Precondition("LFSR seed must be nonzero".into()));
    }
    let len = (1usize << n) - 1;
    let mut reg = Lfsr::new(taps, seed);
    let mut b = BitSeqBuilder::with_capacity(len);
    for _ in 0..len {
        b.push(reg.step());
    }
    Ok(b.finish())
}

/// Inserts a 0 in front of the circular occurrence of `0^(n-1) 1`.
pub fn m_to_debruijn(m: &BitSeq, n: usize) -> Result<BitSeq> {
    if n == 0 || n > MAX_LFSR_ORDER || m.len() != (1usize << n) - 1 {
        return Err(Error::Malformed(format!(
            "length {} is not 2^{n} - 1",
            m.len()
        )));
    }
    let len = m.len();
    let at = (0..len)
        .find(|&i| (0..n - 1).all(|k| !m.get_circular(i + k)) && m.get_circular(i + n - 1))
        .ok_or_else(|| Error::Malformed(format!("no 0^{} 1 substring", n - 1)))?;
    let mut b = BitSeqBuilder::with_capacity(len + 1);
    for (i, bit) in m.iter().enumerate() {
        if i == at {
            b.push(false);
        }
        b.push(bit);
    }
    Ok(b.finish())
}

/// The de Bruijn sequence obtained from `taps` seeded with `0^(n-1) 1`.
pub fn lfsr_de_bruijn(taps: &FeedbackTaps) -> Result<BitSeq> {
    m_to_debruijn(&lfsr_m_sequence(taps, 1)?, taps.n())
}

/// Discrepancy statistics over all primitive polynomials of one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepStats {
    pub n: usize,
    pub count: u64,
    pub min_disc: u64,
    pub max_disc: u64,
    pub sum_disc: u64,
}

impl SweepStats {
    pub fn mean(&self) -> f64 {
        self.sum_disc as f64 / self.count as f64
    }

    /// Mean rounded half up, in exact integer arithmetic.
    pub fn mean_rounded(&self) -> u64 {
        (2 * self.sum_disc + self.count) / (2 * self.count)
    }
}

/// Builds the seeded de Bruijn sequence for every primitive polynomial of
/// degree `n` and aggregates their discrepancies.
pub fn sweep(n: usize) -> Result<SweepStats> {
    let polys = enumerate_primitive(n)?;
    let discs = polys
        .par_iter()
        .map(|&p| {
            let taps = FeedbackTaps::from_poly(p)?;
            Ok(disc_linear(&lfsr_de_bruijn(&taps)?)?.discrepancy)
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(SweepStats {
        n,
        count: discs.len() as u64,
        min_disc: discs.iter().copied().min().unwrap_or(0),
        max_disc: discs.iter().copied().max().unwrap_or(0),
        sum_disc: discs.iter().sum(),
    })
}
