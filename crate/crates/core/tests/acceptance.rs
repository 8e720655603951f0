//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use debruijn::constructions::{
    binomial, ccr2, ccr3, max_weight_db, min_weight_db, weight_range_bound, weight_range_db,
};
use debruijn::experiments::{
    all_de_bruijn, conjecture_report, random_baseline, table1, table2, PREF_OPPOSITE_FORMULA,
    PREF_OPPOSITE_SUFFIX, WEIGHT_RANGE_EQUALITY,
};
use debruijn::greedy::{prefer_opposite, prefer_same};
use debruijn::lfsr::{lfsr_de_bruijn, lfsr_m_sequence};
use debruijn::{
    disc_general, disc_linear, disc_oracle, golomb_stats, is_de_bruijn, BitSeq, Construction,
    FeedbackTaps, Poly2,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn seq(s: &str) -> BitSeq {
    s.parse().expect("valid bit string literal")
}

fn exact_strings() -> Check {
    let poly: Poly2 = "1+x^2+x^5".parse().map_err(err)?;
    let m = lfsr_m_sequence(&FeedbackTaps::from_poly(poly).map_err(err)?, 1).map_err(err)?;
    let cases: [(&str, BitSeq, &str); 7] = [
        (
            "ccr2(5)",
            ccr2(5).map_err(err)?,
            "0000011111·0010011011·0001011101·01",
        ),
        (
            "ccr3(5)",
            ccr3(5).map_err(err)?,
            "1001101100·10·1011101000·1111100000",
        ),
        (
            "min_weight_db(6,3)",
            min_weight_db(6, 3).map_err(err)?,
            "000111·001011·001101·001111·01·010111·011·011111·1",
        ),
        (
            "min_weight_db(6,4)",
            min_weight_db(6, 4).map_err(err)?,
            "001111·010111·011·011111·1",
        ),
        (
            "max_weight_db(6,4)",
            max_weight_db(6, 4).map_err(err)?,
            "110000·101000·100·100000·0",
        ),
        (
            "weight_range_db(6)",
            weight_range_db(6).map_err(err)?,
            "1100001010001001000000·11000111001011001101001111010101·1101101111",
        ),
        ("m-sequence 1+x^2+x^5", m, "0000101011101100011111001101001"),
    ];
    for (name, got, want) in &cases {
        ensure(*got == seq(want), || {
            format!("{name}: got {got}, want {want}")
        })?;
    }
    Ok(format!("{} strings identical", cases.len()))
}

fn table1_values() -> Check {
    let expected: [(Construction, [u64; 7]); 6] = [
        (Construction::Ccr2, [13, 14, 16, 17, 19, 21, 22]),
        (Construction::Ccr3, [13, 15, 16, 18, 20, 21, 23]),
        (Construction::PrefSame, [24, 29, 35, 43, 48, 59, 68]),
        (Construction::PrefOpposite, [27, 34, 43, 52, 63, 74, 87]),
        (
            Construction::PreferOne,
            [120, 222, 416, 784, 1488, 2824, 5376],
        ),
        (
            Construction::WeightRange,
            [131, 257, 468, 930, 1723, 3439, 6443],
        ),
    ];
    let cs: Vec<Construction> = expected.iter().map(|(c, _)| *c).collect();
    let rows = table1(10..=16, &cs).map_err(err)?;
    for (c, want) in &expected {
        let got: Vec<u64> = rows
            .iter()
            .filter(|r| r.construction == *c)
            .map(|r| r.discrepancy)
            .collect();
        ensure(got == want, || format!("{c}: got {got:?}, want {want:?}"))?;
    }
    Ok("6 columns x 7 orders exact".into())
}

fn split_tables() -> Check {
    let mut same = (Vec::new(), Vec::new());
    let mut opp = (Vec::new(), Vec::new());
    for n in 10..=16 {
        let s = disc_linear(&prefer_same(n).map_err(err)?).map_err(err)?;
        same.0.push(s.d1);
        same.1.push(s.d0);
        let o = disc_linear(&prefer_opposite(n).map_err(err)?).map_err(err)?;
        opp.0.push(o.d1);
        opp.1.push(o.d0);
    }
    let want_same = (vec![21, 26, 31, 36, 43, 50, 57], vec![3, 3, 4, 7, 5, 9, 11]);
    let want_opp = (
        vec![10, 13, 17, 21, 26, 31, 37],
        vec![17, 21, 26, 31, 37, 43, 50],
    );
    ensure(same == want_same, || {
        format!("pref-same (d1, d0) = {same:?}")
    })?;
    ensure(opp == want_opp, || {
        format!("pref-opposite (d1, d0) = {opp:?}")
    })?;
    Ok("pref-same and pref-opposite splits exact".into())
}

fn table2_values() -> Check {
    let rows = table2(10..=12).map_err(err)?;
    let counts: Vec<u64> = rows.iter().map(|s| s.count).collect();
    let mins: Vec<u64> = rows.iter().map(|s| s.min_disc).collect();
    let maxs: Vec<u64> = rows.iter().map(|s| s.max_disc).collect();
    ensure(counts == [60, 176, 144], || format!("counts {counts:?}"))?;
    ensure(mins == [36, 51, 72], || format!("min {mins:?}"))?;
    ensure(maxs == [46, 68, 106], || format!("max {maxs:?}"))?;
    let means: Vec<f64> = rows.iter().map(|s| s.mean()).collect();
    for (m, want) in means.iter().zip([41.0, 58.0, 84.0]) {
        ensure((m - want).abs() <= 1.0, || format!("mean {m:.2} vs {want}"))?;
    }
    Ok(format!(
        "counts, min, max exact; means {:.2}, {:.2}, {:.2}",
        means[0], means[1], means[2]
    ))
}

fn table3_values() -> Check {
    let cases: [(usize, &[usize], u64); 3] = [
        (10, &[1, 2, 6, 9], 46),
        (11, &[1, 6, 7, 10], 68),
        (12, &[1, 4, 7, 8, 9, 12], 99),
    ];
    for (n, taps, want) in cases {
        let t = FeedbackTaps::new(n, taps.to_vec()).map_err(err)?;
        let db = lfsr_de_bruijn(&t).map_err(err)?;
        ensure(is_de_bruijn(&db, n), || format!("{t} is not de Bruijn"))?;
        let got = disc_linear(&db).map_err(err)?.discrepancy;
        ensure(got == want, || format!("{t}: got {got}, want {want}"))?;
    }
    Ok("46, 68, 99 exact".into())
}

fn bounds() -> Check {
    for n in 2..=16 {
        for (name, s) in [("ccr2", ccr2(n)), ("ccr3", ccr3(n))] {
            let d = disc_linear(&s.map_err(err)?).map_err(err)?.discrepancy;
            ensure(d <= 2 * n as u64, || format!("{name}({n}) disc {d} > 2n"))?;
        }
    }
    for n in 4..=16 {
        let d = disc_linear(&weight_range_db(n).map_err(err)?)
            .map_err(err)?
            .discrepancy;
        let b = weight_range_bound(n).map_err(err)?;
        ensure(d >= b, || format!("weight_range_db({n}) disc {d} < {b}"))?;
    }
    let mut checked = 0;
    for n in 1..=14 {
        for d in 0..=n {
            let s = max_weight_db(n, d).map_err(err)?;
            let diff = s.count_zeros() as i64 - s.count_ones() as i64;
            let want = binomial(n as u64 - 1, (n - d) as u64).map_err(err)? as i64;
            ensure(diff == want, || {
                format!("max_weight_db({n},{d}) zeros-ones {diff}, want {want}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "ccr bounds, weight-range lower bound, {checked} imbalance cases"
    ))
}

fn oracle_equivalence() -> Check {
    let mut exhaustive = 0u64;
    for len in 1..=12usize {
        for v in 0u64..1 << len {
            let s: BitSeq = (0..len).map(|i| v >> i & 1 == 1).collect();
            let (g, o) = (disc_general(&s), disc_oracle(&s));
            ensure(g == o, || format!("{s}: general {g} != oracle {o}"))?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let half = rng.random_range(1..=512usize);
        let mut bits: Vec<bool> = (0..2 * half).map(|i| i < half).collect();
        bits.shuffle(&mut rng);
        let s: BitSeq = bits.into_iter().collect();
        let o = disc_oracle(&s);
        let l = disc_linear(&s).map_err(err)?.discrepancy;
        ensure(l == o, || format!("case {case}: linear {l} != oracle {o}"))?;
        for _ in 0..50 {
            let k = rng.random_range(0..s.len());
            let r = disc_general(&s.rotate(k));
            ensure(r == o, || format!("case {case} rotation {k}: {r} != {o}"))?;
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive, 200 random x 50 rotations"
    ))
}

fn universality() -> Check {
    let mut checked = 0;
    for c in Construction::ALL {
        for n in c.min_order().max(3)..=14 {
            let s = c.build(n).map_err(err)?;
            ensure(is_de_bruijn(&s, n), || format!("{c}({n}) not de Bruijn"))?;
            ensure(golomb_stats(&s).holds_for_order(n), || {
                format!("{c}({n}) fails run statistics")
            })?;
            checked += 1;
        }
    }
    for n in 3..=14 {
        let t = FeedbackTaps::from_poly(debruijn::lfsr::enumerate_primitive(n).map_err(err)?[0])
            .map_err(err)?;
        let s = lfsr_de_bruijn(&t).map_err(err)?;
        ensure(is_de_bruijn(&s, n), || format!("lfsr {t} not de Bruijn"))?;
        ensure(golomb_stats(&s).holds_for_order(n), || {
            format!("lfsr {t} run statistics")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} sequences"))
}

fn conjectures() -> Check {
    let rows = conjecture_report(2..=16).map_err(err)?;
    let check = |name: &str, lo: usize| -> Result<usize, String> {
        let sel: Vec<_> = rows
            .iter()
            .filter(|r| r.name == name && r.n >= lo)
            .collect();
        for r in &sel {
            ensure(r.matches(), || {
                format!(
                    "{name} n={}: predicted {} measured {}",
                    r.n, r.predicted, r.measured
                )
            })?;
        }
        Ok(sel.len())
    };
    let a = check(PREF_OPPOSITE_FORMULA, 10)?;
    let b = check(WEIGHT_RANGE_EQUALITY, 6)?;
    let c = check(PREF_OPPOSITE_SUFFIX, 2)?;
    ensure((a, b, c) == (7, 11, 15), || {
        format!("row counts {a}, {b}, {c}")
    })?;
    for n in [3usize, 4] {
        let wr = disc_linear(&weight_range_db(n).map_err(err)?)
            .map_err(err)?
            .discrepancy;
        let all = all_de_bruijn(n).map_err(err)?;
        let max = all.iter().map(disc_general).max().unwrap_or(0);
        ensure(wr == max, || {
            format!("n={n}: weight-range {wr}, maximum {max}")
        })?;
    }
    Ok("formula 10..16, equality 6..16, suffix 2..16, maximum at n=3,4".into())
}

fn random_baseline_check() -> Check {
    let mut means = Vec::new();
    for (n, want) in [(10, 50.0), (11, 71.0), (12, 101.0), (13, 143.0)] {
        let m = random_baseline(n, 1000, 2024 + n as u64).map_err(err)?;
        ensure((m - want).abs() <= 0.15 * want, || {
            format!("n={n}: mean {m:.1} outside 15% of {want}")
        })?;
        means.push(format!("{m:.1}"));
    }
    Ok(format!("means {}", means.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exact strings", exact_strings),
        ("discrepancy table, n=10..16", table1_values),
        ("d1/d0 split tables, n=10..16", split_tables),
        ("LFSR sweep, n=10..12", table2_values),
        ("LFSR spot checks", table3_values),
        ("bound assertions", bounds),
        ("oracle equivalence", oracle_equivalence),
        ("universality", universality),
        ("conjecture reports", conjectures),
        ("random baseline", random_baseline_check),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
