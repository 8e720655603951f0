use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use debruijn::discrepancy::{disc_general, disc_linear, prefix_profile, profile_csv};
use debruijn::experiments::{
    conjecture_csv, conjecture_report, table1, table1_csv, table2, table2_csv,
};
use debruijn::lfsr::{
    enumerate_primitive, lfsr_m_sequence, m_to_debruijn, sweep, FeedbackTaps, Poly2,
};
use debruijn::{golomb_stats, is_de_bruijn, BitSeq, Construction};

/// Generate and analyse binary de Bruijn sequences.
#[derive(Parser, Debug)]
#[command(name = "debruijn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a construction's output as a bit string.
    Generate {
        #[arg(long)]
        construction: Construction,
        #[arg(long)]
        n: usize,
    },
    /// Print `disc=<v> d1=<a> d0=<b>` for a construction or a file.
    Disc {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        construction: Option<Construction>,
        /// Bit-string file, `-` for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Write the running `#1s - #0s` profile as CSV.
    Profile {
        #[arg(long)]
        construction: Construction,
        #[arg(long)]
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate a results table as CSV.
    Table {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        /// Comma-separated construction ids (only for `--which 1`).
        #[arg(long, value_delimiter = ',')]
        constructions: Option<Vec<Construction>>,
    },
    /// Check that a file holds a de Bruijn sequence of order N.
    Validate {
        #[arg(long)]
        n: usize,
        /// Bit-string file, `-` for stdin.
        #[arg(long)]
        input: PathBuf,
    },
    /// LFSR m-sequences, their de Bruijn sequences, or the primitive sweep.
    Lfsr {
        #[arg(long)]
        n: usize,
        /// Feedback polynomial, e.g. `1+x^2+x^5` or `0x25`.
        #[arg(long, conflicts_with = "taps")]
        poly: Option<Poly2>,
        /// Feedback taps, e.g. `a1^a4`.
        #[arg(long)]
        taps: Option<String>,
        /// Emit the de Bruijn sequence instead of the m-sequence.
        #[arg(long)]
        debruijn: bool,
        /// Emit sweep statistics over all primitive polynomials.
        #[arg(long, conflicts_with_all = ["poly", "taps", "debruijn"])]
        sweep: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Conjectures,
}

fn max_order() -> anyhow::Result<Option<usize>> {
    match std::env::var("DEBRUIJN_MAX_N") {
        Ok(v) => Ok(Some(v.trim().parse().with_context(|| {
            format!("DEBRUIJN_MAX_N={v:?} is not an integer")
        })?)),
        Err(_) => Ok(None),
    }
}

fn check_cap(n: usize) -> anyhow::Result<()> {
    if let Some(cap) = max_order()? {
        if n > cap {
            bail!("order {n} exceeds DEBRUIJN_MAX_N={cap}");
        }
    }
    Ok(())
}

fn read_seq(path: &Path) -> anyhow::Result<BitSeq> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(text.parse()?)
}

fn build(c: Construction, n: usize) -> anyhow::Result<BitSeq> {
    check_cap(n)?;
    Ok(c.build(n)?)
}

/// Returns whether every requested check passed.
fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<bool> {
    match cli.command {
        Command::Generate { construction, n } => {
            writeln!(out, "{}", build(construction, n)?)?;
        }
        Command::Disc {
            n,
            construction,
            input,
        } => {
            let seq = match (construction, input) {
                (Some(c), _) => {
                    let n = n.context("--n is required with --construction")?;
                    build(c, n)?
                }
                (None, Some(path)) => read_seq(&path)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            let (disc, d1, d0) = match disc_linear(&seq) {
                Ok(r) => (r.discrepancy, r.d1, r.d0),
                Err(_) => {
                    let p = prefix_profile(&seq);
                    let hi = p.iter().copied().max().unwrap_or(0);
                    let lo = p.iter().copied().min().unwrap_or(0);
                    (disc_general(&seq), hi as u64, (-lo) as u64)
                }
            };
            writeln!(out, "disc={disc} d1={d1} d0={d0}")?;
        }
        Command::Profile {
            construction,
            n,
            out: path,
        } => {
            let csv = profile_csv(&build(construction, n)?);
            match path {
                Some(p) => {
                    fs::write(&p, csv).with_context(|| format!("writing {}", p.display()))?
                }
                None => out.write_all(csv.as_bytes())?,
            }
        }
        Command::Table {
            which,
            n_min,
            n_max,
            constructions,
        } => {
            check_cap(n_max)?;
            if n_min > n_max {
                bail!("--n-min {n_min} exceeds --n-max {n_max}");
            }
            let csv = match which {
                Which::One => {
                    let cs = constructions.unwrap_or_else(|| Construction::ALL.to_vec());
                    table1_csv(&table1(n_min..=n_max, &cs)?)
                }
                Which::Two => table2_csv(&table2(n_min..=n_max)?),
                Which::Conjectures => conjecture_csv(&conjecture_report(n_min..=n_max)?),
            };
            out.write_all(csv.as_bytes())?;
        }
        Command::Validate { n, input } => {
            let seq = read_seq(&input)?;
            let db = is_de_bruijn(&seq, n);
            let g = golomb_stats(&seq);
            let golomb = g.holds_for_order(n);
            writeln!(out, "length={} expected={}", seq.len(), 1u64 << n.min(63))?;
            writeln!(out, "de_bruijn={db}")?;
            writeln!(
                out,
                "ones={} zeros={} one_runs={} zero_runs={}",
                g.ones, g.zeros, g.one_runs, g.zero_runs
            )?;
            writeln!(out, "golomb={golomb}")?;
            return Ok(db && golomb);
        }
        Command::Lfsr {
            n,
            poly,
            taps,
            debruijn,
            sweep: do_sweep,
        } => {
            check_cap(n)?;
            if do_sweep {
                out.write_all(table2_csv(&[sweep(n)?]).as_bytes())?;
                return Ok(true);
            }
            let taps = match (poly, taps) {
                (Some(p), _) => {
                    let t = FeedbackTaps::from_poly(p)?;
                    if t.n() != n {
                        bail!("polynomial {p} has degree {}, not {n}", t.n());
                    }
                    t
                }
                (None, Some(s)) => FeedbackTaps::parse(&s, n)?,
                (None, None) => {
                    let p = *enumerate_primitive(n)?
                        .first()
                        .context("no primitive polynomial found")?;
                    FeedbackTaps::from_poly(p)?
                }
            };
            let m = lfsr_m_sequence(&taps, 1)?;
            if debruijn {
                writeln!(out, "{}", m_to_debruijn(&m, n)?)?;
            } else {
                writeln!(out, "{m}")?;
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::FAILURE,
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
