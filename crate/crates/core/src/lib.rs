//! Binary de Bruijn sequences and their discrepancy.
//!
//! Constructions ([`greedy`], [`constructions`], [`lfsr`]) all produce a
//! [`BitSeq`]; [`discrepancy`] measures them, and [`experiments`] assembles
//! the discrepancy tables and conjecture checks from those pieces.

pub mod bitseq;
pub mod constructions;
pub mod discrepancy;
pub mod error;
pub mod experiments;
pub mod greedy;
pub mod lfsr;
pub mod necklaces;

pub use bitseq::{golomb_stats, is_de_bruijn, BitSeq, BitSeqBuilder, GolombStats};
pub use discrepancy::{disc_general, disc_linear, disc_oracle, DiscrepancyReport};
pub use error::{Error, Result};
pub use experiments::{Construction, TableRow};
pub use lfsr::{FeedbackTaps, Poly2, SweepStats};
pub use necklaces::{NecklaceRep, Word};
