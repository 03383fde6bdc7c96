//! Partition and divisor-function congruence machinery.
//!
//! The crate has five layers:
//!
//! - [`arith`]: factorization, linear sigma0/sigma1 sieves, and the
//!   sum-of-two-squares predicates.
//! - [`partitions`]: the two-part-size partition counter `nu2` by both a
//!   divisor-convolution formula and brute-force enumeration.
//! - [`rect`]: canonical rectangle pairs, the four-way gluing operation, and
//!   the multiset classification counts, by exhaustive enumeration and by
//!   closed formulas.
//! - [`congruence`]: single-N verifiers for the main divisor-sum congruence,
//!   the double-counting identity, and the two corollaries.
//! - [`scan`]: resumable range scans over residue families `N = An + B`.

pub mod arith;
pub mod congruence;
pub mod error;
pub mod partitions;
pub mod rect;
pub mod scan;

pub use arith::{Factorization, SieveConfig, SieveTable};
pub use congruence::{CongruenceReport, Statement, FAMILIES};
pub use error::{Error, Result};
pub use rect::{CanonicalPair, GluedPair, MultiplicityRecord, MultisetCounts, Rectangle};
pub use scan::{FamilyScanResult, PairOutcome, PairScanConfig, PairScanReport, PairScanSummary};
