//! Exact arithmetic for sumsets of finite unions of closed rational
//! intervals on the real line.
//!
//! The crate computes Minkowski sums exactly, evaluates the classical
//! lower bounds on their measure, verifies the continuous structure
//! theorems (the 3k−4 interval theorem, its multi-crossing relaxation, and
//! the extremal decompositions), folds sets onto a torus to count covering
//! multiplicities, generates the extremal families, and cross-checks
//! everything against a discretized grid oracle. All quantities are
//! `num_rational::BigRational`; there is no floating point anywhere on a
//! computation path.
//!
//! Entry points by topic:
//! - sets and sums: [`sets::IntervalSet`], [`sets::IntervalSet::minkowski_sum`]
//! - parsing and printing: [`format::parse_set`], [`format::print_set`]
//! - lower bounds: [`bounds::lower_bounds`]
//! - structure theorems: [`structure::freiman_verify`],
//!   [`structure::relaxed_verify`], [`structure::extremal_large_decompose`],
//!   [`structure::small_extremal_recognize`]
//! - density profiles and zones: [`density::build_g_h`],
//!   [`density::zone_partition`], [`density::run_decomposition`]
//! - torus folding: [`torus::fold`], [`torus::max_multiplicity`]
//! - families: [`generators`]
//! - discretized cross-checks: [`oracle`]
//! - figures: [`plot::plot_svg`]

pub mod bounds;
pub mod cli;
pub mod density;
pub mod error;
pub mod format;
pub mod generators;
pub mod oracle;
pub mod plot;
pub mod rational;
pub mod sets;
pub mod structure;
pub mod torus;

pub use error::{Error, Result};
pub use rational::Rational;
pub use sets::{Interval, IntervalSet};
