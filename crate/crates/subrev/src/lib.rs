//! Subword reversing for finitely presented monoids and groups.
//!
//! The crate is organized around a small core, [`Presentation`] and the
//! reversing engine in [`reversing`], with the higher layers built on top:
//!
//! - [`completeness`]: cube condition, completeness verdicts, closure under
//!   complement, and the completion procedure;
//! - [`decide`]: cancellativity, lcm/gcd, monoid and group word problems,
//!   fraction reduction, mixed reversing, and the brute-force rewriting
//!   oracle used to cross-check everything else;
//! - [`garside`]: Garside element discovery, divisor lattices, and greedy
//!   normal forms;
//! - [`braid`]: braid presentations, edge names, and van Kampen optimality
//!   certificates;
//! - [`export`]: DOT and JSON renderings of diagrams and reports.

mod error;
mod oracle;

pub mod braid;
pub mod completeness;
pub mod decide;
pub mod export;
pub mod garside;
pub mod grid;
pub mod presentation;
pub mod reversing;
pub mod weights;
pub mod word;

pub use error::{Error, Result};
pub use presentation::{parse_presentation, OrientedRule, Presentation, Relation};
pub use reversing::{
    complement, numerator_denominator_right, reverse_all_right, reverse_left, reverse_left_traced,
    reverse_right, reverse_right_traced, reverse_step_right, LimitKind, Limits, ReversalOutcome,
    ReversalSet, ReversalStatus, Strategy, TileChoice,
};
pub use weights::{homogeneity_witness, WeightVector};
pub use word::{Letter, SignedLetter, SignedWord, Word};
