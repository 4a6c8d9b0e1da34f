//! Formal linear differential operators on diagram spaces.
//!
//! An [`Operator`] is a family of substitution rules, one per leg kind, plus
//! a grade `j`. Applying it to a generator sums, over leg positions `p`, the
//! diagram with leg `p` replaced by the rule's template, signed by
//! `(−1)^{j·G(p)}` where `G(p)` is the total grade to the left of `p`
//! (filled discs included).

pub mod builtin;
pub mod error;
pub mod operator;

pub use builtin::{apply_named, builtin, contracting_homotopy_s, fork, NAMES};
pub use error::{OpError, Result};
pub use operator::{apply, apply_to_fragment, commutator, commutator_direct, Operator, SubstitutionRule};
