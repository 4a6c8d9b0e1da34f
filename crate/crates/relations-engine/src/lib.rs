//! Slice enumeration, relation rows and quotient equality.
//!
//! A [`SliceKey`] bounds a finite piece of a diagram space by weight, leg
//! word, trivalent count, loops and discs. [`enumerate_slice`] lists its
//! canonical generators, [`relation_vectors`] emits IHX, STU-type and
//! Clifford rows, and [`quotient_equal`] decides equality by exact span
//! membership.

pub mod elim;
pub mod enumerate;
pub mod error;
pub mod quotient;
pub mod rows;

pub use elim::{integerize, Echelon, SparseVec};
pub use enumerate::{enumerate_slice, enumerate_slice_capped, LegWord, SliceBasis, SliceKey, DEFAULT_CAP};
pub use error::{RelError, Result};
pub use quotient::{
    ihx_only, quotient_equal, relation_vectors, slice_rank, to_vector, with_shared, Quotient, RelationMatrix,
    DEFAULT_CLOSURE_CAP,
};
pub use rows::{all_rows, bracket, build, ihx_rows, is_unit_row, leg_rows, upward_sources, Row};
