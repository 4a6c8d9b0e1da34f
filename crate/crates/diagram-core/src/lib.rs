//! Diagram generators for Jacobi and Weil diagram spaces.
//!
//! A [`Diagram`] is one generator: ordered graded legs, an oriented
//! trivalent graph, an optional ι-vertex, line tags, a disc word and a loop
//! count. A [`FormalSum`] is an exact-rational combination of canonical
//! generators in one [`Signature`].

pub mod canon;
pub mod diagram;
pub mod error;
pub mod leg;
pub mod signature;
pub mod sum;
pub mod text;

pub use canon::canonicalize;
pub use diagram::{Diagram, End, Fragment, Port};
pub use error::{DiagramError, Result};
pub use leg::{Disc, Flavor, Leg, Line};
pub use signature::{LegClass, Signature, Space};
pub use sum::{disjoint_union, format_coeff, juxtapose, q, qi, Coeff, FormalSum};
pub use text::{parse, serialize, serialize_diagram};
