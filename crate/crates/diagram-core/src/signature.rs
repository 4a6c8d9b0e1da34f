//! Space signatures: leg-permutation regimes and relation sets.

use crate::leg::{Flavor, Leg, Line};
use std::fmt;

/// The underlying diagram space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    /// Symmetric Jacobi diagrams.
    B,
    /// Ordered Jacobi diagrams.
    A,
    /// Ordered Jacobi diagrams with closed-loop components.
    ALoops,
    /// Weil diagrams with graded-commutative legs.
    W,
    /// Weil diagrams in the curvature basis.
    WF,
    /// Weil diagrams with ordered legs and no permutation relations.
    WTilde,
    /// Ordered Weil diagrams modulo STU, mixed and Clifford relations.
    WHat,
    /// Curvature-basis version of `WHat`.
    WHatF,
    /// Curvature legs ordered, grade-1 legs graded-commutative.
    WWedge,
    /// Two-line diagrams.
    T,
    /// Two-line diagrams with a disc line.
    TdR,
}

impl Space {
    /// All spaces in a fixed order.
    pub const ALL: [Space; 11] = [
        Space::B,
        Space::A,
        Space::ALoops,
        Space::W,
        Space::WF,
        Space::WTilde,
        Space::WHat,
        Space::WHatF,
        Space::WWedge,
        Space::T,
        Space::TdR,
    ];

    /// Text name.
    pub fn name(self) -> &'static str {
        match self {
            Space::B => "B",
            Space::A => "A",
            Space::ALoops => "A_loops",
            Space::W => "W",
            Space::WF => "W_F",
            Space::WTilde => "W_tilde",
            Space::WHat => "W_hat",
            Space::WHatF => "W_hat_F",
            Space::WWedge => "W_wedge",
            Space::T => "T",
            Space::TdR => "T_dR",
        }
    }
}

/// Placement class of a leg under a signature's permutation freedom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegClass {
    /// Output block; legs of lower blocks come first in canonical order.
    pub block: u8,
    /// Whether the leg keeps its relative order inside the block.
    pub fixed: bool,
}

/// A space together with the ι-variant flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    /// Underlying space.
    pub space: Space,
    /// Whether generators carry the ι-vertex.
    pub iota: bool,
}

impl Signature {
    /// Signature without ι-vertex.
    pub const fn plain(space: Space) -> Self {
        Signature { space, iota: false }
    }

    /// Signature with ι-vertex.
    pub const fn with_iota(space: Space) -> Self {
        Signature { space, iota: true }
    }

    /// Same space, ι flag set.
    pub fn to_iota(self) -> Self {
        Signature { space: self.space, iota: true }
    }

    /// Same space, ι flag cleared.
    pub fn to_plain(self) -> Self {
        Signature { space: self.space, iota: false }
    }

    /// Same ι flag, different space.
    pub fn to_space(self, space: Space) -> Self {
        Signature { space, iota: self.iota }
    }

    /// Text name, e.g. `W_tilde_iota`.
    pub fn name(self) -> String {
        if self.iota {
            format!("{}_iota", self.space.name())
        } else {
            self.space.name().to_string()
        }
    }

    /// Parses a text name.
    pub fn parse(text: &str) -> Option<Signature> {
        let (base, iota) = match text.strip_suffix("_iota") {
            Some(b) => (b, true),
            None => (text, false),
        };
        Space::ALL
            .iter()
            .find(|s| s.name() == base)
            .map(|&space| Signature { space, iota })
    }

    /// Whether legs of the flavor may occur.
    pub fn allows_flavor(self, flavor: Flavor) -> bool {
        match self.space {
            Space::B | Space::A | Space::ALoops => flavor == Flavor::Fat,
            Space::W | Space::WTilde | Space::WHat | Space::T | Space::TdR => {
                flavor != Flavor::F
            }
            Space::WF | Space::WHatF | Space::WWedge => flavor != Flavor::Fat,
        }
    }

    /// Whether legs carry line tags.
    pub fn uses_lines(self) -> bool {
        matches!(self.space, Space::T | Space::TdR)
    }

    /// Whether a disc word may occur.
    pub fn allows_discs(self) -> bool {
        self.space == Space::TdR
    }

    /// Whether closed-loop components may occur.
    pub fn allows_loops(self) -> bool {
        matches!(
            self.space,
            Space::ALoops | Space::WHat | Space::WHatF | Space::WWedge
        )
    }

    /// Whether juxtaposition is defined.
    pub fn has_juxtaposition(self) -> bool {
        self.space != Space::B
    }

    /// Whether the space carries STU-type relations between adjacent legs.
    pub fn has_stu(self) -> bool {
        matches!(
            self.space,
            Space::A | Space::ALoops | Space::WHat | Space::WHatF | Space::WWedge
        )
    }

    /// Whether the space carries the Clifford relation.
    pub fn has_clifford(self) -> bool {
        matches!(self.space, Space::WHat | Space::WHatF)
    }

    /// Checks that a leg is admissible.
    pub fn admits_leg(self, leg: Leg) -> bool {
        if !self.allows_flavor(leg.flavor) {
            return false;
        }
        if self.uses_lines() {
            leg.line != Line::None
        } else {
            leg.line == Line::None
        }
    }

    /// Placement class of a leg.
    pub fn leg_class(self, leg: Leg) -> LegClass {
        let g1 = leg.flavor == Flavor::G1;
        match self.space {
            Space::B | Space::W | Space::WF => LegClass { block: g1 as u8, fixed: false },
            Space::A | Space::ALoops | Space::WTilde | Space::WHat => {
                LegClass { block: 0, fixed: true }
            }
            Space::WHatF => LegClass { block: g1 as u8, fixed: true },
            Space::WWedge => LegClass { block: g1 as u8, fixed: !g1 },
            Space::T | Space::TdR => {
                if leg.line == Line::C {
                    LegClass { block: 1, fixed: false }
                } else {
                    LegClass { block: 0, fixed: true }
                }
            }
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
