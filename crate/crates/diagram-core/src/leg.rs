//! Leg kinds and disc letters.

use std::fmt;

/// Flavor of a leg: plain grade 1, fat grade 2, or curvature grade 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Fat grade-2 leg (also the plain leg of symmetric and ordered Jacobi diagrams).
    Fat,
    /// Curvature grade-2 leg.
    F,
    /// Plain grade-1 leg.
    G1,
}

impl Flavor {
    /// Grade of the flavor.
    pub fn grade(self) -> u32 {
        match self {
            Flavor::G1 => 1,
            Flavor::Fat | Flavor::F => 2,
        }
    }

    /// Text token.
    pub fn token(self) -> &'static str {
        match self {
            Flavor::G1 => "g1",
            Flavor::Fat => "g2",
            Flavor::F => "F",
        }
    }
}

/// Line tag of a leg in two-line diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Line {
    /// No line tag.
    None,
    /// Non-commutative line.
    Nc,
    /// Commutative line.
    C,
}

/// A leg: flavor plus line tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Leg {
    /// Flavor of the leg.
    pub flavor: Flavor,
    /// Line tag, `Line::None` outside two-line spaces.
    pub line: Line,
}

impl Leg {
    /// Untagged leg of the given flavor.
    pub const fn new(flavor: Flavor) -> Self {
        Leg { flavor, line: Line::None }
    }

    /// Leg with a line tag.
    pub const fn on(flavor: Flavor, line: Line) -> Self {
        Leg { flavor, line }
    }

    /// Untagged grade-1 leg.
    pub const G1: Leg = Leg::new(Flavor::G1);
    /// Untagged fat leg.
    pub const FAT: Leg = Leg::new(Flavor::Fat);
    /// Untagged curvature leg.
    pub const F: Leg = Leg::new(Flavor::F);

    /// Grade of the leg.
    pub fn grade(self) -> u32 {
        self.flavor.grade()
    }

    /// Same flavor with a different line.
    pub fn with_line(self, line: Line) -> Leg {
        Leg { flavor: self.flavor, line }
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flavor.token())?;
        match self.line {
            Line::None => Ok(()),
            Line::Nc => f.write_str("@nc"),
            Line::C => f.write_str("@c"),
        }
    }
}

/// Letter on the disc line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Disc {
    /// Open disc, grade 0.
    Open,
    /// Filled disc, grade 1.
    Filled,
}
