//! Formal exact-rational linear combinations of canonical generators.

use crate::canon::canonicalize;
use crate::diagram::Diagram;
use crate::error::{DiagramError, Result};
use crate::signature::{Signature, Space};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// The rational `a/b`.
pub fn q(a: i64, b: i64) -> Coeff {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// The integer `a` as a coefficient.
pub fn qi(a: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(a))
}

/// A finite linear combination of canonical diagrams in one signature.
#[derive(Clone, Debug)]
pub struct FormalSum {
    sig: Signature,
    terms: HashMap<Diagram, Coeff>,
}

impl PartialEq for FormalSum {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.terms == other.terms
    }
}

impl Eq for FormalSum {}

impl FormalSum {
    /// The zero sum.
    pub fn zero(sig: Signature) -> Self {
        FormalSum {
            sig,
            terms: HashMap::new(),
        }
    }

    /// A single generator with coefficient one, canonicalized.
    pub fn from_diagram(d: &Diagram, sig: Signature) -> Self {
        let mut s = Self::zero(sig);
        s.add_raw(d, &Coeff::one());
        s
    }

    /// A single generator after validating it.
    pub fn checked(d: &Diagram, sig: Signature) -> Result<Self> {
        d.validate(sig)?;
        Ok(Self::from_diagram(d, sig))
    }

    /// The empty diagram.
    pub fn unit(sig: Signature) -> Self {
        Self::from_diagram(&Diagram::empty(), sig)
    }

    /// Signature of the sum.
    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the sum is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a canonical diagram.
    pub fn coeff(&self, d: &Diagram) -> Coeff {
        self.terms.get(d).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in canonical diagram order.
    pub fn sorted(&self) -> Vec<(&Diagram, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Adds `c` times an already canonical diagram.
    pub fn add_canonical(&mut self, d: Diagram, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }

    /// Adds `c` times an arbitrary diagram, canonicalizing it.
    pub fn add_raw(&mut self, d: &Diagram, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        if let Some((cd, s)) = canonicalize(d, self.sig) {
            if s < 0 {
                self.add_canonical(cd, &-c);
            } else {
                self.add_canonical(cd, c);
            }
        }
    }

    /// Adds `c` times a signed raw diagram.
    pub fn add_signed(&mut self, d: &Diagram, sign: i32, c: &Coeff) {
        if sign < 0 {
            self.add_raw(d, &-c);
        } else {
            self.add_raw(d, c);
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, other: &FormalSum, c: &Coeff) {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        for (d, k) in &other.terms {
            self.add_canonical(d.clone(), &(k * c));
        }
    }

    /// Adds `other` in place.
    pub fn add_assign(&mut self, other: &FormalSum) {
        self.add_scaled(other, &Coeff::one());
    }

    /// Subtracts `other` in place.
    pub fn sub_assign(&mut self, other: &FormalSum) {
        self.add_scaled(other, &-Coeff::one());
    }

    /// `self + other`.
    pub fn plus(&self, other: &FormalSum) -> FormalSum {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    /// `self − other`.
    pub fn minus(&self, other: &FormalSum) -> FormalSum {
        let mut s = self.clone();
        s.sub_assign(other);
        s
    }

    /// `c·self`.
    pub fn scaled(&self, c: &Coeff) -> FormalSum {
        let mut s = FormalSum::zero(self.sig);
        s.add_scaled(self, c);
        s
    }

    /// Reinterprets every generator in another signature, re-canonicalizing.
    pub fn reinterpret(&self, sig: Signature) -> FormalSum {
        let mut s = FormalSum::zero(sig);
        for (d, c) in &self.terms {
            s.add_raw(d, c);
        }
        s
    }

    /// Linear extension of a generator map producing raw signed diagrams.
    pub fn map_terms(&self, sig: Signature, mut f: impl FnMut(&Diagram, &Coeff, &mut FormalSum)) -> FormalSum {
        let mut out = FormalSum::zero(sig);
        for (d, c) in self.sorted() {
            f(d, c, &mut out);
        }
        out
    }

    /// Terms whose diagram satisfies a predicate.
    pub fn filter(&self, pred: impl Fn(&Diagram) -> bool) -> FormalSum {
        let mut out = FormalSum::zero(self.sig);
        for (d, c) in &self.terms {
            if pred(d) {
                out.add_canonical(d.clone(), c);
            }
        }
        out
    }

    /// Largest weight of a term.
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|d| d.weight()).max().unwrap_or(0)
    }

    /// Checks signature agreement.
    pub fn same_signature(&self, other: &FormalSum) -> Result<()> {
        if self.sig != other.sig {
            return Err(DiagramError::SignatureMismatch(self.sig.name(), other.sig.name()));
        }
        Ok(())
    }
}

/// Juxtaposition product: `b`'s legs appended after `a`'s.
pub fn juxtapose(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    a.same_signature(b)?;
    let sig = a.signature();
    if !sig.has_juxtaposition() {
        return Err(DiagramError::Unsupported {
            op: "juxtapose",
            sig: sig.name(),
        });
    }
    let mut out = FormalSum::zero(sig);
    for (x, cx) in a.sorted() {
        for (y, cy) in b.sorted() {
            let (d, s) = x.juxtapose_raw(y)?;
            out.add_signed(&d, s, &(cx * cy));
        }
    }
    Ok(out)
}

/// Disjoint-union product on symmetric diagrams.
pub fn disjoint_union(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    a.same_signature(b)?;
    let sig = a.signature();
    if sig.space != Space::B {
        return Err(DiagramError::Unsupported {
            op: "disjoint_union",
            sig: sig.name(),
        });
    }
    let mut out = FormalSum::zero(sig);
    for (x, cx) in a.sorted() {
        for (y, cy) in b.sorted() {
            let (d, s) = x.juxtapose_raw(y)?;
            out.add_signed(&d, s, &(cx * cy));
        }
    }
    Ok(out)
}

/// Formats a coefficient as `a` or `a/b`.
pub fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::serialize(self))
    }
}
