//! Verification reports shared by every checker in the crate.

use alloc::vec::Vec;
use core::fmt;

/// The law a [`Violation`] falsifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    /// A left-multiplication row `y ↦ x·y` is not a bijection.
    RowBijectivity,
    /// `(x·y)·(x·z) = (y:x)·(y·z)`
    Axiom1,
    /// `(x:y):(x:z) = (y·x):(y:z)`
    Axiom2,
    /// `(x·y):(x·z) = (y:x)·(y:z)`
    Axiom3,
    /// `r₁r₂r₁ = r₂r₁r₂`
    Braid,
    /// First dynamical-pair equation (fiber part of axiom 1).
    Ugd1,
    /// Second dynamical-pair equation (fiber part of axiom 2).
    Ugd2,
    /// Third dynamical-pair equation (fiber part of axiom 3).
    Ugd3,
    /// A point map fails to preserve `·` or `:`.
    Homomorphism,
    /// A point of the target has an empty fiber.
    Surjectivity,
    /// Two fibers have different cardinalities.
    UniformFibers,
    /// A quotient operation depends on the chosen representatives.
    WellDefined,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::RowBijectivity => "row-bijectivity",
            Law::Axiom1 => "axiom-1",
            Law::Axiom2 => "axiom-2",
            Law::Axiom3 => "axiom-3",
            Law::Braid => "braid",
            Law::Ugd1 => "ugd-1",
            Law::Ugd2 => "ugd-2",
            Law::Ugd3 => "ugd-3",
            Law::Homomorphism => "homomorphism",
            Law::Surjectivity => "surjectivity",
            Law::UniformFibers => "uniform-fibers",
            Law::WellDefined => "well-defined",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed instance of a law.
///
/// `witness` is the 0-indexed tuple the law was instantiated at (a row index,
/// an `(x, y, z)` triple, a 6-tuple for dynamical pairs, ...). `lhs` and `rhs`
/// hold the two evaluated sides; for row bijectivity `lhs` is the offending row
/// and `rhs` is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl Violation {
    pub fn new(law: Law, witness: &[usize], lhs: &[usize], rhs: &[usize]) -> Self {
        Violation {
            law,
            witness: witness.to_vec(),
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        }
    }
}

struct Tuple<'a>(&'a [usize]);

impl fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.law, Tuple(&self.witness))?;
        if self.rhs.is_empty() {
            write!(f, ": {}", Tuple(&self.lhs))
        } else {
            write!(f, ": lhs {} != rhs {}", Tuple(&self.lhs), Tuple(&self.rhs))
        }
    }
}

/// Outcome of a checker: `ok` iff `violations` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Violations of a single law.
    pub fn of_law(&self, law: Law) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.law == law)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violations.first() {
            None => f.write_str("ok"),
            Some(first) => write!(
                f,
                "{} violation(s), first: {first}",
                self.violations.len()
            ),
        }
    }
}
