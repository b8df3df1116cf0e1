use crate::group::GenLabel;
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("value {value} out of range for degree {degree}")]
    OutOfRange { value: usize, degree: usize },
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("image sequence is not a bijection")]
    NotAPermutation,
    #[error("not a q-cycle set: {0}")]
    InvalidQCycleSet(VerificationReport),
    #[error("not a solution: {0}")]
    InvalidSolution(VerificationReport),
    #[error("lambda_{x} is not a bijection")]
    NotLeftNonDegenerate { x: usize },
    #[error("delta_{x} is not a bijection")]
    NotRegular { x: usize },
    #[error("solution is not bijective and non-degenerate")]
    NotNonDegenerate,
    #[error("subset not invariant: {generator} maps {point} to {image}")]
    NotInvariant {
        generator: GenLabel,
        point: usize,
        image: usize,
    },
    #[error("invalid subset: {0}")]
    InvalidSubset(&'static str),
    #[error("quotient is not a q-cycle set: {0}")]
    QuotientNotQCycleSet(VerificationReport),
    #[error("class map is ill-defined: r({x}, {y}) and r({x2}, {y2}) land in different classes")]
    IllDefined {
        x: usize,
        y: usize,
        x2: usize,
        y2: usize,
    },
    #[error("group closure exceeded the budget of {budget} elements")]
    BudgetExceeded { budget: usize },
    #[error("alpha_({x},{y})({s}, -) is not a permutation")]
    AlphaNotPermutation { x: usize, y: usize, s: usize },
    #[error("invalid dynamical pair: {0}")]
    InvalidPair(VerificationReport),
    #[error("invalid covering map: {0}")]
    InvalidCovering(VerificationReport),
    #[error("base is not a cycle set")]
    NotCycleSet,
    #[error("not a group: {0}")]
    NotAGroup(&'static str),
    #[error("not an endomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotEndomorphism { a: usize, b: usize },
    #[error("not associative at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("not left quasi-normal: xyz != xzyz at ({x}, {y}, {z})")]
    NotLeftQuasiNormal { x: usize, y: usize, z: usize },
    #[error("theta_{x} is not an automorphism")]
    NotAutomorphism { x: usize },
    #[error("theta compatibility fails at ({x}, {y})")]
    CompatibilityFailed { x: usize, y: usize },
    #[error("invalid abelian group element")]
    InvalidGroupElement,
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("more than {budget} congruences")]
    CongruenceBudgetExceeded { budget: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
