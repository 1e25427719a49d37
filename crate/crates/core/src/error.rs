use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Composition of a non-composable pair, or a morphism built with
    /// mismatched endpoints.
    IllTyped(String),
    /// A hom set that cannot be listed.
    NotEnumerable(String),
    /// A structure component with the wrong source or target.
    Shape(String),
    MissingWitness(String),
    InvalidAction { condition: &'static str, witness: String },
    ComonadLawViolation(String),
    NotStrong(String),
    MissingHomData(String),
    NoDual(String),
    NotInitial(String),
    NotMonotone(String),
    NotLowerBound(String),
    UnknownAction(String),
    ParamOutOfBounds(String),
    /// Data that violates an instance invariant (triangle inequality,
    /// lattice axioms, malformed table).
    InvalidInstance(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IllTyped(s) => write!(f, "ill-typed composite: {s}"),
            Error::NotEnumerable(s) => write!(f, "hom set is not enumerable: {s}"),
            Error::Shape(s) => write!(f, "component has wrong shape: {s}"),
            Error::MissingWitness(s) => write!(f, "missing inverse witness: {s}"),
            Error::InvalidAction { condition, witness } => {
                write!(f, "invalid monoid action, `{condition}` fails at {witness}")
            }
            Error::ComonadLawViolation(s) => write!(f, "comonad law violated: {s}"),
            Error::NotStrong(s) => write!(f, "action is not strong: {s}"),
            Error::MissingHomData(s) => write!(f, "missing internal hom data: {s}"),
            Error::NoDual(s) => write!(f, "object has no left dual: {s}"),
            Error::NotInitial(s) => write!(f, "object is not initial: {s}"),
            Error::NotMonotone(s) => write!(f, "chain is not monotone: {s}"),
            Error::NotLowerBound(s) => write!(f, "declared limit is not a lower bound: {s}"),
            Error::UnknownAction(s) => write!(f, "unknown action `{s}`"),
            Error::ParamOutOfBounds(s) => write!(f, "parameter out of bounds: {s}"),
            Error::InvalidInstance(s) => write!(f, "invalid instance: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
