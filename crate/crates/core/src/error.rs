use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    UniverseMismatch {
        expected: usize,
        found: usize,
    },
    Range {
        index: usize,
        value: f64,
    },
    EmptyUniverse,
    DuplicateLabel(String),
    EmptyFamily,
    EmptyMember(usize),
    /// Index of the first element whose membership maximum is below 1.
    NotACovering(usize),
    NoUniversalMember,
    UnknownAggregator(String),
    NonMonotoneAggregator {
        x: f64,
        y: f64,
    },
    MissingO7,
    CoveringTooLarge {
        size: usize,
        cap: usize,
    },
    InvalidOperator {
        index: u8,
    },
    InvalidVariant {
        index: u8,
    },
    UnknownGroup(String),
    GroupNotInFamily(String),
    ZeroUpperCardinality,
    DegenerateIdeal,
    /// Every attribute has precision zero.
    DegenerateWeights,
    LengthMismatch {
        left: usize,
        right: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UniverseMismatch { expected, found } => {
                write!(
                    f,
                    "universe mismatch: expected {expected} elements, found {found}"
                )
            }
            Error::Range { index, value } => {
                write!(
                    f,
                    "membership {value} at position {index} is outside [0, 1]"
                )
            }
            Error::EmptyUniverse => f.write_str("universe is empty"),
            Error::DuplicateLabel(l) => write!(f, "duplicate universe label {l:?}"),
            Error::EmptyFamily => f.write_str("family of fuzzy sets is empty"),
            Error::EmptyMember(k) => write!(f, "member {k} is the empty fuzzy set"),
            Error::NotACovering(x) => write!(f, "element {x} is not covered (no member reaches 1)"),
            Error::NoUniversalMember => {
                f.write_str("strict covering needs a member equal to 1 everywhere")
            }
            Error::UnknownAggregator(n) => write!(f, "unknown aggregator {n:?}"),
            Error::NonMonotoneAggregator { x, y } => {
                write!(f, "aggregator is not non-decreasing near ({x}, {y})")
            }
            Error::MissingO7 => {
                f.write_str("derived coverings 3 and 4 need an aggregator with O(x,1) <= x")
            }
            Error::CoveringTooLarge { size, cap } => {
                write!(
                    f,
                    "covering has {size} members, enumeration is capped at {cap}"
                )
            }
            Error::InvalidOperator { index } => write!(f, "operator index {index} is not in 1..=4"),
            Error::InvalidVariant { index } => {
                write!(f, "covering variant {index} is not in 0..=5")
            }
            Error::UnknownGroup(g) => write!(f, "unknown model group {g:?}"),
            Error::GroupNotInFamily(g) => {
                write!(f, "group {g} does not exist for this logic family")
            }
            Error::ZeroUpperCardinality => f.write_str("upper approximation has zero cardinality"),
            Error::DegenerateIdeal => f.write_str("an ideal distance aggregate is zero"),
            Error::DegenerateWeights => f.write_str("all attribute precisions are zero"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for Error {}
