use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A partition, weight or group rank outside the domain of the operation.
    OutOfDomain(String),
    InvalidPartition(String),
    /// A split-side partition with an odd part.
    OddPart { part: u32 },
    /// The partition does not partition the rank carried by the group kind.
    RankMismatch { expected: u32, found: u32 },
    NotDominant,
    NotSelfDual,
    /// `λ` does not extend to an admissible character of the Levi factor.
    NotAdmissible,
    WrongGroupKind(&'static str),
    UnsupportedSplitPartition,
    InexactDivision,
    /// The building block is already on the quaternionic side.
    InvalidDirection,
    NotAlgebraic,
    NotHalfIntegral,
    InvalidPermutation(String),
    InvalidSubgroup(String),
    NonTemperedNonsplitComponent(String),
    CuspidalityNotAsserted,
    ComplexPlaceUnsupported(String),
    NoUnramifiedPlaces,
    InvalidDescriptor(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfDomain(msg) => write!(f, "out of domain: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid ordered partition: {msg}"),
            Error::OddPart { part } => write!(f, "split partition has odd part {part}"),
            Error::RankMismatch { expected, found } => {
                write!(f, "partition of {found} does not match group rank {expected}")
            }
            Error::NotDominant => f.write_str("highest weight is not non-increasing"),
            Error::NotSelfDual => f.write_str("highest weight is not essentially self-dual"),
            Error::NotAdmissible => f.write_str("weight is not admissible for the partition"),
            Error::WrongGroupKind(msg) => write!(f, "wrong group kind: {msg}"),
            Error::UnsupportedSplitPartition => {
                f.write_str("no closed Poincaré polynomial for split partitions with n_0 > 0")
            }
            Error::InexactDivision => f.write_str("polynomial division left a remainder"),
            Error::InvalidDirection => f.write_str("building block is not a split-side representation"),
            Error::NotAlgebraic => f.write_str("parameter is not algebraic"),
            Error::NotHalfIntegral => f.write_str("exponent is not a half-integer"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation of places: {msg}"),
            Error::InvalidSubgroup(msg) => write!(f, "invalid subgroup: {msg}"),
            Error::NonTemperedNonsplitComponent(place) => {
                write!(f, "non-split component at {place} is not tempered")
            }
            Error::CuspidalityNotAsserted => {
                f.write_str("descriptor does not assert cuspidality of the transfer")
            }
            Error::ComplexPlaceUnsupported(place) => {
                write!(f, "complex place {place} has no cohomological model")
            }
            Error::NoUnramifiedPlaces => f.write_str("no unramified split finite place"),
            Error::InvalidDescriptor(msg) => write!(f, "invalid descriptor: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
