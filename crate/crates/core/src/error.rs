//! Crate-wide error wrapping each module's error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
    #[error(transparent)]
    Partition(#[from] crate::partition::PartitionError),
    #[error(transparent)]
    Spc(#[from] crate::spc::SpcError),
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
    #[error(transparent)]
    GainGraph(#[from] crate::gain_graph::GainGraphError),
    #[error(transparent)]
    BoolRep(#[from] crate::boolrep::BoolRepError),
    #[error(transparent)]
    Wreath(#[from] crate::wreath::WreathError),
    #[error("bounds exceeded: {0}")]
    Bounds(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    /// Inputs outside the supported sizes, as opposed to malformed inputs.
    pub fn is_bounds(&self) -> bool {
        use crate::complex::ComplexError as C;
        use crate::gain_graph::GainGraphError as GG;
        use crate::lattice::LatticeError as L;
        matches!(
            self,
            Error::Bounds(_)
                | Error::Lattice(L::TooLarge { .. } | L::ArgumentOutOfRange(_))
                | Error::Complex(C::GroundTooLarge { .. })
                | Error::GainGraph(GG::TooLarge { .. } | GG::ArgumentOutOfRange(_))
                | Error::BoolRep(crate::boolrep::BoolRepError::SearchSpaceTooLarge { .. } | crate::boolrep::BoolRepError::TooLarge(_))
                | Error::Spc(crate::spc::SpcError::ArgumentOutOfRange(_))
                | Error::Wreath(crate::wreath::WreathError::ArgumentOutOfRange(_))
                | Error::Group(crate::group::GroupError::OrderTooLarge { .. })
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
