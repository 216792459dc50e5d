//! Commutant algebra of a representation and the structure read off from it:
//! radical, semisimple summary, rotational elements, invariant flags,
//! truncated derived series and orbit dimensions.

mod algebra;
mod certificate;
mod derived;
mod flag;
mod radical;
mod rotation;

use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::representation::RepError;

pub use algebra::{
    algebra_closure_check, centralizer_algebra, invariant_affine_fields, orbit_dimension_at,
    project_automorphism_algebra, AlgebraBasis, ClosureCheck, QuotientBasis,
};
pub use certificate::{Certificate, CertificateError};
pub use derived::{truncated_derived_series, DerivedLevel, DerivedSeries, SolvabilityVerdict};
pub use flag::{
    check_flag_invariance, invariant_flag_search, search_invariant_flag, verify_flag_invariant,
    Flag, FlagError, InvarianceViolation,
};
pub use radical::{
    dickson_radical, quotient_radical_dim, square_zero_element, verify_radical, Decomposition,
    RadicalViolation,
};
pub use rotation::{
    find_rotational_element, has_rotational_minimal_polynomial, RotationalElement,
    DEFAULT_SEARCH_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommutantError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("identity not in span of the linear parts")]
    IdentityNotInSpan,
    #[error("span is not closed under products: {left} · {right} leaves it")]
    NotClosed { left: RatMatrix, right: RatMatrix },
    #[error("point must be nonzero")]
    ZeroPoint,
    #[error("commutator depth and word length must be at least 1")]
    InvalidTruncation,
}
