use thiserror::Error;

use crate::commutant::Flag;
use crate::linalg::{is_nilpotent, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilpotentFlagError {
    #[error("expected 4×4 matrices, found {rows}×{cols}")]
    WrongSize { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("{0}² ≠ 0")]
    SquareNonzero(&'static str),
    #[error("A² = 0")]
    SquareZero,
    #[error("pair commutes: AB = BA")]
    Commuting,
    #[error("case exhausted: dim Ker = 3 forces AB = BA")]
    RankOneForcesCommuting,
    #[error("case exhausted: chain dimensions {0:?} differ from (1, 2, 3)")]
    CaseExhausted(Vec<usize>),
}

fn check_size(m: &RatMatrix) -> Result<(), NilpotentFlagError> {
    if m.rows() == 4 && m.cols() == 4 {
        Ok(())
    } else {
        Err(NilpotentFlagError::WrongSize {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

fn complete_flag(chain: Vec<crate::linalg::Subspace>) -> Result<Flag, NilpotentFlagError> {
    let dims: Vec<usize> = chain.iter().map(|s| s.dim()).collect();
    match Flag::new(chain) {
        Ok(flag) if dims == [1, 2, 3] => Ok(flag),
        _ => Err(NilpotentFlagError::CaseExhausted(dims)),
    }
}

/// `Ker A ∩ Ker B ⊂ Ker A ⊂ Ker A + Ker B` for non-commuting square-zero `A, B ∈ M₄`.
/// Every matrix commuting with both preserves the chain.
pub fn flag_from_nilpotent_pair(a: &RatMatrix, b: &RatMatrix) -> Result<Flag, NilpotentFlagError> {
    check_size(a)?;
    check_size(b)?;
    if !(a * a).is_zero() {
        return Err(NilpotentFlagError::SquareNonzero("A"));
    }
    if !(b * b).is_zero() {
        return Err(NilpotentFlagError::SquareNonzero("B"));
    }
    if a.commutes_with(b) {
        return Err(NilpotentFlagError::Commuting);
    }
    let (ka, kb) = (a.kernel(), b.kernel());
    if ka.dim() == 3 || kb.dim() == 3 {
        return Err(NilpotentFlagError::RankOneForcesCommuting);
    }
    complete_flag(vec![ka.intersection(&kb), ka.clone(), ka.sum(&kb)])
}

/// For nilpotent `A ∈ M₄` with `A² ≠ 0`: `Ker A ⊂ Ker A² ⊂ Im A` when the
/// kernel is a line, `Ker A ∩ Im A ⊂ Ker A ⊂ Ker A + Im A` when it is a plane.
pub fn flag_from_nilpotent_element(a: &RatMatrix) -> Result<Flag, NilpotentFlagError> {
    check_size(a)?;
    if !is_nilpotent(a) {
        return Err(NilpotentFlagError::NotNilpotent);
    }
    let a2 = a * a;
    if a2.is_zero() {
        return Err(NilpotentFlagError::SquareZero);
    }
    let (ker, im) = (a.kernel(), a.image());
    let chain = match ker.dim() {
        1 => vec![ker, a2.kernel(), im],
        _ => vec![ker.intersection(&im), ker.clone(), ker.sum(&im)],
    };
    complete_flag(chain)
}
