use thiserror::Error;

use crate::linalg::rational::is_zero_vector;
use crate::linalg::{Subspace, Vector};
use crate::representation::Representation;

use super::flag::{verify_flag_invariant, Flag, InvarianceViolation};
use super::rotation::{is_consistent, RotationalElement};

/// Evidence attached to a verdict, re-checkable against the representation alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    InvariantFlag(Flag),
    RotationalElement(RotationalElement),
    /// A line fixed by every generator, given by a spanning vector.
    FixedProjectivePoint(Vector),
    InvariantSubspace(Subspace),
    NoneFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate lives in dimension {found}, generators act on dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error(transparent)]
    NotInvariant(#[from] InvarianceViolation),
    #[error("rotational element does not commute with generator '{0}'")]
    NotCommuting(String),
    #[error("element is not rotational or its splitting does not match its kernel and image")]
    NotRotational,
    #[error("fixed point is the zero vector")]
    ZeroPoint,
    #[error("generator '{0}' moves the fixed point")]
    PointMoved(String),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::InvariantFlag(_) => "invariant_flag",
            Certificate::RotationalElement(_) => "rotational_element",
            Certificate::FixedProjectivePoint(_) => "fixed_projective_point",
            Certificate::InvariantSubspace(_) => "invariant_subspace",
            Certificate::NoneFound => "none_found",
        }
    }

    /// Re-verifies the certificate; every check is invariant under rescaling generators.
    pub fn verify(&self, rep: &Representation) -> Result<(), CertificateError> {
        let d = rep.matrix_size();
        let ambient = |found: usize| {
            if found == d {
                Ok(())
            } else {
                Err(CertificateError::AmbientMismatch { expected: d, found })
            }
        };
        match self {
            Certificate::InvariantFlag(flag) => {
                if let Some(found) = flag.ambient_dim() {
                    ambient(found)?;
                }
                verify_flag_invariant(rep, flag)?;
            }
            Certificate::RotationalElement(rot) => {
                ambient(rot.j.rows())?;
                if !is_consistent(rot) {
                    return Err(CertificateError::NotRotational);
                }
                for g in rep.generators() {
                    if !rot.j.commutes_with(&g.matrix) {
                        return Err(CertificateError::NotCommuting(g.label.clone()));
                    }
                }
                let split = Flag::new(vec![rot.u.clone()]).expect("single member");
                verify_flag_invariant(rep, &split)?;
                if !rot.v.is_zero() {
                    let split = Flag::new(vec![rot.v.clone()]).expect("single member");
                    verify_flag_invariant(rep, &split)?;
                }
            }
            Certificate::FixedProjectivePoint(x) => {
                ambient(x.len())?;
                if is_zero_vector(x) {
                    return Err(CertificateError::ZeroPoint);
                }
                let line = Subspace::span(d, [x.clone()]);
                for g in rep.generators() {
                    if !line.contains(&g.matrix.mul_vec(x)) {
                        return Err(CertificateError::PointMoved(g.label.clone()));
                    }
                }
            }
            Certificate::InvariantSubspace(s) => {
                ambient(s.ambient_dim())?;
                verify_flag_invariant(rep, &Flag::new(vec![s.clone()]).expect("single member"))?;
            }
            Certificate::NoneFound => {}
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, vector_from_i64 as v};
    use crate::linalg::RatMatrix;
    use crate::representation::{validate_rep, AssumptionSet, Generator, RepKind};

    fn rep(gens: Vec<RatMatrix>) -> Representation {
        validate_rep(
            gens.into_iter()
                .enumerate()
                .map(|(i, m)| Generator::new(format!("g{i}"), m))
                .collect(),
            RepKind::ProjectiveClass,
            2,
            AssumptionSet::default(),
        )
        .unwrap()
    }

    #[test]
    fn fixed_point_checks() {
        let r = rep(vec![RatMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]])]);
        Certificate::FixedProjectivePoint(v(&[1, 0, 0])).verify(&r).unwrap();
        assert_eq!(
            Certificate::FixedProjectivePoint(v(&[0, 0, 1])).verify(&r),
            Err(CertificateError::PointMoved("g0".into()))
        );
        assert_eq!(
            Certificate::FixedProjectivePoint(v(&[0, 0, 0])).verify(&r),
            Err(CertificateError::ZeroPoint)
        );
    }

    #[test]
    fn scale_does_not_matter() {
        let g = RatMatrix::diagonal(&[int(1), int(1), int(2)]);
        let cert = Certificate::InvariantSubspace(Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]));
        cert.verify(&rep(vec![g.clone()])).unwrap();
        cert.verify(&rep(vec![g.scale(&int(-3))])).unwrap();
        Certificate::NoneFound.verify(&rep(vec![g])).unwrap();
    }

    #[test]
    fn ambient_mismatch() {
        let r = rep(vec![]);
        assert!(matches!(
            Certificate::FixedProjectivePoint(v(&[1, 0])).verify(&r),
            Err(CertificateError::AmbientMismatch { expected: 3, found: 2 })
        ));
    }
}
