use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::linalg::rational::int;
use crate::linalg::{rational_eigenvalues, solve_linear, Rational, Subspace, Vector};
use crate::representation::AffineField;

/// Solution set of `Lx + c = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSet {
    /// `None` when the set is empty.
    pub dim: Option<usize>,
    pub point: Option<Vector>,
    /// `Ker L`; the zero set is `point + direction_space` when nonempty.
    pub direction_space: Subspace,
}

impl ZeroSet {
    pub fn is_empty(&self) -> bool {
        self.dim.is_none()
    }
}

pub fn zero_set_of_affine_field(f: &AffineField) -> ZeroSet {
    let rhs: Vector = f.constant.iter().map(|c| -c).collect();
    let direction_space = f.linear.kernel();
    match solve_linear(&f.linear, &rhs).expect("field shapes agree") {
        Some(sol) => ZeroSet {
            dim: Some(sol.nullspace.dim()),
            point: Some(sol.particular),
            direction_space,
        },
        None => ZeroSet {
            dim: None,
            point: None,
            direction_space,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedZeroSet {
    /// `c` in `f + c·X_R`.
    pub shift: Rational,
    pub zero_set: ZeroSet,
}

/// Shifts tried for `f + c·X_R`: zero, the negated rational eigenvalues of
/// the linear part, then the integers in `[−bound, bound]`.
pub fn radiant_shift_candidates(f: &AffineField, bound: i64) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    let eig = rational_eigenvalues(&f.linear).into_iter().map(|l| -l);
    let ints = (1..=bound.max(0)).flat_map(|k| [int(k), int(-k)]);
    for c in eig.chain(ints) {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// The radiant shift with the largest nonempty zero set; ties prefer the
/// smallest `|c|`, then positive `c`.
pub fn best_radiant_shift(f: &AffineField, bound: i64) -> Option<ShiftedZeroSet> {
    radiant_shift_candidates(f, bound)
        .into_iter()
        .filter_map(|shift| {
            let zero_set = zero_set_of_affine_field(&f.shifted(&shift));
            zero_set.dim.map(|_| ShiftedZeroSet { shift, zero_set })
        })
        .max_by(|a, b| {
            a.zero_set
                .dim
                .cmp(&b.zero_set.dim)
                .then_with(|| b.shift.abs().cmp(&a.shift.abs()))
                .then_with(|| match (a.shift.is_positive(), b.shift.is_positive()) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    _ => Ordering::Equal,
                })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::vector_from_i64 as v;
    use crate::linalg::RatMatrix;

    #[test]
    fn radiant_field_vanishes_at_origin() {
        let z = zero_set_of_affine_field(&AffineField::radiant(3));
        assert_eq!(z.dim, Some(0));
        assert_eq!(z.point, Some(v(&[0, 0, 0])));
    }

    #[test]
    fn translation_field_needs_a_shift() {
        let f = AffineField::new(RatMatrix::zeros(2, 2), v(&[1, 0]));
        assert!(zero_set_of_affine_field(&f).is_empty());
        for c in [1, -1, 2] {
            let z = zero_set_of_affine_field(&f.shifted(&int(c)));
            assert_eq!(z.dim, Some(0));
            assert_eq!(z.point.unwrap(), vec![-int(1) / int(c), int(0)]);
        }
        let best = best_radiant_shift(&f, 2).unwrap();
        assert_eq!(best.shift, int(1));
    }

    #[test]
    fn hyperplane_zero_set() {
        let f = AffineField::linear_only(RatMatrix::diagonal(&[int(0), int(0), int(0), int(1)]));
        let z = zero_set_of_affine_field(&f);
        assert_eq!(z.dim, Some(3));
        assert_eq!(
            z.direction_space,
            Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])])
        );
    }

    #[test]
    fn eigenvalue_shift_is_preferred() {
        let f = AffineField::linear_only(RatMatrix::diagonal(&[int(2), int(2), int(5)]));
        let best = best_radiant_shift(&f, 2).unwrap();
        assert_eq!(best.shift, int(-2));
        assert_eq!(best.zero_set.dim, Some(2));
    }
}
