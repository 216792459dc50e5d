//! Exact rational linear algebra.

mod factor;
mod matrix;
mod polynomial;
pub mod rational;
mod spectral;
mod subspace;

use thiserror::Error;

pub use factor::{factor, square_free_decomposition, Factor};
pub use matrix::{RatMatrix, Rref};
pub use polynomial::Polynomial;
pub use rational::{Rational, Vector};
pub use spectral::{
    char_min_poly, characteristic_polynomial, is_nilpotent, minimal_polynomial,
    primary_decomposition, primary_projectors, rational_eigenvalues, CharMinPoly,
    PrimaryComponent,
};
pub use subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("ragged rows: expected {expected} columns, found {found}")]
    RaggedRows { expected: usize, found: usize },
    #[error("dimension mismatch: matrix has {rows} rows but right-hand side has {rhs} entries")]
    DimensionMismatch { rows: usize, rhs: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefKernelImage {
    pub rref: RatMatrix,
    pub rank: usize,
    pub kernel: Subspace,
    pub image: Subspace,
}

pub fn rref_kernel_image(m: &RatMatrix) -> RrefKernelImage {
    let rref = m.rref();
    RrefKernelImage {
        rank: rref.rank(),
        kernel: m.kernel(),
        image: m.image(),
        rref: rref.matrix,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vector,
    pub nullspace: Subspace,
}

/// Solves `a·x = b`; `Ok(None)` when the system is inconsistent.
pub fn solve_linear(a: &RatMatrix, b: &[Rational]) -> Result<Option<LinearSolution>, LinalgError> {
    if a.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch {
            rows: a.rows(),
            rhs: b.len(),
        });
    }
    let n = a.cols();
    let mut columns: Vec<Vector> = (0..n).map(|j| a.column(j)).collect();
    columns.push(b.to_vec());
    let rref = RatMatrix::from_columns(a.rows(), &columns).rref();
    if rref.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = rational::zero_vector(n);
    for (row, &p) in rref.pivots.iter().enumerate() {
        particular[p] = rref.matrix[(row, n)].clone();
    }
    Ok(Some(LinearSolution {
        particular,
        nullspace: a.kernel(),
    }))
}

#[cfg(test)]
mod tests {
    use super::rational::{int, vector_from_i64 as v};
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> RatMatrix {
        RatMatrix::unit(n, i - 1, j - 1)
    }

    /// Brute-force pivot search: the rank is the size of the largest
    /// nonsingular square submatrix.
    fn brute_force_rank(m: &RatMatrix) -> usize {
        let (r, c) = (m.rows(), m.cols());
        let mut best = 0;
        for rows in 0u32..(1 << r) {
            for cols in 0u32..(1 << c) {
                if rows.count_ones() != cols.count_ones() || rows.count_ones() as usize <= best {
                    continue;
                }
                let ri: Vec<usize> = (0..r).filter(|i| rows & (1 << i) != 0).collect();
                let ci: Vec<usize> = (0..c).filter(|j| cols & (1 << j) != 0).collect();
                let sub = RatMatrix::from_rows(
                    ri.iter()
                        .map(|&i| ci.iter().map(|&j| m[(i, j)].clone()).collect())
                        .collect(),
                )
                .unwrap();
                if !num_traits::Zero::is_zero(&sub.determinant()) {
                    best = ri.len();
                }
            }
        }
        best
    }

    #[test]
    fn identity_has_full_rank() {
        let r = rref_kernel_image(&RatMatrix::identity(4));
        assert_eq!(r.rank, 4);
        assert!(r.kernel.is_zero());
        assert!(r.image.is_full());
    }

    #[test]
    fn shift_pair_kernel_and_image() {
        let m = &e(4, 1, 3) + &e(4, 2, 4);
        let r = rref_kernel_image(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.rank, brute_force_rank(&m));
        let plane = Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]);
        assert_eq!(r.kernel, plane);
        assert_eq!(r.image, plane);
    }

    #[test]
    fn zero_matrix_kernel() {
        let r = rref_kernel_image(&RatMatrix::zeros(3, 3));
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.dim(), 3);
        assert!(r.image.is_zero());
    }

    #[test]
    fn rank_matches_brute_force_on_fixed_samples() {
        let samples = [
            RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            RatMatrix::from_i64(&[&[0, 0], &[0, 0], &[1, -1]]),
            RatMatrix::from_i64(&[&[3, 1, 4, 1], &[5, 9, 2, 6]]),
        ];
        for m in &samples {
            let r = rref_kernel_image(m);
            assert_eq!(r.rank, brute_force_rank(m));
            assert_eq!(r.rank + r.kernel.dim(), m.cols());
        }
    }

    #[test]
    fn solve_identity() {
        let s = solve_linear(&RatMatrix::identity(2), &v(&[1, 2])).unwrap().unwrap();
        assert_eq!(s.particular, v(&[1, 2]));
        assert!(s.nullspace.is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        assert!(solve_linear(&RatMatrix::zeros(2, 2), &v(&[1, 0])).unwrap().is_none());
    }

    #[test]
    fn solve_with_nullspace() {
        let s = solve_linear(&e(2, 1, 2), &v(&[1, 0])).unwrap().unwrap();
        assert_eq!(s.particular, v(&[0, 1]));
        assert_eq!(s.nullspace, Subspace::span(2, [v(&[1, 0])]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        assert_eq!(
            solve_linear(&RatMatrix::identity(2), &[int(1)]),
            Err(LinalgError::DimensionMismatch { rows: 2, rhs: 1 })
        );
    }
}
