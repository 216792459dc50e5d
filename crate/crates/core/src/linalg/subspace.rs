//! Rational subspaces in canonical form.
//!
//! A subspace is stored as the nonzero rows of the reduced row echelon form
//! of any spanning set, so two spanning sets of the same space produce
//! identical values and span equality is plain `==`.

use std::fmt;

use num_traits::Zero;

use super::matrix::RatMatrix;
use super::rational::{format_rational, is_zero_vector, Rational, Vector};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(
            ambient_dim,
            (0..ambient_dim).map(|i| super::rational::unit_vector(ambient_dim, i)),
        )
    }

    /// Canonical form of the span of `vectors`.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient_dim, "vector length mismatch"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = RatMatrix::from_rows(rows).expect("rows have equal length");
        let rref = m.rref();
        let basis = (0..rref.rank())
            .map(|i| rref.matrix.row(i).to_vec())
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: rref.pivots,
        }
    }

    pub fn from_basis_rows(ambient_dim: usize, rows: &[Vector]) -> Self {
        Self::span(ambient_dim, rows.iter().cloned())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis vectors, one per pivot.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff `v` lies in the span.
    pub fn residual(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.residual(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combination(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Self::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Self::zero(n);
        }
        // x = Σ a_i u_i = Σ b_j w_j  <=>  [U | -W] (a; b) = 0
        let k = self.dim();
        let mut columns: Vec<Vector> = self.basis.clone();
        columns.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let system = RatMatrix::from_columns(n, &columns);
        let kernel = system.kernel();
        Self::span(
            n,
            kernel
                .basis()
                .iter()
                .map(|sol| self.combination(&sol[..k])),
        )
    }

    /// `m · self`, canonicalized.
    pub fn image_under(&self, m: &RatMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Self::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_invariant_under(&self, m: &RatMatrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this (m-invariant) subspace, in the canonical basis.
    pub fn restrict(&self, m: &RatMatrix) -> Option<RatMatrix> {
        let k = self.dim();
        let mut r = RatMatrix::zeros(k, k);
        for (j, v) in self.basis.iter().enumerate() {
            let coords = self.coordinates(&m.mul_vec(v))?;
            for (i, c) in coords.into_iter().enumerate() {
                r[(i, j)] = c;
            }
        }
        Some(r)
    }

    /// Smallest subspace containing `self` and invariant under every matrix in `ms`.
    pub fn invariant_hull(&self, ms: &[RatMatrix]) -> Subspace {
        let mut current = self.clone();
        loop {
            let mut next = current.clone();
            for m in ms {
                next = next.sum(&current.image_under(m));
            }
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let entries: Vec<String> = v.iter().map(format_rational).collect();
            write!(f, "({})", entries.join(","))?;
        }
        write!(f, "}} ⊆ Q^{}", self.ambient_dim)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl RatMatrix {
    /// Null space `{x : self·x = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let n = self.cols();
        let rref = self.rref();
        let free: Vec<usize> = (0..n).filter(|c| !rref.pivots.contains(c)).collect();
        let vectors = free.iter().map(|&fc| {
            let mut v = vec![Rational::zero(); n];
            v[fc] = num_traits::One::one();
            for (row, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = -rref.matrix[(row, fc)].clone();
            }
            v
        });
        Subspace::span(n, vectors)
    }

    /// Column space in canonical form.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows(), (0..self.cols()).map(|j| self.column(j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::vector_from_i64 as v;

    #[test]
    fn canonical_form_is_independent_of_spanning_set() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, [v(&[1, 2, 1]), v(&[2, 2, 0]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]);
        let b = Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]);
        assert_eq!(a.intersection(&b), Subspace::span(4, [v(&[1, 0, 0, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
        let c = Subspace::span(4, [v(&[0, 0, 0, 1])]);
        assert!(a.intersection(&c).is_zero());
    }

    #[test]
    fn residual_witness_and_coordinates() {
        let s = Subspace::span(3, [v(&[1, 0, 2]), v(&[0, 1, 3])]);
        assert!(s.contains(&v(&[2, -1, 1])));
        assert_eq!(s.coordinates(&v(&[2, -1, 1])), Some(v(&[2, -1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s.residual(&v(&[0, 0, 1])), v(&[0, 0, 1]));
    }

    #[test]
    fn restriction_to_invariant_plane() {
        let m = RatMatrix::from_i64(&[&[0, -1, 5], &[1, 0, 6], &[0, 0, 2]]);
        let plane = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(plane.is_invariant_under(&m));
        assert_eq!(
            plane.restrict(&m).unwrap(),
            RatMatrix::from_i64(&[&[0, -1], &[1, 0]])
        );
    }

    #[test]
    fn hull_of_a_line() {
        let shift = RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let line = Subspace::span(3, [v(&[1, 0, 0])]);
        assert!(line.invariant_hull(std::slice::from_ref(&shift)).is_full());
        let last = Subspace::span(3, [v(&[0, 0, 1])]);
        assert_eq!(last.invariant_hull(&[shift]), last);
    }
}
