//! Characteristic and minimal polynomials, and the rational primary decomposition.

use num_traits::{One, Zero};

use super::factor::{factor, Factor};
use super::matrix::RatMatrix;
use super::polynomial::Polynomial;
use super::rational::{int, Rational};
use super::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMinPoly {
    pub characteristic: Polynomial,
    pub minimal: Polynomial,
    /// `Some(k)` exactly when the minimal polynomial is `x^k`.
    pub nilpotency_index: Option<usize>,
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(m: &RatMatrix) -> Polynomial {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = RatMatrix::zeros(n, n);
    for k in 1..=n {
        acc = &(m * &acc) + &RatMatrix::scalar(n, &coeffs[n - k + 1]);
        let am = m * &acc;
        coeffs[n - k] = -am.trace() / int(k as i64);
    }
    Polynomial::new(coeffs)
}

/// Monic minimal polynomial: the first linear dependency among `I, m, m², …`.
pub fn minimal_polynomial(m: &RatMatrix) -> Polynomial {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Polynomial::one();
    }
    let mut powers = vec![RatMatrix::identity(n).to_vector()];
    let mut current = RatMatrix::identity(n);
    for _ in 1..=n {
        current = &current * m;
        powers.push(current.to_vector());
        let system = RatMatrix::from_columns(n * n, &powers);
        let kernel = system.kernel();
        if let Some(relation) = kernel.basis().first() {
            // a single relation with a nonzero top coefficient, since lower powers were independent
            let top = relation.last().cloned().expect("nonempty relation");
            return Polynomial::new(relation.iter().map(|c| c / &top).collect());
        }
    }
    unreachable!("Cayley–Hamilton bounds the minimal polynomial degree by n")
}

pub fn char_min_poly(m: &RatMatrix) -> CharMinPoly {
    let characteristic = characteristic_polynomial(m);
    let minimal = minimal_polynomial(m);
    let nilpotency_index = minimal.monomial_degree().filter(|&k| k > 0);
    CharMinPoly {
        characteristic,
        minimal,
        nilpotency_index,
    }
}

pub fn is_nilpotent(m: &RatMatrix) -> bool {
    m.pow(m.rows() as u32).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    /// Monic (ideally irreducible) factor of the characteristic polynomial.
    pub factor: Polynomial,
    /// Multiplicity of `factor` in the characteristic polynomial.
    pub multiplicity: u32,
    pub possibly_reducible: bool,
    /// `ker factor(m)^multiplicity`.
    pub subspace: Subspace,
}

/// Splits the ambient space into the generalized eigenspaces of the rational
/// factors of the characteristic polynomial.
pub fn primary_decomposition(m: &RatMatrix) -> Vec<PrimaryComponent> {
    let chi = characteristic_polynomial(m);
    factor(&chi)
        .into_iter()
        .map(
            |Factor {
                 poly,
                 multiplicity,
                 possibly_reducible,
             }| {
                let subspace = poly.pow(multiplicity).eval_matrix(m).kernel();
                PrimaryComponent {
                    factor: poly,
                    multiplicity,
                    possibly_reducible,
                    subspace,
                }
            },
        )
        .collect()
}

/// Rational eigenvalues of `m`, ascending.
pub fn rational_eigenvalues(m: &RatMatrix) -> Vec<Rational> {
    factor(&characteristic_polynomial(m))
        .into_iter()
        .filter(|f| f.poly.degree() == Some(1))
        .map(|f| -f.poly.coeff(0))
        .collect()
}

/// Idempotents projecting onto each primary component of `m`, computed as
/// polynomials in `m` from Bézout identities for the minimal polynomial.
/// Returns an empty list when the minimal polynomial is primary.
pub fn primary_projectors(m: &RatMatrix) -> Vec<RatMatrix> {
    let mu = minimal_polynomial(m);
    let factors = factor(&mu);
    if factors.len() < 2 {
        return Vec::new();
    }
    factors
        .iter()
        .map(|f| {
            let block = f.poly.pow(f.multiplicity);
            let cofactor = mu.div_rem(&block).0;
            let (_, _, t) = block.ext_gcd(&cofactor);
            (&t * &cofactor).eval_matrix(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::vector_from_i64 as v;

    fn e(n: usize, i: usize, j: usize) -> RatMatrix {
        RatMatrix::unit(n, i - 1, j - 1)
    }

    #[test]
    fn jordan_block_is_nilpotent_of_index_four() {
        let a = &(&e(4, 1, 2) + &e(4, 2, 3)) + &e(4, 3, 4);
        let cm = char_min_poly(&a);
        assert_eq!(cm.minimal, Polynomial::monomial(int(1), 4));
        assert_eq!(cm.characteristic, Polynomial::monomial(int(1), 4));
        assert_eq!(cm.nilpotency_index, Some(4));
    }

    #[test]
    fn identity_polynomials() {
        let cm = char_min_poly(&RatMatrix::identity(3));
        assert_eq!(cm.characteristic, Polynomial::from_i64(&[-1, 1]).pow(3));
        assert_eq!(cm.minimal, Polynomial::from_i64(&[-1, 1]));
        assert_eq!(cm.nilpotency_index, None);
    }

    #[test]
    fn idempotent_signature() {
        let d = RatMatrix::diagonal(&[int(0), int(1)]);
        assert_eq!(minimal_polynomial(&d), Polynomial::from_i64(&[0, -1, 1]));
        assert_eq!(char_min_poly(&d).nilpotency_index, None);
    }

    #[test]
    fn zero_matrix_has_index_one() {
        assert_eq!(char_min_poly(&RatMatrix::zeros(3, 3)).nilpotency_index, Some(1));
    }

    #[test]
    fn diagonal_primary_components() {
        let d = RatMatrix::diagonal(&[int(0), int(0), int(1), int(1)]);
        let comps = primary_decomposition(&d);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].factor, Polynomial::x());
        assert_eq!(comps[0].subspace, Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]));
        assert_eq!(comps[1].factor, Polynomial::from_i64(&[-1, 1]));
        assert_eq!(comps[1].subspace, Subspace::span(4, [v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]));
    }

    #[test]
    fn rotation_block_primary_components() {
        let rot = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let m = RatMatrix::block_diag(&rot, &RatMatrix::zeros(2, 2));
        let comps = primary_decomposition(&m);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].factor, Polynomial::x());
        assert_eq!(comps[0].subspace.dim(), 2);
        assert_eq!(comps[1].factor, Polynomial::from_i64(&[1, 0, 1]));
        assert_eq!(comps[1].subspace, Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]));
    }

    #[test]
    fn nilpotent_single_component() {
        let comps = primary_decomposition(&e(2, 1, 2));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].factor, Polynomial::x());
        assert!(comps[0].subspace.is_full());
    }

    #[test]
    fn projectors_are_complete_idempotents() {
        let m = RatMatrix::from_i64(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]]);
        let ps = primary_projectors(&m);
        assert_eq!(ps.len(), 2);
        let sum = &ps[0] + &ps[1];
        assert!(sum.is_identity());
        for p in &ps {
            assert_eq!(&(p * p), p);
            assert!(p.commutes_with(&m));
        }
    }
}
