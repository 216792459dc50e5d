use num_traits::Zero;

use crate::linalg::rational::is_zero_vector;
use crate::linalg::{RatMatrix, Rational, Subspace, Vector};
use crate::representation::{AffineField, RepKind, Representation};

use super::CommutantError;

/// A subspace of `M_d` given by a canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraBasis {
    size: usize,
    span: Subspace,
    basis: Vec<RatMatrix>,
}

impl AlgebraBasis {
    /// The linear span of `elements` inside `M_size`.
    pub fn span_of<'a>(size: usize, elements: impl IntoIterator<Item = &'a RatMatrix>) -> Self {
        Self::from_span(
            size,
            Subspace::span(size * size, elements.into_iter().map(RatMatrix::to_vector)),
        )
    }

    pub fn from_span(size: usize, span: Subspace) -> Self {
        assert_eq!(span.ambient_dim(), size * size);
        let basis = span
            .basis()
            .iter()
            .map(|v| RatMatrix::from_vector(size, size, v.clone()))
            .collect();
        Self { size, span, basis }
    }

    /// The smallest product-closed subspace containing `generators`
    /// (and the identity when `unital`).
    pub fn generated_by(size: usize, generators: &[RatMatrix], unital: bool) -> Self {
        let mut seed: Vec<RatMatrix> = generators.to_vec();
        if unital {
            seed.push(RatMatrix::identity(size));
        }
        let mut alg = Self::span_of(size, &seed);
        loop {
            let products: Vec<RatMatrix> = alg
                .basis
                .iter()
                .flat_map(|a| alg.basis.iter().map(move |b| a * b))
                .collect();
            let grown = Self::from_span(
                size,
                alg.span
                    .sum(&Subspace::span(size * size, products.iter().map(RatMatrix::to_vector))),
            );
            if grown.dim() == alg.dim() {
                return alg;
            }
            alg = grown;
        }
    }

    /// All matrices commuting with every element of `matrices`.
    pub fn commutant(size: usize, matrices: &[RatMatrix]) -> Self {
        let units: Vec<RatMatrix> = (0..size * size)
            .map(|k| RatMatrix::unit(size, k / size, k % size))
            .collect();
        let span = joint_kernel(&units, |x| {
            matrices.iter().flat_map(|g| x.commutator(g).into_entries()).collect()
        });
        Self::from_span(size, span)
    }

    /// Side length `d` of the matrices.
    pub fn ambient_dim(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RatMatrix] {
        &self.basis
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.span.contains(&m.to_vector())
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&RatMatrix::identity(self.size))
    }

    /// `Σ c_i b_i` over the canonical basis.
    pub fn element(&self, coeffs: &[Rational]) -> RatMatrix {
        assert_eq!(coeffs.len(), self.dim());
        let mut acc = RatMatrix::zeros(self.size, self.size);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }

    /// Coordinates of `m` in the canonical basis.
    pub fn coordinates(&self, m: &RatMatrix) -> Option<Vector> {
        self.span.coordinates(&m.to_vector())
    }

    pub fn conjugate(&self, p: &RatMatrix, p_inv: &RatMatrix) -> Self {
        let conj: Vec<RatMatrix> = self.basis.iter().map(|b| &(p * b) * p_inv).collect();
        Self::span_of(self.size, &conj)
    }
}

/// Kernel of the linear map `Σ c_k v_k ↦ f(Σ c_k v_k)`, returned as a span in
/// the coordinates of the `v_k` mapped back to the ambient vectors.
fn joint_kernel(variables: &[RatMatrix], f: impl Fn(&RatMatrix) -> Vector) -> Subspace {
    let ambient = variables.first().map_or(0, |v| v.rows() * v.cols());
    let columns: Vec<Vector> = variables.iter().map(&f).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let coeffs = if rows == 0 {
        Subspace::full(variables.len())
    } else {
        RatMatrix::from_columns(rows, &columns).kernel()
    };
    Subspace::span(
        ambient,
        coeffs.basis().iter().map(|c| {
            let mut acc = vec![Rational::zero(); ambient];
            for (ck, v) in c.iter().zip(variables) {
                if !ck.is_zero() {
                    for (a, e) in acc.iter_mut().zip(v.entries()) {
                        *a += ck * e;
                    }
                }
            }
            acc
        }),
    )
}

/// The commutant of the generators, modelling the automorphism algebra.
pub fn centralizer_algebra(rep: &Representation) -> AlgebraBasis {
    AlgebraBasis::commutant(rep.matrix_size(), &rep.matrices())
}

/// Affine fields `x ↦ Lx + c` invariant under every generator. Linear
/// representations are treated through their affine embedding.
pub fn invariant_affine_fields(rep: &Representation) -> Result<Vec<AffineField>, CommutantError> {
    let affine = rep.as_affine()?;
    debug_assert_eq!(affine.kind(), RepKind::Affine);
    let n = affine.dimension();
    let size = n + 1;
    let variables: Vec<RatMatrix> = (0..n * size)
        .map(|k| RatMatrix::unit(size, k / size, k % size))
        .collect();
    let gens = affine.matrices();
    let span = joint_kernel(&variables, |x| {
        gens.iter().flat_map(|g| x.commutator(g).into_entries()).collect()
    });
    Ok(span
        .basis()
        .iter()
        .map(|v| AffineField::from_homogeneous(&RatMatrix::from_vector(size, size, v.clone())))
        .collect())
}

/// Representatives of the linear-part span modulo the scalar line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub ambient_dim: usize,
    pub representatives: Vec<RatMatrix>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Quotient of the span of the fields' linear parts by `span{I}`, the
/// infinitesimal shadow of the projection to the projective automorphisms.
pub fn project_automorphism_algebra(
    size: usize,
    fields: &[AffineField],
) -> Result<QuotientBasis, CommutantError> {
    let linear = AlgebraBasis::span_of(size, fields.iter().map(|f| &f.linear));
    let identity = RatMatrix::identity(size);
    if !linear.contains(&identity) {
        return Err(CommutantError::IdentityNotInSpan);
    }
    Ok(QuotientBasis {
        ambient_dim: size,
        representatives: complement_representatives(&linear, &[identity]),
    })
}

/// Canonical basis elements of `alg` extending the span of `base` to all of `alg`.
pub(crate) fn complement_representatives(alg: &AlgebraBasis, base: &[RatMatrix]) -> Vec<RatMatrix> {
    let n = alg.ambient_dim();
    let mut acc = Subspace::span(n * n, base.iter().map(RatMatrix::to_vector));
    let mut out = Vec::new();
    for b in alg.basis() {
        let v = b.to_vector();
        if !acc.contains(&v) {
            acc = acc.sum(&Subspace::span(n * n, [v]));
            out.push(b.clone());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureCheck {
    Closed,
    NotClosed {
        left: RatMatrix,
        right: RatMatrix,
        product: RatMatrix,
        /// Component of the product outside the span, in the ambient coordinates.
        residual: Vector,
    },
}

impl ClosureCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosureCheck::Closed)
    }
}

pub fn algebra_closure_check(a: &AlgebraBasis) -> ClosureCheck {
    for left in a.basis() {
        for right in a.basis() {
            let product = left * right;
            let residual = a.span().residual(&product.to_vector());
            if !is_zero_vector(&residual) {
                return ClosureCheck::NotClosed {
                    left: left.clone(),
                    right: right.clone(),
                    product,
                    residual,
                };
            }
        }
    }
    ClosureCheck::Closed
}

/// Tangent dimension at `[x]` of the orbit of the unit group of `a` in projective space.
pub fn orbit_dimension_at(a: &AlgebraBasis, x: &[Rational]) -> Result<usize, CommutantError> {
    if is_zero_vector(x) {
        return Err(CommutantError::ZeroPoint);
    }
    let n = a.ambient_dim();
    let span = Subspace::span(
        n,
        std::iter::once(x.to_vec()).chain(a.basis().iter().map(|b| b.mul_vec(x))),
    );
    Ok(span.dim() - 1)
}
