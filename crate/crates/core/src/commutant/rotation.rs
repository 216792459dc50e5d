use num_traits::Signed;

use crate::linalg::rational::{frac, int};
use crate::linalg::{factor, minimal_polynomial, Polynomial, RatMatrix, Rational, Subspace};

use super::algebra::AlgebraBasis;

/// Default coefficient bound for the combination search.
pub const DEFAULT_SEARCH_BOUND: i64 = 2;

/// An element generating a circle direction, with the splitting it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationalElement {
    pub j: RatMatrix,
    /// Image of `j`: the rotation planes.
    pub u: Subspace,
    /// Kernel of `j`.
    pub v: Subspace,
}

impl RotationalElement {
    fn from_matrix(j: RatMatrix) -> Self {
        Self {
            u: j.image(),
            v: j.kernel(),
            j,
        }
    }
}

/// True when the minimal polynomial is `x² + c` or `x(x² + c)` with `c > 0`.
pub fn has_rotational_minimal_polynomial(m: &RatMatrix) -> bool {
    rotational_constant(&minimal_polynomial(m)).is_some()
}

fn rotational_constant(mu: &Polynomial) -> Option<Rational> {
    let c = match mu.degree()? {
        2 => (mu.coeff(1) == int(0)).then(|| mu.coeff(0))?,
        3 => (mu.coeff(0) == int(0) && mu.coeff(2) == int(0)).then(|| mu.coeff(1))?,
        _ => return None,
    };
    c.is_positive().then_some(c)
}

/// Searches basis elements and combinations `a·b_i + b·b_j` with
/// `|a|, |b| ≤ bound` for a rotational element, directly or through the
/// component of a definite quadratic factor. Elements with a nonzero kernel
/// are preferred. `None` means the bounded search found nothing.
pub fn find_rotational_element(a: &AlgebraBasis, bound: i64) -> Option<RotationalElement> {
    let b = a.basis();
    let coeffs: Vec<Rational> = (1..=bound.max(1)).flat_map(|k| [int(k), int(-k)]).collect();
    let pairs = (0..b.len()).flat_map(|i| (i + 1..b.len()).map(move |j| (i, j)));
    let combos = pairs.flat_map(|(i, j)| {
        let coeffs = &coeffs;
        coeffs.iter().flat_map(move |x| {
            coeffs
                .iter()
                .map(move |y| &b[i].scale(x) + &b[j].scale(y))
        })
    });
    let mut fallback: Option<RotationalElement> = None;
    for m in b.iter().cloned().chain(combos) {
        for j in rotational_candidates(&m) {
            if !a.contains(&j) {
                continue;
            }
            let rot = RotationalElement::from_matrix(j);
            if !rot.v.is_zero() {
                return Some(rot);
            }
            fallback.get_or_insert(rot);
        }
    }
    fallback
}

/// `m` itself when rotational, and `e·(m + b/2·I)` for every definite
/// quadratic factor `x² + bx + c` of the minimal polynomial, where `e` is the
/// projector onto that component.
fn rotational_candidates(m: &RatMatrix) -> Vec<RatMatrix> {
    let mu = minimal_polynomial(m);
    if rotational_constant(&mu).is_some() {
        return vec![m.clone()];
    }
    let n = m.rows();
    let mut out = Vec::new();
    for f in factor(&mu) {
        if !f.poly.is_definite_quadratic() {
            continue;
        }
        let block = f.poly.pow(f.multiplicity);
        let cofactor = mu.div_rem(&block).0;
        let projector = if cofactor.degree() == Some(0) {
            RatMatrix::identity(n)
        } else {
            let (_, _, t) = block.ext_gcd(&cofactor);
            (&t * &cofactor).eval_matrix(m)
        };
        let shift = RatMatrix::scalar(n, &(f.poly.coeff(1) * frac(1, 2)));
        let j = &projector * &(m + &shift);
        if has_rotational_minimal_polynomial(&j) {
            out.push(j);
        }
    }
    out
}

/// True when `j` is rotational and its kernel and image are its stored splitting.
pub(crate) fn is_consistent(rot: &RotationalElement) -> bool {
    has_rotational_minimal_polynomial(&rot.j)
        && rot.u == rot.j.image()
        && rot.v == rot.j.kernel()
        && rot.u.dim() + rot.v.dim() == rot.j.rows()
        && rot.u.intersection(&rot.v).is_zero()
}
