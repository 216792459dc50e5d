use crate::linalg::{primary_projectors, solve_linear, RatMatrix, Subspace, Vector};

use super::algebra::{algebra_closure_check, complement_representatives, AlgebraBasis, ClosureCheck};
use super::CommutantError;

const MAX_IDEMPOTENT_WITNESSES: usize = 8;

/// Radical of an algebra together with a summary of the semisimple quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub radical: AlgebraBasis,
    pub quotient_dim: usize,
    pub quotient_commutative: bool,
    pub radical_commutative: bool,
    /// Idempotents of the algebra other than `0` and `I`.
    pub idempotent_witnesses: Vec<RatMatrix>,
    /// Basis elements of the algebra completing the radical basis.
    pub complement: Vec<RatMatrix>,
}

/// Radical as the kernel of the trace form `(x, y) ↦ tr(xy)`.
pub fn dickson_radical(a: &AlgebraBasis) -> Result<Decomposition, CommutantError> {
    if let ClosureCheck::NotClosed { left, right, .. } = algebra_closure_check(a) {
        return Err(CommutantError::NotClosed { left, right });
    }
    let d = a.ambient_dim();
    let radical = AlgebraBasis::from_span(d, trace_form_kernel(a));
    let complement = complement_representatives(a, radical.basis());
    let quotient_commutative = complement.iter().enumerate().all(|(i, x)| {
        complement[i + 1..]
            .iter()
            .all(|y| radical.contains(&x.commutator(y)))
    });
    let radical_commutative = radical.basis().iter().enumerate().all(|(i, x)| {
        radical.basis()[i + 1..].iter().all(|y| x.commutes_with(y))
    });
    Ok(Decomposition {
        quotient_dim: a.dim() - radical.dim(),
        idempotent_witnesses: idempotent_witnesses(a),
        radical,
        quotient_commutative,
        radical_commutative,
        complement,
    })
}

fn trace_form_kernel(a: &AlgebraBasis) -> Subspace {
    let k = a.dim();
    let d = a.ambient_dim();
    if k == 0 {
        return Subspace::zero(d * d);
    }
    let b = a.basis();
    let mut gram = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = (&b[i] * &b[j]).trace();
            gram[(j, i)] = t.clone();
            gram[(i, j)] = t;
        }
    }
    Subspace::span(
        d * d,
        gram.kernel().basis().iter().map(|c| a.element(c).to_vector()),
    )
}

/// Idempotents found as primary projectors of basis elements and of pairwise sums.
fn idempotent_witnesses(a: &AlgebraBasis) -> Vec<RatMatrix> {
    let d = a.ambient_dim();
    let b = a.basis();
    let candidates = b
        .iter()
        .cloned()
        .chain((0..b.len()).flat_map(|i| (i + 1..b.len()).map(move |j| &b[i] + &b[j])));
    let mut out: Vec<RatMatrix> = Vec::new();
    for m in candidates {
        for e in primary_projectors(&m) {
            if e.is_zero() || e.is_identity() || out.contains(&e) || !a.contains(&e) {
                continue;
            }
            out.push(e);
            if out.len() >= MAX_IDEMPOTENT_WITNESSES {
                return out;
            }
        }
    }
    debug_assert!(out.iter().all(|e| e.rows() == d));
    out
}

/// Coordinates of the quotient `a / radical` in the `complement` basis.
struct QuotientCoordinates {
    system: RatMatrix,
    radical_dim: usize,
    quotient_dim: usize,
}

impl QuotientCoordinates {
    fn new(radical: &AlgebraBasis, complement: &[RatMatrix]) -> Self {
        let d = radical.ambient_dim();
        let columns: Vec<Vector> = radical
            .basis()
            .iter()
            .chain(complement)
            .map(RatMatrix::to_vector)
            .collect();
        Self {
            system: RatMatrix::from_columns(d * d, &columns),
            radical_dim: radical.dim(),
            quotient_dim: complement.len(),
        }
    }

    fn project(&self, m: &RatMatrix) -> Vector {
        let sol = solve_linear(&self.system, &m.to_vector())
            .expect("shapes agree")
            .expect("element lies in the algebra");
        sol.particular[self.radical_dim..].to_vec()
    }
}

/// Radical of the quotient `a / radical`, computed from the trace form of
/// the regular representation of the quotient. Zero for a correct radical.
pub fn quotient_radical_dim(a: &AlgebraBasis, dec: &Decomposition) -> usize {
    let q = dec.complement.len();
    if q == 0 {
        return 0;
    }
    let coords = QuotientCoordinates::new(&dec.radical, &dec.complement);
    debug_assert_eq!(coords.quotient_dim, q);
    debug_assert_eq!(a.dim(), dec.radical.dim() + q);
    // left multiplication by each complement element on the quotient basis
    let regular: Vec<RatMatrix> = dec
        .complement
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = dec.complement.iter().map(|y| coords.project(&(x * y))).collect();
            RatMatrix::from_columns(q, &cols)
        })
        .collect();
    let mut gram = RatMatrix::zeros(q, q);
    for i in 0..q {
        for j in 0..q {
            gram[(i, j)] = (&regular[i] * &regular[j]).trace();
        }
    }
    gram.kernel().dim()
}

/// Failure of one of the structural properties of a computed radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalViolation {
    NotNilpotent(RatMatrix),
    NotLeftIdeal { element: RatMatrix, radical: RatMatrix },
    NotRightIdeal { element: RatMatrix, radical: RatMatrix },
    QuotientNotSemisimple { radical_dim: usize },
}

/// Re-checks nilpotency, the two-sided ideal property and semisimplicity of the quotient.
pub fn verify_radical(a: &AlgebraBasis, dec: &Decomposition) -> Result<(), RadicalViolation> {
    let d = a.ambient_dim() as u32;
    for r in dec.radical.basis() {
        if !r.pow(d).is_zero() {
            return Err(RadicalViolation::NotNilpotent(r.clone()));
        }
        for x in a.basis() {
            if !dec.radical.contains(&(x * r)) {
                return Err(RadicalViolation::NotLeftIdeal {
                    element: x.clone(),
                    radical: r.clone(),
                });
            }
            if !dec.radical.contains(&(r * x)) {
                return Err(RadicalViolation::NotRightIdeal {
                    element: x.clone(),
                    radical: r.clone(),
                });
            }
        }
    }
    match quotient_radical_dim(a, dec) {
        0 => Ok(()),
        radical_dim => Err(RadicalViolation::QuotientNotSemisimple { radical_dim }),
    }
}

/// A power of a nonzero radical element that squares to zero.
pub fn square_zero_element(dec: &Decomposition) -> Option<RatMatrix> {
    let r = dec.radical.basis().first()?;
    let mut current = r.clone();
    loop {
        let next = &current * r;
        if next.is_zero() {
            return Some(current);
        }
        current = next;
    }
}
