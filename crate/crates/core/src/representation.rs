//! Holonomy data: linear, affine and projective-class matrix representations,
//! together with the sphere lift, the affine-into-projective embedding and the
//! radiant suspension of a projective representation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::rational::{denominator_lcm, int, is_zero_vector, numerator_gcd, scale_vector};
use crate::linalg::{solve_linear, RatMatrix, Rational, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepKind {
    /// `n×n` matrices acting linearly on `Q^n`.
    Linear,
    /// Homogeneous `(n+1)×(n+1)` matrices with last row `(0,…,0,1)`.
    Affine,
    /// `(n+1)×(n+1)` matrices defined up to a nonzero scalar.
    ProjectiveClass,
}

impl RepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::Linear => "linear",
            RepKind::Affine => "affine",
            RepKind::ProjectiveClass => "projective-class",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "linear" => Some(RepKind::Linear),
            "affine" => Some(RepKind::Affine),
            "projective-class" => Some(RepKind::ProjectiveClass),
            _ => None,
        }
    }

    /// Side length of the generator matrices for a manifold of dimension `n`.
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            RepKind::Linear => n,
            RepKind::Affine | RepKind::ProjectiveClass => n + 1,
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Geometric hypotheses that cannot be read off the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Assumption {
    DevelopingMapInjective,
    Compact,
    Oriented,
    Connected,
    /// The developing image misses the fixed subspace of the rotational splitting.
    FixedSetAvoided,
}

impl Assumption {
    pub const ALL: [Assumption; 5] = [
        Assumption::DevelopingMapInjective,
        Assumption::Compact,
        Assumption::Oriented,
        Assumption::Connected,
        Assumption::FixedSetAvoided,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Assumption::DevelopingMapInjective => "developing_map_injective",
            Assumption::Compact => "compact",
            Assumption::Oriented => "oriented",
            Assumption::Connected => "connected",
            Assumption::FixedSetAvoided => "fixed_set_avoided",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.key() == key)
    }
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AssumptionSet {
    pub developing_map_injective: bool,
    pub compact: bool,
    pub oriented: bool,
    pub connected: bool,
    pub fixed_set_avoided: bool,
}

impl AssumptionSet {
    pub fn holds(&self, a: Assumption) -> bool {
        match a {
            Assumption::DevelopingMapInjective => self.developing_map_injective,
            Assumption::Compact => self.compact,
            Assumption::Oriented => self.oriented,
            Assumption::Connected => self.connected,
            Assumption::FixedSetAvoided => self.fixed_set_avoided,
        }
    }

    pub fn set(&mut self, a: Assumption, value: bool) {
        match a {
            Assumption::DevelopingMapInjective => self.developing_map_injective = value,
            Assumption::Compact => self.compact = value,
            Assumption::Oriented => self.oriented = value,
            Assumption::Connected => self.connected = value,
            Assumption::FixedSetAvoided => self.fixed_set_avoided = value,
        }
    }

    pub fn with(mut self, a: Assumption) -> Self {
        self.set(a, true);
        self
    }

    pub fn all_hold(&self, required: &[Assumption]) -> bool {
        required.iter().all(|&a| self.holds(a))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    pub matrix: RatMatrix,
}

impl Generator {
    pub fn new(label: impl Into<String>, matrix: RatMatrix) -> Self {
        Self {
            label: label.into(),
            matrix,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("generator '{label}': expected {expected}×{expected} matrix, found {rows}×{cols}")]
    WrongShape {
        label: String,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("generator '{label}': generator not invertible")]
    NotInvertible { label: String },
    #[error("generator '{label}': not homogeneous-affine (last row must be (0,…,0,1))")]
    NotHomogeneousAffine { label: String },
    #[error("kind must be {expected}, found {found}")]
    KindMismatch { expected: String, found: RepKind },
    #[error("lift selection has {found} signs for {expected} generators")]
    SelectionLength { expected: usize, found: usize },
    #[error("suspension factor must be positive and different from 1, got {0}")]
    InvalidSuspensionFactor(String),
    #[error("developing scale must be positive")]
    NonPositiveScale,
    #[error("point must be nonzero")]
    ZeroPoint,
}

/// A validated finitely generated matrix group presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dimension: usize,
    kind: RepKind,
    generators: Vec<Generator>,
    assumptions: AssumptionSet,
}

/// Checks shapes, invertibility and the affine last row; canonicalizes
/// projective-class generators.
pub fn validate_rep(
    generators: Vec<Generator>,
    kind: RepKind,
    dimension: usize,
    assumptions: AssumptionSet,
) -> Result<Representation, RepError> {
    let size = kind.matrix_size(dimension);
    let mut out = Vec::with_capacity(generators.len());
    for Generator { label, matrix } in generators {
        if matrix.rows() != size || matrix.cols() != size {
            return Err(RepError::WrongShape {
                label,
                expected: size,
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if kind == RepKind::Affine && !has_affine_last_row(&matrix) {
            return Err(RepError::NotHomogeneousAffine { label });
        }
        if !matrix.is_invertible() {
            return Err(RepError::NotInvertible { label });
        }
        let matrix = match kind {
            RepKind::ProjectiveClass => canonicalize_projective_class(&matrix),
            _ => matrix,
        };
        out.push(Generator { label, matrix });
    }
    Ok(Representation {
        dimension,
        kind,
        generators: out,
        assumptions,
    })
}

fn has_affine_last_row(m: &RatMatrix) -> bool {
    let n = m.rows();
    n > 0 && (0..n).all(|j| if j + 1 == n { m[(n - 1, j)].is_one() } else { m[(n - 1, j)].is_zero() })
}

impl Representation {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn matrices(&self) -> Vec<RatMatrix> {
        self.generators.iter().map(|g| g.matrix.clone()).collect()
    }

    pub fn assumptions(&self) -> AssumptionSet {
        self.assumptions
    }

    pub fn with_assumptions(mut self, assumptions: AssumptionSet) -> Self {
        self.assumptions = assumptions;
        self
    }

    /// Side length of the generator matrices.
    pub fn matrix_size(&self) -> usize {
        self.kind.matrix_size(self.dimension)
    }

    /// Applies `f` to every generator matrix and revalidates.
    pub fn map_generators(
        &self,
        mut f: impl FnMut(&RatMatrix) -> RatMatrix,
    ) -> Result<Representation, RepError> {
        validate_rep(
            self.generators
                .iter()
                .map(|g| Generator::new(g.label.clone(), f(&g.matrix)))
                .collect(),
            self.kind,
            self.dimension,
            self.assumptions,
        )
    }

    /// Views a linear representation as affine (block form `diag(A, 1)`);
    /// affine representations are returned unchanged.
    pub fn as_affine(&self) -> Result<Representation, RepError> {
        match self.kind {
            RepKind::Affine => Ok(self.clone()),
            RepKind::Linear => validate_rep(
                self.generators
                    .iter()
                    .map(|g| {
                        Generator::new(
                            g.label.clone(),
                            RatMatrix::block_diag(&g.matrix, &RatMatrix::identity(1)),
                        )
                    })
                    .collect(),
                RepKind::Affine,
                self.dimension,
                self.assumptions,
            ),
            RepKind::ProjectiveClass => Err(RepError::KindMismatch {
                expected: "linear or affine".into(),
                found: self.kind,
            }),
        }
    }

    fn require_kind(&self, kind: RepKind) -> Result<(), RepError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(RepError::KindMismatch {
                expected: kind.as_str().into(),
                found: self.kind,
            })
        }
    }
}

/// Scales `m` to integer entries with content 1 and a positive first nonzero
/// entry (row-major). Any two nonzero multiples of `m` map to the same matrix.
pub fn canonicalize_projective_class(m: &RatMatrix) -> RatMatrix {
    let entries = m.entries();
    let Some(first) = entries.iter().find(|e| !e.is_zero()) else {
        return m.clone();
    };
    let lcm = Rational::from_integer(denominator_lcm(entries));
    let integral: Vec<Rational> = entries.iter().map(|e| e * &lcm).collect();
    let content = numerator_gcd(&integral);
    let sign = if first.is_negative() { -1 } else { 1 };
    let factor = lcm / Rational::from_integer(content * BigInt::from(sign));
    m.scale(&factor)
}

/// The two sphere lifts `g` and `−g` of every generator of a projective-class representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereLifts {
    dimension: usize,
    assumptions: AssumptionSet,
    choices: Vec<(String, [RatMatrix; 2])>,
}

/// Which sphere lift to take for each generator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LiftSelection {
    /// The canonical representative of every class.
    #[default]
    Canonical,
    /// `true` selects the negated lift of the generator at that position.
    Signs(Vec<bool>),
}

impl SphereLifts {
    pub fn choices(&self) -> &[(String, [RatMatrix; 2])] {
        &self.choices
    }

    /// Number of distinct selections, `2^k` for `k` generators (saturating).
    pub fn selection_count(&self) -> u128 {
        1u128.checked_shl(self.choices.len() as u32).unwrap_or(u128::MAX)
    }

    pub fn default_lift(&self) -> Representation {
        self.select(&LiftSelection::Canonical)
            .expect("canonical selection always matches")
    }

    pub fn select(&self, selection: &LiftSelection) -> Result<Representation, RepError> {
        let signs = match selection {
            LiftSelection::Canonical => vec![false; self.choices.len()],
            LiftSelection::Signs(s) if s.len() == self.choices.len() => s.clone(),
            LiftSelection::Signs(s) => {
                return Err(RepError::SelectionLength {
                    expected: self.choices.len(),
                    found: s.len(),
                })
            }
        };
        Ok(Representation {
            dimension: self.dimension + 1,
            kind: RepKind::Linear,
            generators: self
                .choices
                .iter()
                .zip(signs)
                .map(|((label, pair), neg)| Generator::new(label.clone(), pair[neg as usize].clone()))
                .collect(),
            assumptions: self.assumptions,
        })
    }

    /// Every selection, in binary order of the sign vector.
    pub fn all_selections(&self) -> impl Iterator<Item = Representation> + '_ {
        let k = self.choices.len();
        assert!(k < 20, "too many generators to enumerate every sphere lift");
        (0u32..(1 << k)).map(move |mask| {
            let signs = (0..k).map(|i| mask & (1 << i) != 0).collect();
            self.select(&LiftSelection::Signs(signs))
                .expect("selection length matches")
        })
    }
}

pub fn lift_to_sphere(rep: &Representation) -> Result<SphereLifts, RepError> {
    rep.require_kind(RepKind::ProjectiveClass)?;
    Ok(SphereLifts {
        dimension: rep.dimension,
        assumptions: rep.assumptions,
        choices: rep
            .generators
            .iter()
            .map(|g| (g.label.clone(), [g.matrix.clone(), -&g.matrix]))
            .collect(),
    })
}

/// Linear generators `A` become the classes of `diag(A, 1)`; affine
/// generators are already homogeneous and pass through.
pub fn embed_affine_as_projective(rep: &Representation) -> Result<Representation, RepError> {
    let affine = rep.as_affine()?;
    validate_rep(
        affine.generators,
        RepKind::ProjectiveClass,
        rep.dimension,
        rep.assumptions,
    )
}

/// Label of the central generator added by the suspension.
pub const DECK_LABEL: &str = "deck";

/// Radiant suspension: the chosen sphere lifts of the generators plus the
/// central element `factor·I` in dimension `n+1`.
pub fn benzecri_suspend(
    rep: &Representation,
    selection: &LiftSelection,
    factor: &Rational,
) -> Result<Representation, RepError> {
    if !factor.is_positive() || factor.is_one() {
        return Err(RepError::InvalidSuspensionFactor(
            crate::linalg::rational::format_rational(factor),
        ));
    }
    let mut lifted = lift_to_sphere(rep)?.select(selection)?;
    let size = lifted.matrix_size();
    lifted
        .generators
        .push(Generator::new(DECK_LABEL, RatMatrix::scalar(size, factor)));
    Ok(lifted)
}

pub fn default_suspension_factor() -> Rational {
    int(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiantFixedPoint {
    pub point: Vector,
    /// Homogeneous translation `T` with `T⁻¹·g·T` linear for every generator `g`.
    pub conjugator: RatMatrix,
}

/// Common fixed point of all affine generators, from the stacked system `(L_i − I)x = −t_i`.
pub fn radiant_fixed_point(rep: &Representation) -> Result<Option<RadiantFixedPoint>, RepError> {
    rep.require_kind(RepKind::Affine)?;
    let n = rep.dimension;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for g in &rep.generators {
        for i in 0..n {
            rows.push(
                (0..n)
                    .map(|j| {
                        let v = g.matrix[(i, j)].clone();
                        if i == j {
                            v - Rational::one()
                        } else {
                            v
                        }
                    })
                    .collect(),
            );
            rhs.push(-g.matrix[(i, n)].clone());
        }
    }
    let point = if rows.is_empty() {
        vec![Rational::zero(); n]
    } else {
        let a = RatMatrix::from_rows(rows).expect("rows of equal length");
        match solve_linear(&a, &rhs).expect("shapes agree") {
            Some(sol) => sol.particular,
            None => return Ok(None),
        }
    };
    let mut conjugator = RatMatrix::identity(n + 1);
    for (i, p) in point.iter().enumerate() {
        conjugator[(i, n)] = p.clone();
    }
    Ok(Some(RadiantFixedPoint { point, conjugator }))
}

/// Evaluates the suspended developing map at a sphere point `x` and radius `t`: returns `t·x`.
pub fn develop_eval(x: &[Rational], t: &Rational) -> Result<Vector, RepError> {
    if !t.is_positive() {
        return Err(RepError::NonPositiveScale);
    }
    if is_zero_vector(x) {
        return Err(RepError::ZeroPoint);
    }
    Ok(scale_vector(x, t))
}

/// An affine vector field `x ↦ L·x + c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineField {
    pub linear: RatMatrix,
    pub constant: Vector,
}

impl AffineField {
    pub fn new(linear: RatMatrix, constant: Vector) -> Self {
        assert!(linear.is_square() && linear.rows() == constant.len());
        Self { linear, constant }
    }

    pub fn linear_only(linear: RatMatrix) -> Self {
        let n = linear.rows();
        Self::new(linear, vec![Rational::zero(); n])
    }

    /// The radiant field `x ↦ x`.
    pub fn radiant(n: usize) -> Self {
        Self::linear_only(RatMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.constant.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Vector {
        self.linear
            .mul_vec(x)
            .into_iter()
            .zip(&self.constant)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// `[[L, c], [0, 0]]`: commutes with a homogeneous affine map exactly when
    /// the field is invariant under it.
    pub fn homogeneous(&self) -> RatMatrix {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.linear[(i, j)].clone();
            }
            m[(i, n)] = self.constant[i].clone();
        }
        m
    }

    pub fn from_homogeneous(m: &RatMatrix) -> Self {
        let n = m.rows() - 1;
        let mut linear = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                linear[(i, j)] = m[(i, j)].clone();
            }
        }
        Self::new(linear, (0..n).map(|i| m[(i, n)].clone()).collect())
    }

    /// `self + c·X_R`.
    pub fn shifted(&self, c: &Rational) -> Self {
        Self::new(
            &self.linear + &RatMatrix::scalar(self.dim(), c),
            self.constant.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, vector_from_i64 as v};

    fn projective(gens: Vec<RatMatrix>, n: usize) -> Representation {
        validate_rep(
            gens.into_iter()
                .enumerate()
                .map(|(i, m)| Generator::new(format!("g{i}"), m))
                .collect(),
            RepKind::ProjectiveClass,
            n,
            AssumptionSet::default(),
        )
        .unwrap()
    }

    #[test]
    fn validate_identity_projective() {
        let rep = projective(vec![RatMatrix::identity(4)], 3);
        assert_eq!(rep.generators()[0].matrix, RatMatrix::identity(4));
        assert_eq!(rep.matrix_size(), 4);
    }

    #[test]
    fn validate_rejects_singular() {
        let err = validate_rep(
            vec![Generator::new("s", RatMatrix::from_i64(&[&[1, 2], &[2, 4]]))],
            RepKind::Linear,
            2,
            AssumptionSet::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("generator not invertible"));
    }

    #[test]
    fn validate_rejects_bad_affine_row() {
        let m = RatMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 2]]);
        let err = validate_rep(vec![Generator::new("a", m)], RepKind::Affine, 2, AssumptionSet::default())
            .unwrap_err();
        assert!(err.to_string().contains("not homogeneous-affine"));
    }

    #[test]
    fn validate_rejects_wrong_shape() {
        let err = validate_rep(
            vec![Generator::new("g1", RatMatrix::identity(3))],
            RepKind::ProjectiveClass,
            3,
            AssumptionSet::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("expected 4×4"));
    }

    #[test]
    fn canonical_scaling_examples() {
        let m = RatMatrix::diagonal(&[int(-2), int(-2)]);
        assert_eq!(canonicalize_projective_class(&m), RatMatrix::identity(2));
        let third = RatMatrix::scalar(4, &frac(1, 3));
        assert_eq!(canonicalize_projective_class(&third), RatMatrix::identity(4));
        let rot = RatMatrix::from_i64(&[&[0, -4], &[2, 0]]);
        assert_eq!(
            canonicalize_projective_class(&rot),
            RatMatrix::from_i64(&[&[0, 2], &[-1, 0]])
        );
    }

    #[test]
    fn lifts_of_identity() {
        let rep = projective(vec![RatMatrix::identity(4)], 3);
        let lifts = lift_to_sphere(&rep).unwrap();
        assert_eq!(lifts.selection_count(), 2);
        let all: Vec<_> = lifts.all_selections().collect();
        assert_eq!(all[0].generators()[0].matrix, RatMatrix::identity(4));
        assert_eq!(all[1].generators()[0].matrix, -&RatMatrix::identity(4));
        assert_eq!(lifts.default_lift().generators()[0].matrix, RatMatrix::identity(4));
        assert_eq!(lifts.default_lift().kind(), RepKind::Linear);
        assert_eq!(lifts.default_lift().dimension(), 4);
    }

    #[test]
    fn lift_counting() {
        let g = RatMatrix::diagonal(&[int(1), int(1), int(1), int(-1)]);
        let rep = projective(vec![g.clone(), g.clone(), g], 3);
        assert_eq!(lift_to_sphere(&rep).unwrap().selection_count(), 8);
    }

    #[test]
    fn sign_flip_lift_covers_the_same_projective_map() {
        // both lifts induce the same map on lines: g·x and −g·x span the same line
        let g = RatMatrix::diagonal(&[int(1), int(1), int(1), int(-1)]);
        let rep = projective(vec![g.clone()], 3);
        let lifts = lift_to_sphere(&rep).unwrap();
        let [a, b] = &lifts.choices()[0].1;
        assert_eq!(canonicalize_projective_class(a), canonicalize_projective_class(b));
        assert_eq!(b, &-&g);
    }

    #[test]
    fn embedding_block_form() {
        let lin = validate_rep(
            vec![Generator::new("h", RatMatrix::scalar(2, &int(2)))],
            RepKind::Linear,
            2,
            AssumptionSet::default(),
        )
        .unwrap();
        let proj = embed_affine_as_projective(&lin).unwrap();
        assert_eq!(proj.kind(), RepKind::ProjectiveClass);
        assert_eq!(
            proj.generators()[0].matrix,
            RatMatrix::diagonal(&[int(2), int(2), int(1)])
        );
        let t = RatMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let aff = validate_rep(vec![Generator::new("t", t.clone())], RepKind::Affine, 2, AssumptionSet::default())
            .unwrap();
        assert_eq!(embed_affine_as_projective(&aff).unwrap().generators()[0].matrix, t);
        let empty = validate_rep(vec![], RepKind::Linear, 5, AssumptionSet::default()).unwrap();
        let e = embed_affine_as_projective(&empty).unwrap();
        assert!(e.generators().is_empty());
        assert_eq!(e.dimension(), 5);
    }

    #[test]
    fn suspension_of_trivial_holonomy() {
        let rep = projective(vec![], 3);
        let s = benzecri_suspend(&rep, &LiftSelection::Canonical, &int(2)).unwrap();
        assert_eq!(s.kind(), RepKind::Linear);
        assert_eq!(s.dimension(), 4);
        assert_eq!(s.matrices(), vec![RatMatrix::scalar(4, &int(2))]);
    }

    #[test]
    fn suspension_appends_central_generator() {
        let g = RatMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let rep = projective(vec![g.clone()], 2);
        let s = benzecri_suspend(&rep, &LiftSelection::Signs(vec![true]), &int(2)).unwrap();
        assert_eq!(s.matrices(), vec![-&g, RatMatrix::scalar(3, &int(2))]);
        assert!(matches!(
            benzecri_suspend(&s, &LiftSelection::Canonical, &int(2)),
            Err(RepError::KindMismatch { .. })
        ));
        assert!(benzecri_suspend(&rep, &LiftSelection::Canonical, &int(1)).is_err());
    }

    #[test]
    fn fixed_points() {
        let lin = validate_rep(
            vec![Generator::new("a", RatMatrix::from_i64(&[&[2, 1], &[0, 3]]))],
            RepKind::Linear,
            2,
            AssumptionSet::default(),
        )
        .unwrap();
        let fp = radiant_fixed_point(&lin.as_affine().unwrap()).unwrap().unwrap();
        assert_eq!(fp.point, v(&[0, 0]));
        assert!(fp.conjugator.is_identity());

        let tr = RatMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let aff = validate_rep(vec![Generator::new("t", tr)], RepKind::Affine, 2, AssumptionSet::default())
            .unwrap();
        assert!(radiant_fixed_point(&aff).unwrap().is_none());

        let g = RatMatrix::from_i64(&[&[2, 0, 1], &[0, 2, 0], &[0, 0, 1]]);
        let aff = validate_rep(vec![Generator::new("g", g.clone())], RepKind::Affine, 2, AssumptionSet::default())
            .unwrap();
        let fp = radiant_fixed_point(&aff).unwrap().unwrap();
        assert_eq!(fp.point, v(&[-1, 0]));
        let conj = &(&fp.conjugator.inverse().unwrap() * &g) * &fp.conjugator;
        assert_eq!(conj, RatMatrix::diagonal(&[int(2), int(2), int(1)]));
    }

    #[test]
    fn developing_evaluation() {
        assert_eq!(develop_eval(&v(&[1, 0, 0, 0]), &int(1)).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(develop_eval(&v(&[0, 1, 0, 0]), &int(2)).unwrap(), v(&[0, 2, 0, 0]));
        assert_eq!(
            develop_eval(&v(&[1, 1, 0, 0]), &frac(1, 2)).unwrap(),
            vec![frac(1, 2), frac(1, 2), int(0), int(0)]
        );
        assert_eq!(develop_eval(&v(&[1, 0]), &int(0)), Err(RepError::NonPositiveScale));
        assert_eq!(develop_eval(&v(&[0, 0]), &int(1)), Err(RepError::ZeroPoint));
    }

    #[test]
    fn field_homogeneous_round_trip() {
        let f = AffineField::new(RatMatrix::from_i64(&[&[1, 2], &[3, 4]]), v(&[5, 6]));
        assert_eq!(AffineField::from_homogeneous(&f.homogeneous()), f);
        assert_eq!(f.eval(&v(&[1, 1])), v(&[8, 13]));
        assert_eq!(
            AffineField::radiant(2).shifted(&int(-1)).linear,
            RatMatrix::zeros(2, 2)
        );
    }
}
