//! Decision procedures for projective surfaces and projective 3-manifolds
//! whose automorphism group is not discrete.

mod dim2;
mod dim3;
mod nilpotent;
mod zero_set;

use std::fmt;

use thiserror::Error;

use crate::commutant::{
    centralizer_algebra, dickson_radical, invariant_affine_fields, project_automorphism_algebra,
    AlgebraBasis, Certificate, CommutantError, Decomposition, DEFAULT_SEARCH_BOUND,
};
use crate::linalg::{RatMatrix, Rational};
use crate::representation::{
    benzecri_suspend, default_suspension_factor, embed_affine_as_projective, Assumption,
    AssumptionSet, LiftSelection, RepError, RepKind, Representation,
};

pub use dim2::classify_dim2;
pub use dim3::classify_dim3;
pub use nilpotent::{flag_from_nilpotent_element, flag_from_nilpotent_pair, NilpotentFlagError};
pub use zero_set::{
    best_radiant_shift, radiant_shift_candidates, zero_set_of_affine_field, ShiftedZeroSet, ZeroSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    NotSolvableAut,
    SolvableNoncommutativeAut,
    CommutativeAut,
    AutTooSmall,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::NotSolvableAut => "NotSolvableAut",
            Branch::SolvableNoncommutativeAut => "SolvableNoncommutativeAut",
            Branch::CommutativeAut => "CommutativeAut",
            Branch::AutTooSmall => "AutTooSmall",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Branch::NotSolvableAut => "identity component of the automorphism group is not solvable",
            Branch::SolvableNoncommutativeAut => {
                "automorphism group solvable with noncommutative radical"
            }
            Branch::CommutativeAut => "automorphism group commutative",
            Branch::AutTooSmall => "automorphism group too small for the decision procedure",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConclusionLabel {
    SphericalManifold,
    S2xS1,
    TorusBundleFiniteCover,
    T2BundleOverS1,
    TorusOrSphere,
    SolvableFundamentalGroup,
    NilpotentFundamentalGroup,
    Undetermined,
}

impl ConclusionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ConclusionLabel::SphericalManifold => "SphericalManifold",
            ConclusionLabel::S2xS1 => "S2xS1",
            ConclusionLabel::TorusBundleFiniteCover => "TorusBundleFiniteCover",
            ConclusionLabel::T2BundleOverS1 => "T2BundleOverS1",
            ConclusionLabel::TorusOrSphere => "TorusOrSphere",
            ConclusionLabel::SolvableFundamentalGroup => "SolvableFundamentalGroup",
            ConclusionLabel::NilpotentFundamentalGroup => "NilpotentFundamentalGroup",
            ConclusionLabel::Undetermined => "Undetermined",
        }
    }
}

impl fmt::Display for ConclusionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The homeomorphism types allowed for a closed 3-manifold with solvable fundamental group
/// carrying a projective structure.
pub const SOLVABLE_DISJUNCTION: [ConclusionLabel; 3] = [
    ConclusionLabel::SphericalManifold,
    ConclusionLabel::S2xS1,
    ConclusionLabel::TorusBundleFiniteCover,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub branch: Branch,
    /// Read as a disjunction.
    pub conclusion: Vec<ConclusionLabel>,
    pub certificates: Vec<Certificate>,
    pub assumptions_used: Vec<Assumption>,
    pub notes: Vec<String>,
}

impl Outcome {
    fn new(branch: Branch) -> Self {
        Self {
            branch,
            conclusion: vec![ConclusionLabel::Undetermined],
            certificates: Vec::new(),
            assumptions_used: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Conclusion labels joined by `" | "`.
    pub fn label(&self) -> String {
        self.conclusion
            .iter()
            .map(|c| c.as_str())
            .collect::<Vec<_>>()
            .join(" | ")
    }

    pub fn is_determined(&self) -> bool {
        self.conclusion != [ConclusionLabel::Undetermined]
    }

    pub fn verify_certificates(&self, rep: &Representation) -> Result<(), crate::commutant::CertificateError> {
        self.certificates.iter().try_for_each(|c| c.verify(rep))
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn consume(&mut self, assumptions: &[Assumption]) {
        for &a in assumptions {
            if !self.assumptions_used.contains(&a) {
                self.assumptions_used.push(a);
            }
        }
        self.assumptions_used.sort();
    }

    /// Drops certificates that fail re-verification and downgrades any
    /// conclusion left without support.
    fn finalize(mut self, rep: &Representation) -> Self {
        let before = self.certificates.len();
        self.certificates.retain(|c| c.verify(rep).is_ok());
        if self.certificates.len() != before {
            self.note("certificates failing re-verification were discarded");
        }
        let supported = self
            .certificates
            .iter()
            .any(|c| !matches!(c, Certificate::NoneFound))
            || !self.assumptions_used.is_empty();
        if self.is_determined() && !supported {
            self.conclusion = vec![ConclusionLabel::Undetermined];
            self.note("no verified certificate or declared assumption supports a conclusion");
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Coefficient bound for rotational and radiant-shift searches.
    pub search_bound: i64,
    pub suspension_factor: Rational,
    pub lift: LiftSelection,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            search_bound: DEFAULT_SEARCH_BOUND,
            suspension_factor: default_suspension_factor(),
            lift: LiftSelection::Canonical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("wrong dimension: expected {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Commutant(#[from] CommutantError),
}

/// Commutant data of the radiant suspension shared by both classifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureAnalysis {
    pub suspended: Representation,
    pub commutant: AlgebraBasis,
    pub decomposition: Decomposition,
    /// Dimension of the commutant modulo the radiant direction.
    pub automorphism_dim: usize,
    /// Commutant elements representing a basis of that quotient.
    pub automorphism_representatives: Vec<RatMatrix>,
}

impl StructureAnalysis {
    pub fn branch(&self) -> Branch {
        if self.automorphism_dim == 0 {
            Branch::AutTooSmall
        } else if !self.decomposition.quotient_commutative {
            Branch::NotSolvableAut
        } else if !self.decomposition.radical_commutative {
            Branch::SolvableNoncommutativeAut
        } else {
            Branch::CommutativeAut
        }
    }
}

/// Suspends a projective-class representation and computes its commutant,
/// radical and the dimension of the projected automorphism algebra.
pub fn analyze_structure(
    rep: &Representation,
    options: &ClassifyOptions,
) -> Result<StructureAnalysis, ClassifyError> {
    let suspended = benzecri_suspend(rep, &options.lift, &options.suspension_factor)?;
    let commutant = centralizer_algebra(&suspended);
    let decomposition = dickson_radical(&commutant)?;
    let fields = invariant_affine_fields(&suspended)?;
    let quotient = project_automorphism_algebra(suspended.matrix_size(), &fields)?;
    Ok(StructureAnalysis {
        suspended,
        commutant,
        decomposition,
        automorphism_dim: quotient.dim(),
        automorphism_representatives: quotient.representatives,
    })
}

/// Checks the dimension and embeds linear or affine input projectively.
fn projective_input(
    rep: &Representation,
    dimension: usize,
    out: &mut Vec<String>,
) -> Result<Representation, ClassifyError> {
    if rep.dimension() != dimension {
        return Err(ClassifyError::WrongDimension {
            expected: dimension,
            found: rep.dimension(),
        });
    }
    match rep.kind() {
        RepKind::ProjectiveClass => Ok(rep.clone()),
        kind => {
            out.push(format!("{kind} input embedded as a projective-class representation"));
            Ok(embed_affine_as_projective(rep)?)
        }
    }
}

fn declared(assumptions: AssumptionSet, required: &[Assumption]) -> bool {
    assumptions.all_hold(required)
}
