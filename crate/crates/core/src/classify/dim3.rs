use crate::commutant::{find_rotational_element, search_invariant_flag, Certificate, Decomposition, Flag};
use crate::linalg::{RatMatrix, Subspace};
use crate::representation::{AffineField, Assumption, Representation};

use super::nilpotent::{flag_from_nilpotent_element, flag_from_nilpotent_pair, NilpotentFlagError};
use super::zero_set::best_radiant_shift;
use super::{
    analyze_structure, declared, projective_input, Branch, ClassifyError, ClassifyOptions,
    ConclusionLabel, Outcome, StructureAnalysis, SOLVABLE_DISJUNCTION,
};

const INJECTIVE_COMPACT: [Assumption; 2] = [Assumption::DevelopingMapInjective, Assumption::Compact];
const AVOIDED_COMPACT: [Assumption; 2] = [Assumption::FixedSetAvoided, Assumption::Compact];

/// Projective 3-manifolds with at least two-dimensional automorphism group.
pub fn classify_dim3(rep: &Representation, options: &ClassifyOptions) -> Result<Outcome, ClassifyError> {
    let mut notes = Vec::new();
    let rep = projective_input(rep, 3, &mut notes)?;
    let analysis = analyze_structure(&rep, options)?;
    let branch = if analysis.automorphism_dim < 2 {
        Branch::AutTooSmall
    } else {
        analysis.branch()
    };
    let mut out = Outcome::new(branch);
    out.notes = notes;
    out.note(format!(
        "commutant dimension {}, radical dimension {}, automorphism dimension {}",
        analysis.commutant.dim(),
        analysis.decomposition.radical.dim(),
        analysis.automorphism_dim
    ));
    out.note(format!("branch: {}", branch.description()));
    if branch == Branch::AutTooSmall {
        out.note("automorphism dimension below 2: the decision procedure does not apply");
        return Ok(out.finalize(&rep));
    }

    let assumptions = rep.assumptions();
    let mut seeds: Vec<Subspace> = Vec::new();
    let mut solvable_by_assumption = false;
    match branch {
        Branch::NotSolvableAut => {
            match find_rotational_element(&analysis.commutant, options.search_bound) {
                Some(rot) => {
                    out.note(format!(
                        "rotational element splits the space as U ⊕ V with dim U = {}, dim V = {}",
                        rot.u.dim(),
                        rot.v.dim()
                    ));
                    seeds.push(rot.u.clone());
                    if !rot.v.is_zero() {
                        seeds.push(rot.v.clone());
                    }
                    out.certificates.push(Certificate::RotationalElement(rot));
                    if declared(assumptions, &AVOIDED_COMPACT) {
                        out.conclusion = vec![ConclusionLabel::T2BundleOverS1];
                        out.consume(&AVOIDED_COMPACT);
                        out.note("developing image avoids V: a finite cover fibres over the circle with torus fibre");
                        return Ok(out.finalize(&rep));
                    }
                    out.note(
                        "conditional: if the developing image avoids V a finite cover is a torus bundle over the circle; \
                         if it meets V, an injective developing map on a compact manifold makes the holonomy solvable",
                    );
                    solvable_by_assumption = declared(assumptions, &INJECTIVE_COMPACT);
                }
                None => out.note("bounded search found no rotational element"),
            }
        }
        Branch::SolvableNoncommutativeAut => match nilpotent_flag(&analysis.decomposition) {
            Ok((flag, how)) => {
                out.note(how);
                out.certificates.push(Certificate::InvariantFlag(flag));
            }
            Err(e) => out.note(format!("flag from the radical failed: {e}")),
        },
        Branch::CommutativeAut => commutative_branch(&analysis, options, &mut out, &mut seeds),
        Branch::AutTooSmall => unreachable!("handled above"),
    }

    if !has_complete_flag(&out) {
        match search_invariant_flag(&rep.matrices(), &analysis.commutant, &seeds) {
            Some(flag) if flag.is_complete() => {
                out.note("complete invariant flag found by subspace search");
                out.certificates.push(Certificate::InvariantFlag(flag));
            }
            Some(flag) => {
                out.note(format!("only a partial invariant flag found, dimensions {:?}", flag.dims()));
                out.certificates.push(Certificate::InvariantFlag(flag));
            }
            None => out.note("no invariant subspace found"),
        }
    }

    if has_complete_flag(&out) || solvable_by_assumption {
        if has_complete_flag(&out) {
            out.note("holonomy preserves a complete flag, so its image is solvable");
        }
        if declared(assumptions, &INJECTIVE_COMPACT) {
            out.consume(&INJECTIVE_COMPACT);
            out.conclusion = SOLVABLE_DISJUNCTION.to_vec();
            out.note(
                "closed 3-manifolds with solvable fundamental group are spherical, S²×S¹, finitely covered by a \
                 torus bundle, or RP³#RP³; the last carries no projective structure",
            );
        } else {
            out.conclusion = vec![ConclusionLabel::SolvableFundamentalGroup];
            out.note("developing_map_injective and compact not both declared: topology not narrowed further");
        }
    }
    Ok(out.finalize(&rep))
}

fn has_complete_flag(out: &Outcome) -> bool {
    out.certificates
        .iter()
        .any(|c| matches!(c, Certificate::InvariantFlag(f) if f.is_complete()))
}

/// A flag preserved by everything commuting with the radical: from an element
/// with nonzero square when one exists, otherwise from a non-commuting pair.
fn nilpotent_flag(dec: &Decomposition) -> Result<(Flag, &'static str), NilpotentFlagError> {
    let b = dec.radical.basis();
    let sums = (0..b.len()).flat_map(|i| (i + 1..b.len()).map(move |j| &b[i] + &b[j]));
    if let Some(a) = b.iter().cloned().chain(sums).find(|x| !(x * x).is_zero()) {
        return flag_from_nilpotent_element(&a)
            .map(|f| (f, "radical element with nonzero square gives a flag from its kernel and image"));
    }
    for (i, x) in b.iter().enumerate() {
        for y in &b[i + 1..] {
            if !x.commutes_with(y) {
                return flag_from_nilpotent_pair(x, y)
                    .map(|f| (f, "non-commuting square-zero radical pair gives a flag from their kernels"));
            }
        }
    }
    Err(NilpotentFlagError::Commuting)
}

/// Zero set analysis of invariant fields: picks the field and radiant shift
/// with the largest zero set `U` and seeds the flag search with the
/// subspaces the case analysis on `dim U` produces.
fn commutative_branch(
    analysis: &StructureAnalysis,
    options: &ClassifyOptions,
    out: &mut Outcome,
    seeds: &mut Vec<Subspace>,
) {
    let reps = &analysis.automorphism_representatives;
    let mut best: Option<(usize, RatMatrix, Subspace)> = None;
    for (i, x) in reps.iter().enumerate() {
        let Some(shifted) = best_radiant_shift(&AffineField::linear_only(x.clone()), options.search_bound)
        else {
            continue;
        };
        let n = x.rows();
        let xs = x + &RatMatrix::scalar(n, &shifted.shift);
        let u = shifted.zero_set.direction_space;
        if best.as_ref().is_none_or(|(_, _, b)| u.dim() > b.dim()) {
            best = Some((i, xs, u));
        }
    }
    let Some((xi, xs, u)) = best.filter(|(_, _, u)| !u.is_zero()) else {
        out.note("no invariant field has a nontrivial zero set after radiant shifts");
        return;
    };
    out.note(format!("zero set U of a shifted invariant field has dimension {}", u.dim()));
    out.certificates.push(Certificate::InvariantSubspace(u.clone()));
    seeds.push(u.clone());
    let y = reps.iter().enumerate().find(|(i, _)| *i != xi).map(|(_, y)| y.clone());
    let im_x = xs.image();
    match u.dim() {
        3 => {
            seeds.push(im_x.clone());
            if let Some(y) = &y {
                let im_y = y.image();
                seeds.push(im_y.clone());
                seeds.push(im_x.sum(&im_y));
            }
        }
        2 => {
            seeds.extend([im_x.clone(), u.intersection(&im_x), u.sum(&im_x)]);
            if let Some(y) = &y {
                if let Some(a) = im_x.restrict(y).and_then(|r| r.scalar_value()) {
                    let z = y - &RatMatrix::scalar(y.rows(), &a);
                    out.note("restriction of the second field to Im X is scalar; using the shifted field Z");
                    seeds.extend([z.kernel(), z.image()]);
                }
            }
        }
        _ => {
            let xs2 = &xs * &xs;
            seeds.extend([im_x, xs2.kernel(), xs2.image()]);
            out.note(
                "one-dimensional zero set: the argument reduces to the two- and three-dimensional cases and \
                 yields solvability, so nilpotency is not claimed",
            );
        }
    }
    seeds.retain(|s| !s.is_zero() && !s.is_full());
}
