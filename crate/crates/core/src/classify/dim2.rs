use crate::commutant::{square_zero_element, Certificate};
use crate::linalg::{Subspace, Vector};
use crate::representation::{Assumption, Representation};

use super::{analyze_structure, projective_input, ClassifyError, ClassifyOptions, ConclusionLabel, Outcome};

const SURFACE_ASSUMPTIONS: [Assumption; 3] =
    [Assumption::Compact, Assumption::Connected, Assumption::Oriented];

/// Projective surfaces with non-discrete automorphism group: certifies a
/// holonomy-fixed point, which forces the torus or the sphere.
pub fn classify_dim2(rep: &Representation, options: &ClassifyOptions) -> Result<Outcome, ClassifyError> {
    let mut notes = Vec::new();
    let rep = projective_input(rep, 2, &mut notes)?;
    let analysis = analyze_structure(&rep, options)?;
    let dec = &analysis.decomposition;
    let mut out = Outcome::new(analysis.branch());
    out.notes = notes;
    out.note(format!(
        "commutant dimension {}, radical dimension {}, automorphism dimension {}",
        analysis.commutant.dim(),
        dec.radical.dim(),
        analysis.automorphism_dim
    ));
    if analysis.automorphism_dim == 0 {
        out.note("commutant is the scalars: the automorphism group is discrete");
        return Ok(out.finalize(&rep));
    }

    let point = if dec.radical.dim() > 0 {
        let a = square_zero_element(dec).expect("nonzero radical");
        out.note("image of a square-zero radical element is fixed by the holonomy");
        line_vector(&a.image())
    } else {
        out.note("radical is zero: looking for an idempotent with a one-dimensional eigenspace");
        dec.idempotent_witnesses
            .iter()
            .find_map(|e| line_vector(&e.kernel()).or_else(|| line_vector(&e.image())))
    };

    match point {
        Some(p) => {
            out.certificates.push(Certificate::FixedProjectivePoint(p));
            out.conclusion = vec![ConclusionLabel::TorusOrSphere];
            let assumptions = rep.assumptions();
            let held: Vec<Assumption> = SURFACE_ASSUMPTIONS
                .into_iter()
                .filter(|&a| assumptions.holds(a))
                .collect();
            out.consume(&held);
            let missing: Vec<&str> = SURFACE_ASSUMPTIONS
                .into_iter()
                .filter(|&a| !assumptions.holds(a))
                .map(Assumption::key)
                .collect();
            if !missing.is_empty() {
                out.note(format!(
                    "conclusion presumes a compact connected oriented surface; not declared: {}",
                    missing.join(", ")
                ));
            }
        }
        None => out.note("bounded search found no holonomy-fixed line"),
    }
    Ok(out.finalize(&rep))
}

fn line_vector(s: &Subspace) -> Option<Vector> {
    (s.dim() == 1).then(|| s.basis()[0].clone())
}
