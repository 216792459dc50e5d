use std::collections::BTreeSet;

use thiserror::Error;

use crate::linalg::rational::unit_vector;
use crate::linalg::{primary_decomposition, rational_eigenvalues, RatMatrix, Subspace};
use crate::representation::Representation;

use super::algebra::{centralizer_algebra, AlgebraBasis};

/// Cap on the number of candidate subspaces kept while closing under sums and intersections.
const MAX_CANDIDATES: usize = 64;

/// A strictly increasing chain of subspaces of a common ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    chain: Vec<Subspace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("flag members live in different ambient spaces")]
    AmbientMismatch,
    #[error("flag member {index} is not strictly contained in the next one")]
    NotIncreasing { index: usize },
}

impl Flag {
    pub fn new(chain: Vec<Subspace>) -> Result<Self, FlagError> {
        if let Some(first) = chain.first() {
            if chain.iter().any(|s| s.ambient_dim() != first.ambient_dim()) {
                return Err(FlagError::AmbientMismatch);
            }
        }
        for (index, pair) in chain.windows(2).enumerate() {
            if pair[0].dim() >= pair[1].dim() || !pair[0].is_subspace_of(&pair[1]) {
                return Err(FlagError::NotIncreasing { index });
            }
        }
        Ok(Self { chain })
    }

    pub fn chain(&self) -> &[Subspace] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.chain.first().map(Subspace::ambient_dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }

    /// Proper nonzero members of every dimension `1, …, d−1`.
    pub fn is_complete(&self) -> bool {
        match self.ambient_dim() {
            Some(d) => self.dims() == (1..d).collect::<Vec<_>>(),
            None => false,
        }
    }

    /// Image of the flag under an invertible matrix.
    pub fn map_by(&self, p: &RatMatrix) -> Flag {
        Flag {
            chain: self.chain.iter().map(|s| s.image_under(p)).collect(),
        }
    }
}

/// A generator moving a flag member.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("generator '{generator}' does not preserve {member}")]
pub struct InvarianceViolation {
    pub generator: String,
    pub member: Subspace,
}

/// Checks `g·V = V` for every labelled matrix `g` and every member `V`.
pub fn check_flag_invariance<'a>(
    matrices: impl IntoIterator<Item = (&'a str, &'a RatMatrix)>,
    flag: &Flag,
) -> Result<(), InvarianceViolation> {
    for (label, g) in matrices {
        for member in flag.chain() {
            if g.cols() != member.ambient_dim() || member.image_under(g) != *member {
                return Err(InvarianceViolation {
                    generator: label.to_string(),
                    member: member.clone(),
                });
            }
        }
    }
    Ok(())
}

pub fn verify_flag_invariant(rep: &Representation, flag: &Flag) -> Result<(), InvarianceViolation> {
    check_flag_invariance(
        rep.generators().iter().map(|g| (g.label.as_str(), &g.matrix)),
        flag,
    )
}

/// Longest verified chain of proper nonzero invariant subspaces harvested
/// from the commutant and the generators.
pub fn invariant_flag_search(rep: &Representation) -> Option<Flag> {
    search_invariant_flag(&rep.matrices(), &centralizer_algebra(rep), &[])
}

/// As [`invariant_flag_search`], with a precomputed commutant and extra candidate subspaces.
pub fn search_invariant_flag(
    generators: &[RatMatrix],
    commutant: &AlgebraBasis,
    seeds: &[Subspace],
) -> Option<Flag> {
    let d = commutant.ambient_dim();
    let proper = |s: &Subspace| !s.is_zero() && !s.is_full();
    let invariant = |s: &Subspace| generators.iter().all(|g| s.is_invariant_under(g));

    let mut harvest: Vec<Subspace> = seeds.to_vec();
    for x in commutant.basis().iter().chain(generators) {
        harvest.extend(spectral_subspaces(x));
    }
    for i in 0..d {
        harvest.push(Subspace::span(d, [unit_vector(d, i)]).invariant_hull(generators));
    }
    let mut found: BTreeSet<Subspace> = harvest
        .into_iter()
        .filter(|s| s.ambient_dim() == d && proper(s) && invariant(s))
        .collect();

    // sums and intersections of invariant subspaces stay invariant
    loop {
        let current: Vec<Subspace> = found.iter().cloned().collect();
        let mut grew = false;
        'outer: for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                for s in [a.sum(b), a.intersection(b)] {
                    if found.len() >= MAX_CANDIDATES {
                        break 'outer;
                    }
                    if proper(&s) && found.insert(s) {
                        grew = true;
                    }
                }
            }
        }
        if !grew || found.len() >= MAX_CANDIDATES {
            break;
        }
    }

    let mut subspaces: Vec<Subspace> = found.into_iter().collect();
    subspaces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    let chain = longest_chain(&subspaces, seeds)?;
    let flag = Flag::new(chain).ok()?;
    let labelled: Vec<(String, &RatMatrix)> = generators
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("#{i}"), g))
        .collect();
    check_flag_invariance(labelled.iter().map(|(l, g)| (l.as_str(), *g)), &flag)
        .ok()
        .map(|_| flag)
}

/// Kernels, images, eigenspaces and primary components of `x`.
fn spectral_subspaces(x: &RatMatrix) -> Vec<Subspace> {
    let n = x.rows();
    let mut out = vec![x.kernel(), x.image()];
    for lambda in rational_eigenvalues(x) {
        let shifted = x - &RatMatrix::scalar(n, &lambda);
        out.push(shifted.kernel());
        out.push(shifted.image());
    }
    out.extend(primary_decomposition(x).into_iter().map(|c| c.subspace));
    out
}

/// Longest chain; among equally long chains, the one using the most seeds.
fn longest_chain(sorted: &[Subspace], seeds: &[Subspace]) -> Option<Vec<Subspace>> {
    if sorted.is_empty() {
        return None;
    }
    let weight = |s: &Subspace| (1usize, seeds.contains(s) as usize);
    let mut best: Vec<(usize, usize)> = sorted.iter().map(weight).collect();
    let mut prev: Vec<Option<usize>> = vec![None; sorted.len()];
    for i in 0..sorted.len() {
        let w = weight(&sorted[i]);
        for j in 0..i {
            let cand = (best[j].0 + w.0, best[j].1 + w.1);
            if sorted[j].dim() < sorted[i].dim() && sorted[j].is_subspace_of(&sorted[i]) && cand > best[i] {
                best[i] = cand;
                prev[i] = Some(j);
            }
        }
    }
    let mut end = 0;
    for i in 1..sorted.len() {
        if best[i] > best[end] {
            end = i;
        }
    }
    let mut chain = vec![sorted[end].clone()];
    let mut cur = end;
    while let Some(p) = prev[cur] {
        chain.push(sorted[p].clone());
        cur = p;
    }
    chain.reverse();
    Some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, vector_from_i64 as v};
    use crate::representation::{validate_rep, AssumptionSet, Generator, RepKind};

    fn linear(gens: Vec<RatMatrix>) -> Representation {
        let n = gens[0].rows();
        validate_rep(
            gens.into_iter()
                .enumerate()
                .map(|(i, m)| Generator::new(format!("g{i}"), m))
                .collect(),
            RepKind::Linear,
            n,
            AssumptionSet::default(),
        )
        .unwrap()
    }

    fn e(n: usize, i: usize, j: usize) -> RatMatrix {
        RatMatrix::unit(n, i - 1, j - 1)
    }

    #[test]
    fn flag_validation() {
        let l = Subspace::span(3, [v(&[1, 0, 0])]);
        let p = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert!(Flag::new(vec![l.clone(), p.clone()]).unwrap().is_complete());
        assert_eq!(Flag::new(vec![p, l]), Err(FlagError::NotIncreasing { index: 0 }));
    }

    #[test]
    fn upper_triangular_generators() {
        let rep = linear(vec![
            RatMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]),
            RatMatrix::from_i64(&[&[2, 0, 1], &[0, 3, 0], &[0, 0, 5]]),
        ]);
        let flag = invariant_flag_search(&rep).unwrap();
        assert_eq!(flag.chain()[0], Subspace::span(3, [v(&[1, 0, 0])]));
        assert_eq!(flag.chain()[1], Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]));
        verify_flag_invariant(&rep, &flag).unwrap();
    }

    #[test]
    fn irreducible_rotation_has_no_flag() {
        let rep = linear(vec![RatMatrix::from_i64(&[&[0, -1], &[1, 0]])]);
        assert!(invariant_flag_search(&rep).is_none());
        let flag = Flag::new(vec![Subspace::span(2, [v(&[1, 0])])]).unwrap();
        let err = verify_flag_invariant(&rep, &flag).unwrap_err();
        assert_eq!(err.generator, "g0");
        assert_eq!(err.member, Subspace::span(2, [v(&[1, 0])]));
    }

    #[test]
    fn commutant_of_shift_pair() {
        let a = &e(4, 1, 3) + &e(4, 2, 4);
        let g = &RatMatrix::identity(4) + &a;
        let h = RatMatrix::block_diag(&RatMatrix::diagonal(&[int(2), int(3)]), &RatMatrix::diagonal(&[int(2), int(3)]));
        assert!(g.commutes_with(&a) && h.commutes_with(&a));
        let rep = linear(vec![g, h]);
        let flag = invariant_flag_search(&rep).unwrap();
        assert!(flag.is_complete());
        verify_flag_invariant(&rep, &flag).unwrap();
        let plane = a.kernel();
        assert_eq!(plane, Subspace::span(4, [v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]));
        let seeded = search_invariant_flag(&rep.matrices(), &centralizer_algebra(&rep), std::slice::from_ref(&plane)).unwrap();
        assert!(seeded.chain().contains(&plane));
        verify_flag_invariant(&rep, &seeded).unwrap();
    }

    #[test]
    fn identity_preserves_any_flag() {
        let rep = linear(vec![RatMatrix::identity(3)]);
        let flag = Flag::new(vec![Subspace::span(3, [v(&[1, 2, 3])])]).unwrap();
        verify_flag_invariant(&rep, &flag).unwrap();
        assert!(invariant_flag_search(&rep).unwrap().is_complete());
    }
}
