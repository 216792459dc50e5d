use std::collections::BTreeSet;

use crate::linalg::rational::height_bits;
use crate::linalg::RatMatrix;
use crate::representation::{RepKind, Representation};

use super::CommutantError;

/// Elements kept per level after deduplication.
const MAX_LEVEL_ELEMENTS: usize = 32;
/// Elements whose entries exceed this many bits are dropped.
const MAX_ENTRY_BITS: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolvabilityVerdict {
    /// Some level of sampled commutators is trivial.
    SolvableUpToTruncation,
    Unknown,
}

impl SolvabilityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            SolvabilityVerdict::SolvableUpToTruncation => "solvable-up-to-truncation",
            SolvabilityVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedLevel {
    pub depth: usize,
    /// Distinct nontrivial commutators kept at this level.
    pub nontrivial: usize,
    pub all_trivial: bool,
    /// Nontrivial commutators were dropped by the size caps.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    pub levels: Vec<DerivedLevel>,
    pub verdict: SolvabilityVerdict,
}

/// Sound but incomplete probe of the derived series. Level `k+1` consists of
/// commutators of pairs of words of length at most `word_length` in level `k`.
/// Never reports non-solvability.
pub fn truncated_derived_series(
    rep: &Representation,
    commutator_depth: usize,
    word_length: usize,
) -> Result<DerivedSeries, CommutantError> {
    if commutator_depth == 0 || word_length == 0 {
        return Err(CommutantError::InvalidTruncation);
    }
    // projective classes commute when their commutator is scalar
    let trivial = |m: &RatMatrix| match rep.kind() {
        RepKind::ProjectiveClass => m.scalar_value().is_some(),
        _ => m.is_identity(),
    };
    let mut current: Vec<RatMatrix> = rep.matrices();
    let mut levels = Vec::new();
    for depth in 1..=commutator_depth {
        let words = words_up_to(&current, word_length);
        let mut truncated = false;
        let inverses: Vec<RatMatrix> = words
            .iter()
            .map(|w| w.inverse().expect("group elements are invertible"))
            .collect();
        let mut next: BTreeSet<RatMatrix> = BTreeSet::new();
        'pairs: for i in 0..words.len() {
            for j in i + 1..words.len() {
                let c = &(&(&words[i] * &words[j]) * &inverses[i]) * &inverses[j];
                if trivial(&c) {
                    continue;
                }
                if too_large(&c) {
                    truncated = true;
                    continue;
                }
                next.insert(c);
                if next.len() >= MAX_LEVEL_ELEMENTS {
                    truncated = true;
                    break 'pairs;
                }
            }
        }
        let all_trivial = next.is_empty() && !truncated;
        levels.push(DerivedLevel {
            depth,
            nontrivial: next.len(),
            all_trivial,
            truncated,
        });
        if all_trivial {
            return Ok(DerivedSeries {
                levels,
                verdict: SolvabilityVerdict::SolvableUpToTruncation,
            });
        }
        if next.is_empty() {
            break;
        }
        current = next.into_iter().collect();
    }
    Ok(DerivedSeries {
        levels,
        verdict: SolvabilityVerdict::Unknown,
    })
}

fn too_large(m: &RatMatrix) -> bool {
    m.entries().iter().any(|e| height_bits(e) > MAX_ENTRY_BITS)
}

/// Distinct products of at most `len` elements of `gens ∪ gens⁻¹`, breadth
/// first, capped in count and entry size.
fn words_up_to(gens: &[RatMatrix], len: usize) -> Vec<RatMatrix> {
    let mut letters: Vec<RatMatrix> = Vec::new();
    for g in gens {
        letters.push(g.clone());
        letters.push(g.inverse().expect("group elements are invertible"));
    }
    let mut seen: BTreeSet<RatMatrix> = letters.iter().cloned().collect();
    let mut out: Vec<RatMatrix> = Vec::new();
    for l in &letters {
        if !out.contains(l) {
            out.push(l.clone());
        }
    }
    out.truncate(MAX_LEVEL_ELEMENTS);
    let mut frontier = out.clone();
    for _ in 1..len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in &letters {
                if out.len() >= MAX_LEVEL_ELEMENTS {
                    return out;
                }
                let p = w * l;
                if too_large(&p) {
                    continue;
                }
                if seen.insert(p.clone()) {
                    out.push(p.clone());
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};
    use crate::representation::{validate_rep, AssumptionSet, Generator};

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

    #[test]
    fn commuting_generators() {
        let rep = linear(vec![
            RatMatrix::diagonal(&[int(2), int(3)]),
            RatMatrix::diagonal(&[int(5), int(7)]),
        ]);
        let s = truncated_derived_series(&rep, 8, 6).unwrap();
        assert_eq!(s.verdict, SolvabilityVerdict::SolvableUpToTruncation);
        assert_eq!(s.levels.len(), 1);
        assert!(s.levels[0].all_trivial);
    }

    #[test]
    fn upper_triangular_pair_is_trivial_at_depth_two() {
        let rep = linear(vec![
            RatMatrix::from_i64(&[&[1, 1], &[0, 1]]),
            RatMatrix::diagonal(&[int(2), int(1)]),
        ]);
        let s = truncated_derived_series(&rep, 4, 2).unwrap();
        assert_eq!(s.verdict, SolvabilityVerdict::SolvableUpToTruncation);
        assert_eq!(s.levels.len(), 2);
        assert!(!s.levels[0].all_trivial);
        assert!(s.levels[1].all_trivial);
    }

    #[test]
    fn generic_rotations_are_unknown() {
        let (c, s) = (frac(3, 5), frac(4, 5));
        let z = RatMatrix::from_rows(vec![
            vec![c.clone(), -s.clone(), int(0)],
            vec![s.clone(), c.clone(), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        let x = RatMatrix::from_rows(vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), c.clone(), -s.clone()],
            vec![int(0), s, c],
        ])
        .unwrap();
        let series = truncated_derived_series(&linear(vec![z, x]), 3, 2).unwrap();
        assert_eq!(series.verdict, SolvabilityVerdict::Unknown);
        assert!(series.levels.iter().all(|l| !l.all_trivial));
    }

    #[test]
    fn rejects_zero_depth() {
        let rep = linear(vec![RatMatrix::identity(2)]);
        assert_eq!(truncated_derived_series(&rep, 0, 1), Err(CommutantError::InvalidTruncation));
    }
}
