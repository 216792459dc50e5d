use proptest::prelude::*;

use holonomy_core::classify::{classify_dim3, ClassifyOptions};
use holonomy_core::commutant::{centralizer_algebra, dickson_radical, verify_radical, AlgebraBasis};
use holonomy_core::io::{analyze_report, parse_rep, verify_report, write_rep, AnalyzeOptions};
use holonomy_core::linalg::rational::{format_rational, frac, int, parse_rational};
use holonomy_core::linalg::{characteristic_polynomial, minimal_polynomial, RatMatrix, Rational, Subspace};
use holonomy_core::representation::{
    benzecri_suspend, canonicalize_projective_class, validate_rep, Assumption, AssumptionSet, Generator,
    LiftSelection, RepKind,
};

fn matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        RatMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
    matrix(n).prop_filter("invertible", |m| m.is_invertible())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| frac(p, q))
}

fn assumptions() -> impl Strategy<Value = AssumptionSet> {
    prop::collection::vec(any::<bool>(), 5).prop_map(|flags| {
        let mut set = AssumptionSet::default();
        for (a, f) in Assumption::ALL.into_iter().zip(flags) {
            set.set(a, f);
        }
        set
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(p in any::<i64>(), q in 1i64..=1_000_000) {
        let r = frac(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn cayley_hamilton_and_minimal_divides(m in matrix(4)) {
        let chi = characteristic_polynomial(&m);
        let mu = minimal_polynomial(&m);
        prop_assert!(chi.eval_matrix(&m).is_zero());
        prop_assert!(mu.eval_matrix(&m).is_zero());
        prop_assert!(mu.divides(&chi));
        prop_assert_eq!(chi.degree(), Some(4));
    }

    #[test]
    fn rank_nullity(m in matrix(4)) {
        let kernel = m.kernel();
        prop_assert_eq!(kernel.dim() + m.rank(), 4);
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(4), b in matrix(4)) {
        let (u, w) = (a.image(), b.kernel());
        prop_assert_eq!(u.sum(&w).dim() + u.intersection(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.intersection(&w).is_subspace_of(&u));
        prop_assert!(u.is_subspace_of(&u.sum(&w)));
    }

    #[test]
    fn canonical_class_is_scale_invariant(m in invertible(3), s in nonzero_rational()) {
        let c = canonicalize_projective_class(&m);
        prop_assert_eq!(canonicalize_projective_class(&c), c.clone());
        prop_assert_eq!(canonicalize_projective_class(&m.scale(&s)), c);
    }

    #[test]
    fn centralizer_is_conjugation_equivariant(g in invertible(3), h in invertible(3), p in invertible(3)) {
        let p_inv = p.inverse().unwrap();
        let rep = |gens: Vec<RatMatrix>| validate_rep(
            gens.into_iter().enumerate().map(|(i, m)| Generator::new(format!("g{i}"), m)).collect(),
            RepKind::Linear, 3, AssumptionSet::default()).unwrap();
        let base = centralizer_algebra(&rep(vec![g.clone(), h.clone()]));
        let conj = centralizer_algebra(&rep(vec![&(&p * &g) * &p_inv, &(&p * &h) * &p_inv]));
        let moved = base.conjugate(&p, &p_inv);
        prop_assert_eq!(moved.span(), conj.span());
        for x in conj.basis() {
            prop_assert!(x.commutes_with(&(&(&p * &g) * &p_inv)));
        }
    }

    #[test]
    fn radical_of_generated_algebra_is_sound(a in matrix(3), b in matrix(3), unital in any::<bool>()) {
        let algebra = AlgebraBasis::generated_by(3, &[a, b], unital);
        let dec = dickson_radical(&algebra).unwrap();
        prop_assert!(verify_radical(&algebra, &dec).is_ok());
        for r in dec.radical.basis() {
            prop_assert!(r.pow(3).is_zero());
        }
    }

    #[test]
    fn suspension_adds_central_generator(g in invertible(3), s in nonzero_rational()) {
        let rep = validate_rep(vec![Generator::new("g", g.scale(&s))], RepKind::ProjectiveClass, 2,
            AssumptionSet::default()).unwrap();
        let suspended = benzecri_suspend(&rep, &LiftSelection::Canonical, &int(2)).unwrap();
        prop_assert_eq!(suspended.generators().len(), 2);
        let deck = &suspended.generators()[1].matrix;
        prop_assert_eq!(deck, &RatMatrix::scalar(3, &int(2)));
        prop_assert_eq!(centralizer_algebra(&suspended).dim(), centralizer_algebra(&rep).dim());
    }

    #[test]
    fn document_round_trip(g in invertible(3), s in nonzero_rational(), flags in assumptions()) {
        let rep = validate_rep(vec![Generator::new("g", g.scale(&s))], RepKind::Linear, 3, flags).unwrap();
        let text = write_rep(&rep);
        let again = parse_rep(&text).unwrap();
        prop_assert_eq!(&again, &rep);
        prop_assert_eq!(write_rep(&again), text);
    }

    #[test]
    fn analyze_certificates_reverify(g in invertible(3)) {
        let rep = validate_rep(vec![Generator::new("g", g)], RepKind::ProjectiveClass, 2,
            AssumptionSet::default()).unwrap();
        let report = analyze_report(&rep, &AnalyzeOptions::default()).unwrap();
        prop_assert!(verify_report(&report.to_value(), &rep).is_ok());
        prop_assert_eq!(report.to_json(), analyze_report(&rep, &AnalyzeOptions::default()).unwrap().to_json());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dim3_label_ignores_rescaling(g in invertible(4), s in nonzero_rational(), t in nonzero_rational()) {
        let unipotent = &RatMatrix::identity(4) + &RatMatrix::unit(4, 0, 3);
        let make = |a: &Rational, b: &Rational| validate_rep(
            vec![Generator::new("g", g.scale(a)), Generator::new("u", unipotent.scale(b))],
            RepKind::ProjectiveClass, 3, AssumptionSet::default()).unwrap();
        let options = ClassifyOptions::default();
        let base = classify_dim3(&make(&int(1), &int(1)), &options).unwrap();
        let scaled_rep = make(&s, &t);
        let scaled = classify_dim3(&scaled_rep, &options).unwrap();
        prop_assert_eq!(base.label(), scaled.label());
        prop_assert_eq!(base.branch, scaled.branch);
        prop_assert!(scaled.verify_certificates(&scaled_rep).is_ok());
    }

    #[test]
    fn invariant_hull_is_invariant(g in matrix(4), x in prop::collection::vec(-2i64..=2, 4)) {
        let v: Vec<Rational> = x.into_iter().map(int).collect();
        let hull = Subspace::span(4, [v]).invariant_hull(std::slice::from_ref(&g));
        prop_assert!(hull.is_invariant_under(&g));
    }
}
