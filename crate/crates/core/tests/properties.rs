//! Randomized checks of the kernel against linear-algebra oracles.

mod common;

use common::*;
use fourfold::scenes::session::Session;
use fourfold::Ideal;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn groebner_basis_is_unique(
        raw in prop::collection::vec(prop::collection::vec(prop::collection::vec(prop::option::weighted(0.3, 1..P as u32), 1..12), 1..4), 1..4),
        perm in 0usize..64,
        extra in (0usize..4, 0usize..4, 1u32..P as u32),
    ) {
        let r = ring(3);
        let gens: Vec<_> = raw.iter().map(|parts| mixed(&r, parts)).filter(|f| !f.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        gb_unique(&r, &gens, perm, extra)?;
    }

    #[test]
    fn homogeneous_basis_is_unique(raw in prop::collection::vec(raw_form(1, 3), 1..5), perm in 0usize..64, extra in (0usize..5, 0usize..5, 1u32..P as u32)) {
        let r = ring(4);
        let gens = forms(&r, &raw);
        prop_assume!(!gens.is_empty());
        gb_unique(&r, &gens, perm, extra)?;
    }

    #[test]
    fn normal_form_matches_rank_test(
        raw in prop::collection::vec(raw_form(2, 3), 1..4),
        d in 0u32..=6,
        target in prop::collection::vec(prop::option::weighted(0.5, 1..P as u32), 1..40),
        mults in prop::collection::vec(raw_form(0, 4), 1..4),
        inside in any::<bool>(),
    ) {
        let r = ring(4);
        let gens = forms(&r, &raw);
        prop_assume!(!gens.is_empty());
        // Half the time build an element of the ideal so both answers occur.
        let f = if inside {
            gens.iter().zip(mults.iter().cycle()).fold(fourfold::Polynomial::zero(&r), |acc, (g, (_, c))| {
                let e = g.degree().unwrap();
                if e > d { acc } else { acc.add(&g.mul(&form(&r, d - e, c))) }
            })
        } else {
            form(&r, d, &target)
        };
        nf_matches_span(&r, &gens, &f, d)?;
    }

    #[test]
    fn hilbert_function_matches_span(raw in prop::collection::vec(raw_form(1, 3), 1..5), d in 0u32..=8) {
        let r = ring(4);
        let gens = forms(&r, &raw);
        prop_assume!(!gens.is_empty());
        hf_matches_span(&Ideal::new(&r, gens).unwrap(), d)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn saturation_is_idempotent(raw in prop::collection::vec(raw_form(1, 3), 1..4)) {
        let r = ring(4);
        let gens = forms(&r, &raw);
        prop_assume!(!gens.is_empty());
        saturation_idempotent(&Ideal::new(&r, gens).unwrap())?;
    }

    #[test]
    fn resolutions_are_complexes(raw in prop::collection::vec(raw_form(1, 3), 1..5), five in any::<bool>()) {
        let r = ring(if five { 5 } else { 4 });
        let gens = forms(&r, &raw);
        prop_assume!(!gens.is_empty());
        resolution_is_complex(&r, &gens)?;
    }
}

#[test]
fn hilbert_function_on_scene_ideals() {
    let mut s = Session::new(67, 1).unwrap();
    let ideals: Vec<(&str, Ideal)> = vec![
        ("points", s.j().unwrap()),
        ("fat points", s.config(3).unwrap().ideal(s.ring()).unwrap()),
        ("base", s.ii().unwrap()),
        ("rational quintic", s.i5().unwrap()),
        ("lines", s.lines().unwrap()),
        ("quartics", s.quartics().unwrap()),
    ];
    for (name, i) in &ideals {
        for d in 0..=8 {
            hf_matches_span(i, d).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
    let j = s.j().unwrap();
    for d in 0..=8 {
        assert_eq!(j.hilbert_function(d), hf_by_evaluation(s.ring(), s.points(), d), "points, degree {d}");
    }
}

#[test]
fn scene_resolutions_are_complexes() {
    let mut s = Session::new(67, 1).unwrap();
    for i in [s.j().unwrap(), s.ii().unwrap(), s.i5().unwrap()] {
        resolution_is_complex(s.ring(), i.gens()).unwrap();
    }
}
