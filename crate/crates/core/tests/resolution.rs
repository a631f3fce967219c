use std::collections::BTreeMap;

use qschur_hh::algebra::build_a_e;
use qschur_hh::linalg::{Fp, Rational};
use qschur_hh::resolution::{
    ext_simple_dims, generic_minimal_resolution, paper_complex, paper_resolution_term, search_repairs, verify_complex,
    DiagonalStart, FreeBimodule, RepairChoice, ResolutionCache, ShortBranch, VerifiedResolution,
};

fn multiset(g: Vec<(usize, usize)>) -> BTreeMap<(usize, usize), usize> {
    FreeBimodule::new(g).multiset()
}

#[test]
fn generic_resolution_has_closed_form_terms() {
    for e in 2..=6 {
        let alg = build_a_e::<Rational>(e).unwrap();
        let g = generic_minimal_resolution(&alg, 4 * e);
        assert_eq!(g.length(), 2 * (e - 1), "gldim at e={e}");
        for n in 0..=2 * e + 1 {
            assert_eq!(
                g.term(n).multiset(),
                multiset(paper_resolution_term(e, n)),
                "e={e} n={n}"
            );
        }
        assert!(paper_resolution_term(e, 2 * e - 1).is_empty());
        assert!(verify_complex(&alg, &g).passed());
    }
}

#[test]
fn term_multiplicities_are_ext_between_simples() {
    // the bimodule generator (i, j) in degree n counts Ext^n between the simples at i and j
    for e in 2..=4 {
        let alg = build_a_e::<Rational>(e).unwrap();
        for n in 0..=2 * (e - 1) {
            let terms = multiset(paper_resolution_term(e, n));
            for i in 1..=e {
                for j in 1..=e {
                    let ext = ext_simple_dims(&alg, j, i, n);
                    assert_eq!(terms.get(&(i, j)).copied().unwrap_or(0), ext, "e={e} n={n} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn repaired_differentials_verify() {
    for e in 2..=5 {
        let r = VerifiedResolution::<Rational>::compute(e).unwrap();
        assert!(r.verification.squares_to_zero.passed);
        assert!(r.verification.exact.passed);
        assert!(r.verification.minimal.passed);
        assert_eq!(r.complex.length(), 2 * (e - 1));
        let generic = generic_minimal_resolution(&r.algebra, 4 * e);
        for n in 0..=r.complex.length() {
            assert_eq!(r.complex.term(n).multiset(), generic.term(n).multiset());
        }
    }
}

#[test]
fn exactly_one_repair_survives_calibration() {
    let search = search_repairs::<Rational>(4);
    let passing: Vec<_> = search.candidates.iter().filter(|c| c.passed).collect();
    assert_eq!(passing.len(), 1);
    let chosen = passing[0].choice;
    assert_eq!(chosen.d4s2_diagonal, DiagonalStart::Module);
    assert_eq!(chosen.d4s4_diagonal, DiagonalStart::Module);
    assert_eq!(chosen.d4s4_short_branch, ShortBranch::Shifted);
    assert_eq!(search.selected, Some(chosen));
}

#[test]
fn literal_reading_fails_with_witness() {
    let alg = build_a_e::<Rational>(4).unwrap();
    assert!(paper_complex(&alg, 4, &RepairChoice::LITERAL).is_err());
    let only_branch = RepairChoice {
        d4s4_short_branch: ShortBranch::Printed,
        ..passing_choice()
    };
    let c = paper_complex(&alg, 4, &only_branch).unwrap();
    let report = verify_complex(&alg, &c);
    assert!(!report.squares_to_zero.passed);
    assert!(report.squares_to_zero.witness.unwrap().contains("(2,4)"));
}

fn passing_choice() -> RepairChoice {
    RepairChoice {
        d4s2_diagonal: DiagonalStart::Module,
        d4s4_diagonal: DiagonalStart::Module,
        d4s4_short_branch: ShortBranch::Shifted,
    }
}

#[test]
fn prime_fields_verify() {
    for e in 2..=4 {
        assert!(VerifiedResolution::<Fp<2>>::compute(e).unwrap().verification.passed());
        assert!(VerifiedResolution::<Fp<3>>::compute(e).unwrap().verification.passed());
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.json");
    let (cold, hit) = VerifiedResolution::<Rational>::load_or_compute(4, &path).unwrap();
    assert!(!hit);
    let (warm, hit) = VerifiedResolution::<Rational>::load_or_compute(4, &path).unwrap();
    assert!(hit);
    assert_eq!(cold.complex, warm.complex);
    assert!(verify_complex(&warm.algebra, &warm.complex).passed());

    // a cache for another field is ignored and overwritten
    let (_, hit) = VerifiedResolution::<Fp<3>>::load_or_compute(4, &path).unwrap();
    assert!(!hit);
    assert_eq!(
        ResolutionCache::load(&path).unwrap().field,
        qschur_hh::linalg::FieldDescriptor::Prime(3)
    );

    // tampered caches are rejected
    let mut cache = ResolutionCache::load(&path).unwrap();
    cache.e = 5;
    assert!(VerifiedResolution::<Fp<3>>::from_cache(&cache).is_err());
}
