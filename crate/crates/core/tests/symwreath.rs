mod common;

use qschur_hh::hochschild::hh_dims;
use qschur_hh::linalg::Rational;
use qschur_hh::partition::partitions_bounded;
use qschur_hh::symwreath::{
    invariant_tensor_dims, kernel_generators, kernel_pi_report, power_sum_in_e, quotient_hilbert,
    truncated_invariant_dims, wreath_hh_dims, SignConvention, SymPoly, TruncatedInvariantRing,
};
use qschur_hh::{partitions, GradedDims, Partition};

#[test]
fn partition_basics() {
    let p3: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
    assert_eq!(p3, ["(3)", "(2,1)", "(1,1,1)"]);
    assert_eq!(partitions(5).len(), 7);
    let p = Partition::new(vec![2, 1]);
    assert_eq!((p.multiplicity(1), p.multiplicity(2), p.multiplicity(3)), (1, 1, 0));
    assert_eq!(
        serde_json::to_string(&Partition::new(vec![1, 3, 2])).unwrap(),
        "[3,2,1]"
    );
}

#[test]
fn tensor_invariants_match_reynolds() {
    let spaces = [
        GradedDims::new(vec![1, 1]),
        GradedDims::new(vec![2, 1, 1]),
        GradedDims::new(vec![3, 1, 1, 1, 1]),
        GradedDims::new(vec![0, 2]),
    ];
    for v in &spaces {
        for p in 1..=3 {
            for (conv, signed) in [(SignConvention::Unsigned, false), (SignConvention::Signed, true)] {
                assert_eq!(
                    invariant_tensor_dims(v, p, conv),
                    common::invariants_by_reynolds(v, p, signed),
                    "v={v} p={p} {conv}"
                );
            }
        }
    }
    let v = GradedDims::new(vec![1, 1]);
    assert_eq!(
        invariant_tensor_dims(&v, 2, SignConvention::Unsigned),
        GradedDims::new(vec![1, 1, 1])
    );
    assert_eq!(
        invariant_tensor_dims(&v, 2, SignConvention::Signed),
        GradedDims::new(vec![1, 1])
    );
}

#[test]
fn wreath_matches_brute_force() {
    for e in 2..=3 {
        let v = hh_dims::<Rational>(e).unwrap();
        for conv in SignConvention::ALL {
            assert_eq!(wreath_hh_dims(&v, 1, conv), v);
        }
        for w in 2..=3 {
            assert_eq!(
                wreath_hh_dims(&v, w, SignConvention::Unsigned),
                common::wreath_by_reynolds(&v, w, false),
                "e={e} w={w}"
            );
            assert_eq!(
                wreath_hh_dims(&v, w, SignConvention::Signed),
                common::wreath_by_reynolds(&v, w, true),
                "e={e} w={w}"
            );
        }
    }
}

#[test]
fn newton_identities_against_expansion() {
    assert_eq!(power_sum_in_e(1, 2), SymPoly::elementary(1, 2));
    let e1 = SymPoly::elementary(1, 3);
    let e2 = SymPoly::elementary(2, 3);
    let expected = e1.mul(&e1).unwrap().sub(&e2.scale(&Rational::new(2, 1))).unwrap();
    assert_eq!(power_sum_in_e(2, 3), expected);
    assert_eq!(power_sum_in_e(3, 3).to_string(), "e1^3 - 3*e1*e2 + 3*e3");
    assert_eq!(power_sum_in_e(3, 2).to_string(), "e1^3 - 3*e1*e2");
}

#[test]
fn truncated_invariants_two_ways() {
    for e in 1..=4 {
        for w in 1..=4 {
            let dims = truncated_invariant_dims(e, w);
            assert_eq!(dims, common::truncated_invariants_by_symmetrising(e, w), "e={e} w={w}");
            let counted: Vec<usize> = (0..=w * e.saturating_sub(1))
                .map(|d| partitions_bounded(d, e.saturating_sub(1), w).len())
                .collect();
            assert_eq!(dims, GradedDims::new(counted));
        }
    }
    assert_eq!(truncated_invariant_dims(2, 2), GradedDims::new(vec![1, 1, 1]));
    assert_eq!(truncated_invariant_dims(1, 3), GradedDims::new(vec![1]));
}

#[test]
fn quotient_examples() {
    let p = |k| power_sum_in_e(k, 2);
    // Hilbert series of Λ_2 is 1/((1-t)(1-t^2))
    assert_eq!(
        quotient_hilbert(2, &[], 7).unwrap(),
        GradedDims::new(vec![1, 1, 2, 2, 3, 3, 4, 4])
    );
    // complete intersection (1-t^2)(1-t^3)/((1-t)(1-t^2)) = 1 + t + t^2
    assert_eq!(
        quotient_hilbert(2, &[p(2), p(3)], 10).unwrap(),
        GradedDims::new(vec![1, 1, 1])
    );
    assert_eq!(quotient_hilbert(2, &[p(3), p(4), p(5)], 10).unwrap().get(2), 2);
}

#[test]
fn quotient_by_kernel_is_truncated_ring() {
    for e in 1..=4 {
        for w in 1..=4 {
            let kernel = kernel_generators(e, w, 10);
            assert_eq!(
                quotient_hilbert(w, &kernel, 10).unwrap(),
                truncated_invariant_dims(e, w).truncate(10),
                "e={e} w={w}"
            );
        }
    }
}

#[test]
fn kernel_report_rank_nullity_and_power_sums() {
    for (e, w) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let r = kernel_pi_report(e, w, e + w + 2).unwrap();
        for d in &r.degrees {
            assert_eq!(d.kernel_dim, d.lambda_dim - d.image_dim);
            assert!(d.ideal_in_kernel, "listed generators lie in the kernel");
        }
        for k in e..=r.max_degree {
            assert!(r.power_sums_in_kernel.contains(&k), "p{k} for e={e}");
        }
        assert!(r.image_matches_target());
    }
    let r = kernel_pi_report(2, 2, 6).unwrap();
    assert_eq!(r.discrepancy_degrees.first(), Some(&2));
    assert!(r.degrees[2].kernel_outside_ideal[0].starts_with("p2"));
}

#[test]
fn pi_kills_high_power_sums() {
    let ring = TruncatedInvariantRing::new(3, 2);
    for k in 3..=8 {
        assert!(ring
            .pi(&power_sum_in_e(k, 2), k)
            .iter()
            .all(|c| *c == Rational::new(0, 1)));
    }
    assert!(ring
        .pi(&power_sum_in_e(2, 2), 2)
        .iter()
        .any(|c| *c != Rational::new(0, 1)));
}
