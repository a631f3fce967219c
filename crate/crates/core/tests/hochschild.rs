mod common;

use qschur_hh::algebra::AlgebraElement;
use qschur_hh::hochschild::{
    even_part_hilbert, hh_dims, presented_ring, verify_ring_presentation, Cochain, CochainComplex, HochschildError,
    LiftStrategy, PresentationReport, YonedaContext,
};
use qschur_hh::linalg::{Fp, Rational};
use qschur_hh::resolution::VerifiedResolution;
use qschur_hh::GradedDims;

#[test]
fn cochain_dimensions() {
    for e in 2..=6 {
        let r = VerifiedResolution::<Rational>::compute(e).unwrap();
        let c = CochainComplex::new(&r.algebra, &r.complex);
        let hom = c.hom_dims();
        let top = 2 * (e - 1);
        assert_eq!(c.top(), top);
        for (n, &h) in hom.iter().enumerate().skip(1) {
            assert_eq!(h, 2 * e - n - 1, "e={e} n={n}");
        }
        for n in 1..top {
            assert_eq!(
                c.kernel_hom_dim(n) as i64,
                common::kernel_hom_table(e, n),
                "e={e} n={n}"
            );
        }
        // d_N is injective, so Ker d_N = 0
        assert_eq!(c.kernel_hom_dim(top), 0);
    }
}

#[test]
fn hh_dimensions_over_several_fields() {
    for e in 2..=6 {
        let expected = common::expected_hh(e);
        assert_eq!(hh_dims::<Rational>(e).unwrap(), expected);
        assert_eq!(hh_dims::<Fp<2>>(e).unwrap(), expected);
        assert_eq!(hh_dims::<Fp<3>>(e).unwrap(), expected);
        assert_eq!(hh_dims::<Fp<5>>(e).unwrap(), expected);
    }
}

#[test]
fn even_part_is_even_entries() {
    for e in 2..=6 {
        let hh = common::expected_hh(e);
        let even: Vec<usize> = (0..hh.len()).map(|d| if d % 2 == 0 { hh.get(d) } else { 0 }).collect();
        assert_eq!(even_part_hilbert(e), GradedDims::new(even));
    }
    assert_eq!(even_part_hilbert(3), GradedDims::new(vec![3, 0, 1, 0, 1]));
}

#[test]
fn presentation_holds() {
    for e in 2..=4 {
        let r = verify_ring_presentation::<Rational>(e).unwrap();
        assert!(r.passed, "e={e}: {:?}", r.failures());
        assert!(r.multiplication_table.as_ref().unwrap().passed);
        assert_eq!(r.presented_dims, presented_ring(e).hilbert(4 * e).unwrap());
    }
    let r5 = verify_ring_presentation::<Rational>(5).unwrap();
    assert!(r5.passed && r5.multiplication_table.is_none());
    for e in 2..=3 {
        assert!(verify_ring_presentation::<Fp<2>>(e).unwrap().passed);
        assert!(verify_ring_presentation::<Fp<3>>(e).unwrap().passed);
    }
}

#[test]
fn report_json_round_trip() {
    let r = verify_ring_presentation::<Rational>(3).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: PresentationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r, back);
}

struct Setup {
    res: VerifiedResolution<Rational>,
    cochains: CochainComplex<Rational>,
}

fn setup(e: usize) -> Setup {
    let res = VerifiedResolution::<Rational>::compute(e).unwrap();
    let cochains = CochainComplex::new(&res.algebra, &res.complex);
    Setup { res, cochains }
}

#[test]
fn products_at_e3() {
    let s = setup(3);
    let ctx = YonedaContext::new(&s.res.algebra, &s.res.complex, &s.cochains);
    let x = s.cochains.class_basis(1).remove(0);
    let y = s.cochains.class_basis(2).remove(0);
    let xx = ctx.product(&x, &x).unwrap();
    assert!(s.cochains.is_coboundary(&xx));
    let y2 = ctx.product(&y, &y).unwrap();
    assert!(!s.cochains.is_coboundary(&y2));
    assert!(ctx.product(&y, &y2).unwrap().is_zero());
    let xy = ctx.product(&x, &y).unwrap();
    assert!(!s.cochains.is_coboundary(&xy));
    assert!(s.cochains.is_coboundary(&ctx.product(&x, &y2).unwrap()));
    // x·y and y·x agree since deg y is even
    assert!(ctx.cohomologous(&xy, &ctx.product(&y, &x).unwrap()));
}

#[test]
fn lifts_do_not_matter() {
    let s = setup(4);
    let ctx = YonedaContext::new(&s.res.algebra, &s.res.complex, &s.cochains);
    let x = s.cochains.class_basis(1).remove(0);
    let y = s.cochains.class_basis(2).remove(0);
    for (a, b) in [(&x, &y), (&y, &y), (&y, &x)] {
        let canonical = ctx.product(a, b).unwrap();
        for seed in 0..4 {
            let other = ctx.product_with(a, b, LiftStrategy::Perturbed { seed }).unwrap();
            assert!(ctx.cohomologous(&canonical, &other));
        }
    }
}

#[test]
fn non_cocycles_are_rejected() {
    let s = setup(3);
    let ctx = YonedaContext::new(&s.res.algebra, &s.res.complex, &s.cochains);
    let y = s.cochains.class_basis(2).remove(0);
    // a single arrow at one degree-1 generator is not a cocycle
    let mut bad = s.cochains.zero(1);
    let space = s.cochains.space(1).unwrap();
    let (g, x) = space.coords[0];
    bad.components[g] = AlgebraElement::basis(x);
    assert!(!s.cochains.is_cocycle(&bad));
    assert_eq!(ctx.product(&bad, &y), Err(HochschildError::NotCocycle(1)));
}

#[test]
fn degree_zero_products_are_centre_products() {
    let s = setup(4);
    let ctx = YonedaContext::new(&s.res.algebra, &s.res.complex, &s.cochains);
    let alg = &s.res.algebra;
    let r0 = &s.res.complex.terms[0];
    let centre = alg.center();
    let as_cochain = |z: &AlgebraElement<Rational>| Cochain {
        degree: 0,
        components: r0
            .generators
            .iter()
            .map(|&(v, _)| {
                let ev = alg.element(alg.vertex_idempotent(v));
                alg.multiply(&alg.multiply(&ev, z), &ev)
            })
            .collect(),
    };
    for a in &centre {
        for b in &centre {
            let prod = ctx.product(&as_cochain(a), &as_cochain(b)).unwrap();
            assert!(ctx.cohomologous(&prod, &as_cochain(&alg.multiply(a, b))));
        }
    }
}
