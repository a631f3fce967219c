//! The ring HH*(A_e): generator representatives, Yoneda products, and the presentation check.
//!
//!     cargo run --example ring -- 3

use qschur_hh::hochschild::{presented_ring, verify_ring_presentation, CochainComplex, YonedaContext};
use qschur_hh::linalg::Rational;
use qschur_hh::resolution::VerifiedResolution;

fn main() {
    let e: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);

    let report = verify_ring_presentation::<Rational>(e).unwrap();
    for g in &report.generators {
        println!("{} (degree {}): {}", g.name, g.degree, g.representative);
    }
    let groups = [
        ("relations", &report.relations),
        ("nonvanishing", &report.nonvanishing),
        ("commutativity", &report.commutativity),
    ];
    for (title, checks) in groups {
        println!("{title}:");
        for c in checks.iter() {
            println!("  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
        }
    }
    println!(
        "presented ring dims {} vs HH dims {}",
        report.presented_dims, report.hh_dims
    );
    println!("presentation {}", if report.passed { "verified" } else { "FAILED" });
    let q = presented_ring(e);
    let basis: Vec<String> = q
        .standard_monomials(4 * e, 1000)
        .unwrap()
        .iter()
        .map(|m| q.display(m))
        .collect();
    println!("standard monomials: {}", basis.join(", "));

    // products by hand: y^k for the degree-2 class
    let res = VerifiedResolution::<Rational>::compute(e).unwrap();
    let cochains = CochainComplex::new(&res.algebra, &res.complex);
    let ctx = YonedaContext::new(&res.algebra, &res.complex, &cochains);
    let y = cochains.class_basis(2).remove(0);
    let mut power = y.clone();
    for k in 2..=e {
        power = ctx.product(&power, &y).unwrap();
        println!(
            "y^{k} is {}",
            if cochains.is_coboundary(&power) {
                "zero"
            } else {
                "nonzero"
            }
        );
    }
}
