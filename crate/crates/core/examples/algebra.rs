//! The algebra A_e: path basis, centre, radical layers and a heredity chain.
//!
//!     cargo run --example algebra -- 4

use qschur_hh::algebra::{build_a_e, heredity_chain_search, is_heredity_ideal, path_index};
use qschur_hh::linalg::Rational;

fn main() {
    let e: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let alg = build_a_e::<Rational>(e).expect("e >= 2");

    println!("A_{e}: dim {} (4e-3 = {})", alg.dim(), 4 * e - 3);
    println!("basis: {}", alg.labels().join(", "));

    // a_1 b_1 = b_2 a_2 is the loop at vertex 2
    if e >= 3 {
        let lhs = alg.multiply(
            &alg.element(path_index(&alg, &["a1"]).unwrap()),
            &alg.element(path_index(&alg, &["b1"]).unwrap()),
        );
        let rhs = alg.multiply(
            &alg.element(path_index(&alg, &["b2"]).unwrap()),
            &alg.element(path_index(&alg, &["a2"]).unwrap()),
        );
        println!("a1*b1 = {}, b2*a2 = {}", alg.display(&lhs), alg.display(&rhs));
    }

    let centre: Vec<String> = alg.center().iter().map(|z| alg.display(z)).collect();
    println!("centre (dim {}): {}", centre.len(), centre.join(" | "));
    for k in 1..=3 {
        println!("J^{k}: dim {}", alg.radical(k).len());
    }

    let s = alg.structure();
    let top = is_heredity_ideal(s, &s.idempotent_ideal(&[e - 1]));
    println!("A e_{e} A heredity ideal: {}", top.holds);
    let bottom = is_heredity_ideal(s, &s.idempotent_ideal(&[0]));
    println!("A e_1 A heredity ideal: {} ({})", bottom.holds, bottom.reason());

    match heredity_chain_search(s) {
        Some(chain) => {
            for step in &chain.steps {
                println!("  dim {:>3}  generated by {{{}}}", step.dim, step.vertices.join(","));
            }
        }
        None => println!("no heredity chain of idempotent ideals"),
    }
}
