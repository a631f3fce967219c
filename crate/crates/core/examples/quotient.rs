//! Hilbert functions of Λ_w modulo ideals of symmetric polynomials.
//!
//!     cargo run --example quotient -- 2 p2 p3

use qschur_hh::symwreath::{parse_generator, power_sum_in_e, quotient_hilbert};

fn main() {
    let mut args = std::env::args().skip(1);
    let w: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let names: Vec<String> = args.collect();

    for k in 1..=4 {
        println!("p{k} = {}", power_sum_in_e(k, w));
    }
    println!("Λ_{w}: {}", quotient_hilbert(w, &[], 10).unwrap());

    let gens = if names.is_empty() {
        vec![power_sum_in_e(2, w), power_sum_in_e(3, w)]
    } else {
        names
            .iter()
            .map(|n| parse_generator(n, w).expect("generator like p3 or e2"))
            .collect()
    };
    let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    println!("generators: {}", shown.join("; "));
    println!("quotient: {}", quotient_hilbert(w, &gens, 12).unwrap());
}
