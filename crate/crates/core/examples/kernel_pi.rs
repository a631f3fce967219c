//! The map π: Λ_w -> (k[y_1..y_w]/(y_i^e))^S_w. Compares its kernel, found by linear algebra,
//! with the ideal generated by p_{e+1}, ..., p_{e+w+1} and prints any witnesses.
//!
//!     cargo run --example kernel_pi -- 2 2 6

use qschur_hh::symwreath::{kernel_pi_report, TruncatedInvariantRing};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer"));
    let e = args.next().unwrap_or(2);
    let w = args.next().unwrap_or(2);
    let max_degree = args.next().unwrap_or(e + w + 2);

    let ring = TruncatedInvariantRing::new(e, w);
    println!("truncated invariants: {}", ring.dims());

    let report = kernel_pi_report(e, w, max_degree).expect("max_degree >= e + w + 1");
    println!("listed generators: {}", report.listed_generators.join(", "));
    println!(" d  dim Λ  image  kernel  ideal");
    for d in &report.degrees {
        println!(
            "{:>2}  {:>5}  {:>5}  {:>6}  {:>5}",
            d.degree, d.lambda_dim, d.image_dim, d.kernel_dim, d.ideal_dim
        );
        for wit in &d.kernel_outside_ideal {
            println!("      in the kernel, not in the ideal: {wit}");
        }
        for wit in &d.ideal_outside_kernel {
            println!("      in the ideal, not in the kernel: {wit}");
        }
    }
    println!("kernel = listed ideal in every degree: {}", report.agrees());
    println!("Λ_w / kernel: {}", report.quotient_by_kernel);
    println!("Λ_w / listed ideal: {}", report.quotient_by_listed);
}
