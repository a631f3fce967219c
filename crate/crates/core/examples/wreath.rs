//! Graded dimensions of HH* for the wreath product A_e^(⊗w) ⋊ kS_w, split by partitions of w,
//! under both sign conventions for the symmetric group action.
//!
//!     cargo run --example wreath -- 2 3

use qschur_hh::hochschild::hh_dims;
use qschur_hh::linalg::Rational;
use qschur_hh::symwreath::{wreath_hh_dims, wreath_terms, SignConvention};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer"));
    let e = args.next().unwrap_or(2);
    let w = args.next().unwrap_or(2);

    let v = hh_dims::<Rational>(e).unwrap();
    println!("HH*(A_{e}) = {v}");
    for conv in SignConvention::ALL {
        println!("{conv} convention, w = {w}:");
        for (lambda, dims) in wreath_terms(&v, w, conv) {
            println!("  {lambda:<12} {dims}");
        }
        let total = wreath_hh_dims(&v, w, conv);
        println!("  total        {total}  (even part {:?})", total.even_entries());
    }
}
