//! Dimensions of HH^n(A_e) over the rationals and small prime fields, with the cochain
//! dimensions they come from.
//!
//!     cargo run --example hh -- 5

use qschur_hh::hochschild::{hh_dims, CochainComplex};
use qschur_hh::linalg::{Fp, Rational};
use qschur_hh::resolution::VerifiedResolution;

fn main() {
    let e: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);

    let res = VerifiedResolution::<Rational>::compute(e).unwrap();
    let c = CochainComplex::new(&res.algebra, &res.complex);
    println!(" n  Hom(R_n,A)  Z^n  HH^n");
    let hh = c.hh_dims();
    for (n, h) in c.hom_dims().iter().enumerate() {
        println!("{n:>2}  {h:>10}  {:>3}  {:>4}", c.cocycle_dim(n), hh.get(n));
    }

    println!("Q:  {}", hh_dims::<Rational>(e).unwrap());
    println!("F2: {}", hh_dims::<Fp<2>>(e).unwrap());
    println!("F3: {}", hh_dims::<Fp<3>>(e).unwrap());
    println!("F7: {}", hh_dims::<Fp<7>>(e).unwrap());
}
