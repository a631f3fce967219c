//! Block labels (e-weight, e-core) for partitions, abacus displays and Rouquier cores.
//!
//!     cargo run --example blocks -- 3 6

use qschur_hh::blockcomb::{
    abacus_from_partition, blocks_of, e_core_and_weight, is_rouquier_core, rouquier_presentation,
    standard_rouquier_core,
};
use qschur_hh::Partition;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer"));
    let e = args.next().unwrap_or(3);
    let n = args.next().unwrap_or(6);

    for (label, parts) in blocks_of(n, e) {
        let list: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        println!("weight {} core {}: {}", label.weight, label.core, list.join(" "));
    }

    let p = Partition::new(vec![5, 3, 1]);
    let ab = abacus_from_partition(&p, e, 6).unwrap();
    println!(
        "{p} with 6 beads: β = {:?}, runners {:?}",
        ab.beta_numbers, ab.runner_counts
    );
    let (core, w) = e_core_and_weight(&p, e);
    println!("{e}-core {core}, weight {w}");

    for w in 1..=3 {
        let core = standard_rouquier_core(e, w);
        let abacus = rouquier_presentation(&core, e, w).unwrap().expect("Rouquier");
        println!(
            "w = {w}: Rouquier core {core} (runners {:?}); empty core Rouquier: {}",
            abacus.runner_counts,
            is_rouquier_core(&Partition::empty(), e, w).unwrap()
        );
    }
}
