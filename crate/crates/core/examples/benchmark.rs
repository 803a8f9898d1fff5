// Times the coefficient phase of full partition tables for each backend.
// Partition generation is done up front and not timed.
//
// cargo run --release --example benchmark

use std::error::Error;
use std::time::Instant;

use bch::bchcore::EvalOptions;
use bch::tabulation::{coefficients_for, partitions_up_to};
use bch::IntegerBackend;

pub fn run(cases: &[(u32, IntegerBackend)]) -> Result<(), Box<dyn Error>> {
    let opts = EvalOptions {
        check_divisions: false,
        ..EvalOptions::default()
    };
    println!("{:>4} {:>12} {:>22} {:>10}", "N", "#partitions", "backend", "seconds");
    for &(n, backend) in cases {
        let partitions = partitions_up_to(n);
        let start = Instant::now();
        coefficients_for(&partitions, backend, &opts, 1)?;
        let secs = start.elapsed().as_secs_f64();
        println!("{n:>4} {:>12} {backend:>22} {secs:>10.3}", partitions.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut cases = vec![
        (17, IntegerBackend::Fixed64),
        (19, IntegerBackend::Auto),
        (20, IntegerBackend::Fixed128),
        (30, IntegerBackend::Fixed128),
    ];
    if std::env::args().any(|a| a == "--big") {
        cases.push((40, IntegerBackend::Arbitrary));
    }
    run(&cases)
}
