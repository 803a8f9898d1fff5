// Compares the integer recurrence with brute-force expansion of
// log(e^A e^B) in the free algebra, and runs the full verification report.
//
// cargo run --release --example oracle_check -- 8

use std::error::Error;

use bch::bchcore::EvalOptions;
use bch::oracle::oracle_log_series;
use bch::verify::run_verification;
use bch::{bch_coefficient, BlockWord, IntegerBackend};

pub fn run(n: u32) -> Result<(), Box<dyn Error>> {
    let series = oracle_log_series(n)?;
    let mut shown = 0;
    for (mask, oracle_value) in series.nonzero_terms(n) {
        let word = BlockWord::from_mask(mask, n)?;
        let fast = bch_coefficient(&word, IntegerBackend::Auto)?;
        assert_eq!(&fast, oracle_value, "{word}");
        if shown < 6 {
            println!("{word}: {fast}");
            shown += 1;
        }
    }

    let report = run_verification(n, &EvalOptions::checked());
    for outcome in &report.outcomes {
        println!("{outcome}");
    }
    if !report.all_passed() {
        return Err("verification failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    run(n)
}
