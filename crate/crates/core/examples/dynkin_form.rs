// H_n as (1/n) sum h_w [w] with right-nested commutators, expanded back to words.
//
// cargo run --example dynkin_form -- 4

use std::error::Error;

use bch::lietools::{dynkin_representation, expand_iterated_commutator, verify_dynkin};
use bch::IntegerBackend;

pub fn run(n: u32) -> Result<(), Box<dyn Error>> {
    let terms = dynkin_representation(n, IntegerBackend::Auto)?;
    println!("H_{n} =");
    for t in &terms {
        println!("  {:>8} [{}]", t.coefficient.to_string(), t.word);
    }

    let example = "AAB";
    let expansion = expand_iterated_commutator(example)?;
    let pretty: Vec<String> = expansion
        .named_terms()
        .into_iter()
        .map(|(w, c)| format!("{c:+} {w}"))
        .collect();
    println!("[{example}] = {}", pretty.join(" "));

    if n <= bch::oracle::ORACLE_CAP {
        println!("expansion matches the oracle: {}", verify_dynkin(n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    run(n)
}
