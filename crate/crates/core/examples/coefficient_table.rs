// Tabulates one coefficient per partition and recovers arbitrary words from it.
//
// cargo run --release --example coefficient_table -- 12

use std::error::Error;

use bch::tabulation::{coefficient_of_word_via_table, coefficient_table};
use bch::IntegerBackend;

pub fn run(max_n: u32) -> Result<(), Box<dyn Error>> {
    let table = coefficient_table(max_n, IntegerBackend::Auto)?;
    println!("{} partitions up to degree {max_n}", table.len());
    for entry in table.entries().iter().filter(|e| e.partition.n() == max_n.min(6)) {
        println!("  [{}]  {}", entry.partition.render(), entry.value);
    }

    // Any word is a permutation of a partition's blocks, possibly with A and B swapped.
    for word in ["ABBA", "BAAB", "BBABA"] {
        if word.len() as u32 <= max_n {
            println!("h_{word} = {}", coefficient_of_word_via_table(word, &table)?);
        }
    }

    let mut tsv = Vec::new();
    table.write_tsv(&mut tsv)?;
    println!("TSV size: {} bytes", tsv.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let max_n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);
    run(max_n)
}
