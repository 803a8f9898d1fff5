// Coefficients of individual words, in every integer backend.
//
// cargo run --example coefficients -- ABAB AABBB

use std::error::Error;

use bch::{bch_coefficient, BlockWord, IntegerBackend};

pub fn run(words: &[String]) -> Result<(), Box<dyn Error>> {
    for letters in words {
        let word = BlockWord::parse(letters)?;
        let h = bch_coefficient(&word, IntegerBackend::Auto)?;
        println!(
            "h_{word} = {h}    (blocks {:?}, first letter {}, backend {})",
            word.blocks(),
            word.first_letter().as_char(),
            IntegerBackend::Auto.resolve(word.degree()),
        );
    }

    // The same word through each fixed width; 64-bit gives up past degree 17.
    let long = BlockWord::new(vec![6, 5, 4, 3], true)?;
    for backend in [
        IntegerBackend::Fixed64,
        IntegerBackend::Fixed128,
        IntegerBackend::Arbitrary,
    ] {
        match bch_coefficient(&long, backend) {
            Ok(h) => println!("{backend:>20}: h = {h}"),
            Err(e) => println!("{backend:>20}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["A", "AB", "AAB", "ABA", "AABB", "ABABAB"].map(String::from).to_vec();
    }
    run(&words)
}
