// The factor d_n and the common denominator n! d_n for the first degrees.
//
// cargo run --example denominators -- 40

use std::error::Error;

use bch::denominators::DenominatorInfo;

pub fn run(max_n: u32) -> Result<(), Box<dyn Error>> {
    println!("{:>3} {:>6}  n! d_n", "n", "d_n");
    for n in 1..=max_n {
        let info = DenominatorInfo::new(n);
        println!("{:>3} {:>6}  {}", n, info.d_n, info.common);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let max_n = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(30);
    run(max_n)
}
