// Random words through decompose and back, with statistics.
//
// cargo run --release --example fuzz_roundtrip

use picard::fuzz::{run_fuzz, FuzzConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let stats = run_fuzz(&FuzzConfig {
        iterations: 200,
        seed: 7,
        max_len: 25,
    })?;
    println!("verified {}/{}", stats.verified, stats.iterations);
    println!("steps: {} total, {} max", stats.reduction_steps, stats.max_steps);
    println!("largest |g41|^2: {}", stats.max_norm);
    println!("longest output word: {} syllables", stats.max_word_len);
    println!("max I1 = {}, max |E + k| = {}", stats.max_i1, stats.max_abs_e_plus_k);
    println!("ratio histogram: {:?}", stats.ratio_histogram);
    assert!(stats.all_verified());
    assert_eq!(stats.contraction_violations, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
