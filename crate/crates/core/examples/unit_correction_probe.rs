// Unit corrections diag(l, 1, 1, l) as words in N, A, B, R.
//
// cargo run --release --example unit_correction_probe

use picard::experimental::{absorb_unit, bfs_unit_correction, unit_correction_word};
use picard::{decompose, random_element, unit_correction, Unit};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for u in Unit::all() {
        let w = unit_correction_word(u);
        assert_eq!(w.evaluate(), unit_correction(u));
        let text = if w.is_empty() { "(empty word)".to_string() } else { w.to_string() };
        println!("C_{u} = {text}");
    }

    // Nothing short exists: a radius-3 ball has no solution.
    let l = Unit::from_exponent(3);
    println!("depth-3 search for C_{l}: {:?}", bfs_unit_correction(l, 3, 100_000).map(|w| w.to_string()));

    // Any decomposition can be turned into a pure generator word.
    let (g, d) = (0..200)
        .filter_map(|seed| {
            let g = random_element(seed, 20).ok()?;
            let d = decompose(&g).ok()?;
            (!d.result.lambda.is_one()).then_some((g, d))
        })
        .next()
        .ok_or("no element with a non-trivial unit")?;
    let w = absorb_unit(d.result.lambda, &d.result.word);
    println!("unit {} absorbed: {} syllables", d.result.lambda, w.len());
    assert_eq!(w.evaluate(), g);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
