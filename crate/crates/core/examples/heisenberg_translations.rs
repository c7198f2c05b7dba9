// Heisenberg translations N_(tau, k sqrt3) and their words in N, A, B.
//
// cargo run --example heisenberg_translations

use num_bigint::BigInt;
use picard::decomposer::{central_word, split_translation};
use picard::{compose_heisenberg, EisensteinInt, Translation, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = Translation::new([EisensteinInt::new(1, 2), EisensteinInt::new(0, -1)], 2)?;
    let q = Translation::new([EisensteinInt::new(3, 0), EisensteinInt::new(1, 1)], 4)?;
    let pq = compose_heisenberg(&p, &q);
    println!("{p} * {q} = {pq}");
    assert_eq!(pq.matrix(), &p.matrix() * &q.matrix());
    println!("matrix of the product:\n{}", pq.matrix());

    // k must have the parity of |tau|^2.
    let bad = Translation::new([EisensteinInt::new(1, 1), EisensteinInt::zero()], 2);
    println!("N((1+w, 0), 2 sqrt3): {}", bad.unwrap_err());

    for w in ["A N A", "B^-2 N B^2", "N B N B^-1 N^-1 B N^-1 B^-1"] {
        let g = Word::parse(w)?.evaluate();
        println!("{w:>28}  has last column ({}, {}, {})", g.get(0, 3), g.get(1, 3), g.get(2, 3));
    }

    let t = Translation::new([EisensteinInt::new(4, -3), EisensteinInt::new(-2, 5)], 90)?;
    let split = split_translation(&t)?;
    println!("{t}");
    println!("  horizontal part: {}", split.horizontal);
    println!("  residual k = {} -> central exponent {}", split.residual_k, split.central_exponent);
    println!("  word: {}", split.word);
    assert_eq!(split.word.evaluate(), t.matrix());

    let big = BigInt::from(10).pow(12);
    println!("central word for 10^12: {}", central_word(&big));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
