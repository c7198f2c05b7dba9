// The 72-element group U(2; Z[w]) and a word in U1, U2 for each element.
//
// cargo run --example u2_table

use picard::finite_unitary::{generated_closure, word_table_rows};
use picard::{enumerate_group, lift, u_decompose, FiniteUnitary, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let all = enumerate_group();
    let closure = generated_closure();
    println!("|U(2; Z[w])| = {}, closure of {{U1, U2}} has {}", all.len(), closure.len());
    assert_eq!(all, closure);

    let rows = word_table_rows();
    let longest = rows.iter().map(|(_, w)| w.items().len()).max().unwrap_or(0);
    println!("longest table word has {longest} syllables");
    for (u, w) in rows.iter().take(6) {
        println!("{u}  =  {}", if w.is_empty() { "1".to_string() } else { w.to_string() });
    }

    // In the big group a table word is the same word in A and B.
    let u = FiniteUnitary::antidiag(picard::Unit::from_exponent(2), picard::Unit::from_exponent(5));
    let w = u_decompose(&u)?;
    let big = Word::from_uword(&w);
    println!("{u} -> {w} -> {big}");
    assert_eq!(big.evaluate(), lift(&u));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
