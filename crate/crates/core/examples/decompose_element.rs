// Decompose a group element given as a matrix and check the result.
//
// cargo run --example decompose_element

use picard::json::{matrix_to_json, parse_group_matrix};
use picard::{decompose, verify, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let original = Word::parse("N^3 B R A N^-2 B^2 R N R B^-1")?;
    let text = matrix_to_json(original.evaluate().matrix());
    println!("input: {text}");

    let g = parse_group_matrix(&text)?;
    println!("{g}");
    let d = decompose(&g)?;
    println!("unit: {}", d.result.lambda);
    println!("word: {}", d.result.word);
    println!("reduction steps: {}", d.trace.steps.len());
    println!("json: {}", serde_json::to_string(&d.result)?);
    assert!(verify(&g, &d.result));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
