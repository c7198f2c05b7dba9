// Follow the reduction of |g41|^2 step by step.
//
// cargo run --example reduction_trace

use num_bigint::BigInt;
use picard::{langlands_extract, random_element, reduction_step, step_bound};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut g = random_element(2024, 30)?;
    let n0 = g.g41().norm();
    println!("|g41|^2 = {n0}, at most {} steps", step_bound(&n0));
    let mut i = 0;
    while !g.fixes_infinity() {
        let (step, next) = reduction_step(&g)?;
        i += 1;
        println!(
            "step {i}: tau = ({}, {}), k = {:>3}, |g41|^2 {} -> {}  (I1 = {}, E + k = {})",
            step.tau[0], step.tau[1], step.k, step.n_before, step.n_after, step.i1, step.e_plus_k
        );
        assert!(BigInt::from(36) * &step.n_after <= BigInt::from(31) * &step.n_before);
        g = next;
    }
    let p = langlands_extract(&g)?;
    println!("stabiliser: unit {}, {}, U = {}", p.lambda, p.translation, p.rotation);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
