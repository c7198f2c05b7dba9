// Nearest-point rounding onto the hexagonal lattice Z[w].
//
// cargo run --example hexagon_rounding

use num_rational::BigRational;
use picard::{EisensteinFrac, EisensteinInt};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let samples = [
        (EisensteinInt::new(7, 2), 3),
        (EisensteinInt::new(1, 2), 3),
        (EisensteinInt::new(-11, 5), 4),
        (EisensteinInt::new(1, 1), 2),
        (EisensteinInt::new(123_457, -98_765), 1000),
    ];
    let third = BigRational::new(1.into(), 3.into());
    for (num, den) in samples {
        let z = EisensteinFrac::new(num, den)?;
        let u = z.round_nearest();
        let d = z.dist_sq(&u);
        println!("round({z}) = {u}   |z - u|^2 = {d}");
        assert!(d <= third);
    }
    // Hexagon vertices sit at distance exactly 1/sqrt3; (1 + 2w)/3 is one.
    let vertex = EisensteinFrac::new(EisensteinInt::new(1, 2), 3)?;
    println!("vertex {vertex} rounds to {} (lexicographically smallest tie)", vertex.round_nearest());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
