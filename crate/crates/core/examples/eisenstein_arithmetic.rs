// Arithmetic in Z[w], w = (-1 + i sqrt3)/2.
//
// cargo run --example eisenstein_arithmetic

use picard::{EisensteinFrac, EisensteinInt, Unit};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = EisensteinInt::new(2, 3);
    let y = EisensteinInt::new(-1, 4);
    println!("x = {x}, y = {y}");
    println!("x + y = {}", &x + &y);
    println!("x * y = {}", &x * &y);
    println!("conj(x) = {}", x.conj());
    println!("N(x) = {}, N(y) = {}, N(xy) = {}", x.norm(), y.norm(), (&x * &y).norm());
    assert_eq!((&x * &y).norm(), x.norm() * y.norm());

    let w = EisensteinInt::omega();
    println!("w^2 = {}, w^3 = {}", w.pow(2), w.pow(3));
    println!("i sqrt3 = {}", EisensteinInt::i_sqrt3());

    println!("units:");
    for u in Unit::all() {
        println!("  {u}  (inverse {}, conj {})", u.inverse(), u.conj());
    }

    let q = EisensteinFrac::quotient(&x, &y)?;
    let (re, im) = q.re_im();
    println!("x / y = {q}: Re = {re}, Im = {} sqrt3", im.coeff());
    let (fx, fy) = q.to_f64_pair();
    println!("        ~ {fx:.6} + {fy:.6} i");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
