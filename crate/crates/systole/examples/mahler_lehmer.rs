//! Mahler measure of the Lehmer polynomial
//! `x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1`,
//! computed by two independent algorithms that must agree.

use systole::polynomials::{mahler_paths, IntPolynomial};

fn main() -> systole::Result<()> {
    let lehmer = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])?;
    let (roots, graeffe) = mahler_paths(&lehmer)?;
    println!("f = {lehmer}");
    println!("mahler (root finder)     = {roots:.16}");
    println!("mahler (Graeffe squares) = {graeffe:.16}");
    println!("paths agree within        {:.3e}", (roots - graeffe).abs() / roots);
    Ok(())
}
