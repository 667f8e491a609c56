//! Exhaustive scan of monic integer polynomials (degree <= 6, height <= 2,
//! nonzero constant term) against the lower bound
//! `log M(f) >= c (loglog d / log d)^3` for non-cyclotomic f: the minimal
//! ratio and the polynomial attaining it.

use systole::polynomials::dobrowolski_scan;

fn main() -> systole::Result<()> {
    let report = dobrowolski_scan(6, 2)?;
    println!("scanned (non-cyclotomic) = {}", report.scanned);
    println!("cyclotomic skipped       = {}", report.cyclotomic);
    println!("min ratio                = {:.12}", report.min_ratio);
    println!("witness                  = {}", report.witness);
    println!("witness log M            = {:.12}", report.witness_log_mahler);
    println!("partial                  = {}", report.partial);
    Ok(())
}
