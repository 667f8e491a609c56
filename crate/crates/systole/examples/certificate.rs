//! Covering certificate: a manifold of volume 100 with systole >= 0.5 in
//! dimension 2 is covered by at most 2037 balls whose nerve has vertex
//! degree at most 25 — the size caps of its homotopy model.

use systole::bounds::{complexity_certificate, phi, systole_volume_lb, BoundParams};

fn main() -> systole::Result<()> {
    let cert = complexity_certificate(100.0, 0.5, 2)?;
    println!("vol = 100, systole = 0.5, d = 2");
    println!("max vertices = {}", cert.max_vertices);
    println!("max degree   = {}", cert.max_degree);

    let p = BoundParams::default();
    println!("\nheadline formulas at large volume (all constants 1):");
    for &vol in &[1e12, 1e24, 1e48, 1e96] {
        println!(
            "vol = {vol:7.1e}   phi = {:12.4}   systole lower bound = {:.8}",
            phi(vol, 2)?,
            systole_volume_lb(vol, &p)?
        );
    }
    Ok(())
}
