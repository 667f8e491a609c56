//! Euclidean vs hyperbolic ball volumes: the comparison `vol_E <= vol_H`,
//! the closed forms in dimensions 2 and 3, and the covering-lemma constant.

use systole::volumes::{
    euclidean_ball_volume, hyperbolic_ball_volume, lemma_constant, VolumeQuery,
};

fn main() -> systole::Result<()> {
    println!("{:>5} {:>14} {:>14} {:>10}", "r", "euclidean", "hyperbolic", "ratio");
    for i in 1..=6 {
        let r = 0.5 * i as f64;
        let q = VolumeQuery::new(3, r)?;
        let e = euclidean_ball_volume(q);
        let h = hyperbolic_ball_volume(q, 1e-10)?;
        println!("{r:>5.1} {e:>14.8} {h:>14.8} {:>10.5}", h / e);
    }
    let r: f64 = 2.0;
    let closed = std::f64::consts::PI * ((2.0 * r).sinh() - 2.0 * r);
    let computed = hyperbolic_ball_volume(VolumeQuery::new(3, r)?, 1e-12)?;
    println!("closed form check (d=3, r=2): |delta| = {:.3e}", (closed - computed).abs());
    for d in 2..=6 {
        println!("lemma constant D({d}) = {:.6}", lemma_constant(d)?);
    }
    Ok(())
}
