//! Nerve of the unit-chord ball cover of a hexagon inscribed in the unit
//! circle: 6 vertices, 12 edges, 6 triangles, the homotopy type of a circle
//! (Betti numbers 1, 1).

use systole::homology::homology_groups;
use systole::nerve::{build_nerve, dv_certificate, greedy_net, hexagon_cloud};

fn main() -> systole::Result<()> {
    let cloud = hexagon_cloud();
    let eps = 1.0; // side length of the inscribed hexagon
    let net = greedy_net(&cloud, eps)?;
    let nerve = build_nerve(&cloud, &net, eps, 3)?;
    println!("net centers      = {net:?}");
    for k in 0..=nerve.dimension().unwrap_or(0) {
        println!("{k}-simplices      = {}", nerve.count_of_dim(k));
    }
    println!("euler char       = {}", nerve.euler_characteristic());
    println!("max degree       = {}", nerve.max_degree());
    let betti: Vec<usize> = homology_groups(&nerve)?.iter().map(|h| h.betti).collect();
    println!("betti            = {betti:?}");
    let cert = dv_certificate(&nerve, 4, 6);
    println!("(d,v) = (4,6) certificate pass = {}", cert.pass);
    Ok(())
}
