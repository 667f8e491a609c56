//! Integral homology with torsion: the 6-vertex triangulation of the real
//! projective plane has H_0 = Z, H_1 = Z/2, H_2 = 0, detected through the
//! Smith normal form of its boundary matrices.

use systole::homology::{
    boundary_matrix, homology_groups, projective_plane_complex, smith_normal_form,
};

fn main() -> systole::Result<()> {
    let rp2 = projective_plane_complex();
    println!(
        "complex: {} vertices, {} edges, {} triangles, euler = {}",
        rp2.count_of_dim(0),
        rp2.count_of_dim(1),
        rp2.count_of_dim(2),
        rp2.euler_characteristic()
    );
    let snf = smith_normal_form(&boundary_matrix(&rp2, 2)?);
    println!("SNF diagonal of d_2 = {:?}", snf.diagonal);
    for (k, h) in homology_groups(&rp2)?.iter().enumerate() {
        println!("H_{k}: betti = {}, torsion = {:?}", h.betti, h.torsion);
    }
    Ok(())
}
