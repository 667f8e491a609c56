//! Translation-length lower bound on P(2,R) for the matrix [[2,1],[1,1]]:
//! every point moves by at least `2 log M(g) / n`, checked here against the
//! sampled displacement at 200 seeded points, in both the direct and the
//! adjoint representation.

use systole::symspace::{
    displacement, element_mahler, random_sl_word, sample_spd, translation_lower_bound,
    GroupElement,
};
use systole::linalg::IntMatrix;

fn main() -> systole::Result<()> {
    let g = GroupElement::from_int(IntMatrix::from_i64(2, &[2, 1, 1, 1])?)?;
    for adjoint in [false, true] {
        let label = if adjoint { "adjoint" } else { "direct" };
        let bound = translation_lower_bound(&g, adjoint)?;
        let mut min_disp = f64::INFINITY;
        for seed in 0..200 {
            let x = sample_spd(2, seed);
            min_disp = min_disp.min(displacement(&g, &x)?);
        }
        println!(
            "{label:7}: M = {:.12}  bound = {:.12}  min sampled displacement = {:.12}",
            element_mahler(&g, adjoint)?,
            bound,
            min_disp
        );
    }

    // the same machinery on a longer random word in SL(3, Z)
    let w = random_sl_word(3, 12, 42);
    let bound = translation_lower_bound(&w, false)?;
    let min_disp = (0..200)
        .map(|seed| displacement(&w, &sample_spd(3, seed)).unwrap())
        .fold(f64::INFINITY, f64::min);
    println!("SL(3,Z) word: bound = {bound:.12}  min sampled displacement = {min_disp:.12}");
    Ok(())
}
