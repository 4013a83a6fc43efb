//! Minimal free resolutions, Betti numbers and Hilbert series.

use semidual::fpmod::FPModule;
use semidual::groebner::GradedRing;
use semidual::homalg::{free_resolution, hilbert_series};

fn main() -> semidual::Result<()> {
    let plane = GradedRing::from_strs(101, &["x", "y", "z"], &[])?;
    let k = FPModule::residue_field(&plane);
    let res = free_resolution(&k, 5);
    println!("k over F101[x,y,z]: betti {:?}, pd {:?}", res.betti(), res.projective_dimension());

    let hyp = GradedRing::from_strs(101, &["x", "y"], &["x^2"])?;
    let res = free_resolution(&FPModule::residue_field(&hyp), 5);
    println!("k over F101[x,y]/(x^2): betti {:?}, truncated {}", res.betti(), res.truncated);

    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let res = free_resolution(&omega, 6);
    println!("omega over k[t^3,t^4,t^5]: betti {:?}", res.betti());
    println!("Hilbert series of R: {}", hilbert_series(&FPModule::free(&r, vec![0])));
    println!("Hilbert series of omega: {}", hilbert_series(&omega));
    Ok(())
}
