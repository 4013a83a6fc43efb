//! Bass-class checks and C-resolutions built from a free resolution of
//! Hom(C, Y).

use semidual::fpmod::{quotient_by_element, FPModule};
use semidual::groebner::GradedRing;
use semidual::semidual::{bass_class_check, c_resolution};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let x = r.parse("x")?;
    let y = quotient_by_element(&omega, &x)?;
    let k = FPModule::residue_field(&r);

    for (name, m) in [("omega", &omega), ("omega/x omega", &y), ("k", &k)] {
        let b = bass_class_check(&omega, m, 6)?;
        println!("{name}: Bass class {} (first nonzero Ext {:?}, evaluation iso {})", b.holds(), b.first_nonvanishing, b.evaluation_iso);
    }
    let res = c_resolution(&omega, &y, 4)?;
    println!("C-resolution of omega/x omega: ranks {:?}, exact {:?}, length {}", res.base.ranks(), res.exact, res.length);
    for i in 1..=res.length {
        let d = res.base.boundary(i).unwrap();
        println!("  d{i} = {:?}", d.format_rows(&r));
    }
    Ok(())
}
