//! Certificates for the semidualizing property, including two failures.

use semidual::fpmod::FPModule;
use semidual::groebner::GradedRing;
use semidual::semidual::{check_semidualizing, default_ext_bound};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let b = default_ext_bound(&r);
    for (name, c) in [
        ("R", FPModule::free(&r, vec![0])),
        ("omega", omega),
        ("R + R", FPModule::free(&r, vec![0, 0])),
        ("k", FPModule::residue_field(&r)),
    ] {
        let cert = check_semidualizing(&c, b)?;
        println!("{name:>6}: {}", serde_json::to_string(&cert.to_json()).unwrap());
    }
    Ok(())
}
