//! Passing from (R, C) to (R/(x), C/xC) along a nonzerodivisor.

use semidual::fpmod::FPModule;
use semidual::groebner::GradedRing;
use semidual::semidual::{extend_regular_sequence, reduce_by_nzd, Config};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let x = r.parse("x")?;
    let red = reduce_by_nzd(&r, &omega, &x, 8)?;
    println!("R/(x) = {} (dimension {})", red.ring.describe(), red.ring.dimension());
    println!("C/xC: {}", red.module.describe());
    println!("certificate: {}", red.certificate.verdict());

    // Over F101[x,y]/(x^2) the element x is a zerodivisor.
    let hyp = GradedRing::from_strs(101, &["x", "y"], &["x^2"])?;
    if let Err(e) = reduce_by_nzd(&hyp, &FPModule::free(&hyp, vec![0]), &hyp.parse("x")?, 4) {
        println!("reducing F101[x,y]/(x^2) by x: {e}");
    }

    let ext = extend_regular_sequence(&omega, &omega, &[], &Config::default())?;
    println!("maximal regular sequence on omega: {:?}", ext.sequence.iter().map(|f| r.format(f)).collect::<Vec<_>>());
    Ok(())
}
