//! Hom, tensor, annihilators and idempotent summands of finitely presented
//! modules.

use semidual::fpmod::{annihilator, hom_module, is_isomorphic, summand_analysis, tensor, FPModule, RingMatrix};
use semidual::groebner::GradedRing;

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;

    let end = hom_module(&omega, &omega);
    println!("End(omega): {} generator(s), {} relation(s)", end.module.ngens(), end.module.nrels());
    let iso = is_isomorphic(&end.module, &FPModule::free(&r, vec![0]));
    println!("End(omega) = R: {}", iso.isomorphic);

    let t = tensor(&omega, &omega);
    println!("omega (x) omega: generators in degrees {:?}", t.gen_degrees());
    println!("ann(omega) = {:?}", annihilator(&omega).format());

    // An idempotent on R^2 splits it into two rank-one summands.
    let s = GradedRing::from_strs(101, &["x", "y"], &[])?;
    let e = RingMatrix::from_rows(
        vec![0, 0],
        vec![0, 0],
        vec![vec![s.one(), s.zero()], vec![s.zero(), s.zero()]],
    );
    let a = summand_analysis(&s, &e)?;
    println!("idempotent diag(1, 0): image rank {}, kernel rank {}", a.p, a.q);
    Ok(())
}
