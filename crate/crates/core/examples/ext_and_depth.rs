//! Ext modules, depth by two methods, and regular sequences.

use semidual::fpmod::{quotient_by_element, FPModule};
use semidual::groebner::GradedRing;
use semidual::homalg::{depth, depth_koszul, ext_modules, module_dimension, regular_sequence_search};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let k = FPModule::residue_field(&r);

    for (i, e) in ext_modules(&omega, &omega, 6).iter().enumerate() {
        println!("Ext^{i}(omega, omega): {} generators", e.ngens());
    }
    let e1 = &ext_modules(&omega, &k, 1)[1];
    println!("Ext^1(omega, k) has generators in degrees {:?}", e1.gen_degrees());

    let x = r.parse("x")?;
    for (name, m) in [("R", FPModule::free(&r, vec![0])), ("omega", omega.clone()), ("omega/x omega", quotient_by_element(&omega, &x)?)] {
        let d = depth(&m)?;
        println!(
            "{name}: depth {} (Koszul {}), dim {}, witness {:?}",
            d.value,
            depth_koszul(&m)?,
            module_dimension(&m)?,
            d.witness.iter().map(|f| r.format(f)).collect::<Vec<_>>()
        );
    }
    let seq = regular_sequence_search(&omega, 1, 4);
    println!("regular sequence on omega: {:?}", seq.iter().map(|f| r.format(f)).collect::<Vec<_>>());
    Ok(())
}
