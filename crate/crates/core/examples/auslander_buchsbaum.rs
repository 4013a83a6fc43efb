//! The identity C-dim Y = depth C - depth Y, checked end to end.

use semidual::fpmod::{quotient_by_element, FPModule};
use semidual::groebner::GradedRing;
use semidual::semidual::{verify_ab, Config};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    let omega = FPModule::from_strs(&r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]])?;
    let y = quotient_by_element(&omega, &r.parse("x")?)?;
    let rep = verify_ab(&omega, &y, &Config::default())?;
    println!(
        "C-dim Y = {} = {} - {} (identity {}, pd Hom(C, Y) = {})",
        rep.c_dim, rep.depth_c.value, rep.depth_y.value, rep.identity_holds, rep.pd_hom
    );
    for step in &rep.reduction {
        println!(
            "  reduce by {}: regular on Y {}, on C {}, in R {}, pd {} -> {}",
            step.element, step.nzd_on_y, step.nzd_on_c, step.nzd_in_ring, step.pd_before, step.pd_after
        );
    }
    for c in &rep.corollaries.checks {
        println!("  {}: {} ({})", c.name, c.passed, c.detail);
    }
    println!("{}", serde_json::to_string_pretty(&rep.to_json()).unwrap());

    // Over a hypersurface, k has no finite C-dimension for C = R.
    let hyp = GradedRing::from_strs(101, &["x", "y"], &["x^2"])?;
    match verify_ab(&FPModule::free(&hyp, vec![0]), &FPModule::residue_field(&hyp), &Config::default()) {
        Err(e) => println!("hypersurface, Y = k: {e} (exit code {})", e.exit_code()),
        Ok(_) => println!("hypersurface, Y = k: unexpectedly finite"),
    }
    Ok(())
}
