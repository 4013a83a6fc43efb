//! Splitting a surjection C^n -> C^q by unit-pivot elimination.

use semidual::fpmod::RingMatrix;
use semidual::groebner::GradedRing;
use semidual::semidual::split_surjection;

fn show(r: &GradedRing, name: &str, m: &RingMatrix) {
    println!("{name}:");
    for row in m.format_rows(r) {
        println!("  [{}]", row.join(", "));
    }
}

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x", "y"], &[])?;
    let p = |s: &str| r.parse(s).unwrap();
    let t = RingMatrix::from_rows(
        vec![0, 0],
        vec![1, 0, 0],
        vec![vec![p("x"), p("1"), p("2")], vec![p("y"), p("3"), p("1")]],
    );
    show(&r, "T", &t);
    let s = split_surjection(&r, &t)?;
    show(&r, "section S", &s.section);
    show(&r, "complement K", &s.complement);
    println!("pivots: {:?}", s.pivots);
    show(&r, "T S", &t.mul(&r, &s.section));

    let bad = RingMatrix::from_rows(vec![0], vec![1, 1], vec![vec![p("x"), p("y")]]);
    match split_surjection(&r, &bad) {
        Ok(_) => println!("[x, y] splits"),
        Err(e) => println!("[x, y]: {e}"),
    }
    Ok(())
}
