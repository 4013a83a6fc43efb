//! Exact arithmetic in F_p[x, y, z] and the three monomial orders.

use semidual::polyring::{hilbert_numerator, leading_term, OrderKind, PolyRing};

fn main() -> semidual::Result<()> {
    let r = PolyRing::standard(2, &["x", "y"])?;
    let f = r.parse("x + y")?;
    println!("over F2: (x + y)^2 = {}", r.format(&r.pow(&f, 2)));

    let s = PolyRing::standard(101, &["x", "y", "z"])?;
    let g = s.parse("x*z^2 + y^3 + x^2")?;
    for kind in [OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex] {
        let (c, m) = leading_term(&s, &g, kind)?;
        println!("{:>9}: leading term of {} is {} * {}", kind.name(), s.format(&g), c, s.format_monomial(&m));
    }

    // Weighted grading: x, y, z of degrees 3, 4, 5.
    let w = PolyRing::new(101, vec!["x".into(), "y".into(), "z".into()], vec![3, 4, 5], OrderKind::DegRevLex)?;
    let h = w.parse("y^2 - x*z")?;
    println!("deg(y^2 - x*z) = {:?} with weights 3, 4, 5", w.homogeneous_degree(&h));
    println!("free module on degrees 0, 1, 1: {}", hilbert_numerator(&[0, 1, 1]));
    Ok(())
}
