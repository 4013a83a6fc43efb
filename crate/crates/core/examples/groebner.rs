//! Gröbner bases and ideal queries for the semigroup ring k[t^3, t^4, t^5].

use semidual::groebner::{buchberger, ideal_colon_element, ideal_dimension, radical_membership, GradedRing};
use semidual::polyring::{OrderKind, PolyRing};

fn main() -> semidual::Result<()> {
    let r = GradedRing::from_strs(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?;
    println!("ring: {}", r.describe());
    println!("reduced basis: {:?}", r.ideal().format());
    println!("Krull dimension: {}", r.dimension());
    let f = r.parse("y^3")?;
    println!("normal form of y^3: {}", r.format(&r.nf(&f)));
    println!("x^3 + z is homogeneous: {}", r.is_homogeneous(&r.parse("x^3 + z")?));

    let s = PolyRing::standard(7, &["x", "y"])?;
    let g = buchberger(&s, &[s.parse("x^2")?, s.parse("y^2")?], OrderKind::DegRevLex)?;
    println!("x + y in rad(x^2, y^2): {}", radical_membership(&s.parse("x + y")?, &g)?);
    println!("dim F7[x,y]/(x^2, y^2) = {}", ideal_dimension(&g));
    let xy = buchberger(&s, &[s.parse("x*y")?], OrderKind::DegRevLex)?;
    println!("(xy) : x = {:?}", ideal_colon_element(&xy, &s.parse("x")?)?.format());
    Ok(())
}
