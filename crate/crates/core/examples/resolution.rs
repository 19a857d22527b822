//! Gröbner bases and minimal free resolutions of a few classical ideals.
//!
//!     cargo run --example resolution

use quiver_cm::groebner::{buchberger, hilbert_dimension, minimal_free_resolution, Ideal, PolyRing};
use quiver_cm::Field;

fn show(name: &str, vars: &[&str], gens: &[&str]) -> quiver_cm::Result<()> {
    let ring = PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), Field::Rational);
    let polys = gens.iter().map(|g| ring.parse(g)).collect::<quiver_cm::Result<Vec<_>>>()?;
    let ideal = Ideal::new(ring.field(), polys);
    let gb = buchberger(&ideal, &ring);
    let res = minimal_free_resolution(&ideal, &ring)?;
    println!("== {name}");
    println!("Gröbner basis: {}", gb.iter().map(|g| ring.format(g)).collect::<Vec<_>>().join(", "));
    println!("Krull dimension of R/I: {}", hilbert_dimension(&gb, &ring));
    print!("{}", res.betti());
    println!("pd = {}\n", res.betti().pd());
    Ok(())
}

fn main() -> quiver_cm::Result<()> {
    show("twisted cubic", &["a", "b", "c", "d"], &["a*c - b^2", "a*d - b*c", "b*d - c^2"])?;
    show("Koszul complex on 3 variables", &["x", "y", "z"], &["x", "y", "z"])?;
    show("2x2 determinant", &["a", "b", "c", "d"], &["a*d - b*c"])?;
    show("not Cohen-Macaulay", &["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"])?;
    Ok(())
}
