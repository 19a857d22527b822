//! Full Cohen–Macaulay check of every orbit closure of A3 with d = (1,2,1):
//! rank-condition ideal, Gröbner basis, dimension, minimal resolution, depth.
//!
//!     cargo run --example verify_cm

use quiver_cm::groebner::verify_cm;
use quiver_cm::roots::DynkinContext;
use quiver_cm::{DimVector, Field, Quiver};

fn main() -> quiver_cm::Result<()> {
    let q = Quiver::linear_a(3);
    let ctx = DynkinContext::new(&q, Field::Rational)?;
    let d = DimVector(vec![1, 2, 1]);
    println!("{:<36} {:>4} {:>4} {:>6} {:>5} {:>3}", "orbit", "dim", "pd", "depth", "gens", "cm");
    for label in ctx.enumerate_orbits(&d)? {
        let r = verify_cm(&ctx.build(&label)?)?;
        assert_eq!(r.pd as i64, r.pd_formula);
        println!(
            "{:<36} {:>4} {:>4} {:>6} {:>5} {:>3}",
            label.to_string(),
            r.dim,
            r.pd,
            r.depth,
            r.generators.len(),
            if r.cm { "yes" } else { "no" }
        );
    }

    let zero = ctx.build(&quiver_cm::roots::OrbitLabel::semisimple(&d))?;
    let r = verify_cm(&zero)?;
    println!("\nzero orbit, l = {}, betti as JSON: {}", r.l, serde_json::to_string(&r.betti).unwrap());
    Ok(())
}
