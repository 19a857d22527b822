//! Orbit enumeration and Krull–Schmidt decomposition over a Dynkin quiver.
//!
//!     cargo run --example decompose

use quiver_cm::quiver::parse_quiver;
use quiver_cm::representation::parse_representation;
use quiver_cm::roots::DynkinContext;
use quiver_cm::{DimVector, Field, Quiver};

fn main() -> quiver_cm::Result<()> {
    let a3 = Quiver::linear_a(3);
    let ctx = DynkinContext::new(&a3, Field::Rational)?;
    let d = DimVector(vec![1, 2, 1]);
    let orbits = ctx.enumerate_orbits(&d)?;
    println!("{} orbits of A3 with d = {d}:", orbits.len());
    for label in &orbits {
        // build the direct sum and decompose it again
        let m = ctx.build(label)?;
        let back = ctx.decompose(&m)?;
        assert_eq!(&back, label);
        println!("  {label}");
    }

    let q = parse_quiver(include_str!("../data/a3.quiver"))?;
    let m = parse_representation(include_str!("../data/a3_mixed.rep"), &q)?;
    let ctx = DynkinContext::new(&q, Field::Rational)?;
    println!("\ndata/a3_mixed.rep decomposes as {}", ctx.decompose(&m)?);

    let d4 = parse_quiver(include_str!("../data/d4.quiver"))?;
    let n = quiver_cm::roots::enumerate_orbits(&d4, &DimVector(vec![1, 1, 1, 2]))?.len();
    println!("D4 with d = (1,1,1,2) has {n} orbits");
    Ok(())
}
