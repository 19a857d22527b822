//! λM ≅ M: vertex scalings on trees, and a two-loop point that fails.
//!
//!     cargo run --example homogeneity

use quiver_cm::homogeneity::{is_homogeneous, is_isomorphic_to_multiple, scaling_isomorphism};
use quiver_cm::quiver::parse_quiver;
use quiver_cm::representation::{parse_representation, parse_representation_file};
use quiver_cm::Field;

fn main() -> quiver_cm::Result<()> {
    let f = Field::Rational;
    let d4 = parse_quiver(include_str!("../data/d4.quiver"))?;
    let m = quiver_cm::roots::indecomposable(&d4, &quiver_cm::DimVector(vec![1, 1, 1, 2]), f)?;
    let lambda = f.from_int(3);
    let s = scaling_isomorphism(&d4, m.dims(), &lambda)?;
    println!("D4 vertex exponents {:?}", s.exponents);
    assert_eq!(s.apply(&m)?, m.scale(&lambda));
    println!("conjugating by the scaling gives 3M: ok");
    println!("verdict: {}", is_homogeneous(&m));

    let a3 = parse_quiver(include_str!("../data/a3.quiver"))?;
    let n = parse_representation(include_str!("../data/a3_mixed.rep"), &a3)?;
    println!("A3 point: {}", is_homogeneous(&n));

    let two = parse_representation_file(include_str!("../data/twoloop.rep"), None)?;
    println!("two loops: {}", is_homogeneous(&two));
    for l in [-1, 2, 5] {
        let iso = is_isomorphic_to_multiple(&two, &f.from_int(l))?;
        println!("  {l}M ≅ M: {iso}");
    }
    Ok(())
}
