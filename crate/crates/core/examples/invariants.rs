//! Hom spaces, End, Ext¹, orbit dimension and the pd formula
//! `l + dim End(M) − Σ dᵢ²`, including the Kronecker caveat.
//!
//!     cargo run --example invariants

use quiver_cm::homology::{ext1_dim, hom_dim, invariant_report, orbit_dim};
use quiver_cm::quiver::parse_quiver;
use quiver_cm::representation::{parse_representation, parse_representation_file};
use quiver_cm::{Field, Representation};

fn main() -> quiver_cm::Result<()> {
    let a3 = parse_quiver(include_str!("../data/a3.quiver"))?;
    let m = parse_representation(include_str!("../data/a3_mixed.rep"), &a3)?;
    let simple = Representation::simple(&a3, Field::Rational, 1);

    println!("M on A3 with d = {}", m.dims());
    println!("  dim Hom(S_2, M) = {}", hom_dim(&simple, &m)?);
    println!("  dim Hom(M, S_2) = {}", hom_dim(&m, &simple)?);
    println!("  dim Ext1(M, M)  = {}", ext1_dim(&m)?);
    println!("  orbit dimension = {}", orbit_dim(&m)?);

    let r = invariant_report(&m)?;
    println!("  l = {}, dim End = {}, pd formula = {}", r.l, r.end_dim, r.pd_formula);

    // not a tree: the formula is reported with a caveat
    let k = parse_representation_file(include_str!("../data/kronecker.rep"), None)?;
    let r = invariant_report(&k)?;
    println!("Kronecker point, d = {}", r.dims);
    println!("  l = {}, dim End = {}, pd formula = {}", r.l, r.end_dim, r.pd_formula);
    if let Some(c) = r.caveat {
        println!("  caveat: {c}");
    }
    Ok(())
}
