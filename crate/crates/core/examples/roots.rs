//! Positive roots of Dynkin quivers and the indecomposable for each root,
//! built with reflection functors.
//!
//!     cargo run --example roots

use quiver_cm::homology::end_dim;
use quiver_cm::quiver::parse_quiver;
use quiver_cm::roots::{indecomposable, positive_roots, tits_form};
use quiver_cm::{Field, Quiver};

fn main() -> quiver_cm::Result<()> {
    for (name, q) in [
        ("A3", Quiver::linear_a(3)),
        ("D4", parse_quiver(include_str!("../data/d4.quiver"))?),
        ("E6", parse_quiver(include_str!("../data/e6.quiver"))?),
    ] {
        let roots = positive_roots(&q)?;
        let highest = roots.last().unwrap();
        println!("{name}: {} positive roots, highest {highest}", roots.len());
    }

    let d4 = parse_quiver(include_str!("../data/d4.quiver"))?;
    println!("\nindecomposables of D4:");
    for r in positive_roots(&d4)? {
        let m = indecomposable(&d4, &r, Field::Rational)?;
        // a brick: End is the field
        println!("  {r}  q(d) = {}  dim End = {}", tits_form(&d4, &r), end_dim(&m));
    }
    let top = indecomposable(&d4, &positive_roots(&d4)?.last().unwrap().clone(), Field::Rational)?;
    println!("\nthe indecomposable of the highest root:\n{}", top.to_text());
    Ok(())
}
