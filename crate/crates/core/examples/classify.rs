//! Structural classification of a few quivers.
//!
//!     cargo run --example classify

use quiver_cm::classify::classify;
use quiver_cm::quiver::parse_quiver;
use quiver_cm::Quiver;

fn main() -> quiver_cm::Result<()> {
    let quivers = [
        ("A4 (equioriented)", Quiver::linear_a(4)),
        ("D4", parse_quiver(include_str!("../data/d4.quiver"))?),
        ("E6", parse_quiver(include_str!("../data/e6.quiver"))?),
        ("Kronecker", parse_quiver(include_str!("../data/kronecker.quiver"))?),
        (
            "two loops",
            parse_quiver("vertex 1\narrow alpha: 1 -> 1\narrow beta: 1 -> 1\n")?,
        ),
    ];
    for (name, q) in &quivers {
        let c = classify(q);
        let dynkin = c.dynkin.map_or("-".to_string(), |t| t.to_string());
        println!(
            "{name:<18} connected={:<5} acyclic={:<5} tree={:<5} dynkin={dynkin}",
            c.connected, c.acyclic, c.tree
        );
    }
    Ok(())
}
