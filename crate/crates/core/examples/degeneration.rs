//! Degeneration order of orbits for a Dynkin quiver, annotated with orbit
//! dimension and the pd formula, written as a DOT graph.
//!
//!     cargo run --example degeneration > d4.dot

use quiver_cm::degeneration::{check_pd_minimality, degeneration_poset, export_dot};
use quiver_cm::quiver::parse_quiver;
use quiver_cm::DimVector;

fn main() -> quiver_cm::Result<()> {
    let d4 = parse_quiver(include_str!("../data/d4.quiver"))?;
    let p = degeneration_poset(&d4, &DimVector(vec![1, 1, 1, 2]))?;

    eprintln!("{} orbits, {} cover relations", p.len(), p.covers.len());
    for a in p.maximal() {
        eprintln!("open orbit:   {}", p.labels[a]);
    }
    for a in p.minimal() {
        eprintln!("closed orbit: {}", p.labels[a]);
    }
    let report = check_pd_minimality(&p);
    eprintln!(
        "pd minimal on every orbit closure: {} ({} violations)",
        report.passed(),
        report.violations.len()
    );
    print!("{}", export_dot(&p));
    Ok(())
}
