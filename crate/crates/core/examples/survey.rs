//! The pd formula over every orbit of a Dynkin quiver, without resolutions.
//!
//!     cargo run --example survey

use quiver_cm::groebner::pd_formula_survey;
use quiver_cm::quiver::parse_quiver;
use quiver_cm::DimVector;

fn main() -> quiver_cm::Result<()> {
    let e6 = parse_quiver(include_str!("../data/e6.quiver"))?;
    let d = DimVector(vec![1, 1, 2, 1, 1, 1]);
    let rows = pd_formula_survey(&e6, &d)?;
    println!("E6, d = {d}: {} orbits", rows.len());
    for r in &rows {
        let tag = match (r.open, r.closed) {
            (true, _) => "open",
            (_, true) => "closed",
            _ => "",
        };
        println!("  {:<50} orbit dim {:>2}  pd {:>2}  {tag}", r.label, r.orbit_dim, r.pd_formula);
    }
    Ok(())
}
