//! Graded Betti numbers from the minimal resolution against Koszul homology
//! of R/I computed by linear algebra on standard monomials.

mod common;

use quiver_cm::groebner::{buchberger, minimal_free_resolution, rank_condition_ideal, Ideal, PolyRing};
use quiver_cm::quiver::rep_space_dim;
use quiver_cm::roots::DynkinContext;
use quiver_cm::{DimVector, Field, Quiver};

use common::koszul_betti;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Compares every β_{i,j} with j up to one past the largest degree seen.
fn check(ring: &PolyRing, ideal: &Ideal) {
    let betti = minimal_free_resolution(ideal, ring).unwrap().betti();
    let gb = buchberger(ideal, ring);
    let n = ring.nvars();
    let top = betti.triples().iter().map(|t| t[1] as u32).max().unwrap_or(0) + 1;
    for i in 0..=n {
        for j in i as u32..=top.max(i as u32) {
            assert_eq!(
                betti.get(i, j),
                koszul_betti(&gb, n, ring.field(), i, j),
                "β_{i},{j} for {:?}",
                ideal.generators().iter().map(|g| ring.format(g)).collect::<Vec<_>>()
            );
        }
    }
}

fn ring(n: usize) -> PolyRing {
    PolyRing::new((0..n).map(|i| format!("x{i}")).collect(), Field::Rational)
}

fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
    Ideal::new(r.field(), gens.iter().map(|g| r.parse(g).unwrap()).collect())
}

#[test]
fn koszul_complex_of_the_variables() {
    for n in 1..=5 {
        let r = ring(n);
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let i = Ideal::new(r.field(), names.iter().map(|g| r.parse(g).unwrap()).collect());
        let betti = minimal_free_resolution(&i, &r).unwrap().betti();
        for k in 0..=n {
            assert_eq!(betti.get(k, k as u32), binomial(n, k));
            assert_eq!(betti.total(k), binomial(n, k));
        }
        check(&r, &i);
    }
}

#[test]
fn classical_examples() {
    let r = ring(4);
    let cubic = ideal(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
    let gb = buchberger(&cubic, &r);
    assert_eq!(koszul_betti(&gb, 4, r.field(), 1, 2), 3);
    assert_eq!(koszul_betti(&gb, 4, r.field(), 2, 3), 2);
    assert_eq!(koszul_betti(&gb, 4, r.field(), 2, 4), 0);
    check(&r, &cubic);
    check(&r, &ideal(&r, &["x0*x1", "x1*x2", "x2*x3"]));
    check(&r, &ideal(&r, &["x0^2", "x1^2", "x0*x1*x2"]));
    let r = ring(3);
    check(&r, &ideal(&r, &["x0^2 - x1*x2", "x1^3"]));
}

#[test]
fn rank_condition_ideals_of_small_orbits() {
    let mut checked = 0;
    for (n, dims) in [
        (2, vec![vec![1, 1], vec![1, 2], vec![2, 2]]),
        (3, vec![vec![1, 1, 1], vec![1, 2, 1], vec![2, 1, 2], vec![1, 1, 2]]),
    ] {
        let q = Quiver::linear_a(n);
        let ctx = DynkinContext::new(&q, Field::Rational).unwrap();
        for d in dims.into_iter().map(DimVector) {
            assert!(rep_space_dim(&q, &d) <= 6);
            for label in ctx.enumerate_orbits(&d).unwrap() {
                let m = ctx.build(&label).unwrap();
                let (ring, ideal) = rank_condition_ideal(&m).unwrap();
                check(&ring, &ideal);
                checked += 1;
            }
        }
    }
    assert!(checked >= 15);
}
