//! Krull dimension and Hilbert series of `R/I` read off the initial ideal,
//! plus a randomized regular-sequence search bounding depth from below.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::Monomial;
use super::poly::Poly;
use super::{buchberger, Ideal, PolyRing};

/// Minimal generators of the monomial ideal spanned by `monos`.
fn minimalize(monos: Vec<Monomial>) -> Vec<Monomial> {
    let mut monos = monos;
    monos.sort_by_key(|m| m.degree());
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn lead_monomials(gb: &[Poly]) -> Vec<Monomial> {
    minimalize(gb.iter().filter_map(|g| g.lead_monomial().cloned()).collect())
}

/// Size of a smallest set of variables meeting every support.
fn min_hitting_set(supports: &[Vec<usize>], chosen: &mut Vec<usize>, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    let Some(open) = supports.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) else {
        *best = chosen.len();
        return;
    };
    for &v in open.clone().iter() {
        chosen.push(v);
        min_hitting_set(supports, chosen, best);
        chosen.pop();
    }
}

/// Krull dimension of `R/I` from a Gröbner basis of `I`: the size of a
/// largest set of variables containing the support of no leading monomial.
pub fn hilbert_dimension(gb: &[Poly], ring: &PolyRing) -> usize {
    let n = ring.nvars();
    let leads = lead_monomials(gb);
    if leads.iter().any(Monomial::is_one) {
        // unit ideal: empty variety, reported as dimension 0
        return 0;
    }
    let supports: Vec<Vec<usize>> = leads.iter().map(|m| m.support().collect()).collect();
    let mut best = n;
    min_hitting_set(&supports, &mut Vec::new(), &mut best);
    n - best
}

/// Integer polynomial in `z`, lowest degree first.
pub type ZPoly = Vec<BigInt>;

fn zpoly_sub_shifted(a: &ZPoly, b: &ZPoly, shift: usize) -> ZPoly {
    let mut out = a.clone();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, BigInt::zero());
    }
    for (k, c) in b.iter().enumerate() {
        out[k + shift] -= c;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn zpoly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn numerator_of(gens: &[Monomial]) -> ZPoly {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, m| {
            let one = vec![BigInt::one()];
            zpoly_mul(&acc, &zpoly_sub_shifted(&one, &one, m.degree() as usize))
        });
    }
    let (last, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|m| m.gcd(last).quotient_of(m)).collect();
    zpoly_sub_shifted(&numerator_of(rest), &numerator_of(&colon), last.degree() as usize)
}

/// `K(z)` with Hilbert series of `R/I` equal to `K(z) / (1 - z)^n`.
pub fn hilbert_numerator(gb: &[Poly]) -> ZPoly {
    numerator_of(&lead_monomials(gb))
}

/// Length of a regular sequence of random linear forms on `R/I` found
/// greedily; a lower bound for depth. A homogeneous linear `u` is regular on
/// `R/J` exactly when `K_{J+u} = (1 - z) K_J`.
pub fn depth_lower_bound(ideal: &Ideal, ring: &PolyRing, seed: u64, attempts: usize) -> usize {
    let field = ring.field();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = ideal.generators().to_vec();
    let mut numerator = hilbert_numerator(&buchberger(ideal, ring));
    let mut found = 0;
    'outer: while found < n {
        for _ in 0..attempts {
            let u = Poly::from_terms(
                field,
                n,
                (0..n)
                    .map(|i| (Monomial::var(i, n), field.from_int(rng.gen_range(-9..=9))))
                    .collect(),
            );
            if u.is_zero() {
                continue;
            }
            let mut candidate = gens.clone();
            candidate.push(u);
            let next = Ideal::new(field, candidate.clone());
            let k = hilbert_numerator(&buchberger(&next, ring));
            let expected = zpoly_sub_shifted(&numerator, &numerator, 1);
            if k == expected {
                gens = candidate;
                numerator = k;
                found += 1;
                continue 'outer;
            }
        }
        break;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new((0..n).map(|i| format!("x{i}")).collect(), Field::Rational)
    }

    fn gb(r: &PolyRing, gens: &[&str]) -> Vec<Poly> {
        let i = Ideal::new(r.field(), gens.iter().map(|g| r.parse(g).unwrap()).collect());
        buchberger(&i, r)
    }

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn dimensions() {
        assert_eq!(hilbert_dimension(&gb(&ring(1), &["x0"]), &ring(1)), 0);
        assert_eq!(hilbert_dimension(&gb(&ring(4), &["x0*x3 - x1*x2"]), &ring(4)), 3);
        assert_eq!(hilbert_dimension(&[], &ring(5)), 5);
        // twisted cubic is a curve in P^3: affine cone of dimension 2
        let tc = gb(&ring(4), &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        assert_eq!(hilbert_dimension(&tc, &ring(4)), 2);
    }

    #[test]
    fn numerators() {
        assert_eq!(hilbert_numerator(&gb(&ring(2), &["x0", "x1"])), z(&[1, -2, 1]));
        assert_eq!(hilbert_numerator(&gb(&ring(4), &["x0*x3 - x1*x2"])), z(&[1, 0, -1]));
        // (x0^2, x0*x1): 1 - 2z^2 + z^3
        assert_eq!(hilbert_numerator(&gb(&ring(2), &["x0^2", "x0*x1"])), z(&[1, 0, -2, 1]));
    }

    #[test]
    fn depth_bounds() {
        let r = ring(4);
        let det = Ideal::new(r.field(), vec![r.parse("x0*x3 - x1*x2").unwrap()]);
        assert_eq!(depth_lower_bound(&det, &r, 7, 4), 3);
        let r2 = ring(2);
        // (x0^2, x0*x1) has depth 0
        let emb = Ideal::new(r2.field(), vec![r2.parse("x0^2").unwrap(), r2.parse("x0*x1").unwrap()]);
        assert_eq!(depth_lower_bound(&emb, &r2, 7, 4), 0);
    }
}
