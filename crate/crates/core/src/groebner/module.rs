//! Gröbner bases of submodules of graded free modules `⊕ R(-shiftₖ)`.
//!
//! Terms are ordered position-over-term: a smaller position index is larger,
//! ties broken by degrevlex. Putting the module block first and a tracking
//! block after it turns a Gröbner basis computation into a syzygy
//! computation (the elements whose lead term falls in the tracking block).

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::Poly;
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

fn term_cmp(a_pos: usize, a: &Monomial, b_pos: usize, b: &Monomial) -> Ordering {
    b_pos.cmp(&a_pos).then_with(|| a.cmp(b))
}

/// An element of a free module; terms strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_poly(p: &Poly, pos: usize) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| Term {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// `Σ components[k] e_k`.
    pub fn from_components(components: &[Poly]) -> Self {
        let mut terms: Vec<Term> = Vec::new();
        for (pos, p) in components.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| Term {
                pos,
                mono: m.clone(),
                coeff: c.clone(),
            }));
        }
        terms.sort_by(|a, b| term_cmp(b.pos, &b.mono, a.pos, &a.mono));
        Vector { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Component at `pos` as a polynomial in `nvars` variables.
    pub fn component(&self, pos: usize, nvars: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.pos == pos)
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect::<Vec<_>>();
        if terms.is_empty() {
            Poly::zero(nvars)
        } else {
            Poly::from_terms(Field::Rational, nvars, terms)
        }
    }

    /// Degree under the given shifts, if homogeneous.
    pub fn degree(&self, shifts: &[u32]) -> Option<u32> {
        let first = self.terms.first()?;
        let d = first.mono.degree() + shifts[first.pos];
        self.terms
            .iter()
            .all(|t| t.mono.degree() + shifts[t.pos] == d)
            .then_some(d)
    }

    /// Drops the first `k` positions and renumbers the rest from zero.
    pub fn shift_down(&self, k: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos >= k)
                .map(|t| Term {
                    pos: t.pos - k,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Moves every term up by `k` positions.
    pub fn shift_up(&self, k: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos + k,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, field: Field, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: field.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn monic(&self, field: Field) -> Vector {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(field, &field.inv(&t.coeff).expect("nonzero")),
        }
    }

    /// `self + c·m·other`.
    pub fn add_scaled(&self, field: Field, c: &Scalar, m: &Monomial, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| Term {
                pos: t.pos,
                mono: t.mono.mul(m),
                coeff: field.mul(&t.coeff, c),
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match term_cmp(x.pos, &x.mono, y.pos, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = field.add(&x.coeff, &y.coeff);
                        if !s.is_zero() {
                            out.push(Term {
                                pos: x.pos,
                                mono: x.mono.clone(),
                                coeff: s,
                            });
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, field: Field, other: &Vector) -> Vector {
        match other.terms.first() {
            None => self.clone(),
            Some(t) => self.add_scaled(field, &Scalar::one(), &Monomial::one(t.mono.nvars()), other),
        }
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, field: Field, p: &Poly) -> Vector {
        let mut out = Vector::zero();
        for (m, c) in p.terms() {
            out = out.add_scaled(field, c, m, self);
        }
        out
    }
}

/// Incremental Buchberger completion for homogeneous (or arbitrary, when
/// completed without a degree bound) module elements.
pub struct GroebnerBuilder {
    field: Field,
    shifts: Vec<u32>,
    basis: Vec<Vector>,
    pairs: BinaryHeap<Reverse<(u32, usize, usize)>>,
    pending: BTreeSet<(usize, usize)>,
    ideal_case: bool,
}

impl GroebnerBuilder {
    pub fn new(field: Field, shifts: Vec<u32>) -> Self {
        let ideal_case = shifts.len() == 1;
        GroebnerBuilder {
            field,
            shifts,
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            pending: BTreeSet::new(),
            ideal_case,
        }
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vector> {
        self.basis
    }

    fn pair_degree(&self, i: usize, j: usize) -> u32 {
        let (a, b) = (self.basis[i].lead().unwrap(), self.basis[j].lead().unwrap());
        a.mono.lcm(&b.mono).degree() + self.shifts[a.pos]
    }

    /// Reduces `v` and, if something survives, adds it with its new pairs.
    pub fn add(&mut self, v: Vector) -> bool {
        let r = self.reduce(&v);
        if r.is_zero() {
            return false;
        }
        self.insert(r.monic(self.field));
        true
    }

    fn insert(&mut self, v: Vector) {
        let k = self.basis.len();
        let pos = v.lead().unwrap().pos;
        self.basis.push(v);
        for i in 0..k {
            if self.basis[i].lead().unwrap().pos == pos {
                let d = self.pair_degree(i, k);
                self.pairs.push(Reverse((d, i, k)));
                self.pending.insert((i, k));
            }
        }
    }

    fn skip_pair(&self, i: usize, j: usize) -> bool {
        let a = self.basis[i].lead().unwrap();
        let b = self.basis[j].lead().unwrap();
        if self.ideal_case && a.mono.is_coprime(&b.mono) {
            return true;
        }
        let l = a.mono.lcm(&b.mono);
        let key = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
        self.basis.iter().enumerate().any(|(k, g)| {
            if k == i || k == j {
                return false;
            }
            let t = g.lead().unwrap();
            t.pos == a.pos
                && t.mono.divides(&l)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn s_vector(&self, i: usize, j: usize) -> Vector {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let (a, b) = (f.lead().unwrap(), g.lead().unwrap());
        let l = a.mono.lcm(&b.mono);
        // both are monic
        let left = Vector::zero().add_scaled(self.field, &Scalar::one(), &a.mono.quotient_of(&l), f);
        left.add_scaled(
            self.field,
            &self.field.neg(&Scalar::one()),
            &b.mono.quotient_of(&l),
            g,
        )
    }

    /// Processes pairs of degree at most `max_degree` (all pairs when `None`).
    pub fn complete(&mut self, max_degree: Option<u32>) {
        while let Some(Reverse((d, i, j))) = self.pairs.peek().cloned() {
            if max_degree.is_some_and(|m| d > m) {
                break;
            }
            self.pairs.pop();
            if self.skip_pair(i, j) {
                self.pending.remove(&(i, j));
                continue;
            }
            self.pending.remove(&(i, j));
            let s = self.s_vector(i, j);
            let r = self.reduce(&s);
            if !r.is_zero() {
                self.insert(r.monic(self.field));
            }
        }
    }

    fn find_reducer(&self, t: &Term) -> Option<usize> {
        self.basis.iter().position(|g| {
            let l = g.lead().unwrap();
            l.pos == t.pos && l.mono.divides(&t.mono)
        })
    }

    /// Full normal form of `v` against the current basis.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut rest = v.clone();
        let mut done: Vec<Term> = Vec::new();
        while let Some(t) = rest.terms.first().cloned() {
            match self.find_reducer(&t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.lead().unwrap().mono.quotient_of(&t.mono);
                    rest = rest.add_scaled(self.field, &self.field.neg(&t.coeff), &q, g);
                }
                None => {
                    rest.terms.remove(0);
                    done.push(t);
                }
            }
        }
        Vector { terms: done }
    }

    /// Reduced basis: minimal lead terms, tails reduced, monic, sorted by
    /// increasing lead term. Requires a completed basis.
    pub fn reduced(&self) -> Vec<Vector> {
        let n = self.basis.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                let a = self.basis[i].lead().unwrap();
                !(0..n).any(|j| {
                    let b = self.basis[j].lead().unwrap();
                    j != i
                        && b.pos == a.pos
                        && b.mono.divides(&a.mono)
                        && (b.mono != a.mono || j < i)
                })
            })
            .collect();
        let minimal = GroebnerBuilder {
            field: self.field,
            shifts: self.shifts.clone(),
            basis: keep.iter().map(|&i| self.basis[i].clone()).collect(),
            pairs: BinaryHeap::new(),
            pending: BTreeSet::new(),
            ideal_case: self.ideal_case,
        };
        let mut out: Vec<Vector> = minimal
            .basis
            .iter()
            .map(|g| {
                let lead = g.terms[0].clone();
                let tail = Vector {
                    terms: g.terms[1..].to_vec(),
                };
                let mut terms = vec![lead];
                terms.extend(minimal.reduce(&tail).terms);
                Vector { terms }.monic(self.field)
            })
            .collect();
        out.sort_by(|a, b| {
            let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
            term_cmp(x.pos, &x.mono, y.pos, &y.mono)
        });
        out
    }
}

/// Generators of the syzygy module of `gens ⊂ ⊕ R(-shifts)`, as elements of
/// `⊕ R(-deg gₖ)`. Every generator must be nonzero and homogeneous.
pub fn syzygies(field: Field, shifts: &[u32], gens: &[Vector]) -> Vec<Vector> {
    let rank = shifts.len();
    let mut all_shifts = shifts.to_vec();
    all_shifts.extend(gens.iter().map(|g| g.degree(shifts).expect("homogeneous generator")));
    let nvars = gens
        .iter()
        .find_map(|g| g.lead().map(|t| t.mono.nvars()))
        .unwrap_or(0);
    let mut b = GroebnerBuilder::new(field, all_shifts);
    for (k, g) in gens.iter().enumerate() {
        let tag = Vector {
            terms: vec![Term {
                pos: rank + k,
                mono: Monomial::one(nvars),
                coeff: Scalar::one(),
            }],
        };
        b.insert_unreduced(g.add(field, &tag));
    }
    b.complete(None);
    b.into_basis()
        .into_iter()
        .filter(|v| v.lead().unwrap().pos >= rank)
        .map(|v| v.shift_down(rank))
        .collect()
}

impl GroebnerBuilder {
    /// Inserts without reducing first (used when the tracking block makes
    /// every input independent).
    fn insert_unreduced(&mut self, v: Vector) {
        if !v.is_zero() {
            let v = v.monic(self.field);
            self.insert(v);
        }
    }

    /// Appends an element already known to be part of a Gröbner basis, with
    /// no pair bookkeeping. Only `reduce` is meaningful afterwards.
    pub(crate) fn push_unchecked(&mut self, v: Vector) {
        if !v.is_zero() {
            self.basis.push(v);
        }
    }
}

/// A minimal homogeneous generating set chosen from `gens`, processed in
/// order of increasing degree.
pub fn minimal_generators(field: Field, shifts: &[u32], gens: &[Vector]) -> Vec<Vector> {
    let mut order: Vec<(u32, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| (g.degree(shifts).expect("homogeneous generator"), i))
        .collect();
    order.sort();
    let mut builder = GroebnerBuilder::new(field, shifts.to_vec());
    let mut kept = Vec::new();
    let mut idx = 0;
    while idx < order.len() {
        let d = order[idx].0;
        builder.complete(Some(d));
        let mut echelon: Vec<Vector> = Vec::new();
        let mut chosen = Vec::new();
        while idx < order.len() && order[idx].0 == d {
            let g = &gens[order[idx].1];
            idx += 1;
            let mut nf = builder.reduce(g);
            // reduce against the degree-d echelon rows
            while let Some(t) = nf.lead().cloned() {
                let Some(row) = echelon.iter().find(|r| {
                    let l = r.lead().unwrap();
                    l.pos == t.pos && l.mono == t.mono
                }) else {
                    break;
                };
                let one = Monomial::one(t.mono.nvars());
                nf = nf.add_scaled(field, &field.neg(&t.coeff), &one, row);
            }
            if !nf.is_zero() {
                // keep rows with distinct leads by full reduction of new row
                echelon.push(nf.monic(field));
                echelon.sort_by(|a, b| {
                    let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
                    term_cmp(y.pos, &y.mono, x.pos, &x.mono)
                });
                chosen.push(g.clone());
            }
        }
        for g in &chosen {
            builder.add(g.clone());
        }
        kept.extend(chosen);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, &names(n), Field::Rational).unwrap()
    }

    #[test]
    fn koszul_syzygies_of_two_variables() {
        let f = Field::Rational;
        let gens = vec![Vector::from_poly(&p("x0", 2), 0), Vector::from_poly(&p("x1", 2), 0)];
        let syz = syzygies(f, &[0], &gens);
        let min = minimal_generators(f, &[1, 1], &syz);
        assert_eq!(min.len(), 1);
        // x1 e0 - x0 e1 up to scaling
        let s = &min[0];
        let combo = Vector::from_poly(&p("x0", 2), 0)
            .mul_poly(f, &s.component(0, 2))
            .add(f, &Vector::from_poly(&p("x1", 2), 0).mul_poly(f, &s.component(1, 2)));
        assert!(combo.is_zero());
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let f = Field::Rational;
        let gens = vec![
            Vector::from_poly(&p("x0^2", 2), 0),
            Vector::from_poly(&p("x0", 2), 0),
            Vector::from_poly(&p("x0*x1 + x0", 2), 0),
            Vector::from_poly(&p("x1^2", 2), 0),
        ];
        // x0*x1 + x0 is not homogeneous; use only homogeneous ones
        let gens: Vec<Vector> = gens.into_iter().filter(|g| g.degree(&[0]).is_some()).collect();
        let min = minimal_generators(f, &[0], &gens);
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn same_degree_dependencies_are_detected() {
        let f = Field::Rational;
        let gens = vec![
            Vector::from_poly(&p("x0 + x1", 2), 0),
            Vector::from_poly(&p("x0 - x1", 2), 0),
            Vector::from_poly(&p("x0", 2), 0),
        ];
        assert_eq!(minimal_generators(f, &[0], &gens).len(), 2);
    }
}
