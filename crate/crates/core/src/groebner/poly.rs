//! Sparse multivariate polynomials over a [`Field`], terms kept in
//! decreasing degrevlex order.

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::{format_scalar, parse_rational, Field, Scalar};
use crate::linalg::Domain;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Poly::monomial(Monomial::one(nvars), c)
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Poly::monomial(Monomial::var(i, nvars), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Poly::zero(nvars);
        }
        Poly {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(field: Field, nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn scale(&self, field: Field, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, field: Field) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(field, &field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn neg(&self, field: Field) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.neg(a))).collect(),
        }
    }

    /// `self + c·m·other`, merging sorted term lists.
    pub fn add_scaled(&self, field: Field, c: &Scalar, m: &Monomial, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(n, x)| (n.mul(m), field.mul(x, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (m1, x) = a.next().unwrap();
                        let (_, y) = b.next().unwrap();
                        let s = field.add(x, &y);
                        if !s.is_zero() {
                            out.push((m1.clone(), s));
                        }
                    }
                },
            }
        }
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, field: Field, other: &Poly) -> Poly {
        self.add_scaled(field, &Scalar::one(), &Monomial::one(self.nvars), other)
    }

    pub fn sub(&self, field: Field, other: &Poly) -> Poly {
        self.add_scaled(field, &field.neg(&Scalar::one()), &Monomial::one(self.nvars), other)
    }

    pub fn mul(&self, field: Field, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out = out.add_scaled(field, c, m, other);
        }
        out
    }

    /// Exact quotient `self / divisor`; errors when the division leaves a remainder.
    pub fn div_exact(&self, field: Field, divisor: &Poly) -> Result<Poly> {
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = field.inv(lc)?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading().cloned() {
            if !lm.divides(&m) {
                return Err(Error::Internal("inexact polynomial division".into()));
            }
            let qm = lm.quotient_of(&m);
            let qc = field.mul(&c, &lc_inv);
            rest = rest.add_scaled(field, &field.neg(&qc), &qm, divisor);
            quotient.push((qm, qc));
        }
        Ok(Poly {
            nvars: self.nvars,
            terms: quotient,
        })
    }

    /// Substitutes values for all variables.
    pub fn eval(&self, field: Field, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    t = field.mul(&t, x);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_scalar(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{e}", names[i])),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parses `coef*var^e*... ± ...` with the given variable names.
    pub fn parse(text: &str, names: &[String], field: Field) -> Result<Poly> {
        let nvars = names.len();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let at_start = prev.is_none();
            let after_caret = prev == Some('^');
            prev = Some(ch);
            if (ch == '+' || ch == '-') && !after_caret {
                if !at_start {
                    if cur.is_empty() {
                        return Err(Error::parse(0, format!("dangling sign in `{text}`")));
                    }
                    pieces.push((negative, std::mem::take(&mut cur)));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::parse(0, format!("dangling sign in `{text}`")));
        }
        pieces.push((negative, cur));

        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, piece) in pieces {
            let mut coef = Scalar::one();
            let mut exps = vec![0u16; nvars];
            for factor in piece.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<u16>()
                            .map_err(|_| Error::parse(0, format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                if let Some(i) = names.iter().position(|n| n == base) {
                    exps[i] += exp;
                } else {
                    let c = parse_rational(base)
                        .map_err(|_| Error::parse(0, format!("unknown variable `{base}`")))?;
                    let mut p = Scalar::one();
                    for _ in 0..exp {
                        p *= &c;
                    }
                    coef *= p;
                }
            }
            if neg {
                coef = -coef;
            }
            terms.push((Monomial::from_exps(exps), field.from_rational(&coef)?));
        }
        Ok(Poly::from_terms(field, nvars, terms))
    }
}

/// Polynomials over a field as an integral domain, for fraction-free
/// elimination on polynomial matrices.
pub struct PolyDomain {
    pub field: Field,
    pub nvars: usize,
}

impl Domain for PolyDomain {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::zero(self.nvars)
    }
    fn one(&self) -> Poly {
        Poly::constant(self.nvars, Scalar::one())
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(self.field, b)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(self.field, b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg(self.field)
    }
    fn div_exact(&self, a: &Poly, b: &Poly) -> Poly {
        a.div_exact(self.field, b).expect("fraction-free step divides exactly")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::domain_determinant;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn text_roundtrip() {
        let v = names(&["x", "y", "z"]);
        let f = Field::Rational;
        let p = Poly::parse("2*x^2*y - 3/2*z + 1 - x*y*x", &v, f).unwrap();
        assert_eq!(p.to_text(&v), "x^2*y - 3/2*z + 1");
        assert_eq!(Poly::parse(&p.to_text(&v), &v, f).unwrap(), p);
        assert_eq!(Poly::parse("-x + x", &v, f).unwrap().to_text(&v), "0");
        assert!(Poly::parse("x + w", &v, f).is_err());
        assert!(Poly::parse("x +", &v, f).is_err());
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let v = names(&["x", "y"]);
        let f = Field::Rational;
        let a = Poly::parse("x + y", &v, f).unwrap();
        let b = Poly::parse("x - y", &v, f).unwrap();
        let prod = a.mul(f, &b);
        assert_eq!(prod.to_text(&v), "x^2 - y^2");
        assert_eq!(prod.div_exact(f, &a).unwrap(), b);
        assert!(prod.add(f, &Poly::var(0, 2)).div_exact(f, &a).is_err());
        assert!(prod.is_homogeneous());
        assert_eq!(prod.degree(), Some(2));
    }

    #[test]
    fn symbolic_determinant_of_generic_2x2() {
        let v = names(&["a", "b", "c", "d"]);
        let f = Field::Rational;
        let dom = PolyDomain { field: f, nvars: 4 };
        let rows = vec![
            vec![Poly::var(0, 4), Poly::var(1, 4)],
            vec![Poly::var(2, 4), Poly::var(3, 4)],
        ];
        let det = domain_determinant(&dom, rows);
        assert_eq!(det.to_text(&v), "-b*c + a*d");
    }

    #[test]
    fn evaluation() {
        let v = names(&["x", "y"]);
        let f = Field::Rational;
        let p = Poly::parse("x^2 - 2*y", &v, f).unwrap();
        let pt = [Scalar::from_integer(3.into()), Scalar::from_integer(4.into())];
        assert_eq!(p.eval(f, &pt), Scalar::from_integer(1.into()));
    }
}
