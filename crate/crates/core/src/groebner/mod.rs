//! Polynomial rings over representation spaces, Gröbner bases, minimal free
//! resolutions and the Cohen–Macaulay check for orbit closures.

pub mod hilbert;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod rank_ideal;
pub mod resolution;
pub mod verify;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Field;
use crate::quiver::{DimVector, Quiver};

pub use hilbert::{depth_lower_bound, hilbert_dimension, hilbert_numerator};
pub use module::{minimal_generators, syzygies, GroebnerBuilder, Term, Vector};
pub use monomial::Monomial;
pub use poly::Poly;
pub use rank_ideal::rank_condition_ideal;
pub use resolution::{minimal_free_resolution, BettiTable, Resolution};
pub use verify::{pd_formula_survey, verify_cm, CmReport, SurveyRow};

/// `k[x_1, …, x_l]` with named variables, ordered degrevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    field: Field,
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: Field) -> Self {
        PolyRing { names, field }
    }

    /// Coordinate ring of `rep(Q, d)`: one variable `x_<arrow>_<i>_<j>` per
    /// matrix entry, arrows in file order and entries row-major (1-based).
    pub fn for_rep_space(q: &Quiver, d: &DimVector, field: Field) -> Result<Self> {
        q.check_dims(d)?;
        let mut names = Vec::new();
        for a in q.arrows() {
            for i in 1..=d.0[a.target] {
                for j in 1..=d.0[a.source] {
                    names.push(format!("x_{}_{i}_{j}", a.id));
                }
            }
        }
        Ok(PolyRing { names, field })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(i, self.nvars())
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Poly::parse(text, &self.names, self.field)
    }

    pub fn format(&self, p: &Poly) -> String {
        p.to_text(&self.names)
    }
}

/// A generating set, zeros removed and duplicates (up to a scalar) dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Poly>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(field: Field, gens: Vec<Poly>) -> Self {
        let mut generators: Vec<Poly> = Vec::new();
        let mut seen: Vec<Poly> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let key = g.monic(field);
            if !seen.contains(&key) {
                seen.push(key);
                generators.push(g);
            }
        }
        let homogeneous = generators.iter().all(Poly::is_homogeneous);
        Ideal {
            generators,
            homogeneous,
        }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn to_json(&self, ring: &PolyRing) -> IdealJson {
        IdealJson {
            variables: ring.names.clone(),
            generators: self.generators.iter().map(|g| ring.format(g)).collect(),
            homogeneous: self.homogeneous,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub homogeneous: bool,
}

/// Reduced Gröbner basis, sorted by increasing leading monomial.
pub fn buchberger(ideal: &Ideal, ring: &PolyRing) -> Vec<Poly> {
    let field = ring.field();
    let nvars = ring.nvars();
    // start from the smallest generators so the result does not depend on input order
    let mut gens: Vec<Poly> = ideal.generators().iter().map(|g| g.monic(field)).collect();
    gens.sort_by(|a, b| a.lead_monomial().cmp(&b.lead_monomial()).then_with(|| a.terms().len().cmp(&b.terms().len())));
    let mut builder = GroebnerBuilder::new(field, vec![0]);
    for g in &gens {
        builder.add(Vector::from_poly(g, 0));
    }
    builder.complete(None);
    builder
        .reduced()
        .iter()
        .map(|v| v.component(0, nvars))
        .collect()
}

/// Normal form of `p` with respect to a Gröbner basis.
pub fn normal_form(p: &Poly, gb: &[Poly], field: Field) -> Poly {
    let nvars = p.nvars();
    let mut builder = GroebnerBuilder::new(field, vec![0]);
    for g in gb {
        builder.push_unchecked(Vector::from_poly(&g.monic(field), 0));
    }
    builder.reduce(&Vector::from_poly(p, 0)).component(0, nvars)
}
