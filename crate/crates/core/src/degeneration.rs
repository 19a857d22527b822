//! The degeneration order on orbits of a Dynkin quiver, decided by the
//! hom-order `M ≤ N ⇔ dim Hom(X, M) ≤ dim Hom(X, N)` for every
//! indecomposable `X`.
//!
//! `M ≤_deg N` means `N` lies in the orbit closure of `M`, so the generic
//! orbit is the top and the semisimple one the bottom.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{ext1_dim, orbit_dim, pd_formula};
use crate::quiver::{rep_space_dim, DimVector, Quiver};
use crate::roots::{DynkinContext, OrbitLabel};

/// Hom-order test between two labels with the same dimension vector.
pub fn hom_leq(ctx: &DynkinContext, m: &OrbitLabel, n: &OrbitLabel) -> Result<bool> {
    let k = ctx.quiver().vertex_count();
    if m.dims(k) != n.dims(k) {
        return Err(Error::DimMismatch(format!("{} vs {}", m.dims(k), n.dims(k))));
    }
    let a = ctx.label_profile(m)?;
    let b = ctx.label_profile(n)?;
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitAnnotation {
    pub orbit_dim: usize,
    pub ext1_dim: usize,
    pub pd_formula: i64,
    pub open: bool,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationPoset {
    pub dims: DimVector,
    pub l: usize,
    pub labels: Vec<OrbitLabel>,
    /// `leq[a][b]` iff `labels[a] ≤_deg labels[b]`.
    pub leq: Vec<Vec<bool>>,
    /// Hasse edges `(a, b)`: `b` covers `a`, i.e. `b` is a minimal proper
    /// degeneration of `a`.
    pub covers: Vec<(usize, usize)>,
    pub annotations: Vec<OrbitAnnotation>,
}

impl DegenerationPoset {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels nothing else degenerates to (dense orbits).
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq[b][a]))
            .collect()
    }

    /// Labels with no proper degeneration (closed orbits).
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq[a][b]))
            .collect()
    }

    /// `{N : M ≤_deg N}`, including `M`.
    pub fn degenerations_of(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq[a][b]).collect()
    }
}

fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}

pub fn degeneration_poset_with(ctx: &DynkinContext, d: &DimVector) -> Result<DegenerationPoset> {
    let labels = ctx.enumerate_orbits(d)?;
    let profiles = labels
        .iter()
        .map(|l| ctx.label_profile(l))
        .collect::<Result<Vec<_>>>()?;
    let leq: Vec<Vec<bool>> = profiles
        .iter()
        .map(|a| {
            profiles
                .iter()
                .map(|b| a.iter().zip(b).all(|(x, y)| x <= y))
                .collect()
        })
        .collect();
    let annotations = labels
        .iter()
        .map(|label| {
            let m = ctx.build(label)?;
            Ok(OrbitAnnotation {
                orbit_dim: orbit_dim(&m)?,
                ext1_dim: ext1_dim(&m)?,
                pd_formula: pd_formula(&m),
                open: ext1_dim(&m)? == 0,
                closed: m.is_zero_point(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let covers = transitive_reduction(&leq);
    Ok(DegenerationPoset {
        dims: d.clone(),
        l: rep_space_dim(ctx.quiver(), d),
        labels,
        leq,
        covers,
        annotations,
    })
}

pub fn degeneration_poset(q: &Quiver, d: &DimVector) -> Result<DegenerationPoset> {
    degeneration_poset_with(&DynkinContext::new(q, Field::Rational)?, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub label: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub checked: usize,
    /// Labels whose pd value is constant over their degenerations.
    pub constant_on_degenerations: Vec<String>,
    pub violations: Vec<Violation>,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every label `M`: the pd value of `M` is the minimum over its
/// degenerations `{N : M ≤_deg N}`, and that value is constant on the set
/// exactly when the orbit of `M` is closed.
pub fn check_pd_minimality(p: &DegenerationPoset) -> MinimalityReport {
    let mut violations = Vec::new();
    let mut constant = Vec::new();
    for a in 0..p.len() {
        let name = p.labels[a].to_string();
        let down = p.degenerations_of(a);
        let own = p.annotations[a].pd_formula;
        let min = down.iter().map(|&b| p.annotations[b].pd_formula).min().unwrap_or(own);
        if min != own {
            violations.push(Violation {
                label: name.clone(),
                message: format!("pd value {own} but a degeneration has {min}"),
            });
        }
        let is_constant = down.iter().all(|&b| p.annotations[b].pd_formula == own);
        if is_constant {
            constant.push(name.clone());
        }
        if is_constant != p.annotations[a].closed {
            violations.push(Violation {
                label: name.clone(),
                message: format!(
                    "orbit is {} but pd is {} on its degenerations",
                    if p.annotations[a].closed { "closed" } else { "not closed" },
                    if is_constant { "constant" } else { "not constant" }
                ),
            });
        }
    }
    for &(a, b) in &p.covers {
        if p.annotations[a].orbit_dim <= p.annotations[b].orbit_dim {
            violations.push(Violation {
                label: p.labels[a].to_string(),
                message: format!("orbit dimension does not drop towards {}", p.labels[b]),
            });
        }
    }
    MinimalityReport {
        checked: p.len(),
        constant_on_degenerations: constant,
        violations,
    }
}

/// Hasse diagram in DOT, top (generic) orbit first.
pub fn export_dot(p: &DegenerationPoset) -> String {
    let mut s = String::from("digraph degenerations {\n  rankdir=TB;\n  node [shape=box];\n");
    for (i, (label, ann)) in p.labels.iter().zip(&p.annotations).enumerate() {
        let _ = writeln!(
            s,
            "  n{i} [label=\"{label}\\ndim {} pd {}\"];",
            ann.orbit_dim, ann.pd_formula
        );
    }
    for &(a, b) in &p.covers {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}
