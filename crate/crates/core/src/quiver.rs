//! Quivers, dimension vectors and the quiver text format.
//!
//! ```text
//! # equioriented A_2
//! vertex 1
//! vertex 2
//! arrow a: 1 -> 2
//! ```

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    /// Index of the source vertex.
    pub source: usize,
    /// Index of the target vertex.
    pub target: usize,
}

/// A finite quiver. Vertex and arrow order is the order of declaration and
/// fixes every downstream indexing (matrix blocks, variables, dimension vectors).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateId {
                    kind: "vertex",
                    id: v.clone(),
                });
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        let mut arrow_ids = BTreeSet::new();
        for (id, s, t) in arrows {
            if !arrow_ids.insert(id.clone()) {
                return Err(Error::DuplicateId { kind: "arrow", id });
            }
            let lookup = |name: &str| {
                q.vertex_index(name).ok_or_else(|| Error::UnknownVertex {
                    arrow: id.clone(),
                    vertex: name.to_string(),
                })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            q.arrows.push(Arrow { id, source, target });
        }
        Ok(q)
    }

    /// Convenience constructor from string slices.
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
                .collect(),
        )
    }

    /// Equioriented A_n: `1 -> 2 -> ... -> n` with arrows `a1 .. a(n-1)`.
    pub fn linear_a(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(vs, arrows).expect("well-formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    /// Same vertices, every arrow at `v` reversed (ids and order kept).
    pub fn reflect_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == v || a.target == v {
                    Arrow {
                        id: a.id.clone(),
                        source: a.target,
                        target: a.source,
                    }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver {
            vertices: self.vertices.clone(),
            arrows,
        }
    }

    /// Vertices in an order where every arrow points from a later vertex to
    /// an earlier one, or `None` if the quiver has an oriented cycle.
    pub fn sink_first_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut out_deg = vec![0usize; n];
        for a in &self.arrows {
            out_deg[a.source] += 1;
        }
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = (0..n).find(|&v| !done[v] && out_deg[v] == 0)?;
            done[v] = true;
            order.push(v);
            for a in &self.arrows {
                if a.target == v {
                    out_deg[a.source] -= 1;
                }
            }
        }
        Some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.sink_first_order().is_some()
    }

    pub fn check_dims(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.vertex_count() {
            return Err(Error::DimMismatch(format!(
                "{} entries for {} vertices",
                d.len(),
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Serializes to the quiver text format; `parse_quiver` reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.id, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        s
    }
}

fn valid_id(s: &str) -> bool {
    !s.is_empty()
        && !s.contains(':')
        && !s.contains("->")
        && !s.starts_with('#')
        && !s.chars().any(char::is_whitespace)
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses one `vertex`/`arrow` line into the accumulators. Returns `false`
/// when the line is neither.
pub(crate) fn parse_quiver_line(
    lineno: usize,
    line: &str,
    vertices: &mut Vec<String>,
    arrows: &mut Vec<(String, String, String, usize)>,
) -> Result<bool> {
    if let Some(rest) = line.strip_prefix("vertex") {
        if !rest.starts_with(char::is_whitespace) {
            return Ok(false);
        }
        let id = rest.trim();
        if !valid_id(id) {
            return Err(Error::parse(lineno, format!("invalid vertex identifier `{id}`")));
        }
        if !arrows.is_empty() {
            return Err(Error::parse(lineno, "vertex declared after arrows"));
        }
        vertices.push(id.to_string());
        return Ok(true);
    }
    if let Some(rest) = line.strip_prefix("arrow") {
        if !rest.starts_with(char::is_whitespace) {
            return Ok(false);
        }
        let (id, ends) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected `arrow <id>: <src> -> <tgt>`"))?;
        let id = id.trim();
        let (s, t) = ends
            .split_once("->")
            .ok_or_else(|| Error::parse(lineno, "expected `<src> -> <tgt>`"))?;
        let (s, t) = (s.trim(), t.trim());
        for part in [id, s, t] {
            if !valid_id(part) {
                return Err(Error::parse(lineno, format!("invalid identifier `{part}`")));
            }
        }
        arrows.push((id.to_string(), s.to_string(), t.to_string(), lineno));
        return Ok(true);
    }
    Ok(false)
}

pub(crate) fn build_quiver(
    vertices: Vec<String>,
    arrows: Vec<(String, String, String, usize)>,
) -> Result<Quiver> {
    let mut seen = BTreeSet::new();
    for v in &vertices {
        if !seen.insert(v.clone()) {
            return Err(Error::DuplicateId {
                kind: "vertex",
                id: v.clone(),
            });
        }
    }
    let mut ids = BTreeSet::new();
    for (id, s, t, line) in &arrows {
        if !ids.insert(id.clone()) {
            return Err(Error::DuplicateId {
                kind: "arrow",
                id: id.clone(),
            });
        }
        for end in [s, t] {
            if !seen.contains(end) {
                return Err(Error::parse(
                    *line,
                    format!("arrow `{id}` references unknown vertex `{end}`"),
                ));
            }
        }
    }
    Quiver::new(
        vertices,
        arrows.into_iter().map(|(a, s, t, _)| (a, s, t)).collect(),
    )
}

/// Parses the quiver text format.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        if !parse_quiver_line(i + 1, line, &mut vertices, &mut arrows)? {
            return Err(Error::parse(i + 1, format!("unrecognized line `{line}`")));
        }
    }
    build_quiver(vertices, arrows)
}

/// Per-vertex dimensions, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut d = vec![0; n];
        d[i] = 1;
        DimVector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Σ dᵢ², the dimension of ∏ End(kᵈⁱ).
    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: usize) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Parses a comma-separated list such as `2,1,2`.
    pub fn parse(s: &str) -> Result<DimVector> {
        if s.trim().is_empty() {
            return Ok(DimVector(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(0, format!("bad dimension entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// l = Σ_α d_{s(α)} d_{t(α)}, the dimension of rep(Q, d).
pub fn rep_space_dim(q: &Quiver, d: &DimVector) -> usize {
    q.arrows()
        .iter()
        .map(|a| d.0[a.source] * d.0[a.target])
        .sum()
}

/// The Euler form ⟨d, e⟩ = Σ dᵢeᵢ − Σ_α d_{s(α)} e_{t(α)} of an acyclic quiver.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> Result<i64> {
    if !q.is_acyclic() {
        return Err(Error::NotAcyclic("the Euler form"));
    }
    q.check_dims(d)?;
    q.check_dims(e)?;
    let diag: i64 = d.0.iter().zip(&e.0).map(|(a, b)| (a * b) as i64).sum();
    let off: i64 = q
        .arrows()
        .iter()
        .map(|a| (d.0[a.source] * e.0[a.target]) as i64)
        .sum();
    Ok(diag - off)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a2() {
        let q = parse_quiver("vertex 1\nvertex 2\narrow a: 1 -> 2").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows()[0].source, 0);
        assert_eq!(q.arrows()[0].target, 1);
    }

    #[test]
    fn parses_loops_and_comments() {
        let q = parse_quiver("# two loops\nvertex o\narrow alpha: o -> o\narrow beta: o -> o # second\n").unwrap();
        assert_eq!(q.arrow_count(), 2);
        assert!(!q.is_acyclic());
    }

    #[test]
    fn rejects_dangling_endpoint() {
        let err = parse_quiver("vertex 1\nvertex 2\narrow a: 1 -> 3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn rejects_duplicates_and_garbage() {
        assert!(matches!(
            parse_quiver("vertex 1\nvertex 1").unwrap_err(),
            Error::DuplicateId { .. }
        ));
        assert!(matches!(
            parse_quiver("vertex 1\narrow a: 1 -> 1\narrow a: 1 -> 1").unwrap_err(),
            Error::DuplicateId { .. }
        ));
        assert!(matches!(
            parse_quiver("vertex 1\nedge 1 2").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_quiver("vertex 1\narrow a 1 -> 1").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn rep_space_dims() {
        let a2 = Quiver::linear_a(2);
        assert_eq!(rep_space_dim(&a2, &DimVector(vec![2, 2])), 4);
        let kr = Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert_eq!(rep_space_dim(&kr, &DimVector(vec![3, 3])), 18);
        assert_eq!(rep_space_dim(&kr, &DimVector::zero(2)), 0);
    }

    #[test]
    fn euler_form_values() {
        let a2 = Quiver::linear_a(2);
        assert_eq!(euler_form(&a2, &DimVector(vec![1, 1]), &DimVector(vec![1, 1])).unwrap(), 1);
        assert_eq!(euler_form(&a2, &DimVector(vec![2, 2]), &DimVector(vec![2, 2])).unwrap(), 4);
        let kr = Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        // 9 + 9 - 2*9
        assert_eq!(euler_form(&kr, &DimVector(vec![3, 3]), &DimVector(vec![3, 3])).unwrap(), 0);
        let lp = Quiver::from_parts(&["1"], &[("a", "1", "1")]).unwrap();
        assert!(euler_form(&lp, &DimVector(vec![1]), &DimVector(vec![1])).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let q = Quiver::from_parts(&["x", "y", "z"], &[("a", "x", "y"), ("b", "z", "y"), ("c", "y", "y")]).unwrap();
        let t = q.to_text();
        let back = parse_quiver(&t).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.to_text(), t);
    }

    #[test]
    fn dim_vector_parsing() {
        assert_eq!(DimVector::parse("2, 1,0").unwrap(), DimVector(vec![2, 1, 0]));
        assert!(DimVector::parse("2,-1").is_err());
        assert_eq!(DimVector(vec![1, 2]).to_string(), "(1,2)");
    }
}
