//! Representations: one exact matrix per arrow.
//!
//! For an arrow `α: i -> j` the matrix acts on column vectors and has shape
//! `d_j × d_i`. The base-change group ∏ GL(dᵢ) acts by
//! `(gᵢ) · f_α = g_{t(α)} f_α g_{s(α)}⁻¹`.
//!
//! Text format (a file may start with the quiver's `vertex`/`arrow` lines):
//!
//! ```text
//! field Q
//! dim 1 2
//! dim 2 2
//! map a 2 2
//! 1 0
//! 0 0
//! ```

use crate::error::{Error, Result};
use crate::field::{format_scalar, parse_rational, Field, Scalar};
use crate::linalg::{inverse, Matrix};
use crate::quiver::{build_quiver, content, parse_quiver_line, DimVector, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Quiver,
    field: Field,
    dims: DimVector,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Quiver, field: Field, dims: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        quiver.check_dims(&dims)?;
        if maps.len() != quiver.arrow_count() {
            return Err(Error::Shape(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let want = (dims.0[a.target], dims.0[a.source]);
            if m.shape() != want {
                return Err(Error::Shape(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.id, want.0, want.1, m.rows(), m.cols()
                )));
            }
            if let Some(bad) = m.entries().iter().find(|x| !field.contains(x)) {
                return Err(Error::FieldMismatch(format!(
                    "entry {} of arrow `{}` is not in {field}",
                    format_scalar(bad),
                    a.id
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// The zero point of rep(Q, d): the semisimple representation ⊕ Sᵢ^{dᵢ}.
    pub fn zero(quiver: &Quiver, field: Field, dims: DimVector) -> Result<Self> {
        quiver.check_dims(&dims)?;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims.0[a.target], dims.0[a.source]))
            .collect();
        Representation::new(quiver.clone(), field, dims, maps)
    }

    /// The simple representation at vertex `i` (acyclic quivers).
    pub fn simple(quiver: &Quiver, field: Field, i: usize) -> Self {
        Representation::zero(quiver, field, DimVector::unit(quiver.vertex_count(), i))
            .expect("unit vector matches quiver")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn is_zero_point(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// λM: every arrow matrix multiplied by λ.
    pub fn scale(&self, lambda: &Scalar) -> Representation {
        Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.scale(self.field, lambda)).collect(),
        }
    }

    /// Acts by the vertex matrices `g`: `f_α ↦ g_{t(α)} f_α g_{s(α)}⁻¹`.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<Representation> {
        if g.len() != self.quiver.vertex_count() {
            return Err(Error::Shape("one base change per vertex required".into()));
        }
        for (gi, &d) in g.iter().zip(&self.dims.0) {
            if gi.shape() != (d, d) {
                return Err(Error::Shape("base change has wrong size".into()));
            }
        }
        let inverses = g
            .iter()
            .map(|gi| inverse(self.field, gi))
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, f)| {
                g[a.target]
                    .mul(self.field, f)
                    .mul(self.field, &inverses[a.source])
            })
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.clone(),
            maps,
        })
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.add(&other.dims),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| Matrix::direct_sum(a, b))
                .collect(),
        })
    }

    pub fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Reinterprets the entries over another field. Entries must be integers
    /// unless the target is ℚ and the source already is.
    pub fn with_field(&self, field: Field) -> Result<Representation> {
        if field == self.field {
            return Ok(self.clone());
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for m in &self.maps {
            if let Some(bad) = m.entries().iter().find(|x| !x.is_integer()) {
                return Err(Error::FieldMismatch(format!(
                    "entry {} is not an integer and cannot be moved to {field}",
                    format_scalar(bad)
                )));
            }
            let mut out = Matrix::zeros(m.rows(), m.cols());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out.set(i, j, field.from_rational(m.get(i, j))?);
                }
            }
            maps.push(out);
        }
        Representation::new(self.quiver.clone(), field, self.dims.clone(), maps)
    }

    /// Serializes the representation lines (no quiver header).
    pub fn to_text(&self) -> String {
        let mut s = format!("field {}\n", self.field);
        for (v, d) in self.quiver.vertices().iter().zip(&self.dims.0) {
            s.push_str(&format!("dim {v} {d}\n"));
        }
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            s.push_str(&format!("map {} {} {}\n", a.id, m.rows(), m.cols()));
            if m.cols() == 0 {
                continue;
            }
            for i in 0..m.rows() {
                let row: Vec<String> = m.row(i).iter().map(format_scalar).collect();
                s.push_str(&row.join(" "));
                s.push('\n');
            }
        }
        s
    }

    /// Quiver header followed by the representation lines.
    pub fn to_bundle_text(&self) -> String {
        format!("{}{}", self.quiver.to_text(), self.to_text())
    }
}

/// Parses a representation of `q`. Quiver lines are not accepted here; use
/// [`parse_representation_file`] for self-contained files.
pub fn parse_representation(text: &str, q: &Quiver) -> Result<Representation> {
    parse_inner(text, Some(q), false)
}

/// Parses a representation file that either embeds its quiver or relies on
/// `q`. When both are present they must agree.
pub fn parse_representation_file(text: &str, q: Option<&Quiver>) -> Result<Representation> {
    parse_inner(text, q, true)
}

fn parse_inner(text: &str, given: Option<&Quiver>, allow_quiver: bool) -> Result<Representation> {
    let mut qv = Vec::new();
    let mut qa = Vec::new();
    let mut field: Option<Field> = None;
    let mut dims: Vec<(String, usize, usize)> = Vec::new();
    let mut maps: Vec<(String, usize, Vec<Vec<Scalar>>, usize)> = Vec::new();

    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut k = 0;
    while k < lines.len() {
        let (no, line) = lines[k];
        k += 1;
        if allow_quiver && parse_quiver_line(no, line, &mut qv, &mut qa)? {
            if field.is_some() || !dims.is_empty() || !maps.is_empty() {
                return Err(Error::parse(no, "quiver lines must precede the representation"));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "field" => {
                if toks.len() != 2 {
                    return Err(Error::parse(no, "expected `field Q` or `field F<p>`"));
                }
                if field.is_some() {
                    return Err(Error::parse(no, "field declared twice"));
                }
                field = Some(toks[1].parse().map_err(|e: Error| Error::parse(no, e.to_string()))?);
            }
            "dim" => {
                if toks.len() != 3 {
                    return Err(Error::parse(no, "expected `dim <vertex> <n>`"));
                }
                let n = toks[2]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(no, format!("bad dimension `{}`", toks[2])))?;
                dims.push((toks[1].to_string(), n, no));
            }
            "map" => {
                if toks.len() != 4 {
                    return Err(Error::parse(no, "expected `map <arrow> <rows> <cols>`"));
                }
                let f = field.ok_or_else(|| Error::parse(no, "`field` must precede matrices"))?;
                let parse_n = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(no, format!("bad matrix size `{t}`")))
                };
                let (r, c) = (parse_n(toks[2])?, parse_n(toks[3])?);
                let mut rows = Vec::with_capacity(r);
                if c > 0 {
                    for _ in 0..r {
                        let Some(&(rno, rline)) = lines.get(k) else {
                            return Err(Error::parse(no, format!("map `{}` is missing rows", toks[1])));
                        };
                        k += 1;
                        let entries: Vec<&str> = rline.split_whitespace().collect();
                        if entries.len() != c {
                            return Err(Error::parse(
                                rno,
                                format!("expected {c} entries, found {}", entries.len()),
                            ));
                        }
                        let row = entries
                            .iter()
                            .map(|t| {
                                let q = parse_rational(t).map_err(|e| match e {
                                    Error::DivisionByZero => Error::parse(rno, "zero denominator"),
                                    _ => Error::parse(rno, format!("`{t}` is not a rational number")),
                                })?;
                                f.from_rational(&q).map_err(|_| {
                                    Error::parse(rno, format!("`{t}` is not an element of {f}"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        rows.push(row);
                    }
                } else {
                    rows.resize(r, Vec::new());
                }
                maps.push((toks[1].to_string(), c, rows, no));
            }
            other => return Err(Error::parse(no, format!("unrecognized keyword `{other}`"))),
        }
    }

    let embedded = if qv.is_empty() && qa.is_empty() {
        None
    } else {
        Some(build_quiver(qv, qa)?)
    };
    let quiver = match (embedded, given) {
        (Some(e), Some(g)) if &e != g => {
            return Err(Error::QuiverMismatch);
        }
        (Some(e), _) => e,
        (None, Some(g)) => g.clone(),
        (None, None) => {
            return Err(Error::parse(0, "representation file has no quiver; pass one explicitly"))
        }
    };
    let field = field.ok_or_else(|| Error::parse(0, "missing `field` declaration"))?;

    let mut d: Vec<Option<usize>> = vec![None; quiver.vertex_count()];
    for (v, n, no) in dims {
        let i = quiver
            .vertex_index(&v)
            .ok_or_else(|| Error::parse(no, format!("unknown vertex `{v}`")))?;
        if d[i].replace(n).is_some() {
            return Err(Error::parse(no, format!("dimension of `{v}` given twice")));
        }
    }
    let d: Vec<usize> = d
        .into_iter()
        .zip(quiver.vertices())
        .map(|(x, v)| x.ok_or_else(|| Error::parse(0, format!("missing `dim` for vertex `{v}`"))))
        .collect::<Result<_>>()?;
    let dims = DimVector(d);

    let mut mats: Vec<Option<Matrix>> = vec![None; quiver.arrow_count()];
    for (a, cols, rows, no) in maps {
        let i = quiver
            .arrow_index(&a)
            .ok_or_else(|| Error::parse(no, format!("unknown arrow `{a}`")))?;
        let arrow = &quiver.arrows()[i];
        let want = (dims.0[arrow.target], dims.0[arrow.source]);
        if (rows.len(), cols) != want {
            return Err(Error::Shape(format!(
                "line {no}: arrow `{a}` needs a {}x{} matrix, got {}x{}",
                want.0,
                want.1,
                rows.len(),
                cols
            )));
        }
        let m = if cols == 0 || rows.is_empty() {
            Matrix::zeros(rows.len(), cols)
        } else {
            Matrix::from_rows(rows)?
        };
        if mats[i].replace(m).is_some() {
            return Err(Error::parse(no, format!("arrow `{a}` given twice")));
        }
    }
    let mats = mats
        .into_iter()
        .zip(quiver.arrows())
        .map(|(m, a)| m.ok_or_else(|| Error::MissingMatrix(a.id.clone())))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(quiver, field, dims, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;

    const KRONECKER: &str = "vertex 1\nvertex 2\narrow alpha: 1 -> 2\narrow beta: 1 -> 2\n";

    fn kronecker_rep() -> &'static str {
        "field Q\ndim 1 3\ndim 2 3\n\
         map alpha 3 3\n0 0 0\n1 0 0\n0 1 0\n\
         map beta 3 3\n1 0 0\n0 0 0\n0 0 1\n"
    }

    #[test]
    fn parses_kronecker_point() {
        let q = parse_quiver(KRONECKER).unwrap();
        let m = parse_representation(kronecker_rep(), &q).unwrap();
        assert_eq!(m.dims(), &DimVector(vec![3, 3]));
        assert_eq!(m.map(0).get(1, 0), &Scalar::from_integer(1.into()));
        assert_eq!(m.to_text(), kronecker_rep());
    }

    #[test]
    fn zero_matrices_are_valid() {
        let q = Quiver::linear_a(3);
        let m = Representation::zero(&q, Field::Rational, DimVector(vec![2, 1, 2])).unwrap();
        let back = parse_representation(&m.to_text(), &q).unwrap();
        assert_eq!(back, m);
        assert!(back.is_zero_point());
    }

    #[test]
    fn loop_shape_checked() {
        let q = parse_quiver("vertex o\narrow a: o -> o").unwrap();
        let text = "field Q\ndim o 2\nmap a 3 2\n1 0\n0 1\n0 0\n";
        assert!(matches!(parse_representation(text, &q).unwrap_err(), Error::Shape(_)));
    }

    #[test]
    fn parse_errors() {
        let q = Quiver::linear_a(2);
        let missing = "field Q\ndim 1 1\ndim 2 1\n";
        assert!(matches!(parse_representation(missing, &q).unwrap_err(), Error::MissingMatrix(_)));
        let zero_den = "field Q\ndim 1 1\ndim 2 1\nmap a1 1 1\n1/0\n";
        assert!(matches!(parse_representation(zero_den, &q).unwrap_err(), Error::Parse { line: 5, .. }));
        let not_in_field = "field F5\ndim 1 1\ndim 2 1\nmap a1 1 1\n1/5\n";
        assert!(matches!(parse_representation(not_in_field, &q).unwrap_err(), Error::Parse { line: 5, .. }));
        let no_field = "dim 1 1\ndim 2 1\nmap a1 1 1\n1\n";
        assert!(parse_representation(no_field, &q).is_err());
    }

    #[test]
    fn embedded_quiver_files() {
        let text = format!("{KRONECKER}{}", kronecker_rep());
        let m = parse_representation_file(&text, None).unwrap();
        assert_eq!(m.quiver().arrow_count(), 2);
        assert_eq!(m.to_bundle_text(), text);
        let other = Quiver::linear_a(2);
        assert_eq!(parse_representation_file(&text, Some(&other)).unwrap_err(), Error::QuiverMismatch);
        assert!(parse_representation_file(kronecker_rep(), None).is_err());
    }

    #[test]
    fn scaling_and_conjugation() {
        let q = parse_quiver(KRONECKER).unwrap();
        let m = parse_representation(kronecker_rep(), &q).unwrap();
        let two = Scalar::from_integer(2.into());
        let m2 = m.scale(&two);
        assert_eq!(m2.map(0).get(1, 0), &two);
        assert_eq!(m.scale(&Scalar::from_integer(1.into())), m);
        assert!(m.scale(&Scalar::from_integer(0.into())).is_zero_point());
        let id = vec![Matrix::identity(3), Matrix::identity(3)];
        assert_eq!(m.conjugate(&id).unwrap(), m);
    }

    #[test]
    fn field_override() {
        let q = Quiver::linear_a(2);
        let m = parse_representation("field Q\ndim 1 1\ndim 2 1\nmap a1 1 1\n-1\n", &q).unwrap();
        let p = m.with_field(Field::Prime(5)).unwrap();
        assert_eq!(p.map(0).get(0, 0), &Scalar::from_integer(4.into()));
        let frac = parse_representation("field Q\ndim 1 1\ndim 2 1\nmap a1 1 1\n1/2\n", &q).unwrap();
        assert!(frac.with_field(Field::Prime(5)).is_err());
    }
}
