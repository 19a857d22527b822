//! Hom, End and Ext¹ of representations by exact linear algebra, the orbit
//! dimension, and the projective-dimension formula
//! `l + dim End_Q(M) − Σ dᵢ²`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix};
use crate::quiver::{euler_form, rep_space_dim, DimVector};
use crate::representation::Representation;

/// A basis of Hom_Q(M, N). Each basis element is a tuple of vertex matrices
/// `hᵢ: Mᵢ → Nᵢ` (shape `d'ᵢ × dᵢ`) with `h_{t(α)} f_α = g_α h_{s(α)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub source_dims: DimVector,
    pub target_dims: DimVector,
    pub basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Column offsets of the unknown blocks `hᵢ` (row-major inside a block).
pub(crate) fn unknown_offsets(src: &DimVector, tgt: &DimVector) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(src.len());
    let mut total = 0;
    for (a, b) in src.0.iter().zip(&tgt.0) {
        offsets.push(total);
        total += a * b;
    }
    (offsets, total)
}

/// The two halves of the intertwiner system: the map `(hᵢ) ↦ (h_{t(α)} f_α)`
/// and the map `(hᵢ) ↦ (g_α h_{s(α)})`. Hom(M, N) is the kernel of their
/// difference.
pub(crate) fn intertwiner_parts(m: &Representation, n: &Representation) -> (Matrix, Matrix) {
    let q = m.quiver();
    let field = m.field();
    let (d, e) = (m.dims(), n.dims());
    let (offsets, unknowns) = unknown_offsets(d, e);
    let equations: usize = q.arrows().iter().map(|a| e.0[a.target] * d.0[a.source]).sum();
    let mut left = Matrix::zeros(equations, unknowns);
    let mut right = Matrix::zeros(equations, unknowns);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let f = m.map(k);
        let g = n.map(k);
        for p in 0..e.0[t] {
            for c in 0..d.0[s] {
                // (h_t f)[p][c] = Σ_j h_t[p][j] f[j][c]
                for j in 0..d.0[t] {
                    let coef = f.get(j, c);
                    if !coef.is_zero() {
                        let col = offsets[t] + p * d.0[t] + j;
                        let v = field.add(left.get(row, col), coef);
                        left.set(row, col, v);
                    }
                }
                // (g h_s)[p][c] = Σ_j g[p][j] h_s[j][c]
                for j in 0..e.0[s] {
                    let coef = g.get(p, j);
                    if !coef.is_zero() {
                        let col = offsets[s] + j * d.0[s] + c;
                        let v = field.add(right.get(row, col), coef);
                        right.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    (left, right)
}

/// Splits a solution vector of the intertwiner system into vertex matrices.
pub(crate) fn unpack<T: Clone>(
    v: &[T],
    src: &DimVector,
    tgt: &DimVector,
) -> Vec<Vec<Vec<T>>> {
    let (offsets, _) = unknown_offsets(src, tgt);
    (0..src.len())
        .map(|i| {
            (0..tgt.0[i])
                .map(|r| {
                    (0..src.0[i])
                        .map(|c| v[offsets[i] + r * src.0[i] + c].clone())
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace> {
    m.check_compatible(n)?;
    let field = m.field();
    let (left, right) = intertwiner_parts(m, n);
    let system = left.sub(field, &right);
    let basis = kernel(field, &system)
        .into_iter()
        .map(|v| {
            unpack(&v, m.dims(), n.dims())
                .into_iter()
                .zip(m.dims().0.iter().zip(&n.dims().0))
                .map(|(rows, (&c, &r))| {
                    if r == 0 || c == 0 {
                        Matrix::zeros(r, c)
                    } else {
                        Matrix::from_rows(rows).expect("rectangular block")
                    }
                })
                .collect()
        })
        .collect();
    Ok(HomSpace {
        source_dims: m.dims().clone(),
        target_dims: n.dims().clone(),
        basis,
    })
}

/// dim Hom_Q(M, N) without materializing the basis.
pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_compatible(n)?;
    let field = m.field();
    let (left, right) = intertwiner_parts(m, n);
    let system = left.sub(field, &right);
    Ok(system.cols() - crate::linalg::rank(field, &system))
}

pub fn end_dim(m: &Representation) -> usize {
    hom_dim(m, m).expect("a representation is compatible with itself")
}

/// Σ dᵢ² = dim ∏ End(Mᵢ).
pub fn vertex_end_dim(d: &DimVector) -> usize {
    d.sum_of_squares()
}

fn require_acyclic(m: &Representation, what: &'static str) -> Result<()> {
    if m.quiver().is_acyclic() {
        Ok(())
    } else {
        Err(Error::NotAcyclic(what))
    }
}

/// dim Ext¹(M, M) = l − Σ dᵢ² + dim End(M), from the four-term exact sequence
/// 0 → End(M) → ∏ End(Mᵢ) → rep(Q,d) → Ext¹(M,M) → 0 of a hereditary path algebra.
pub fn ext1_dim(m: &Representation) -> Result<usize> {
    require_acyclic(m, "Ext¹")?;
    let v = pd_formula(m);
    usize::try_from(v).map_err(|_| Error::Internal(format!("negative Ext¹ dimension {v}")))
}

/// dim Ext¹(M, N) := dim Hom(M, N) − ⟨dim M, dim N⟩ (acyclic quivers).
pub fn ext1_dim_pair(m: &Representation, n: &Representation) -> Result<i64> {
    require_acyclic(m, "Ext¹")?;
    let h = hom_dim(m, n)? as i64;
    Ok(h - euler_form(m.quiver(), m.dims(), n.dims())?)
}

/// dim O_M = l − dim Ext¹(M, M); cross-checked against the stabilizer form
/// Σ dᵢ² − dim End(M).
pub fn orbit_dim(m: &Representation) -> Result<usize> {
    require_acyclic(m, "the orbit dimension formula")?;
    let l = rep_space_dim(m.quiver(), m.dims());
    let ext = ext1_dim(m)?;
    let by_codim = l
        .checked_sub(ext)
        .ok_or_else(|| Error::Internal("Ext¹ exceeds l".into()))?;
    let by_stabilizer = vertex_end_dim(m.dims()) - end_dim(m);
    if by_codim != by_stabilizer {
        return Err(Error::CrossCheck(format!(
            "orbit dimension {by_codim} from Ext¹ but {by_stabilizer} from the stabilizer"
        )));
    }
    Ok(by_codim)
}

/// l + dim End_Q(M) − Σ dᵢ². Defined for every quiver; it predicts the
/// projective dimension of the orbit-closure coordinate ring.
pub fn pd_formula(m: &Representation) -> i64 {
    let l = rep_space_dim(m.quiver(), m.dims()) as i64;
    l + end_dim(m) as i64 - vertex_end_dim(m.dims()) as i64
}

/// The orbit is open iff Ext¹(M, M) = 0.
pub fn is_orbit_open(m: &Representation) -> Result<bool> {
    Ok(ext1_dim(m)? == 0)
}

/// The orbit is closed iff M is semisimple, i.e. every arrow acts by zero.
pub fn is_orbit_closed(m: &Representation) -> Result<bool> {
    require_acyclic(m, "the semisimplicity test")?;
    Ok(m.is_zero_point())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub dims: DimVector,
    /// l = dim rep(Q, d).
    pub l: usize,
    pub vertex_end_dim: usize,
    pub end_dim: usize,
    pub ext1_dim: Option<usize>,
    pub orbit_dim: Option<usize>,
    pub pd_formula: i64,
    pub open: Option<bool>,
    pub closed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

pub fn invariant_report(m: &Representation) -> Result<InvariantReport> {
    let class = classify(m.quiver());
    let l = rep_space_dim(m.quiver(), m.dims());
    let acyclic = class.acyclic;
    let caveat = if !acyclic {
        Some("quiver has oriented cycles: Ext¹, orbit dimension and openness are not computed".to_string())
    } else if !class.tree {
        Some("quiver is not a tree: the value is a formula, not a projective dimension; the Cohen-Macaulay equivalence is not claimed and can fail (e.g. Kronecker quiver, d = (3,3))".to_string())
    } else {
        None
    };
    Ok(InvariantReport {
        dims: m.dims().clone(),
        l,
        vertex_end_dim: vertex_end_dim(m.dims()),
        end_dim: end_dim(m),
        ext1_dim: if acyclic { Some(ext1_dim(m)?) } else { None },
        orbit_dim: if acyclic { Some(orbit_dim(m)?) } else { None },
        pd_formula: pd_formula(m),
        open: if acyclic { Some(is_orbit_open(m)?) } else { None },
        closed: if acyclic { Some(is_orbit_closed(m)?) } else { None },
        caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::quiver::Quiver;

    fn rep(q: &Quiver, d: &[usize], maps: Vec<Matrix>) -> Representation {
        Representation::new(q.clone(), Field::Rational, DimVector(d.to_vec()), maps).unwrap()
    }

    fn a2_rank1() -> Representation {
        rep(&Quiver::linear_a(2), &[2, 2], vec![Matrix::from_ints(2, 2, &[1, 0, 0, 0])])
    }

    #[test]
    fn simples_have_no_homs_between_them() {
        let q = Quiver::linear_a(2);
        let s1 = Representation::simple(&q, Field::Rational, 0);
        let s2 = Representation::simple(&q, Field::Rational, 1);
        assert_eq!(hom_space(&s1, &s2).unwrap().dimension(), 0);
        assert_eq!(end_dim(&s1), 1);
        assert_eq!(ext1_dim(&s1).unwrap(), 0);
    }

    #[test]
    fn basis_elements_intertwine() {
        let m = a2_rank1();
        let h = hom_space(&m, &m).unwrap();
        assert_eq!(h.dimension(), 5);
        let f = Field::Rational;
        for b in &h.basis {
            assert_eq!(b[1].mul(f, m.map(0)), m.map(0).mul(f, &b[0]));
        }
    }

    #[test]
    fn a2_rank_one_invariants() {
        let m = a2_rank1();
        assert_eq!(orbit_dim(&m).unwrap(), 3);
        assert_eq!(pd_formula(&m), 1);
        assert!(!is_orbit_open(&m).unwrap());
        assert!(!is_orbit_closed(&m).unwrap());
    }

    #[test]
    fn a2_generic_point_is_dense() {
        let m = rep(&Quiver::linear_a(2), &[2, 2], vec![Matrix::identity(2)]);
        assert_eq!(end_dim(&m), 4);
        assert_eq!(orbit_dim(&m).unwrap(), 4);
        assert!(is_orbit_open(&m).unwrap());
    }

    #[test]
    fn interval_and_semisimple_on_a2() {
        let q = Quiver::linear_a(2);
        let interval = rep(&q, &[1, 1], vec![Matrix::identity(1)]);
        assert_eq!(ext1_dim(&interval).unwrap(), 0);
        assert!(is_orbit_open(&interval).unwrap());
        assert!(!is_orbit_closed(&interval).unwrap());
        let ss = Representation::zero(&q, Field::Rational, DimVector(vec![1, 1])).unwrap();
        assert_eq!(ext1_dim(&ss).unwrap(), 1);
        assert_eq!(pd_formula(&ss), 1);
        assert!(is_orbit_closed(&ss).unwrap());
        assert!(!is_orbit_open(&ss).unwrap());
    }

    #[test]
    fn zero_representations() {
        let q = Quiver::linear_a(3);
        let z = Representation::zero(&q, Field::Rational, DimVector(vec![1, 1, 1])).unwrap();
        assert_eq!(end_dim(&z), 3);
        assert_eq!(pd_formula(&z), 2);
        let empty = Representation::zero(&q, Field::Rational, DimVector::zero(3)).unwrap();
        assert_eq!(orbit_dim(&empty).unwrap(), 0);
        assert!(is_orbit_open(&empty).unwrap());
        assert!(is_orbit_closed(&empty).unwrap());
    }

    #[test]
    fn cyclic_quivers_rejected() {
        let q = Quiver::from_parts(&["o"], &[("a", "o", "o")]).unwrap();
        let m = rep(&q, &[1], vec![Matrix::from_ints(1, 1, &[1])]);
        assert!(matches!(ext1_dim(&m), Err(Error::NotAcyclic(_))));
        assert!(orbit_dim(&m).is_err());
        assert!(is_orbit_closed(&m).is_err());
        // the formula itself is always defined; End of a 1x1 loop is k
        assert_eq!(pd_formula(&m), 1);
        let r = invariant_report(&m).unwrap();
        assert!(r.ext1_dim.is_none() && r.caveat.is_some());
    }

    #[test]
    fn loops_contribute_both_sides() {
        let q = Quiver::from_parts(&["o"], &[("a", "o", "o")]).unwrap();
        // a nilpotent Jordan block of size 2 commutes with polynomials in itself
        let m = rep(&q, &[2], vec![Matrix::from_ints(2, 2, &[0, 0, 1, 0])]);
        assert_eq!(end_dim(&m), 2);
    }

    #[test]
    fn field_mismatch_rejected() {
        let q = Quiver::linear_a(2);
        let a = Representation::simple(&q, Field::Rational, 0);
        let b = Representation::simple(&q, Field::Prime(5), 0);
        assert!(hom_space(&a, &b).is_err());
    }

    #[test]
    fn modular_field_agrees_on_small_instance() {
        let m = a2_rank1().with_field(Field::Prime(32003)).unwrap();
        assert_eq!(end_dim(&m), 5);
    }
}
