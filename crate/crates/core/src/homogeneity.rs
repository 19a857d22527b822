//! Homogeneity of representations: `λM ≅ M` for every nonzero `λ`.
//!
//! On tree quivers the isomorphism is an explicit vertex scaling. Elsewhere
//! the test is symbolic: a generic intertwiner `Σ tⱼ bⱼ` over a Hom basis is
//! invertible iff its vertex determinants are nonzero polynomials.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::monomial::Monomial;
use crate::groebner::poly::{Poly, PolyDomain};
use crate::homology::{hom_space, intertwiner_parts, unknown_offsets, unpack};
use crate::linalg::{determinant, domain_determinant, domain_kernel, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::representation::Representation;

/// Vertex base changes `φᵢ = λ^{rᵢ} Id` with `r_{t(α)} = r_{s(α)} + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexScaling {
    pub exponents: Vec<i64>,
    pub lambda: Scalar,
}

impl VertexScaling {
    pub fn matrices(&self, field: Field, d: &DimVector) -> Result<Vec<Matrix>> {
        self.exponents
            .iter()
            .zip(&d.0)
            .map(|(&r, &n)| Ok(Matrix::identity(n).scale(field, &field.pow(&self.lambda, r)?)))
            .collect()
    }

    /// Conjugates `m` by the scaling; on a tree quiver this is `λm`.
    pub fn apply(&self, m: &Representation) -> Result<Representation> {
        m.conjugate(&self.matrices(m.field(), m.dims())?)
    }
}

/// Exponents by breadth-first search from vertex 0, +1 along each arrow and
/// −1 against it.
pub fn scaling_isomorphism(q: &Quiver, d: &DimVector, lambda: &Scalar) -> Result<VertexScaling> {
    q.check_dims(d)?;
    if !classify(q).tree {
        return Err(Error::NotTree("the scaling isomorphism"));
    }
    if lambda.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let n = q.vertex_count();
    let mut exps: Vec<Option<i64>> = vec![None; n];
    exps[0] = Some(0);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let r = exps[v].unwrap();
        for a in q.arrows() {
            let (w, rw) = if a.source == v {
                (a.target, r + 1)
            } else if a.target == v {
                (a.source, r - 1)
            } else {
                continue;
            };
            if exps[w].is_none() {
                exps[w] = Some(rw);
                queue.push_back(w);
            }
        }
    }
    Ok(VertexScaling {
        exponents: exps.into_iter().map(|e| e.expect("tree is connected")).collect(),
        lambda: lambda.clone(),
    })
}

/// Lifts a polynomial in one variable into variable 0 of a larger ring.
fn lift_univariate(p: &Poly, nvars: usize, field: Field) -> Poly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u16; nvars];
            e[0] = m.exps()[0];
            (Monomial::from_exps(e), c.clone())
        })
        .collect();
    Poly::from_terms(field, nvars, terms)
}

/// Vertex matrices of `Σ_j t_j b_j`, with `t_j` the variable `first_t + j`.
fn generic_intertwiner(
    basis: &[Vec<Vec<Vec<Poly>>>],
    dims: &DimVector,
    nvars: usize,
    first_t: usize,
    field: Field,
) -> Vec<Vec<Vec<Poly>>> {
    (0..dims.len())
        .map(|i| {
            (0..dims.0[i])
                .map(|r| {
                    (0..dims.0[i])
                        .map(|c| {
                            basis.iter().enumerate().fold(Poly::zero(nvars), |acc, (j, b)| {
                                acc.add(field, &b[i][r][c].mul(field, &Poly::var(first_t + j, nvars)))
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Whether every vertex determinant of the generic intertwiner is a nonzero
/// polynomial. A random evaluation settles the nonzero case quickly; the
/// symbolic determinant decides otherwise.
fn generic_invertible(mats: &[Vec<Vec<Poly>>], nvars: usize, field: Field, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point: Vec<Scalar> = (0..nvars).map(|_| field.from_int(rng.gen_range(1..=1000))).collect();
    let by_evaluation = mats.iter().all(|m| {
        let n = m.len();
        let mut num = Matrix::zeros(n, n);
        for (r, row) in m.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                num.set(r, c, p.eval(field, &point));
            }
        }
        !determinant(field, &num).is_zero()
    });
    if by_evaluation {
        return true;
    }
    let dom = PolyDomain { field, nvars };
    mats.iter().all(|m| !domain_determinant(&dom, m.clone()).is_zero())
}

/// `M ≅ N` over the algebraic closure: a generic element of Hom(M, N) is
/// invertible.
pub fn is_isomorphic_generic(m: &Representation, n: &Representation) -> Result<bool> {
    m.check_compatible(n)?;
    if m.dims() != n.dims() {
        return Err(Error::DimMismatch(format!("{} vs {}", m.dims(), n.dims())));
    }
    let field = m.field();
    let hom = hom_space(m, n)?;
    let k = hom.dimension();
    let basis: Vec<Vec<Vec<Vec<Poly>>>> = hom
        .basis
        .iter()
        .map(|tuple| {
            tuple
                .iter()
                .map(|h| {
                    (0..h.rows())
                        .map(|r| (0..h.cols()).map(|c| Poly::constant(k, h.get(r, c).clone())).collect())
                        .collect()
                })
                .collect()
        })
        .collect();
    let mats = generic_intertwiner(&basis, m.dims(), k, 0, field);
    Ok(generic_invertible(&mats, k, field, 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum HomogeneityVerdict {
    /// Tree quiver: the vertex scaling is an isomorphism `M ≅ λM`.
    TrueByTree,
    /// `λM ≅ M` for an indeterminate `λ`.
    TrueGeneric,
    /// `λM ≇ M` at the given integer `λ`.
    False { witness: i64 },
    /// The generic test failed but no integer witness in the search range.
    InconclusiveGenericFalse,
}

impl HomogeneityVerdict {
    pub fn is_homogeneous(&self) -> Option<bool> {
        match self {
            HomogeneityVerdict::TrueByTree | HomogeneityVerdict::TrueGeneric => Some(true),
            HomogeneityVerdict::False { .. } => Some(false),
            HomogeneityVerdict::InconclusiveGenericFalse => None,
        }
    }
}

impl fmt::Display for HomogeneityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomogeneityVerdict::TrueByTree => write!(f, "homogeneous (tree quiver, vertex scaling)"),
            HomogeneityVerdict::TrueGeneric => write!(f, "homogeneous (generic λ)"),
            HomogeneityVerdict::False { witness } => write!(f, "not homogeneous; witness λ={witness}"),
            HomogeneityVerdict::InconclusiveGenericFalse => {
                write!(f, "inconclusive: generic test fails but no witness λ in 2..=97")
            }
        }
    }
}

pub const WITNESS_RANGE: std::ops::RangeInclusive<i64> = 2..=97;

/// Hom(M, λM) over `k(λ)`: kernel of `L − λR` by fraction-free elimination
/// in `k[λ]`, then the generic intertwiner test in `k[λ, t₁, …]`.
fn isomorphic_to_generic_multiple(m: &Representation) -> bool {
    let field = m.field();
    let (left, right) = intertwiner_parts(m, m);
    let dom1 = PolyDomain { field, nvars: 1 };
    let lambda = Poly::var(0, 1);
    let rows: Vec<Vec<Poly>> = (0..left.rows())
        .map(|i| {
            (0..left.cols())
                .map(|j| {
                    let l = Poly::constant(1, left.get(i, j).clone());
                    let r = Poly::constant(1, right.get(i, j).clone()).mul(field, &lambda);
                    l.sub(field, &r)
                })
                .collect()
        })
        .collect();
    let kernel = domain_kernel(&dom1, rows, left.cols());
    let k = kernel.len();
    let nvars = 1 + k;
    let d = m.dims();
    let (_, unknowns) = unknown_offsets(d, d);
    debug_assert_eq!(unknowns, left.cols());
    let basis: Vec<Vec<Vec<Vec<Poly>>>> = kernel
        .iter()
        .map(|v| {
            let lifted: Vec<Poly> = v.iter().map(|p| lift_univariate(p, nvars, field)).collect();
            unpack(&lifted, d, d)
        })
        .collect();
    let mats = generic_intertwiner(&basis, d, nvars, 1, field);
    generic_invertible(&mats, nvars, field, 2)
}

/// Decides `λM ≅ M` for all `λ ≠ 0`.
pub fn is_homogeneous(m: &Representation) -> HomogeneityVerdict {
    if classify(m.quiver()).tree {
        return HomogeneityVerdict::TrueByTree;
    }
    if isomorphic_to_generic_multiple(m) {
        return HomogeneityVerdict::TrueGeneric;
    }
    match witness_search(m) {
        Some(w) => HomogeneityVerdict::False { witness: w },
        None => HomogeneityVerdict::InconclusiveGenericFalse,
    }
}

/// Smallest integer `λ` in [`WITNESS_RANGE`] with `λM ≇ M`.
pub fn witness_search(m: &Representation) -> Option<i64> {
    let field = m.field();
    WITNESS_RANGE.into_iter().find(|&l| {
        let lam = field.from_int(l);
        !lam.is_zero() && !is_isomorphic_generic(m, &m.scale(&lam)).expect("same quiver and dims")
    })
}

/// `λM ≅ M` for one concrete nonzero `λ`.
pub fn is_isomorphic_to_multiple(m: &Representation, lambda: &Scalar) -> Result<bool> {
    if lambda.is_zero() {
        return Err(Error::ZeroScalar);
    }
    if lambda.is_one() {
        return Ok(true);
    }
    is_isomorphic_generic(m, &m.scale(lambda))
}
