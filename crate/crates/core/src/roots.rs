//! Positive roots of Dynkin quivers, indecomposables built with reflection
//! functors, Krull–Schmidt decomposition and orbit enumeration.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, DynkinType};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::homology::hom_dim;
use crate::linalg::{kernel, rank, solve, Matrix};
use crate::quiver::{DimVector, Quiver};
use crate::representation::Representation;

fn dynkin_type(q: &Quiver) -> Result<DynkinType> {
    classify(q).dynkin.ok_or(Error::NotDynkin("root enumeration"))
}

/// Σ dᵢ² − Σ_edges d_i d_j; equal to 1 exactly on the real roots.
pub fn tits_form(q: &Quiver, d: &DimVector) -> i64 {
    let diag: i64 = d.0.iter().map(|&x| (x * x) as i64).sum();
    let off: i64 = q
        .arrows()
        .iter()
        .map(|a| (d.0[a.source] * d.0[a.target]) as i64)
        .sum();
    diag - off
}

/// The simple reflection `s_v(d)`.
fn simple_reflection(q: &Quiver, d: &[i64], v: usize) -> Vec<i64> {
    let mut pairing = 2 * d[v];
    for a in q.arrows() {
        if a.source == v && a.target != v {
            pairing -= d[a.target];
        }
        if a.target == v && a.source != v {
            pairing -= d[a.source];
        }
    }
    let mut out = d.to_vec();
    out[v] -= pairing;
    out
}

/// Orders roots by total dimension, then lexicographically.
fn root_key(d: &DimVector) -> (usize, Vec<usize>) {
    (d.total(), d.0.clone())
}

/// All positive roots, closed under simple reflections starting from the
/// simple roots. Sorted by total dimension, then lexicographically.
pub fn positive_roots(q: &Quiver) -> Result<Vec<DimVector>> {
    dynkin_type(q)?;
    let n = q.vertex_count();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(r) = stack.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for v in 0..n {
            let s = simple_reflection(q, &r, v);
            if s.iter().all(|&x| x >= 0) && s.iter().any(|&x| x > 0) && !seen.contains(&s) {
                stack.push(s);
            }
        }
    }
    let mut roots: Vec<DimVector> = seen
        .into_iter()
        .map(|r| DimVector(r.into_iter().map(|x| x as usize).collect()))
        .collect();
    roots.sort_by_key(root_key);
    Ok(roots)
}

/// Bernstein–Gelfand–Ponomarev reflection at a sink (`C⁺`, new space the
/// kernel of `⊕ M_w → M_v`) or a source (`C⁻`, new space the cokernel of
/// `M_v → ⊕ M_w`). Returns a representation of `q.reflect_at(v)`.
pub fn reflection_functor(m: &Representation, v: usize) -> Result<Representation> {
    let q = m.quiver();
    let field = m.field();
    let d = &m.dims().0;
    let incident: Vec<usize> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.source == v || a.target == v)
        .map(|(k, _)| k)
        .collect();
    if incident.iter().any(|&k| q.arrows()[k].source == q.arrows()[k].target) {
        return Err(Error::NotSinkOrSource(q.vertices()[v].clone()));
    }
    let others: Vec<usize> = incident
        .iter()
        .map(|&k| {
            let a = &q.arrows()[k];
            if a.source == v {
                a.target
            } else {
                a.source
            }
        })
        .collect();
    let total: usize = others.iter().map(|&w| d[w]).sum();
    let mut maps = m.maps().to_vec();
    let mut dims = d.clone();
    if q.is_sink(v) {
        let parts: Vec<&Matrix> = incident.iter().map(|&k| m.map(k)).collect();
        let phi = Matrix::hstack(&parts, d[v]);
        let basis = kernel(field, &phi);
        let kdim = basis.len();
        let mut offset = 0;
        for (&k, &w) in incident.iter().zip(&others) {
            let mut block = Matrix::zeros(d[w], kdim);
            for (c, vec) in basis.iter().enumerate() {
                for r in 0..d[w] {
                    block.set(r, c, vec[offset + r].clone());
                }
            }
            maps[k] = block;
            offset += d[w];
        }
        dims[v] = kdim;
    } else if q.is_source(v) {
        let parts: Vec<&Matrix> = incident.iter().map(|&k| m.map(k)).collect();
        let psi = Matrix::vstack(&parts, d[v]);
        // rows of the cokernel map span the left null space of psi
        let rows = kernel(field, &psi.transpose());
        let cdim = rows.len();
        debug_assert_eq!(cdim, total - rank(field, &psi));
        let mut offset = 0;
        for (&k, &w) in incident.iter().zip(&others) {
            let mut block = Matrix::zeros(cdim, d[w]);
            for (r, vec) in rows.iter().enumerate() {
                for c in 0..d[w] {
                    block.set(r, c, vec[offset + c].clone());
                }
            }
            maps[k] = block;
            offset += d[w];
        }
        dims[v] = cdim;
    } else {
        return Err(Error::NotSinkOrSource(q.vertices()[v].clone()));
    }
    Representation::new(q.reflect_at(v), field, DimVector(dims), maps)
}

/// An indecomposable representation of dimension vector `root`.
///
/// The root is reflected at the sinks of an admissible ordering, repeated
/// cyclically, until it becomes the simple root of the vertex about to be
/// reflected; the simple representation there is then carried back with
/// source reflections.
pub fn indecomposable(q: &Quiver, root: &DimVector, field: Field) -> Result<Representation> {
    let ty = dynkin_type(q)?;
    q.check_dims(root)?;
    if tits_form(q, root) != 1 || root.is_zero() {
        return Err(Error::NotRoot(root.to_string()));
    }
    let n = q.vertex_count();
    let order = q.sink_first_order().ok_or(Error::NotAcyclic("reflection functors"))?;
    let mut quivers = vec![q.clone()];
    let mut vertices = Vec::new();
    let mut d: Vec<i64> = root.0.iter().map(|&x| x as i64).collect();
    let limit = n * (ty.positive_root_count() + 1);
    for step in 0..=limit {
        let v = order[step % n];
        let cur = quivers.last().unwrap();
        debug_assert!(cur.is_sink(v));
        if d[v] == 1 && d.iter().enumerate().all(|(i, &x)| i == v || x == 0) {
            let mut m = Representation::simple(cur, field, v);
            for (&w, qq) in vertices.iter().zip(quivers.iter().skip(1)).rev() {
                debug_assert!(qq.is_source(w));
                m = reflection_functor(&m, w)?;
            }
            debug_assert_eq!(m.quiver(), q);
            return Ok(m);
        }
        d = simple_reflection(cur, &d, v);
        if d.iter().any(|&x| x < 0) {
            return Err(Error::NotRoot(root.to_string()));
        }
        let next = cur.reflect_at(v);
        quivers.push(next);
        vertices.push(v);
    }
    Err(Error::NotRoot(root.to_string()))
}

/// An isomorphism class for fixed `(Q, d)`: a multiset of positive roots.
/// Parts are listed in decreasing root order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub parts: Vec<(DimVector, usize)>,
}

impl OrbitLabel {
    pub fn new(parts: Vec<(DimVector, usize)>) -> Self {
        let mut merged: Vec<(DimVector, usize)> = Vec::new();
        let mut parts: Vec<(DimVector, usize)> = parts.into_iter().filter(|p| p.1 > 0).collect();
        parts.sort_by_key(|p| std::cmp::Reverse(root_key(&p.0)));
        for (r, k) in parts {
            match merged.last_mut() {
                Some((lr, lk)) if *lr == r => *lk += k,
                _ => merged.push((r, k)),
            }
        }
        OrbitLabel { parts: merged }
    }

    /// The semisimple label `⊕ Sᵢ^{dᵢ}`.
    pub fn semisimple(d: &DimVector) -> Self {
        OrbitLabel::new(
            d.0.iter()
                .enumerate()
                .map(|(i, &k)| (DimVector::unit(d.len(), i), k))
                .collect(),
        )
    }

    pub fn summands(&self) -> usize {
        self.parts.iter().map(|p| p.1).sum()
    }

    pub fn dims(&self, n: usize) -> DimVector {
        self.parts
            .iter()
            .fold(DimVector::zero(n), |acc, (r, k)| acc.add(&r.scaled(*k)))
    }

    pub fn is_semisimple(&self) -> bool {
        self.parts.iter().all(|(r, _)| r.total() == 1)
    }

    fn sort_key(&self) -> (usize, Vec<(usize, Vec<usize>)>) {
        let flat = self
            .parts
            .iter()
            .flat_map(|(r, k)| std::iter::repeat_n(root_key(r), *k))
            .map(|(t, v)| (usize::MAX - t, v))
            .collect();
        (self.summands(), flat)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, k)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}:{k}")?;
        }
        write!(f, "}}")
    }
}

/// Roots, their indecomposables and the matrix `H[r][s] = dim Hom(X_r, X_s)`
/// for one Dynkin quiver.
pub struct DynkinContext {
    quiver: Quiver,
    field: Field,
    roots: Vec<DimVector>,
    indecomposables: Vec<Representation>,
    hom_matrix: Vec<Vec<usize>>,
}

impl DynkinContext {
    pub fn new(q: &Quiver, field: Field) -> Result<Self> {
        let roots = positive_roots(q)?;
        let indecomposables = roots
            .iter()
            .map(|r| indecomposable(q, r, field))
            .collect::<Result<Vec<_>>>()?;
        let hom_matrix = indecomposables
            .iter()
            .map(|x| {
                indecomposables
                    .iter()
                    .map(|y| hom_dim(x, y))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DynkinContext {
            quiver: q.clone(),
            field,
            roots,
            indecomposables,
            hom_matrix,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn indecomposables(&self) -> &[Representation] {
        &self.indecomposables
    }

    pub fn root_index(&self, r: &DimVector) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }

    /// `dim Hom(X_r, M)` for every root `r`, computed directly.
    pub fn hom_profile(&self, m: &Representation) -> Result<Vec<usize>> {
        self.indecomposables.iter().map(|x| hom_dim(x, m)).collect()
    }

    /// `dim Hom(X_r, ⊕ X_s^{μ_s})` from the cached table.
    pub fn label_profile(&self, label: &OrbitLabel) -> Result<Vec<usize>> {
        let mut out = vec![0; self.roots.len()];
        for (r, k) in &label.parts {
            let s = self.root_index(r).ok_or_else(|| Error::NotRoot(r.to_string()))?;
            for (i, o) in out.iter_mut().enumerate() {
                *o += k * self.hom_matrix[i][s];
            }
        }
        Ok(out)
    }

    /// Direct sum of indecomposables realizing `label`.
    pub fn build(&self, label: &OrbitLabel) -> Result<Representation> {
        let n = self.quiver.vertex_count();
        let mut m = Representation::zero(&self.quiver, self.field, DimVector::zero(n))?;
        for (r, k) in &label.parts {
            let s = self.root_index(r).ok_or_else(|| Error::NotRoot(r.to_string()))?;
            for _ in 0..*k {
                m = m.direct_sum(&self.indecomposables[s])?;
            }
        }
        Ok(m)
    }

    /// Krull–Schmidt multiplicities from `dim Hom(X_r, M) = Σ_s μ_s H[r][s]`.
    pub fn decompose(&self, m: &Representation) -> Result<OrbitLabel> {
        if m.quiver() != &self.quiver {
            return Err(Error::QuiverMismatch);
        }
        let d = m.dims();
        let active: Vec<usize> = (0..self.roots.len()).filter(|&i| self.roots[i].le(d)).collect();
        let k = active.len();
        let mut h = Matrix::zeros(k, k);
        let mut rhs = Vec::with_capacity(k);
        for (a, &i) in active.iter().enumerate() {
            for (b, &j) in active.iter().enumerate() {
                h.set(a, b, Scalar::from_integer(self.hom_matrix[i][j].into()));
            }
            rhs.push(Scalar::from_integer(hom_dim(&self.indecomposables[i], m)?.into()));
        }
        let mu = solve(Field::Rational, &h, &rhs)
            .ok_or_else(|| Error::Internal("Hom matrix of indecomposables is singular".into()))?;
        let mut parts = Vec::new();
        for (&i, x) in active.iter().zip(&mu) {
            if !x.is_integer() || x < &Scalar::zero() {
                return Err(Error::Internal(format!("non-integral multiplicity {x}")));
            }
            let count: usize = x
                .to_integer()
                .try_into()
                .map_err(|_| Error::Internal("multiplicity overflow".into()))?;
            parts.push((self.roots[i].clone(), count));
        }
        let label = OrbitLabel::new(parts);
        if &label.dims(d.len()) != d {
            return Err(Error::Internal("decomposition does not add up to the dimension vector".into()));
        }
        Ok(label)
    }

    /// Every multiset of positive roots summing to `d`, ordered by number of
    /// summands and then lexicographically on the root lists.
    pub fn enumerate_orbits(&self, d: &DimVector) -> Result<Vec<OrbitLabel>> {
        self.quiver.check_dims(d)?;
        // roots in decreasing order; choose a non-increasing sequence
        let desc: Vec<&DimVector> = self.roots.iter().rev().collect();
        let mut out = Vec::new();
        let mut memo: HashMap<(usize, Vec<usize>), Combos> = HashMap::new();
        for combo in partitions(&desc, 0, &d.0, &mut memo) {
            out.push(OrbitLabel::new(
                combo.into_iter().map(|(i, k)| (desc[i].clone(), k)).collect(),
            ));
        }
        out.sort_by_key(OrbitLabel::sort_key);
        Ok(out)
    }
}

type Combos = Vec<Vec<(usize, usize)>>;

fn partitions(
    roots: &[&DimVector],
    start: usize,
    rest: &[usize],
    memo: &mut HashMap<(usize, Vec<usize>), Combos>,
) -> Combos {
    if rest.iter().all(|&x| x == 0) {
        return vec![Vec::new()];
    }
    if start == roots.len() {
        return Vec::new();
    }
    let key = (start, rest.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = &roots[start].0;
    let mut out = Vec::new();
    let mut k = 0;
    let mut remaining = rest.to_vec();
    loop {
        for tail in partitions(roots, start + 1, &remaining, memo) {
            let mut combo = Vec::with_capacity(tail.len() + 1);
            if k > 0 {
                combo.push((start, k));
            }
            combo.extend(tail);
            out.push(combo);
        }
        if !r.iter().zip(&remaining).all(|(a, b)| a <= b) {
            break;
        }
        for (x, a) in remaining.iter_mut().zip(r) {
            *x -= a;
        }
        k += 1;
    }
    memo.insert(key, out.clone());
    out
}

pub fn decompose(m: &Representation) -> Result<OrbitLabel> {
    DynkinContext::new(m.quiver(), m.field())?.decompose(m)
}

pub fn enumerate_orbits(q: &Quiver, d: &DimVector) -> Result<Vec<OrbitLabel>> {
    DynkinContext::new(q, Field::Rational)?.enumerate_orbits(d)
}
