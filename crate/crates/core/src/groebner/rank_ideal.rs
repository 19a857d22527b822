//! Rank-condition ideals of orbit closures for equioriented type A.
//!
//! For the path `v_0 → v_1 → … → v_{n-1}` and an interval `i < j`, the
//! composite `f_{j-1} ⋯ f_i` has rank `r_ij` on the orbit; the closure is cut
//! out by the `(r_ij + 1)`-minors of the generic composite `X_{j-1} ⋯ X_i`.

use serde::{Deserialize, Serialize};

use super::poly::{Poly, PolyDomain};
use super::{Ideal, PolyRing};
use crate::classify::linear_order;
use crate::error::{Error, Result};
use crate::linalg::{domain_determinant, rank, Matrix};
use crate::representation::Representation;

type PolyMatrix = Vec<Vec<Poly>>;

/// One rank condition on the interval of path positions `start..end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCondition {
    pub start: usize,
    pub end: usize,
    pub rank: usize,
    /// Smallest dimension met along the path; the condition is vacuous when
    /// `rank` reaches it.
    pub bound: usize,
    pub pruned: bool,
}

fn generic_matrix(ring: &PolyRing, offset: usize, rows: usize, cols: usize) -> PolyMatrix {
    (0..rows)
        .map(|i| (0..cols).map(|j| ring.var(offset + i * cols + j)).collect())
        .collect()
}

fn poly_matmul(ring: &PolyRing, a: &PolyMatrix, b: &PolyMatrix, inner: usize) -> PolyMatrix {
    let n = ring.nvars();
    let f = ring.field();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Poly::zero(n), |acc, k| acc.add(f, &row[k].mul(f, &b[k][j])))
                })
                .collect()
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k × k` minors of a polynomial matrix, row subsets outermost.
pub fn minors(ring: &PolyRing, m: &PolyMatrix, k: usize) -> Vec<Poly> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if k == 0 || k > rows || k > cols {
        return Vec::new();
    }
    let dom = PolyDomain {
        field: ring.field(),
        nvars: ring.nvars(),
    };
    let mut out = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: PolyMatrix = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            out.push(domain_determinant(&dom, sub));
        }
    }
    out
}

/// Rank conditions of `m`, marking those implied by a condition on a
/// sub-interval with no larger rank (Cauchy–Binet).
pub fn rank_conditions(m: &Representation) -> Result<Vec<RankCondition>> {
    let q = m.quiver();
    let (verts, arrows) = linear_order(q).ok_or(Error::NotEquioriented("the rank-condition ideal"))?;
    let field = m.field();
    let d = &m.dims().0;
    let n = verts.len();
    let mut out: Vec<RankCondition> = Vec::new();
    for len in 1..n {
        for start in 0..n - len {
            let end = start + len;
            let mut composite = Matrix::identity(d[verts[start]]);
            for &a in &arrows[start..end] {
                composite = m.map(a).mul(field, &composite);
            }
            let r = rank(field, &composite);
            let bound = verts[start..=end].iter().map(|&v| d[v]).min().unwrap();
            let pruned = r < bound
                && out
                    .iter()
                    .any(|c| c.rank < c.bound && c.start >= start && c.end <= end && c.rank <= r);
            out.push(RankCondition {
                start,
                end,
                rank: r,
                bound,
                pruned,
            });
        }
    }
    Ok(out)
}

/// Generators of the orbit-closure ideal in the coordinate ring of
/// `rep(Q, d)`. With `prune` false, implied conditions are kept as well.
pub fn rank_condition_ideal_with(m: &Representation, prune: bool) -> Result<(PolyRing, Ideal)> {
    let q = m.quiver();
    let conditions = rank_conditions(m)?;
    let (verts, arrows) = linear_order(q).expect("checked by rank_conditions");
    let ring = PolyRing::for_rep_space(q, m.dims(), m.field())?;
    let d = &m.dims().0;
    let mut offsets = Vec::with_capacity(q.arrow_count());
    let mut acc = 0;
    for a in q.arrows() {
        offsets.push(acc);
        acc += d[a.source] * d[a.target];
    }
    let mut gens = Vec::new();
    for c in &conditions {
        if c.rank >= c.bound || (prune && c.pruned) {
            continue;
        }
        let first = arrows[c.start];
        let mut product = generic_matrix(&ring, offsets[first], d[verts[c.start + 1]], d[verts[c.start]]);
        for pos in c.start + 1..c.end {
            let a = arrows[pos];
            let x = generic_matrix(&ring, offsets[a], d[verts[pos + 1]], d[verts[pos]]);
            product = poly_matmul(&ring, &x, &product, d[verts[pos]]);
        }
        gens.extend(minors(&ring, &product, c.rank + 1));
    }
    let ideal = Ideal::new(ring.field(), gens);
    Ok((ring, ideal))
}

/// Pruned rank-condition ideal of the orbit closure of `m`.
pub fn rank_condition_ideal(m: &Representation) -> Result<(PolyRing, Ideal)> {
    rank_condition_ideal_with(m, true)
}
