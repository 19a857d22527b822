//! Shared helpers for the integration tests: random quivers and
//! representations, and small oracles written directly from definitions.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use quiver_cm::groebner::{normal_form, Monomial, Poly};
use quiver_cm::{DimVector, Field, Matrix, Quiver, Representation};

pub fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Quiver on `n` vertices named 1..n with the given undirected edges, each
/// oriented at random.
pub fn orient(rng: &mut ChaCha8Rng, n: usize, edges: &[(usize, usize)]) -> Quiver {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows = edges
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            let (s, t) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            (format!("a{k}"), (s + 1).to_string(), (t + 1).to_string())
        })
        .collect();
    Quiver::new(vertices, arrows).unwrap()
}

pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// Edges of E_n: a path on `n - 1` vertices plus one vertex hung off the third.
pub fn e_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(n - 1);
    e.push((2, n - 1));
    e
}

/// A2, A3, A4 or D4, randomly oriented.
pub fn random_dynkin(rng: &mut ChaCha8Rng) -> Quiver {
    match rng.gen_range(0..4) {
        0 => orient(rng, 2, &path_edges(2)),
        1 => orient(rng, 3, &path_edges(3)),
        2 => orient(rng, 4, &path_edges(4)),
        _ => orient(rng, 4, &[(0, 3), (1, 3), (2, 3)]),
    }
}

/// Random tree on 1..=max vertices with random orientation.
pub fn random_tree(rng: &mut ChaCha8Rng, max: usize) -> Quiver {
    let n = rng.gen_range(1..=max);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    orient(rng, n, &edges)
}

/// Random point of rep(q, d) with small integer entries, about half zero.
pub fn random_rep(rng: &mut ChaCha8Rng, q: &Quiver, max_dim: usize) -> Representation {
    let d = DimVector((0..q.vertex_count()).map(|_| rng.gen_range(0..=max_dim)).collect());
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (d.0[a.target], d.0[a.source]);
            let entries: Vec<i64> = (0..r * c)
                .map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-2..=2) })
                .collect();
            Matrix::from_ints(r, c, &entries)
        })
        .collect();
    Representation::new(q.clone(), Field::Rational, d, maps).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank over ℚ by plain Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let (top, rest) = rows.split_at_mut(rank + 1);
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, p) in row[c..].iter_mut().zip(&top[rank][c..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// dim End(M) from the intertwiner equations `h_t f_a = f_a h_s`, unknowns
/// laid out column-major per vertex.
pub fn oracle_end_dim(m: &Representation) -> usize {
    let d = &m.dims().0;
    let mut offset = vec![0; d.len()];
    let mut total = 0;
    for (v, &n) in d.iter().enumerate() {
        offset[v] = total;
        total += n * n;
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + j * d[v] + i;
    let mut eqs = Vec::new();
    for (a, f) in m.quiver().arrows().iter().zip(m.maps()) {
        let (s, t) = (a.source, a.target);
        for i in 0..d[t] {
            for j in 0..d[s] {
                // (h_t f)_{ij} - (f h_s)_{ij}
                let mut row = vec![q(0); total];
                for k in 0..d[t] {
                    row[var(t, i, k)] += f.get(k, j).clone();
                }
                for k in 0..d[s] {
                    row[var(s, k, j)] -= f.get(i, k).clone();
                }
                eqs.push(row);
            }
        }
    }
    total - rational_rank(eqs)
}

fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u16>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials_of_degree(n - 1, deg - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Graded Betti number β_{i,j}(R/I) as dim H_i of the Koszul complex on the
/// variables tensored with R/I, in internal degree `j`. `gb` must be a
/// Gröbner basis of I; R/I is spanned by its standard monomials.
pub fn koszul_betti(gb: &[Poly], nvars: usize, field: Field, i: usize, j: u32) -> usize {
    let leads: Vec<Monomial> = gb.iter().filter_map(|g| g.lead_monomial().cloned()).collect();
    let standard = |deg: i64| -> Vec<Vec<u16>> {
        if deg < 0 {
            return Vec::new();
        }
        monomials_of_degree(nvars, deg as u32)
            .into_iter()
            .filter(|e| {
                let m = Monomial::from_exps(e.clone());
                !leads.iter().any(|l| l.divides(&m))
            })
            .collect()
    };
    let chain_basis = |k: usize| -> Vec<(Vec<usize>, Vec<u16>)> {
        let mut out = Vec::new();
        for s in subsets(nvars, k) {
            for m in standard(j as i64 - k as i64) {
                out.push((s.clone(), m));
            }
        }
        out
    };
    // matrix of d: K_k -> K_{k-1} in degree j, rows indexed by the target basis
    let differential_rank = |k: usize| -> usize {
        if k == 0 || k > nvars {
            return 0;
        }
        let src = chain_basis(k);
        let dst = chain_basis(k - 1);
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let index: std::collections::HashMap<(Vec<usize>, Vec<u16>), usize> =
            dst.iter().cloned().enumerate().map(|(n, b)| (b, n)).collect();
        let mut cols = Vec::new();
        for (s, m) in &src {
            let mut col = vec![q(0); dst.len()];
            for (pos, &x) in s.iter().enumerate() {
                let mut e = m.clone();
                e[x] += 1;
                let p = Poly::monomial(Monomial::from_exps(e), BigRational::one());
                let nf = normal_form(&p, gb, field);
                let rest: Vec<usize> = s.iter().copied().filter(|&y| y != x).collect();
                let sign = if pos % 2 == 0 { q(1) } else { q(-1) };
                for (mono, c) in nf.terms() {
                    let key = (rest.clone(), mono.exps().to_vec());
                    col[index[&key]] += &sign * c;
                }
            }
            cols.push(col);
        }
        rational_rank(cols)
    };
    chain_basis(i).len() - differential_rank(i) - differential_rank(i + 1)
}
