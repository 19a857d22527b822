//! Dense exact matrices and elimination.
//!
//! Over ℚ rows are scaled to integers and reduced with fraction-free
//! Gauss–Jordan elimination (Bareiss-style exact divisions), over 𝔽_p with
//! plain elimination on machine residues. The fraction-free driver is generic
//! over [`Domain`] and is reused for polynomial matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `rows × cols` matrix from an integer table (test and example helper).
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&v| Scalar::from_integer(v.into())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, field: Field, s: &Scalar) -> Matrix {
        self.map(|a| field.mul(a, s))
    }

    pub fn add(&self, field: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, field: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, field: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = field.add(out.get(i, j), &field.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Copies the block of rows `r0..r0+nr` and columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        let mut out = Matrix::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn hstack(parts: &[&Matrix], rows: usize) -> Matrix {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, c0 + j, p.get(i, j).clone());
                }
            }
            c0 += p.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix], cols: usize) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            for i in 0..p.rows {
                for j in 0..cols {
                    out.set(r0 + i, j, p.get(i, j).clone());
                }
            }
            r0 += p.rows;
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }
}

/// An integral domain in which exact quotients can be computed.
pub trait Domain {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a / b`, where `b` is known to divide `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

pub struct Integers;

impl Domain for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> BigInt {
        debug_assert!((a % b).is_zero(), "inexact division");
        a / b
    }
}

/// Result of fraction-free Gauss–Jordan elimination.
///
/// Pivot row `r` has the value `scale` at column `pivots[r]` and zeros in
/// every other pivot column; rows past `pivots.len()` are zero.
pub struct FractionFree<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub scale: E,
    pub swaps: usize,
}

pub fn fraction_free_gauss_jordan<D: Domain>(
    dom: &D,
    mut rows: Vec<Vec<D::Elem>>,
    ncols: usize,
) -> FractionFree<D::Elem> {
    let nrows = rows.len();
    let mut prev = dom.one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(found) = (r..nrows).find(|&i| !dom.is_zero(&rows[i][c])) else {
            continue;
        };
        if found != r {
            rows.swap(found, r);
            swaps += 1;
        }
        let pivot_row = rows[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let a = row[c].clone();
            for j in 0..ncols {
                let lhs = dom.mul(&p, &row[j]);
                let v = if dom.is_zero(&a) || dom.is_zero(&pivot_row[j]) {
                    lhs
                } else {
                    dom.sub(&lhs, &dom.mul(&a, &pivot_row[j]))
                };
                row[j] = if dom.is_zero(&v) {
                    v
                } else {
                    dom.div_exact(&v, &prev)
                };
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    FractionFree {
        rows,
        pivots,
        scale: prev,
        swaps,
    }
}

/// Kernel basis of a matrix over a domain: one vector per free column, with
/// entries in the domain (no denominators).
pub fn domain_kernel<D: Domain>(dom: &D, rows: Vec<Vec<D::Elem>>, ncols: usize) -> Vec<Vec<D::Elem>> {
    let ff = fraction_free_gauss_jordan(dom, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ff.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![dom.zero(); ncols];
            v[f] = ff.scale.clone();
            for (r, &pc) in ff.pivots.iter().enumerate() {
                v[pc] = dom.neg(&ff.rows[r][f]);
            }
            v
        })
        .collect()
}

/// Determinant of a square matrix over a domain.
pub fn domain_determinant<D: Domain>(dom: &D, rows: Vec<Vec<D::Elem>>) -> D::Elem {
    let n = rows.len();
    if n == 0 {
        return dom.one();
    }
    let ff = fraction_free_gauss_jordan(dom, rows, n);
    if ff.pivots.len() < n {
        return dom.zero();
    }
    if ff.swaps % 2 == 1 {
        dom.neg(&ff.scale)
    } else {
        ff.scale
    }
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect()
}

fn modp_rref(p: u64, m: &Matrix, field: Field) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|x| field.residue(x)).collect())
        .collect();
    let inv = |a: u64| -> u64 {
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(found) = (r..m.rows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(found, r);
        let pi = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * pi % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let a = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - a * y % p) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// Reduced row echelon form and pivot columns.
pub fn rref(field: Field, m: &Matrix) -> (Matrix, Vec<usize>) {
    match field {
        Field::Rational => {
            let ff = fraction_free_gauss_jordan(&Integers, integer_rows(m), m.cols);
            let scale = Scalar::from_integer(ff.scale.clone());
            let mut out = Matrix::zeros(m.rows, m.cols);
            for (i, row) in ff.rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out.set(i, j, Scalar::from_integer(v.clone()) / &scale);
                    }
                }
            }
            (out, ff.pivots)
        }
        Field::Prime(p) => {
            let (rows, pivots) = modp_rref(p, m, field);
            let mut out = Matrix::zeros(m.rows, m.cols);
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        out.set(i, j, Scalar::from_integer(v.into()));
                    }
                }
            }
            (out, pivots)
        }
    }
}

pub fn rank(field: Field, m: &Matrix) -> usize {
    match field {
        Field::Rational => {
            fraction_free_gauss_jordan(&Integers, integer_rows(m), m.cols)
                .pivots
                .len()
        }
        Field::Prime(p) => modp_rref(p, m, field).1.len(),
    }
}

/// Basis of `{x : m x = 0}`. Over ℚ the vectors are primitive integer vectors.
pub fn kernel(field: Field, m: &Matrix) -> Vec<Vec<Scalar>> {
    match field {
        Field::Rational => domain_kernel(&Integers, integer_rows(m), m.cols)
            .into_iter()
            .map(|v| {
                let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                let lead_negative = v.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
                let g = if lead_negative { -g } else { g };
                v.into_iter()
                    .map(|x| Scalar::from_integer(x / &g))
                    .collect()
            })
            .collect(),
        Field::Prime(_) => {
            let (r, pivots) = rref(field, m);
            (0..m.cols)
                .filter(|c| !pivots.contains(c))
                .map(|f| {
                    let mut v = vec![Scalar::zero(); m.cols];
                    v[f] = Scalar::one();
                    for (row, &pc) in pivots.iter().enumerate() {
                        v[pc] = field.neg(r.get(row, f));
                    }
                    v
                })
                .collect()
        }
    }
}

pub fn determinant(field: Field, m: &Matrix) -> Scalar {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    match field {
        Field::Rational => {
            let scale: BigInt = (0..m.rows)
                .map(|i| m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
                .product();
            let det = domain_determinant(&Integers, integer_rows(m));
            Scalar::new(det, scale)
        }
        Field::Prime(_) => {
            let mut work = m.clone();
            let mut det = Scalar::one();
            for c in 0..m.cols {
                let Some(r) = (c..m.rows).find(|&r| !work.get(r, c).is_zero()) else {
                    return Scalar::zero();
                };
                if r != c {
                    for j in 0..m.cols {
                        let a = work.get(r, j).clone();
                        let b = work.get(c, j).clone();
                        work.set(r, j, b);
                        work.set(c, j, a);
                    }
                    det = field.neg(&det);
                }
                let p = work.get(c, c).clone();
                det = field.mul(&det, &p);
                let pi = field.inv(&p).expect("nonzero pivot");
                for i in c + 1..m.rows {
                    let f = field.mul(work.get(i, c), &pi);
                    if f.is_zero() {
                        continue;
                    }
                    for j in c..m.cols {
                        let v = field.sub(work.get(i, j), &field.mul(&f, work.get(c, j)));
                        work.set(i, j, v);
                    }
                }
            }
            det
        }
    }
}

pub fn inverse(field: Field, m: &Matrix) -> Result<Matrix> {
    if m.rows != m.cols {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    let n = m.rows;
    let aug = Matrix::hstack(&[m, &Matrix::identity(n)], n);
    let (r, pivots) = rref(field, &aug);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return Err(Error::DivisionByZero);
    }
    Ok(r.block(0, n, n, n))
}

/// Solves `a x = b` when a solution exists.
pub fn solve(field: Field, a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows, b.len());
    let col = Matrix {
        rows: b.len(),
        cols: 1,
        data: b.to_vec(),
    };
    let aug = Matrix::hstack(&[a, &col], a.rows);
    let (r, pivots) = rref(field, &aug);
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); a.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, a.cols).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> Matrix {
        Matrix::from_ints(rows, cols, v)
    }

    // independent cofactor expansion
    fn cofactor_det(m: &Matrix) -> Scalar {
        let n = m.rows();
        if n == 0 {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            let mut minor = Vec::new();
            for i in 1..n {
                minor.push(
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m.get(i, c).clone())
                        .collect::<Vec<_>>(),
                );
            }
            let sub = Matrix::from_rows(minor).unwrap_or_else(|_| Matrix::zeros(0, 0));
            let sub = if n == 1 { Matrix::zeros(0, 0) } else { sub };
            let term = m.get(0, j) * cofactor_det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = int_matrix(2, 3, &[1, 2, 3, 2, 4, 6]);
        let k = kernel(Field::Rational, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let x = Matrix::from_rows(v.iter().map(|a| vec![a.clone()]).collect()).unwrap();
            assert!(m.mul(Field::Rational, &x).is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip_and_singular() {
        let f = Field::Rational;
        let m = int_matrix(2, 2, &[2, 1, 1, 1]);
        let inv = inverse(f, &m).unwrap();
        assert_eq!(m.mul(f, &inv), Matrix::identity(2));
        assert!(inverse(f, &int_matrix(2, 2, &[1, 2, 2, 4])).is_err());
        assert_eq!(inverse(f, &Matrix::identity(0)).unwrap(), Matrix::identity(0));
    }

    #[test]
    fn modular_rank_differs_from_rational() {
        // det = 5
        let m = int_matrix(2, 2, &[1, 2, -1, 3]);
        assert_eq!(rank(Field::Rational, &m), 2);
        assert_eq!(rank(Field::Prime(5), &m.map(|x| Field::Prime(5).from_rational(x).unwrap())), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Field::Rational;
        let a = int_matrix(2, 2, &[1, 1, 1, -1]);
        let b = vec![Scalar::from_integer(3.into()), Scalar::from_integer(1.into())];
        let x = solve(f, &a, &b).unwrap();
        assert_eq!(x, vec![Scalar::from_integer(2.into()), Scalar::from_integer(1.into())]);
        let a = int_matrix(2, 1, &[1, 1]);
        assert!(solve(f, &a, &[Scalar::one(), Scalar::zero()]).is_none());
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor_expansion(n in 1usize..5, seed in proptest::collection::vec(-3i64..4, 16)) {
            let m = int_matrix(n, n, &seed[..n * n]);
            prop_assert_eq!(determinant(Field::Rational, &m), cofactor_det(&m));
            let p = Field::Prime(7);
            let mp = m.map(|x| p.from_rational(x).unwrap());
            prop_assert_eq!(determinant(p, &mp), p.from_rational(&cofactor_det(&m)).unwrap());
        }

        #[test]
        fn rank_nullity(r in 1usize..5, c in 1usize..6, seed in proptest::collection::vec(-2i64..3, 30)) {
            let m = int_matrix(r, c, &seed[..r * c]);
            for field in [Field::Rational, Field::Prime(3)] {
                let mf = m.map(|x| field.from_rational(x).unwrap());
                let k = kernel(field, &mf);
                prop_assert_eq!(k.len() + rank(field, &mf), c);
                for v in &k {
                    let x = Matrix::from_rows(v.iter().map(|a| vec![a.clone()]).collect()).unwrap();
                    prop_assert!(mf.mul(field, &x).is_zero());
                }
            }
        }
    }
}
