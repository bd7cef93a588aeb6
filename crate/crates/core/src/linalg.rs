//! Exact linear algebra over ℚ and ℚ(ω): row reduction, rank, kernels,
//! linear solves, and a component-wise rank for large sparse matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalars::{Cyc, Rational};

/// The field operations row reduction needs.
pub trait FieldElem: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse of a nonzero element.
    fn inv(&self) -> Self;
}

impl FieldElem for Cyc {
    fn is_zero(&self) -> bool {
        Cyc::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Cyc::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Cyc::one(self.field())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Cyc::inv(self).expect("pivot is nonzero")
    }
}

impl FieldElem for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// A dense matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    zero: S,
    data: Vec<Vec<S>>,
}

impl<S: FieldElem> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.iter()).finish()
    }
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<S: FieldElem> {
    pub matrix: Matrix<S>,
    pub pivots: Vec<usize>,
}

impl<S: FieldElem> Matrix<S> {
    /// `zero` fixes the field the entries live in.
    pub fn zeros(zero: &S, rows: usize, cols: usize) -> Matrix<S> {
        Matrix { rows, cols, zero: zero.zero_like(), data: vec![vec![zero.zero_like(); cols]; rows] }
    }

    pub fn from_rows(zero: &S, cols: usize, data: Vec<Vec<S>>) -> Matrix<S> {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows: data.len(), cols, zero: zero.zero_like(), data }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(zero: &S, rows: usize, columns: &[Vec<S>]) -> Matrix<S> {
        let mut m = Matrix::zeros(zero, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.data[i][j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r]
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = self.zero.clone();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form.  The pivot in each column is taken from the
    /// sparsest eligible row, ties broken by row index.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let choice = (rank..m.rows)
                .filter(|&r| !m.data[r][c].is_zero())
                .min_by_key(|&r| (m.data[r].iter().filter(|v| !v.is_zero()).count(), r));
            let Some(r) = choice else { continue };
            m.data.swap(rank, r);
            let inv = m.data[rank][c].inv();
            for v in m.data[rank].iter_mut() {
                if !v.is_zero() {
                    *v = v.mul(&inv);
                }
            }
            let pivot_row = m.data[rank].clone();
            let support: Vec<usize> =
                (0..m.cols).filter(|&j| !pivot_row[j].is_zero()).collect();
            for r2 in 0..m.rows {
                if r2 == rank || m.data[r2][c].is_zero() {
                    continue;
                }
                let f = m.data[r2][c].clone();
                for &j in &support {
                    let t = m.data[r2][j].sub(&f.mul(&pivot_row[j]));
                    m.data[r2][j] = t;
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of {v : M v = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = self.zero.one_like();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = matrix.data[i][free].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Some x with M x = b, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(&self.zero, self.rows, self.cols + 1);
        for (row, (src, rhs)) in aug.data.iter_mut().zip(self.data.iter().zip(b)) {
            row[..self.cols].clone_from_slice(src);
            row[self.cols] = rhs.clone();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.zero.clone(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = matrix.data[i][self.cols].clone();
        }
        Some(x)
    }
}

/// A sparse row: (column, value) pairs with nonzero values, sorted by column.
pub type SparseRow<S> = Vec<(usize, S)>;

fn sparse_axpy<S: FieldElem>(row: &SparseRow<S>, f: &S, pivot: &SparseRow<S>) -> SparseRow<S> {
    // row − f · pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, f.mul(&pivot[j].1).neg()));
            j += 1;
        } else {
            let v = row[i].1.sub(&f.mul(&pivot[j].1));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a set of sparse rows by incremental echelon reduction.
pub fn sparse_rank_rows<S: FieldElem>(rows: Vec<SparseRow<S>>) -> usize {
    let mut echelon: BTreeMap<usize, SparseRow<S>> = BTreeMap::new();
    let mut rows = rows;
    // short rows first keeps fill-in low
    rows.sort_by_key(|r| r.len());
    for mut row in rows {
        while let Some(&(lead, ref val)) = row.first() {
            match echelon.get(&lead) {
                Some(p) => {
                    let f = val.clone();
                    row = sparse_axpy(&row, &f, p);
                }
                None => {
                    let inv = val.inv();
                    let normalized = row.into_iter().map(|(c, v)| (c, v.mul(&inv))).collect();
                    echelon.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    echelon.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Rank of a sparse matrix with `ncols` columns.  Rows sharing no column
/// (transitively) form independent blocks whose ranks add up.
pub fn sparse_rank<S: FieldElem>(ncols: usize, rows: Vec<SparseRow<S>>) -> usize {
    let mut uf = UnionFind::new(ncols);
    for row in &rows {
        for w in row.windows(2) {
            uf.union(w[0].0, w[1].0);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<SparseRow<S>>> = BTreeMap::new();
    for row in rows {
        if let Some(&(c, _)) = row.first() {
            let root = uf.find(c);
            blocks.entry(root).or_default().push(row);
        }
    }
    blocks.into_values().map(sparse_rank_rows).sum()
}

/// Whether `target` is a combination of the sparse `columns`.  Columns
/// sharing a coordinate are grouped, and each group is solved densely.
pub fn in_column_span<S: FieldElem>(columns: &[SparseRow<S>], target: &SparseRow<S>) -> bool {
    let Some(zero) = target.first().map(|e| e.1.zero_like()) else { return true };
    let mut uf = UnionFind::new(columns.len());
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (c, _) in col {
            match owner.get(c) {
                Some(&k) => uf.union(j, k),
                None => {
                    owner.insert(*c, j);
                }
            }
        }
    }
    let mut wanted: BTreeMap<usize, Vec<(usize, S)>> = BTreeMap::new();
    for (c, v) in target {
        if v.is_zero() {
            continue;
        }
        match owner.get(c) {
            Some(&j) => wanted.entry(uf.find(j)).or_default().push((*c, v.clone())),
            None => return false,
        }
    }
    for (root, entries) in wanted {
        let cols: Vec<usize> = (0..columns.len()).filter(|&j| uf.find(j) == root).collect();
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for &j in &cols {
            for (c, _) in &columns[j] {
                let next = rows.len();
                rows.entry(*c).or_insert(next);
            }
        }
        let mut m = Matrix::zeros(&zero, rows.len(), cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for (c, v) in &columns[j] {
                m.set(rows[c], k, v.clone());
            }
        }
        let mut rhs = vec![zero.clone(); rows.len()];
        for (c, v) in entries {
            rhs[rows[&c]] = v;
        }
        if m.solve(&rhs).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycField;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(&q(0), cols, rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = qm(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = m.solve(&[q(3), q(1), q(4)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(m.solve(&[q(3), q(1), q(5)]).is_none());
    }

    #[test]
    fn cyclotomic_matrix() {
        let f = CycField::get(3).unwrap();
        let w = Cyc::omega_power(&f, 1);
        let one = Cyc::one(&f);
        // rows (1, ω) and (ω², 1) are dependent since ω²·(1, ω) = (ω², 1)
        let m = Matrix::from_rows(&Cyc::zero(&f), 2, vec![
            vec![one.clone(), w.clone()],
            vec![Cyc::omega_power(&f, 2), one.clone()],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert!(m.mul_vec(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let rows: Vec<SparseRow<Rational>> = vec![
            vec![(0, q(1)), (1, q(-1))],
            vec![(1, q(1)), (2, q(-1))],
            vec![(0, q(1)), (2, q(-1))],
            vec![(3, q(1)), (4, q(1))],
            vec![(5, q(2))],
        ];
        let dense = {
            let mut m = Matrix::zeros(&q(0), rows.len(), 6);
            for (i, r) in rows.iter().enumerate() {
                for (c, v) in r {
                    m.set(i, *c, v.clone());
                }
            }
            m
        };
        assert_eq!(sparse_rank(6, rows), dense.rank());
        assert_eq!(dense.rank(), 4);
    }

    #[test]
    fn column_span_by_blocks() {
        let cols: Vec<SparseRow<Rational>> = vec![
            vec![(0, q(1)), (1, q(-1))],
            vec![(1, q(1)), (2, q(-1))],
            vec![(5, q(2))],
        ];
        assert!(in_column_span(&cols, &vec![(0, q(1)), (2, q(-1)), (5, q(7))]));
        assert!(!in_column_span(&cols, &vec![(0, q(1)), (2, q(1))]));
        assert!(!in_column_span(&cols, &vec![(3, q(1))]));
        assert!(in_column_span(&cols, &Vec::new()));
    }
}
