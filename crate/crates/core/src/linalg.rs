//! Exact linear algebra over [`Scalar`] and over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::scalars::Scalar;

/// Sparse vector indexed by column.
pub type SparseRow = BTreeMap<usize, Scalar>;

/// `acc += k * row`, dropping cancelled entries.
pub fn axpy(acc: &mut SparseRow, k: &Scalar, row: &SparseRow) {
    for (c, x) in row {
        let add = k * x;
        match acc.get_mut(c) {
            Some(v) => {
                *v = &*v + &add;
                if v.is_zero() {
                    acc.remove(c);
                }
            }
            None => {
                if !add.is_zero() {
                    acc.insert(*c, add);
                }
            }
        }
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Each stored row has leading entry 1 at its pivot, which is the smallest
/// column index present, and no other row has an entry in that column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Row whose pivot is `col`.
    pub fn row(&self, col: usize) -> Option<&SparseRow> {
        self.rows.get(&col)
    }

    /// Reduces `v` against the stored rows; the result has no pivot columns.
    pub fn reduce(&self, v: &SparseRow) -> SparseRow {
        let mut v = v.clone();
        let cols: Vec<usize> = v.keys().copied().filter(|c| self.is_pivot(*c)).collect();
        for c in cols {
            if let Some(k) = v.get(&c).cloned() {
                axpy(&mut v, &k.neg(), &self.rows[&c]);
            }
        }
        v
    }

    /// Adds `v` to the row space. Returns false if it was already in it.
    pub fn insert(&mut self, v: SparseRow) -> bool {
        let mut v = self.reduce(&v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(k) = row.get(&p).cloned() {
                axpy(row, &k.neg(), &v);
            }
        }
        v.insert(p, Scalar::one());
        self.rows.insert(p, v);
        true
    }
}

/// Dense square or rectangular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
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
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Err(Error::SingularGram);
            };
            if p != col {
                for j in 0..n {
                    a.data.swap(p * n + j, col * n + j);
                    inv.data.swap(p * n + j, col * n + j);
                }
            }
            let k = a.get(col, col).inv()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j) * &k);
                inv.set(col, j, inv.get(col, j) * &k);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for i in 0..self.rows {
            let row: SparseRow = (0..self.cols)
                .filter(|&j| !self.get(i, j).is_zero())
                .map(|j| (j, self.get(i, j).clone()))
                .collect();
            e.insert(row);
        }
        e.rank()
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                for j in 0..n {
                    a.data.swap(p * n + j, col * n + j);
                }
                det = det.neg();
            }
            let piv = a.get(col, col).clone();
            det = &det * &piv;
            let pinv = piv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col) * &pinv;
                for j in col..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                }
            }
        }
        det
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

/// Solves the sparse system `rows · x = rhs` for `unknowns` variables.
///
/// Each equation is a sparse row over the unknowns with its right-hand side.
pub fn solve_unique(
    equations: &[(SparseRow, Scalar)],
    unknowns: usize,
) -> Result<Vec<Scalar>, Error> {
    // the right-hand side lives in column `unknowns`
    let mut e = Echelon::new();
    for (row, rhs) in equations {
        let mut r = row.clone();
        if !rhs.is_zero() {
            r.insert(unknowns, rhs.clone());
        }
        e.insert(r);
    }
    if e.is_pivot(unknowns) {
        return Err(Error::NoSolution);
    }
    if e.rank() < unknowns {
        return Err(Error::NonUniqueSolution);
    }
    Ok((0..unknowns)
        .map(|c| {
            e.row(c)
                .and_then(|r| r.get(&unknowns))
                .cloned()
                .unwrap_or_default()
        })
        .collect())
}

/// Integer points of the rational null space of `a` inside the box
/// `[-bound, bound]^m`, excluding the origin. Rows of `a` are equations.
pub fn integer_kernel_in_box(a: &[Vec<i64>], m: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let k = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x = &*x * &k;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for j in 0..m {
                    let d = &f * &rows[rank][j];
                    rows[r][j] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    let span = (2 * bound + 1) as usize;
    let total = span.checked_pow(free.len() as u32).unwrap_or(usize::MAX);
    for idx in 0..total {
        let mut x = vec![BigRational::zero(); m];
        let mut t = idx;
        for &f in &free {
            x[f] = BigRational::from_integer(BigInt::from((t % span) as i64 - bound));
            t /= span;
        }
        for (k, &p) in pivots.iter().enumerate() {
            let mut v = BigRational::zero();
            for &f in &free {
                v -= &rows[k][f] * &x[f];
            }
            x[p] = v;
        }
        let b = BigRational::from_integer(BigInt::from(bound));
        if x.iter().all(|v| v.is_integer() && v.abs_le(&b)) && x.iter().any(|v| !v.is_zero()) {
            out.push(
                x.iter()
                    .map(|v| i64::try_from(v.to_integer()).expect("small"))
                    .collect(),
            );
        }
    }
    out
}

trait AbsLe {
    fn abs_le(&self, b: &Self) -> bool;
}

impl AbsLe for BigRational {
    fn abs_le(&self, b: &Self) -> bool {
        let neg = -b.clone();
        *self <= *b && *self >= neg
    }
}
