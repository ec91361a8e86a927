use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(invalid("ragged matrix rows"));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_diagonal(diag: &[i64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(invalid("matrix dimensions do not agree"));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    acc = add(acc, mul(self[(i, k)], other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<IntMatrix> {
        let data = self.data.iter().map(|&x| mul(x, factor)).collect::<Result<_>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> IntMatrix {
        self.submatrix(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i128> {
        if !self.is_square() {
            return Err(invalid("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                        .ok_or(Error::Overflow)?;
                    // exact by Sylvester's identity
                    a[i][j] = t / prev;
                }
            }
            prev = a[k][k];
        }
        a[n - 1][n - 1].checked_mul(sign).ok_or(Error::Overflow)
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Unimodular transform from a Smith reduction. Entries are arbitrary
/// precision: the transforms grow much faster than the matrix being reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct Transform {
    n: usize,
    data: Vec<BigInt>,
}

impl Transform {
    fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        Self {
            n: rows.len(),
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Bit length of the largest absolute entry.
    pub fn max_bits(&self) -> u64 {
        self.data.iter().map(BigInt::bits).max().unwrap_or(0)
    }
}

impl core::ops::Index<(usize, usize)> for Transform {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl fmt::Debug for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: Transform,
    pub v: Transform,
}

impl SmithForm {
    /// Diagonal entries of `D` (nonnegative, zeros last).
    pub fn divisors(&self) -> Vec<i64> {
        self.d.diagonal()
    }

    /// Recomputes `U * M * V` exactly and compares with `D`.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        if self.u.n != m.rows || self.v.n != m.cols {
            return false;
        }
        let um: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                (0..m.cols)
                    .map(|j| (0..m.rows).map(|k| &self.u[(i, k)] * m[(k, j)]).sum())
                    .collect()
            })
            .collect();
        (0..m.rows).all(|i| {
            (0..m.cols).all(|j| {
                let x: BigInt = (0..m.cols).map(|k| &um[i][k] * &self.v[(k, j)]).sum();
                x == BigInt::from(self.d[(i, j)])
            })
        })
    }
}

/// Quotient rounded to the nearest integer, so remainders are at most |p|/2.
fn round_div(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_rem(p);
    if !r.is_zero() && r.magnitude() * 2u32 > *p.magnitude() {
        if r.is_negative() == p.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// target -= factor * source, on two rows of the same matrix
fn axpy(m: &mut [Vec<BigInt>], target: usize, source: usize, factor: &BigInt) {
    for c in 0..m[target].len() {
        let delta = factor * &m[source][c];
        m[target][c] -= delta;
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

struct Reducer {
    rows: usize,
    cols: usize,
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    // stored transposed so column operations are row operations
    vt: Vec<Vec<BigInt>>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        self.vt.swap(i, j);
    }

    fn row_axpy(&mut self, target: usize, source: usize, factor: &BigInt) {
        axpy(&mut self.a, target, source, factor);
        axpy(&mut self.u, target, source, factor);
    }

    fn col_axpy(&mut self, target: usize, source: usize, factor: &BigInt) {
        for row in &mut self.a {
            let delta = factor * &row[source];
            row[target] -= delta;
        }
        axpy(&mut self.vt, target, source, factor);
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.magnitude() < self.a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (m, n) = (self.rows, self.cols);
        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = self.min_entry(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let p = self.a[t][t].clone();
                let mut cleared = true;
                for i in t + 1..m {
                    let q = round_div(&self.a[i][t], &p);
                    if !q.is_zero() {
                        self.row_axpy(i, t, &q);
                    }
                    cleared &= self.a[i][t].is_zero();
                }
                for j in t + 1..n {
                    let q = round_div(&self.a[t][j], &p);
                    if !q.is_zero() {
                        self.col_axpy(j, t, &q);
                    }
                    cleared &= self.a[t][j].is_zero();
                }
                if !cleared {
                    continue;
                }
                let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&self.a[i][j] % &p).is_zero()));
                match offender {
                    // row_t += row_i, then the next pass produces a smaller pivot
                    Some(i) => self.row_axpy(t, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form with transforms. The reduction runs in arbitrary
/// precision; [`Error::Overflow`] only if a divisor does not fit in `i64`.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm> {
    let mut r = Reducer {
        rows: m.rows,
        cols: m.cols,
        a: (0..m.rows).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect(),
        u: identity_rows(m.rows),
        vt: identity_rows(m.cols),
    };
    r.run();
    let mut d = IntMatrix::zeros(m.rows, m.cols);
    for i in 0..m.rows.min(m.cols) {
        d[(i, i)] = r.a[i][i].to_i64().ok_or(Error::Overflow)?;
    }
    let mut v = vec![Vec::with_capacity(m.cols); m.cols];
    for col in r.vt {
        for (i, x) in col.into_iter().enumerate() {
            v[i].push(x);
        }
    }
    Ok(SmithForm {
        d,
        u: Transform::from_rows(r.u),
        v: Transform::from_rows(v),
    })
}
