use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use crate::{Error, Result};

/// Sparse vector; stored entries are nonzero and below `len`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<T> {
    len: usize,
    entries: BTreeMap<usize, T>,
}

impl<T: Field> SparseVec<T> {
    pub fn zeros(len: usize) -> Self {
        SparseVec { len, entries: BTreeMap::new() }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = SparseVec::zeros(len);
        v.set(index, T::one());
        v
    }

    pub fn from_dense(values: Vec<T>) -> Self {
        let len = values.len();
        let entries = values.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        SparseVec { len, entries }
    }

    pub fn from_entries(len: usize, entries: impl IntoIterator<Item = (usize, T)>) -> Self {
        let mut v = SparseVec::zeros(len);
        for (i, x) in entries {
            v.add_at(i, x);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> T {
        self.entries.get(&i).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, x: T) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        if x.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, x);
        }
    }

    pub fn add_at(&mut self, i: usize, x: T) {
        if x.is_zero() {
            return;
        }
        let updated = self.get(i) + x;
        self.set(i, updated);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.entries.iter().map(|(&i, x)| (i, x))
    }

    pub fn to_dense(&self) -> Vec<T> {
        let mut out = vec![T::zero(); self.len];
        for (&i, x) in &self.entries {
            out[i] = x.clone();
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return SparseVec::zeros(self.len);
        }
        SparseVec { len: self.len, entries: self.entries.iter().map(|(&i, x)| (i, x.clone() * c.clone())).collect() }
    }

    /// Extend or shrink the ambient length. Shrinking requires the dropped
    /// coordinates to be zero.
    pub fn resized(&self, len: usize) -> Option<Self> {
        if self.entries.keys().next_back().is_some_and(|&i| i >= len) {
            return None;
        }
        Some(SparseVec { len, entries: self.entries.clone() })
    }
}

impl<T: Field> Add for &SparseVec<T> {
    type Output = SparseVec<T>;
    fn add(self, rhs: &SparseVec<T>) -> SparseVec<T> {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        let mut out = self.clone();
        for (&i, x) in &rhs.entries {
            out.add_at(i, x.clone());
        }
        out
    }
}

impl<T: Field> Sub for &SparseVec<T> {
    type Output = SparseVec<T>;
    fn sub(self, rhs: &SparseVec<T>) -> SparseVec<T> {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        let mut out = self.clone();
        for (&i, x) in &rhs.entries {
            out.add_at(i, -x.clone());
        }
        out
    }
}

impl<T: Field> Neg for &SparseVec<T> {
    type Output = SparseVec<T>;
    fn neg(self) -> SparseVec<T> {
        self.scale(&-T::one())
    }
}

/// Row-major sparse matrix; stored entries are nonzero and in range.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, T>>,
}

impl<T: Field> SparseMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(values: Vec<T>) -> Self {
        let n = values.len();
        let mut m = SparseMat::zeros(n, n);
        for (i, x) in values.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// Build from dense rows. All rows must share one length.
    pub fn from_dense(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMat::zeros(rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, x) in row.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec<T>]) -> Self {
        let mut m = SparseMat::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length mismatch");
            for (r, x) in v.iter() {
                m.set(r, c, x.clone());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r].get(&c).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, x: T) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        if x.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, x);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: T) {
        if x.is_zero() {
            return;
        }
        let updated = self.get(r, c) + x;
        self.set(r, c, updated);
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.data[r].iter().map(|(&c, x)| (c, x))
    }

    pub fn column(&self, c: usize) -> SparseVec<T> {
        SparseVec::from_entries(self.rows, (0..self.rows).filter_map(|r| self.data[r].get(&c).map(|x| (r, x.clone()))))
    }

    /// `(row, col, value)` for every stored entry, row-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(&c, x)| (r, c, x)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = SparseMat::zeros(self.cols, self.rows);
        for (r, c, x) in self.triplets() {
            t.set(c, r, x.clone());
        }
        t
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = SparseMat::zeros(self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        for (r, c, x) in self.triplets() {
            out.set(r, c, x.clone() * s.clone());
        }
        out
    }

    /// Submatrix on the given row and column index lists, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut position = BTreeMap::new();
        for (j, &c) in cols.iter().enumerate() {
            position.insert(c, j);
        }
        let mut out = SparseMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (c, x) in self.row(r) {
                if let Some(&j) = position.get(&c) {
                    out.set(i, j, x.clone());
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &SparseMat<T>) -> Result<SparseMat<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: (self.rows, self.cols), found: (rhs.rows, rhs.cols) });
        }
        let mut out = SparseMat::zeros(self.rows, rhs.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &rhs.data[k] {
                    let term = a.clone() * b.clone();
                    match acc.get_mut(&c) {
                        Some(slot) => *slot = slot.clone() + term,
                        None => {
                            acc.insert(c, term);
                        }
                    }
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.data[r] = acc;
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &SparseVec<T>) -> Result<SparseVec<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: (self.rows, self.cols), found: (v.len(), 1) });
        }
        let mut out = SparseVec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = T::zero();
            for (&c, a) in row {
                let x = v.get(c);
                if !x.is_zero() {
                    acc = acc + a.clone() * x;
                }
            }
            out.set(r, acc);
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &SparseVec<T>) -> SparseVec<T> {
        self.checked_mul_vec(v).expect("matrix-vector shape mismatch")
    }

    pub fn pow(&self, k: u32) -> Result<SparseMat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut out = SparseMat::identity(self.rows);
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// `self - c·I`.
    pub fn shift(&self, c: &T) -> Result<SparseMat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out.add_at(i, i, -c.clone());
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &SparseMat<T>, sign: T) -> SparseMat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        let mut out = self.clone();
        for (r, c, x) in rhs.triplets() {
            out.add_at(r, c, sign.clone() * x.clone());
        }
        out
    }

    pub(crate) fn row_map(&self, r: usize) -> &BTreeMap<usize, T> {
        &self.data[r]
    }
}

impl<T: Field> Add for &SparseMat<T> {
    type Output = SparseMat<T>;
    fn add(self, rhs: &SparseMat<T>) -> SparseMat<T> {
        self.zip_with(rhs, T::one())
    }
}

impl<T: Field> Sub for &SparseMat<T> {
    type Output = SparseMat<T>;
    fn sub(self, rhs: &SparseMat<T>) -> SparseMat<T> {
        self.zip_with(rhs, -T::one())
    }
}

impl<T: Field> Mul for &SparseMat<T> {
    type Output = SparseMat<T>;
    fn mul(self, rhs: &SparseMat<T>) -> SparseMat<T> {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl<T: Field> Mul<&SparseVec<T>> for &SparseMat<T> {
    type Output = SparseVec<T>;
    fn mul(self, rhs: &SparseVec<T>) -> SparseVec<T> {
        self.mul_vec(rhs)
    }
}
