//! Linear systems whose unknowns are matrices.
//!
//! Every condition in the abelianization (commuting squares, homotopies,
//! factorizations) is a sum of terms `L·X·R` with `X` unknown. Vectorizing
//! row-major, the coefficient of `X[k][l]` in entry `(i, j)` is
//! `L[i][k]·R[l][j]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::Mat;
use crate::exactla::{nullspace, solve, Rational, SparseMat, SparseVec};
use crate::{Error, Result};

#[derive(Clone, Debug, Default)]
pub(crate) struct MatrixSystem {
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    width: usize,
    equations: Vec<(BTreeMap<usize, Rational>, Rational)>,
}

impl MatrixSystem {
    pub fn new() -> Self {
        MatrixSystem::default()
    }

    /// Register an unknown `rows × cols` matrix; returns its handle.
    pub fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.shapes.push((rows, cols));
        self.offsets.push(self.width);
        self.width += rows * cols;
        self.shapes.len() - 1
    }

    /// Impose `Σ L·X·R = rhs`.
    pub fn equation(&mut self, terms: &[(usize, &Mat, &Mat)], rhs: &Mat) -> Result<()> {
        let (p, q) = (rhs.rows(), rhs.cols());
        let mut block: Vec<BTreeMap<usize, Rational>> = alloc::vec![BTreeMap::new(); p * q];
        for &(var, l, r) in terms {
            let (vr, vc) = self.shapes[var];
            if l.rows() != p || l.cols() != vr || r.rows() != vc || r.cols() != q {
                return Err(Error::DimensionMismatch { expected: (p, q), found: (l.rows(), r.cols()) });
            }
            let base = self.offsets[var];
            for (i, k, lik) in l.triplets() {
                for (ll, j, rlj) in r.triplets() {
                    let slot = block[i * q + j].entry(base + k * vc + ll).or_insert_with(Rational::zero);
                    *slot += lik.clone() * rlj.clone();
                }
            }
        }
        for (e, mut row) in block.into_iter().enumerate() {
            row.retain(|_, x| !x.is_zero());
            self.equations.push((row, rhs.get(e / q, e % q)));
        }
        Ok(())
    }

    fn coefficient_matrix(&self) -> SparseMat<Rational> {
        let mut m = SparseMat::zeros(self.equations.len(), self.width);
        for (r, (row, _)) in self.equations.iter().enumerate() {
            for (&c, x) in row {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    fn unpack(&self, v: &SparseVec<Rational>) -> Vec<Mat> {
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(rows, cols), &base)| {
                let mut m = Mat::zeros(rows, cols);
                for r in 0..rows {
                    for c in 0..cols {
                        m.set(r, c, v.get(base + r * cols + c));
                    }
                }
                m
            })
            .collect()
    }

    /// One solution, unknowns in registration order.
    pub fn solve(&self) -> Result<Option<Vec<Mat>>> {
        let m = self.coefficient_matrix();
        let b = SparseVec::from_entries(
            self.equations.len(),
            self.equations.iter().enumerate().map(|(i, (_, x))| (i, x.clone())),
        );
        Ok(solve(&m, &b)?.map(|x| self.unpack(&x)))
    }

    /// Basis of the homogeneous solution space; right-hand sides are ignored.
    pub fn homogeneous_basis(&self) -> Vec<Vec<Mat>> {
        nullspace(&self.coefficient_matrix()).iter().map(|v| self.unpack(v)).collect()
    }
}

/// Block matrix from a grid of blocks; every row of blocks must agree in
/// height and every column in width.
pub fn block(grid: &[&[&Mat]]) -> Result<Mat> {
    let heights: Vec<usize> = grid.iter().map(|row| row[0].rows()).collect();
    let widths: Vec<usize> = grid[0].iter().map(|b| b.cols()).collect();
    let mut out = Mat::zeros(heights.iter().sum(), widths.iter().sum());
    let mut r0 = 0;
    for (bi, row) in grid.iter().enumerate() {
        if row.len() != widths.len() {
            return Err(Error::Verification(format!("block row {bi} has {} blocks", row.len())));
        }
        let mut c0 = 0;
        for (bj, b) in row.iter().enumerate() {
            if b.rows() != heights[bi] || b.cols() != widths[bj] {
                return Err(Error::DimensionMismatch {
                    expected: (heights[bi], widths[bj]),
                    found: (b.rows(), b.cols()),
                });
            }
            for (r, c, x) in b.triplets() {
                out.set(r0 + r, c0 + c, x.clone());
            }
            c0 += widths[bj];
        }
        r0 += heights[bi];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn m(rows: Vec<Vec<i64>>) -> Mat {
        Mat::from_dense(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    #[test]
    fn sylvester_style_equation() {
        // Solve A·X + X·B = C and check by substitution.
        let a = m(alloc::vec![alloc::vec![1, 2], alloc::vec![0, 1]]);
        let b = m(alloc::vec![alloc::vec![3, 0], alloc::vec![1, 2]]);
        let c = m(alloc::vec![alloc::vec![1, 0], alloc::vec![5, -1]]);
        let id = Mat::identity(2);
        let mut sys = MatrixSystem::new();
        let x = sys.unknown(2, 2);
        sys.equation(&[(x, &a, &id), (x, &id, &b)], &c).unwrap();
        let sol = sys.solve().unwrap().unwrap();
        assert_eq!(&(&a * &sol[0]) + &(&sol[0] * &b), c);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let zero = Mat::zeros(1, 1);
        let one = Mat::identity(1);
        let mut sys = MatrixSystem::new();
        let x = sys.unknown(1, 1);
        sys.equation(&[(x, &zero, &one)], &one).unwrap();
        assert!(sys.solve().unwrap().is_none());
    }

    #[test]
    fn blocks_with_empty_pieces() {
        let a = m(alloc::vec![alloc::vec![1, 2]]);
        let e = Mat::zeros(1, 0);
        let out = block(&[&[&a, &e]]).unwrap();
        assert_eq!(out, a);
        assert!(block(&[&[&a], &[&Mat::identity(1)]]).is_err());
    }
}
