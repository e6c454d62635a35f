use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::field::Field;
use super::sparse::{SparseMat, SparseVec};
use crate::{Error, Result};

type Row<T> = BTreeMap<usize, T>;

/// Gauss–Jordan elimination restricted to pivot columns `< pivot_limit`.
///
/// Rows are combined by cross multiplication (`p·row − a·pivot_row`), which
/// keeps rational input integral, and then rescaled through
/// [`Field::normalize_row`]. Pivots are taken at the lowest column, and within
/// a column at the lowest remaining row. Returns the reduced rows and the
/// pivot column of each leading row.
fn reduce<T: Field>(mut rows: Vec<Row<T>>, pivot_limit: usize) -> (Vec<Row<T>>, Vec<usize>) {
    let mut pivots = Vec::new();
    for col in 0..pivot_limit {
        let done = pivots.len();
        let Some(found) = (done..rows.len()).find(|&r| rows[r].contains_key(&col)) else {
            continue;
        };
        rows.swap(done, found);
        normalize(&mut rows[done], col);
        let pivot_row = rows[done].clone();
        let p = pivot_row[&col].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j == done {
                continue;
            }
            let Some(a) = row.get(&col).cloned() else {
                continue;
            };
            let mut combined: Row<T> = BTreeMap::new();
            for (&c, x) in row.iter() {
                combined.insert(c, x.clone() * p.clone());
            }
            for (&c, y) in &pivot_row {
                let term = a.clone() * y.clone();
                let v = match combined.remove(&c) {
                    Some(x) => x - term,
                    None => -term,
                };
                if !v.is_zero() {
                    combined.insert(c, v);
                }
            }
            let lead = if j < done { pivots[j] } else { combined.keys().next().copied().unwrap_or(0) };
            normalize(&mut combined, lead);
            *row = combined;
        }
        pivots.push(col);
    }
    (rows, pivots)
}

fn normalize<T: Field>(row: &mut Row<T>, lead: usize) {
    if row.is_empty() {
        return;
    }
    let mut flat: Vec<(usize, T)> = core::mem::take(row).into_iter().collect();
    T::normalize_row(&mut flat, lead);
    *row = flat.into_iter().filter(|(_, x)| !x.is_zero()).collect();
}

fn rows_of<T: Field>(m: &SparseMat<T>) -> Vec<Row<T>> {
    (0..m.rows()).map(|r| m.row_map(r).clone()).collect()
}

/// Basis of `ker(m)`, one vector per free column in increasing column order.
///
/// Over ℚ each vector is scaled to coprime integers with a positive first
/// nonzero coordinate; over ℚ(q) its first nonzero coordinate is 1.
pub fn nullspace<T: Field>(m: &SparseMat<T>) -> Vec<SparseVec<T>> {
    let cols = m.cols();
    let (rows, pivots) = reduce(rows_of(m), cols);
    let mut is_pivot = alloc::vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = alloc::vec![T::zero(); cols];
            x[free] = T::one();
            for (row, &pc) in rows.iter().zip(pivots.iter()) {
                if let Some(a) = row.get(&free) {
                    x[pc] = -(a.clone() / row[&pc].clone());
                }
            }
            T::normalize_kernel_vector(&mut x);
            SparseVec::from_dense(x)
        })
        .collect()
}

pub fn rank<T: Field>(m: &SparseMat<T>) -> usize {
    reduce(rows_of(m), m.cols()).1.len()
}

/// Some `x` with `m·x = b`, or `None` when `b` is outside the image.
/// Free variables are set to zero.
pub fn solve<T: Field>(m: &SparseMat<T>, b: &SparseVec<T>) -> Result<Option<SparseVec<T>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch { expected: (m.rows(), m.cols()), found: (b.len(), 1) });
    }
    let aug = m.cols();
    let mut rows = rows_of(m);
    for (r, x) in b.iter() {
        rows[r].insert(aug, x.clone());
    }
    let (rows, pivots) = reduce(rows, aug);
    if rows[pivots.len()..].iter().any(|row| !row.is_empty()) {
        return Ok(None);
    }
    let mut x = SparseVec::zeros(aug);
    for (row, &pc) in rows.iter().zip(pivots.iter()) {
        if let Some(rhs) = row.get(&aug) {
            x.set(pc, rhs.clone() / row[&pc].clone());
        }
    }
    Ok(Some(x))
}

/// Kernel of `m` together with vectors completing it to a basis of
/// `ker(m^power)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedKernel<T> {
    pub kernel: Vec<SparseVec<T>>,
    pub excess: Vec<SparseVec<T>>,
}

impl<T: Field> GeneralizedKernel<T> {
    pub fn dim(&self) -> usize {
        self.kernel.len() + self.excess.len()
    }
}

pub fn generalized_kernel<T: Field>(m: &SparseMat<T>, power: u32) -> Result<GeneralizedKernel<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if power == 0 {
        return Err(Error::OutOfRange("generalized kernel power must be positive".into()));
    }
    let kernel = nullspace(m);
    let wide = nullspace(&m.pow(power)?);
    let mut basis: Vec<Row<T>> = kernel.iter().map(|v| v.iter().map(|(i, x)| (i, x.clone())).collect()).collect();
    let mut current = reduce(basis.clone(), m.cols()).1.len();
    let mut excess = Vec::new();
    for v in wide {
        basis.push(v.iter().map(|(i, x)| (i, x.clone())).collect());
        let r = reduce(basis.clone(), m.cols()).1.len();
        if r > current {
            current = r;
            excess.push(v);
        } else {
            basis.pop();
        }
    }
    Ok(GeneralizedKernel { kernel, excess })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, RatFunc, Rational};
    use alloc::vec;
    use num_traits::Zero;

    fn mat(rows: &[&[i64]]) -> SparseMat<Rational> {
        SparseMat::from_dense(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    fn vecq(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(xs.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn rank_one_kernel() {
        // spanned by (−2, 1); the canonical representative has a positive lead
        assert_eq!(nullspace(&mat(&[&[1, 2], &[2, 4]])), vec![vecq(&[2, -1])]);
    }

    #[test]
    fn injective_has_trivial_kernel() {
        assert!(nullspace(&SparseMat::<Rational>::identity(3)).is_empty());
    }

    #[test]
    fn solve_examples() {
        let id = SparseMat::<Rational>::identity(3);
        let b = vecq(&[4, -1, 7]);
        assert_eq!(solve(&id, &b).unwrap(), Some(b.clone()));
        let m = mat(&[&[1, 2], &[2, 4]]);
        let x = solve(&m, &vecq(&[1, 2])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vecq(&[1, 2]));
        assert_eq!(solve(&m, &vecq(&[1, 1])).unwrap(), None);
        assert!(matches!(solve(&m, &vecq(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn jordan_block_excess() {
        let g = generalized_kernel(&mat(&[&[0, 1], &[0, 0]]), 2).unwrap();
        assert_eq!(g.kernel, vec![vecq(&[1, 0])]);
        assert_eq!(g.excess, vec![vecq(&[0, 1])]);
        let d = generalized_kernel(&mat(&[&[0, 0], &[0, 5]]), 2).unwrap();
        assert_eq!(d.kernel, vec![vecq(&[1, 0])]);
        assert!(d.excess.is_empty());
        assert!(matches!(generalized_kernel(&mat(&[&[1, 2, 3]]), 2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn casimir_block_on_weight_minus_two() {
        // Ω on weight −2 of L_2 ⊗ V_0, columns v0⊗w2, v1⊗w1, v2⊗w0.
        let omega = mat(&[&[-8, 8, 0], &[-8, 8, 4], &[0, 0, 8]]);
        let g = generalized_kernel(&omega, 2).unwrap();
        assert_eq!(g.kernel, vec![vecq(&[1, 1, 0])]);
        assert_eq!(g.excess.len(), 1);
        let v = &g.excess[0];
        assert!(!omega.mul_vec(v).is_zero());
        assert!((&omega * &omega).mul_vec(v).is_zero());
    }

    #[test]
    fn kernel_over_rational_functions() {
        // [[q, 1], [q^2, q]] has kernel spanned by (1, -q).
        let q = RatFunc::q();
        let m = SparseMat::from_dense(vec![
            vec![q.clone(), RatFunc::from_poly(crate::exactla::Poly::constant(int(1)))],
            vec![q.clone() * q.clone(), q.clone()],
        ]);
        let k = nullspace(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_zero());
        assert_eq!(k[0].get(0), RatFunc::from_poly(crate::exactla::Poly::constant(int(1))));
        assert_eq!(k[0].get(1), -q);
        assert!(!k[0].get(1).is_zero());
    }
}
