use alloc::vec::Vec;

use super::{q, BasisLabel, ModuleKind, TruncatedModule};
use crate::exactla::SparseMat;

type Rule<'a> = &'a dyn Fn(BasisLabel) -> Vec<(BasisLabel, i64)>;

/// Assemble a module from integer action rules on labels. `labels` must list
/// every vector of level `≤ depth + 1` (or the whole module when `finite`),
/// sorted by level.
fn from_rules(
    kind: ModuleKind,
    depth: usize,
    finite: bool,
    labels: Vec<(BasisLabel, usize)>,
    e_rule: Rule<'_>,
    f_rule: Rule<'_>,
) -> TruncatedModule {
    let (basis, levels): (Vec<_>, Vec<_>) = labels.into_iter().unzip();
    let slice = levels.iter().filter(|&&l| l <= depth).count();
    let position = |label: BasisLabel| {
        basis.iter().position(|&b| b == label).unwrap_or_else(|| panic!("{label:?} missing from the basis"))
    };
    let mut act_e = SparseMat::zeros(slice, slice);
    let mut act_f = SparseMat::zeros(basis.len(), slice);
    for (col, &label) in basis[..slice].iter().enumerate() {
        for (target, c) in e_rule(label) {
            act_e.add_at(position(target), col, q(c));
        }
        for (target, c) in f_rule(label) {
            act_f.add_at(position(target), col, q(c));
        }
    }
    TruncatedModule::assemble(kind, depth, finite, basis, levels, act_e, act_f)
}

/// The irreducible `(n+1)`-dimensional module: `f·v_i = (i+1)v_{i+1}`,
/// `e·v_i = (n-i+1)v_{i-1}`, `h·v_i = (n-2i)v_i`.
pub fn build_ln(n: u32) -> TruncatedModule {
    let n = n as usize;
    let labels = (0..=n).map(|i| (BasisLabel::Fin(i), i)).collect();
    let e = |b: BasisLabel| match b {
        BasisLabel::Fin(i) if i > 0 => alloc::vec![(BasisLabel::Fin(i - 1), (n - i + 1) as i64)],
        _ => Vec::new(),
    };
    let f = |b: BasisLabel| match b {
        BasisLabel::Fin(i) if i < n => alloc::vec![(BasisLabel::Fin(i + 1), (i + 1) as i64)],
        _ => Vec::new(),
    };
    from_rules(ModuleKind::Ln { n: n as u32 }, n, true, labels, &e, &f)
}

/// `V_λ` on `ℚ[x]` with `f = x`, `e = -x∂² + λ∂`, `h = -2x∂ + λ`, i.e.
/// `e·w_k = (λk - k(k-1)) w_{k-1}`.
pub fn build_verma(lambda: i64, depth: usize) -> TruncatedModule {
    let labels = (0..=depth + 1).map(|k| (BasisLabel::Poly(k), k)).collect();
    let e = |b: BasisLabel| match b {
        BasisLabel::Poly(k) if k > 0 => {
            let k = k as i64;
            alloc::vec![(BasisLabel::Poly(k as usize - 1), lambda * k - k * (k - 1))]
        }
        _ => Vec::new(),
    };
    let f = |b: BasisLabel| match b {
        BasisLabel::Poly(k) => alloc::vec![(BasisLabel::Poly(k + 1), 1)],
        _ => Vec::new(),
    };
    from_rules(ModuleKind::Verma { lambda }, depth, false, labels, &e, &f)
}

/// `L_n ⊗ V_0` on `v_i ⊗ w_k`, with level `i + k`, acting through
/// `Δ(x) = x ⊗ 1 + 1 ⊗ x`.
pub fn tensor_module(n: u32, depth: usize) -> TruncatedModule {
    let n = n as usize;
    let mut labels = Vec::new();
    for level in 0..=depth + 1 {
        for i in 0..=n.min(level) {
            labels.push((BasisLabel::Tensor(i, level - i), level));
        }
    }
    let e = |b: BasisLabel| {
        let mut out = Vec::new();
        if let BasisLabel::Tensor(i, k) = b {
            if i > 0 {
                out.push((BasisLabel::Tensor(i - 1, k), (n - i + 1) as i64));
            }
            if k > 1 {
                out.push((BasisLabel::Tensor(i, k - 1), -((k * (k - 1)) as i64)));
            }
        }
        out
    };
    let f = |b: BasisLabel| {
        let mut out = Vec::new();
        if let BasisLabel::Tensor(i, k) = b {
            if i < n {
                out.push((BasisLabel::Tensor(i + 1, k), (i + 1) as i64));
            }
            out.push((BasisLabel::Tensor(i, k + 1), 1));
        }
        out
    };
    from_rules(ModuleKind::TensorLnV0 { n: n as u32 }, depth, false, labels, &e, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::SparseVec;
    use crate::sl2mod::{casimir, q};
    use BasisLabel::*;

    fn basis_vec(m: &TruncatedModule, label: BasisLabel) -> SparseVec<crate::Rational> {
        m.vector([(label, q(1))]).unwrap()
    }

    #[test]
    fn ln_action_n2() {
        let l2 = build_ln(2);
        let v1 = basis_vec(&l2, Fin(1));
        assert_eq!(l2.apply_f(&v1).unwrap(), l2.vector([(Fin(2), q(2))]).unwrap());
        assert_eq!(l2.apply_e(&v1).unwrap(), l2.vector([(Fin(0), q(2))]).unwrap());
        assert!(l2.apply_h(&v1).unwrap().is_zero());
        assert!(l2.apply_f(&basis_vec(&l2, Fin(2))).unwrap().is_zero());
    }

    #[test]
    fn l0_is_trivial() {
        let l0 = build_ln(0);
        assert_eq!(l0.dim(), 1);
        assert!(l0.act_e().is_zero() && l0.act_f().is_zero() && l0.act_h().is_zero());
    }

    #[test]
    fn verma_zero_examples() {
        let v = build_verma(0, 6);
        assert_eq!(v.apply_e(&basis_vec(&v, Poly(2))).unwrap(), v.vector([(Poly(1), q(-2))]).unwrap());
        assert_eq!(v.apply_h(&basis_vec(&v, Poly(3))).unwrap(), v.vector([(Poly(3), q(-6))]).unwrap());
        assert!(casimir(&v).mul_vec(&basis_vec(&v, Poly(0))).is_zero());
    }

    #[test]
    fn tensor_examples() {
        let n = 3;
        let t = tensor_module(n, 6);
        let f00 = t.apply_f(&basis_vec(&t, Tensor(0, 0))).unwrap();
        assert_eq!(f00, t.vector([(Tensor(1, 0), q(1)), (Tensor(0, 1), q(1))]).unwrap());
        let h12 = t.apply_h(&basis_vec(&t, Tensor(1, 2))).unwrap();
        assert_eq!(h12, t.vector([(Tensor(1, 2), q(n as i64 - 2 - 4))]).unwrap());
        let e11 = t.apply_e(&basis_vec(&t, Tensor(1, 1))).unwrap();
        assert_eq!(e11, t.vector([(Tensor(0, 1), q(n as i64))]).unwrap());
    }

    #[test]
    fn tensor_weight_spaces_are_complete() {
        let t = tensor_module(2, 5);
        assert_eq!(t.weight_space(-2).len(), 3);
        assert_eq!(t.weight_space(2).len(), 1);
        assert_eq!(t.dim(), 1 + 2 + 3 * 4);
    }
}
