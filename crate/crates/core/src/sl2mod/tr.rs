use alloc::vec::Vec;

use num_traits::Zero;

use super::{casimir, q, BasisLabel, GenKind, ModuleKind, TruncatedModule};
use crate::enright::{highest_weight_vector, index_sets, projective_generator, tensor_module};
use crate::exactla::{rank, solve, Rational, SparseMat, SparseVec};
use crate::{Error, Result};

/// `T_r` realized inside `L_n ⊗ V_0`, plus the structural checks made along
/// the way.
#[derive(Clone, Debug)]
pub struct TrStructure {
    pub r: u32,
    pub n: u32,
    pub module: TruncatedModule,
    /// `span{f^k u_r}` is stable and `e·f^k u_r = k(r-k+1) f^{k-1} u_r`.
    pub submodule_is_verma: bool,
    /// Modulo that span, `e·f^k a ≡ k(-r-1-k) f^{k-1} a`.
    pub quotient_is_verma: bool,
    /// `κ` in `e·a = κ f^r u_r`; reported, not prescribed.
    pub kappa: Option<Rational>,
    pub h_on_generator: bool,
    /// `e^{r+2}·a = 0`.
    pub e_power_kills_generator: bool,
    /// `(Ω - r(r+2))^2 = 0` on the margin-4 interior.
    pub casimir_nilpotent: bool,
    /// `(Ω - r(r+2))·a ≠ 0`.
    pub generator_not_eigen: bool,
    /// `e(f^i e^j) = f^i e^{j+1} + (2ij - i² - i(m+1)) f^{i-1} e^j` on
    /// `f^i e^j a`, with `m = r`.
    pub presentation_with_r: bool,
    /// Same identity with `m = n`; expected to fail unless `n = r`.
    pub presentation_with_n: bool,
}

impl TrStructure {
    pub fn passed(&self) -> bool {
        self.submodule_is_verma
            && self.quotient_is_verma
            && self.h_on_generator
            && self.e_power_kills_generator
            && self.casimir_nilpotent
            && self.generator_not_eigen
            && self.presentation_with_r
    }
}

pub fn build_tr(r: u32, n: u32, depth: usize) -> Result<TruncatedModule> {
    Ok(tr_structure(r, n, depth)?.module)
}

/// Realize `T_r` by levels: `f^ℓ u_r` at level `ℓ` and `f^{ℓ-r-1} a_{-r-2}`
/// at level `ℓ ≥ r + 1`; express `e` and `f` back in that spanning set.
pub fn tr_structure(r: u32, n: u32, depth: usize) -> Result<TrStructure> {
    let ri = r as i64;
    if !index_sets(n, 0)?.i_prime.contains(&ri) {
        return Err(Error::NotInIndexSet { n: n as i64, s: ri });
    }
    let hwv = highest_weight_vector(n, ri)?;
    let gen = projective_generator(n, ri)?;
    let base = ((n - r) / 2) as usize;
    let ambient = tensor_module(n, base + depth + 1);
    let realize = |coords: &alloc::collections::BTreeMap<(usize, usize), Rational>| {
        ambient.vector(coords.iter().map(|(&(i, k), x)| (BasisLabel::Tensor(i, k), x.clone())))
    };
    let u = realize(&hwv.p_vector())?;
    let a = realize(&gen.final_vector())?;

    // by_level[ℓ] lists (label, ambient vector)
    let a_level = r as usize + 1;
    let mut by_level: Vec<Vec<(BasisLabel, SparseVec<Rational>)>> = Vec::new();
    let (mut cu, mut ca) = (u.clone(), a.clone());
    for level in 0..=depth + 1 {
        let mut here = alloc::vec![(BasisLabel::ProjGen(GenKind::U, level), cu.clone())];
        if level >= a_level {
            here.push((BasisLabel::ProjGen(GenKind::A, level - a_level), ca.clone()));
        }
        by_level.push(here);
        if level <= depth {
            cu = ambient.apply_f(&cu)?;
            if level >= a_level {
                ca = ambient.apply_f(&ca)?;
            }
        }
        if level + 1 == a_level {
            ca = a.clone();
        }
    }
    let mut basis = Vec::new();
    let mut levels = Vec::new();
    let mut offsets = Vec::new();
    for (level, here) in by_level.iter().enumerate() {
        offsets.push(basis.len());
        let cols: Vec<_> = here.iter().map(|x| x.1.clone()).collect();
        if rank(&SparseMat::from_columns(ambient.dim(), &cols)) != cols.len() {
            return Err(Error::Inconsistent(alloc::format!("T_{r} spanning vectors at level {level} are dependent")));
        }
        for (label, _) in here {
            basis.push(*label);
            levels.push(level);
        }
    }
    let slice = levels.iter().filter(|&&l| l <= depth).count();

    // coordinates of an ambient vector in the level-`level` spanning set
    let express = |v: &SparseVec<Rational>, level: usize| -> Result<Vec<(usize, Rational)>> {
        if v.is_zero() {
            return Ok(Vec::new());
        }
        let here = &by_level[level];
        let cols: Vec<_> = here.iter().map(|x| x.1.clone()).collect();
        let x = solve(&SparseMat::from_columns(ambient.dim(), &cols), v)?
            .ok_or_else(|| Error::Inconsistent(alloc::format!("image leaves T_{r} at level {level}")))?;
        Ok(x.iter().map(|(j, c)| (offsets[level] + j, c.clone())).collect())
    };
    let mut act_e = SparseMat::zeros(slice, slice);
    let mut act_f = SparseMat::zeros(basis.len(), slice);
    for col in 0..slice {
        let level = levels[col];
        let v = &by_level[level][col - offsets[level]].1;
        let ev = ambient.apply_e(v)?;
        if level == 0 {
            if !ev.is_zero() {
                return Err(Error::Inconsistent("e does not kill u_r".into()));
            }
        } else {
            for (row, c) in express(&ev, level - 1)? {
                act_e.set(row, col, c);
            }
        }
        for (row, c) in express(&ambient.apply_f(v)?, level + 1)? {
            act_f.set(row, col, c);
        }
    }
    let module = TruncatedModule::assemble(ModuleKind::Tr { r, n }, depth, false, basis, levels, act_e, act_f);

    // structure of the two chains
    let idx = |kind, k| module.index_of(BasisLabel::ProjGen(kind, k));
    let mut submodule_is_verma = true;
    let mut quotient_is_verma = true;
    for col in 0..slice {
        let label = module.basis()[col];
        let e_col = module.act_e().column(col);
        let f_col = module.act_f().column(col);
        match label {
            BasisLabel::ProjGen(GenKind::U, l) => {
                let mut expect_e = SparseVec::zeros(slice);
                if l > 0 {
                    expect_e.set(idx(GenKind::U, l - 1).unwrap(), q(l as i64 * (ri - l as i64 + 1)));
                }
                let expect_f = SparseVec::unit(module.ext_dim(), idx(GenKind::U, l + 1).unwrap());
                submodule_is_verma &= e_col == expect_e && f_col == expect_f;
            }
            BasisLabel::ProjGen(GenKind::A, k) => {
                let kk = k as i64;
                let coeff = if k == 0 { Rational::zero() } else { e_col.get(idx(GenKind::A, k - 1).unwrap()) };
                let other_a = e_col
                    .iter()
                    .any(|(row, _)| matches!(module.basis()[row], BasisLabel::ProjGen(GenKind::A, j) if j + 1 != k));
                let expect_f = SparseVec::unit(module.ext_dim(), idx(GenKind::A, k + 1).unwrap());
                quotient_is_verma &= coeff == q(kk * (-ri - 1 - kk)) && !other_a && f_col == expect_f;
            }
            _ => unreachable!(),
        }
    }
    let kappa =
        idx(GenKind::A, 0).filter(|&i| i < slice).map(|i| module.act_e().get(idx(GenKind::U, r as usize).unwrap(), i));

    let h_on_generator = ambient.apply_h(&a)? == a.scale(&q(-ri - 2));
    let mut x = a.clone();
    for _ in 0..r + 2 {
        x = ambient.apply_e(&x)?;
    }
    let e_power_kills_generator = x.is_zero();

    let c = q(ri * (ri + 2));
    let shifted = casimir(&module).shift(&c)?;
    let casimir_nilpotent = module.interior(4).indices.iter().all(|&i| {
        let col = shifted.column(i);
        shifted.mul_vec(&col).is_zero()
    });
    let generator_not_eigen = match idx(GenKind::A, 0).filter(|&i| i < slice) {
        Some(i) => !shifted.column(i).is_zero(),
        None => false,
    };

    let presentation = |m: i64| -> Result<bool> {
        // x[i][j] = f^i e^j a for j ≤ r + 1, within the ambient slice
        let max_i = depth.min(4);
        let mut powers_e = alloc::vec![a.clone()];
        for _ in 0..=r + 1 {
            let next = ambient.apply_e(powers_e.last().unwrap())?;
            powers_e.push(next);
        }
        let mut grid: Vec<Vec<SparseVec<Rational>>> = Vec::new();
        for ej in &powers_e {
            let mut col = alloc::vec![ej.clone()];
            for _ in 0..max_i {
                let next = ambient.apply_f(col.last().unwrap())?;
                col.push(next);
            }
            grid.push(col);
        }
        let mut ok = true;
        for j in 0..=r as usize + 1 {
            for i in 0..=max_i {
                let lhs = ambient.apply_e(&grid[j][i])?;
                let mut rhs = grid[j + 1][i].clone();
                if i > 0 {
                    let (ii, jj) = (i as i64, j as i64);
                    rhs = &rhs + &grid[j][i - 1].scale(&q(2 * ii * jj - ii * ii - ii * (m + 1)));
                }
                ok &= lhs == rhs;
            }
        }
        Ok(ok)
    };
    let presentation_with_r = presentation(ri)?;
    let presentation_with_n = presentation(n as i64)?;

    Ok(TrStructure {
        r,
        n,
        module,
        submodule_is_verma,
        quotient_is_verma,
        kappa,
        h_on_generator,
        e_power_kills_generator,
        casimir_nilpotent,
        generator_not_eigen,
        presentation_with_r,
        presentation_with_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::sl2mod::verify_category_i;

    #[test]
    fn t0_inside_l2() {
        let st = tr_structure(0, 2, 10).unwrap();
        assert!(st.passed(), "{st:?}");
        assert!(!st.presentation_with_n);
        let m = &st.module;
        // weight multiplicities: 1 at weight 0, 2 below
        assert_eq!(m.weight_space(0).len(), 1);
        assert_eq!(m.weight_space(-2).len(), 2);
        assert_eq!(m.weight_space(-20).len(), 2);
        // u_0 = v_0⊗w_1 (p = [1]) and a = 2 v_0⊗w_2 + v_1⊗w_1 give e·a = -2 u_0
        assert_eq!(st.kappa, Some(int(-2)));
        assert!(verify_category_i(m).unwrap().all());
    }

    #[test]
    fn larger_covers() {
        for (r, n) in [(0u32, 4u32), (2, 4), (1, 3), (2, 6)] {
            let st = tr_structure(r, n, 8).unwrap();
            assert!(st.passed(), "r={r} n={n}");
            assert!(st.kappa.is_some_and(|k| !k.is_zero()));
        }
    }

    #[test]
    fn r_outside_i_prime() {
        assert!(matches!(tr_structure(4, 4, 5), Err(Error::NotInIndexSet { .. })));
    }
}
