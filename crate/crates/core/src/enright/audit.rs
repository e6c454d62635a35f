use alloc::vec::Vec;

use super::{casimir_value, index_sets, IndexSets};
use crate::exactla::{generalized_kernel, Rational};
use crate::sl2mod::{casimir, tensor_module};
use crate::{Error, Result};

/// One weight of the decomposition audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub mu: i64,
    /// `dim (L_n ⊗ V_0)_μ`, read off the module.
    pub lhs: usize,
    /// `Σ_{r∈I'} dim (T_r)_μ + Σ_{s∈I'''} dim (V_s)_μ`, by counting.
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionAudit {
    pub n: u32,
    pub depth: usize,
    pub index_sets: IndexSets,
    pub rows: Vec<AuditRow>,
}

impl DecompositionAudit {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }
}

fn verma_dim(top: i64, mu: i64) -> usize {
    usize::from(mu <= top && (top - mu) % 2 == 0)
}

/// Predicted `(t, dim, excess)` triples at weight `mu`: `T_r` contributes
/// `[μ ≤ r] + [μ ≤ -r-2]` with one Jordan pair below `-r-2`, `V_s`
/// contributes `[μ ≤ s]`.
fn predicted(sets: &IndexSets, mu: i64) -> Vec<(i64, usize, usize)> {
    let mut out = Vec::new();
    for &r in &sets.i_prime {
        let low = verma_dim(-r - 2, mu);
        let dim = verma_dim(r, mu) + low;
        if dim > 0 {
            out.push((r, dim, low));
        }
    }
    for &s in &sets.i_triple_prime {
        if verma_dim(s, mu) > 0 {
            out.push((s, 1, 0));
        }
    }
    out
}

pub fn decomposition_audit(n: u32, depth: usize) -> Result<DecompositionAudit> {
    if depth < n as usize + 2 {
        return Err(Error::OutOfRange(alloc::format!("audit depth {depth} is below n + 2 = {}", n + 2)));
    }
    let sets = index_sets(n, 0)?;
    let t = tensor_module(n, depth);
    let rows = t
        .weights()
        .into_iter()
        .map(|mu| AuditRow { mu, lhs: t.weight_space(mu).len(), rhs: predicted(&sets, mu).iter().map(|p| p.1).sum() })
        .collect();
    Ok(DecompositionAudit { n, depth, index_sets: sets, rows })
}

/// Generalized eigenspace of `Ω` for `c = t(t+2)` on one weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirBlock {
    pub t: i64,
    pub c: i64,
    pub predicted_dim: usize,
    pub predicted_excess: usize,
    pub kernel_dim: usize,
    /// `dim ker(Ω - c)^2 - dim ker(Ω - c)`: the rank of `Ω - c` on the block.
    pub excess_dim: usize,
    /// `ker(Ω - c)^2 = ker(Ω - c)^3`, so `(Ω - c)^2` kills the block.
    pub two_step: bool,
}

impl CasimirBlock {
    pub fn dim(&self) -> usize {
        self.kernel_dim + self.excess_dim
    }

    pub fn matches(&self) -> bool {
        self.two_step && self.dim() == self.predicted_dim && self.excess_dim == self.predicted_excess
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirBlocks {
    pub n: u32,
    pub mu: i64,
    pub weight_dim: usize,
    pub blocks: Vec<CasimirBlock>,
}

impl CasimirBlocks {
    /// The predicted generalized eigenspaces fill the weight space, so no
    /// other eigenvalue occurs.
    pub fn complete(&self) -> bool {
        self.blocks.iter().map(CasimirBlock::dim).sum::<usize>() == self.weight_dim
    }

    pub fn passed(&self) -> bool {
        self.complete() && self.blocks.iter().all(CasimirBlock::matches)
    }
}

pub fn casimir_blocks(n: u32, mu: i64, depth: usize) -> Result<CasimirBlocks> {
    let n_i = n as i64;
    if mu > n_i || (n_i - mu) % 2 != 0 || ((n_i - mu) / 2) as usize > depth {
        return Err(Error::OutOfRange(alloc::format!("weight {mu} is not in the depth-{depth} slice")));
    }
    let sets = index_sets(n, 0)?;
    let t = tensor_module(n, depth);
    let space = t.weight_space(mu);
    let omega = casimir(&t).select(&space, &space);
    let mut blocks = Vec::new();
    for (tt, predicted_dim, predicted_excess) in predicted(&sets, mu) {
        let c = casimir_value(tt);
        let shifted = omega.shift(&Rational::from_integer(c.into()))?;
        let two = generalized_kernel(&shifted, 2)?;
        let three = generalized_kernel(&shifted, 3)?;
        blocks.push(CasimirBlock {
            t: tt,
            c,
            predicted_dim,
            predicted_excess,
            kernel_dim: two.kernel.len(),
            excess_dim: two.excess.len(),
            two_step: three.dim() == two.dim(),
        });
    }
    Ok(CasimirBlocks { n, mu, weight_dim: space.len(), blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn audit_rows_for_n2() {
        let audit = decomposition_audit(2, 6).unwrap();
        assert!(audit.passed());
        let row = |mu| audit.rows.iter().find(|r| r.mu == mu).unwrap().clone();
        assert_eq!(row(-4), AuditRow { mu: -4, lhs: 3, rhs: 3 });
        assert_eq!(row(2), AuditRow { mu: 2, lhs: 1, rhs: 1 });
    }

    #[test]
    fn audit_for_n0_is_v0() {
        let audit = decomposition_audit(0, 5).unwrap();
        assert!(audit.rows.iter().all(|r| r.lhs == 1 && r.rhs == 1));
        assert!(decomposition_audit(3, 4).is_err());
    }

    #[test]
    fn audit_sweep() {
        for n in 0..=8 {
            assert!(decomposition_audit(n, 2 * n as usize + 10).unwrap().passed(), "n={n}");
        }
    }

    #[test]
    fn blocks_for_n2() {
        let b = casimir_blocks(2, -2, 6).unwrap();
        assert!(b.passed());
        let zero = b.blocks.iter().find(|x| x.c == 0).unwrap();
        assert_eq!((zero.dim(), zero.excess_dim), (2, 1));
        let eight = b.blocks.iter().find(|x| x.c == 8).unwrap();
        assert_eq!((eight.dim(), eight.excess_dim), (1, 0));

        let b = casimir_blocks(2, 2, 6).unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert_eq!((b.blocks[0].c, b.blocks[0].dim()), (8, 1));

        let b = casimir_blocks(0, 0, 3).unwrap();
        assert_eq!((b.blocks[0].c, b.blocks[0].kernel_dim, b.blocks[0].excess_dim), (0, 1, 0));
    }

    #[test]
    fn blocks_sweep() {
        for n in 0..=6u32 {
            let depth = n as usize + 6;
            for level in 0..=depth {
                let mu = n as i64 - 2 * level as i64;
                assert!(casimir_blocks(n, mu, depth).unwrap().passed(), "n={n} mu={mu}");
            }
        }
    }
}
