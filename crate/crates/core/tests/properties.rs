use proptest::prelude::*;
use verma_core::enright::index_sets;
use verma_core::exactla::{int, nullspace, rank, SparseMat};
use verma_core::hecke::Permutation;
use verma_core::heisenberg::{normal_form, rewrite, Gen, Strategy as Order};
use verma_core::Rational;

fn matrix() -> impl Strategy<Value = SparseMat<Rational>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
            SparseMat::from_dense(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|line| Permutation::from_one_line(&line).unwrap())
}

fn word() -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(prop_oneof![(1u32..4).prop_map(Gen::A), (1u32..4).prop_map(Gen::B)], 0..7)
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = nullspace(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!((&m * v).is_zero());
        }
    }

    #[test]
    fn index_sets_partition(n in 0u32..40, lambda in -12i64..=12) {
        let s = index_sets(n, lambda).unwrap();
        let mut all: Vec<i64> = s.i_prime.iter().chain(&s.i_double_prime).chain(&s.i_triple_prime).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, s.i);
    }

    #[test]
    fn permutations_form_a_group(a in permutation(5), b in permutation(5), c in permutation(5)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), Permutation::identity(5));
        prop_assert_eq!(a.inverse().length(), a.length());
    }

    #[test]
    fn both_rewrite_orders_agree(w in word()) {
        let left = rewrite(&w, Order::Leftmost).result;
        prop_assert_eq!(&left, &rewrite(&w, Order::Rightmost).result);
        prop_assert_eq!(&left, &normal_form(&w));
        prop_assert!(left.is_nonnegative());
    }
}
