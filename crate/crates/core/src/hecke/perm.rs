use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
///
/// Products compose right to left: `(u * w)(j) = u(w(j))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let n = line.len();
        let mut seen = alloc::vec![false; n];
        for &x in line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::OutOfRange(alloc::format!("{line:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: line.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// The simple transposition `s_i = (i i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(alloc::format!("s_{i} does not exist in S_{n}")));
        }
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `(j k)`, 1-based.
    pub fn transposition(n: usize, j: usize, k: usize) -> Result<Self> {
        if j == 0 || k == 0 || j > n || k > n || j == k {
            return Err(Error::OutOfRange(alloc::format!("({j} {k}) is not a transposition of S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(j - 1, k - 1);
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutations of different sizes");
        Permutation { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u8; self.size()];
        for (j, &x) in self.images.iter().enumerate() {
            images[x as usize] = j as u8;
        }
        Permutation { images }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        (0..v.len()).map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count()).sum()
    }

    fn position(&self, value: usize) -> usize {
        self.images.iter().position(|&x| x as usize == value).unwrap()
    }

    /// `ℓ(s_i w) < ℓ(w)`: the value `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position(i) < self.position(i - 1)
    }

    /// `s_i ∘ w`: swap the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&x| match x as usize + 1 {
                v if v == i => i as u8,
                v if v == i + 1 => (i - 1) as u8,
                _ => x,
            })
            .collect();
        Permutation { images }
    }

    /// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.size()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Every element of `S_n`, in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Self::identity(n).images;
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(a) = (0..n.saturating_sub(1)).rev().find(|&a| current[a] < current[a + 1]) else {
                return out;
            };
            let b = (a + 1..n).rev().find(|&b| current[b] > current[a]).unwrap();
            current.swap(a, b);
            current[a + 1..].reverse();
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, x) in self.one_line().iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_words() {
        let w = Permutation::from_one_line(&[3, 2, 1]).unwrap();
        assert_eq!(w.length(), 3);
        let word = w.reduced_word();
        assert_eq!(word.len(), 3);
        let rebuilt = word.iter().rev().fold(Permutation::identity(3), |acc, &i| acc.left_mul_simple(i));
        assert_eq!(rebuilt, w);
    }

    #[test]
    fn counts() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
        let total: usize = Permutation::all(4).iter().map(Permutation::length).sum();
        assert_eq!(total, 72);
    }

    #[test]
    fn left_multiplication_matches_compose() {
        for w in Permutation::all(4) {
            for i in 1..4 {
                let s = Permutation::simple(4, i).unwrap();
                assert_eq!(s.compose(&w), w.left_mul_simple(i));
                assert_eq!(w.has_left_descent(i), w.left_mul_simple(i).length() < w.length());
            }
            assert_eq!(w.compose(&w.inverse()), Permutation::identity(4));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }
}
