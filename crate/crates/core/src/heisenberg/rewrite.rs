use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A generator `a_n` or `b_m`, `n, m ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A(u32),
    B(u32),
}

/// `b_{m_1} ⋯ b_{m_k} a_{n_1} ⋯ a_{n_r}` with both index lists weakly
/// increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    b: Vec<u32>,
    a: Vec<u32>,
}

impl NormalMonomial {
    pub fn new(mut b: Vec<u32>, mut a: Vec<u32>) -> Self {
        b.sort_unstable();
        a.sort_unstable();
        NormalMonomial { b, a }
    }

    pub fn b_indices(&self) -> &[u32] {
        &self.b
    }

    pub fn a_indices(&self) -> &[u32] {
        &self.a
    }

    pub fn is_one(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// `Σ m_i - Σ n_j`.
    pub fn degree(&self) -> i64 {
        self.b.iter().map(|&x| x as i64).sum::<i64>() - self.a.iter().map(|&x| x as i64).sum::<i64>()
    }

    pub fn word(&self) -> Vec<Gen> {
        self.b.iter().map(|&m| Gen::B(m)).chain(self.a.iter().map(|&n| Gen::A(n))).collect()
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for m in &self.b {
            write!(f, "b_{m}")?;
        }
        for n in &self.a {
            write!(f, "a_{n}")?;
        }
        Ok(())
    }
}

/// Integer combination of normal monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HElem {
    terms: BTreeMap<NormalMonomial, BigInt>,
}

impl HElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(NormalMonomial::default())
    }

    pub fn monomial(m: NormalMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, BigInt::one());
        e
    }

    pub fn a(n: u32) -> Self {
        normal_form(&[Gen::A(n)])
    }

    pub fn b(m: u32) -> Self {
        normal_form(&[Gen::B(m)])
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: BigInt) {
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, other: &HElem) -> HElem {
        &(self * other) - &(other * self)
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (j, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            match (j, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &HElem {
    type Output = HElem;
    fn add(self, rhs: &HElem) -> HElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &HElem {
    type Output = HElem;
    fn neg(self) -> HElem {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &HElem {
    type Output = HElem;
    fn sub(self, rhs: &HElem) -> HElem {
        self + &(-rhs)
    }
}

impl Mul for &HElem {
    type Output = HElem;
    fn mul(self, rhs: &HElem) -> HElem {
        let mut out = HElem::zero();
        for (x, c) in &self.terms {
            for (y, d) in &rhs.terms {
                let mut word = x.word();
                word.extend(y.word());
                out = &out + &normal_form(&word).scale(&(c * d));
            }
        }
        out
    }
}

/// Which `a_n b_m` factor to exchange first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Number of pairs with an `a` to the left of a `b`.
pub fn inversion_measure(word: &[Gen]) -> usize {
    let mut seen_a = 0;
    let mut count = 0;
    for g in word {
        match g {
            Gen::A(_) => seen_a += 1,
            Gen::B(_) => count += seen_a,
        }
    }
    count
}

/// Normal form with rewrite statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub result: HElem,
    pub steps: usize,
    /// Every step strictly lowered [`inversion_measure`].
    pub measure_decreased: bool,
}

/// Rewrite with `a_n b_m → b_m a_n + b_{m-1} a_{n-1}` (`a_0 = b_0 = 1`) and
/// sort the commuting blocks.
pub fn rewrite(word: &[Gen], strategy: Strategy) -> Rewrite {
    let mut result = HElem::zero();
    let mut steps = 0;
    let mut measure_decreased = true;
    let mut stack: Vec<(Vec<Gen>, BigInt)> = alloc::vec![(word.to_vec(), BigInt::one())];
    while let Some((w, c)) = stack.pop() {
        let mut exchanges =
            (0..w.len().saturating_sub(1)).filter(|&p| matches!((w[p], w[p + 1]), (Gen::A(_), Gen::B(_))));
        let pos = match strategy {
            Strategy::Leftmost => exchanges.next(),
            Strategy::Rightmost => exchanges.next_back(),
        };
        let Some(p) = pos else {
            let (mut b, mut a) = (Vec::new(), Vec::new());
            for g in w {
                match g {
                    Gen::A(n) => a.push(n),
                    Gen::B(m) => b.push(m),
                }
            }
            result.add_term(NormalMonomial::new(b, a), c);
            continue;
        };
        let (Gen::A(n), Gen::B(m)) = (w[p], w[p + 1]) else { unreachable!() };
        steps += 1;
        let before = inversion_measure(&w);
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        let mut lowered = w[..p].to_vec();
        if m > 1 {
            lowered.push(Gen::B(m - 1));
        }
        if n > 1 {
            lowered.push(Gen::A(n - 1));
        }
        lowered.extend_from_slice(&w[p + 2..]);
        measure_decreased &= inversion_measure(&swapped) < before && inversion_measure(&lowered) < before;
        stack.push((swapped, c.clone()));
        stack.push((lowered, c));
    }
    Rewrite { result, steps, measure_decreased }
}

pub fn normal_form(word: &[Gen]) -> HElem {
    rewrite(word, Strategy::Leftmost).result
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Gen::{A, B};

    #[test]
    fn relation_instances() {
        assert_eq!(normal_form(&[A(1), B(1)]).to_string(), "b_1a_1 + 1");
        assert_eq!(normal_form(&[A(2), B(2)]).to_string(), "b_2a_2 + b_1a_1");
        assert_eq!(normal_form(&[A(1), A(1), B(2)]).to_string(), "b_2a_1a_1 + 2*b_1a_1 + 1");
    }

    #[test]
    fn trivial_words() {
        assert_eq!(normal_form(&[]), HElem::one());
        let w = [B(3), B(1), B(2)];
        assert_eq!(normal_form(&w), HElem::monomial(NormalMonomial::new(alloc::vec![1, 2, 3], alloc::vec![])));
    }

    #[test]
    fn strategies_agree_and_terminate() {
        let w = [A(1), B(1), A(1), B(1)];
        let l = rewrite(&w, Strategy::Leftmost);
        let r = rewrite(&w, Strategy::Rightmost);
        assert_eq!(l.result, r.result);
        assert!(l.measure_decreased && r.measure_decreased);
    }

    #[test]
    fn commuting_families() {
        for n in 1..=6 {
            for m in 1..=6 {
                assert!(HElem::a(n).commutator(&HElem::a(m)).is_zero());
                assert!(HElem::b(n).commutator(&HElem::b(m)).is_zero());
            }
        }
    }
}
