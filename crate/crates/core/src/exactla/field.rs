use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Scalars the sparse kernels can eliminate over.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Rescale an elimination row by a nonzero scalar so that entries stay
    /// small. `lead` is the column whose entry must remain nonzero.
    fn normalize_row(row: &mut [(usize, Self)], lead: usize);

    /// Bring a kernel vector into canonical form.
    fn normalize_kernel_vector(v: &mut [Self]);
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Scale a rational vector to integers with gcd 1 and a positive first
/// nonzero entry. Returns the factor that was applied.
pub fn primitive_integer(v: &mut [Rational]) -> Rational {
    let mut lcm = BigInt::one();
    for x in v.iter().filter(|x| !x.is_zero()) {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in v.iter().filter(|x| !x.is_zero()) {
        let scaled = x.numer() * (&lcm / x.denom());
        gcd = gcd.gcd(&scaled);
    }
    if gcd.is_zero() {
        return Rational::one();
    }
    let mut factor = Rational::new(lcm, gcd);
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            factor = -factor;
        }
    }
    for x in v.iter_mut() {
        *x = &*x * &factor;
    }
    factor
}

impl Field for Rational {
    fn normalize_row(row: &mut [(usize, Self)], lead: usize) {
        let mut values: Vec<Rational> = row.iter().map(|(_, x)| x.clone()).collect();
        primitive_integer(&mut values);
        let lead_positive =
            row.iter().zip(values.iter()).find(|((c, _), _)| *c == lead).map(|(_, x)| x.is_positive()).unwrap_or(true);
        for ((_, x), y) in row.iter_mut().zip(values) {
            *x = if lead_positive { y } else { -y };
        }
    }

    fn normalize_kernel_vector(v: &mut [Self]) {
        primitive_integer(v);
    }
}
