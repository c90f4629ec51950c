//! Scalar abstraction for the exact kernel.
//!
//! Every decision procedure in this crate (linear programming, cell
//! enumeration, membership tests) runs over an ordered field with exact
//! arithmetic. The [`Scalar`] trait captures what the kernel needs: field
//! operations from `num_traits`, a total order, `p/q` parsing and printing,
//! and exact rational powers for substituting positive values into
//! fractional exponents. Floating point types do not qualify; they have no
//! total order and no exact division, and admitting them would silently
//! break every exactness guarantee, so the trait is implemented only for
//! arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Pow, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::str::FromStr;

/// Exact ordered field scalar.
pub trait Scalar:
    Clone
    + Ord
    + Eq
    + Debug
    + Display
    + FromStr
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Exact `n`-th root if it exists in the field; `self` must be
    /// nonnegative and `n` positive.
    fn nth_root_exact(&self, n: u64) -> Option<Self>;

    /// `self^expo` for a rational exponent, if the result stays in the
    /// field; `self` must be strictly positive.
    fn pow_rational(&self, expo: &Self) -> Option<Self>;

    /// True when the value is an integer.
    fn is_integer_value(&self) -> bool;

    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 embeds into the scalar field")
    }

    /// The fraction `n/d`.
    fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_int(n) / Self::from_int(d)
    }

    /// Parses the canonical `p/q` (or plain `p`) form.
    fn parse_rat(s: &str) -> Option<Self> {
        Self::from_str(s.trim()).ok()
    }
}

/// Integer power by repeated squaring; `base` must be nonzero when `e < 0`.
pub fn pow_i64<S: Scalar>(base: &S, e: i64) -> S {
    if e == 0 {
        return S::one();
    }
    let mut result = S::one();
    let mut sq = base.clone();
    let mut rem = e.unsigned_abs();
    while rem > 0 {
        if rem & 1 == 1 {
            result = result * sq.clone();
        }
        rem >>= 1;
        if rem > 0 {
            sq = sq.clone() * sq;
        }
    }
    if e < 0 {
        S::one() / result
    } else {
        result
    }
}

impl Scalar for BigRational {
    fn nth_root_exact(&self, n: u64) -> Option<Self> {
        if n == 0 || self.is_negative() {
            return None;
        }
        if n == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        let n32 = u32::try_from(n).ok()?;
        let num: BigInt = self.numer().nth_root(n32);
        let den: BigInt = self.denom().nth_root(n32);
        if &Pow::pow(num.clone(), n32) == self.numer() && &Pow::pow(den.clone(), n32) == self.denom()
        {
            Some(BigRational::new(num, den))
        } else {
            None
        }
    }

    fn pow_rational(&self, expo: &Self) -> Option<Self> {
        if !self.is_positive() {
            return None;
        }
        let den = expo.denom().to_u64()?;
        let num = expo.numer().to_i64()?;
        let root = if den == 1 {
            self.clone()
        } else {
            self.nth_root_exact(den)?
        };
        Some(pow_i64(&root, num))
    }

    fn is_integer_value(&self) -> bool {
        self.is_integer()
    }
}
