//! Exact dyadic rationals `m / 2^k`.
//!
//! Every measure in the crate is a dyadic rational, so all threshold
//! decisions (`< 1/2`, `> 1/2 - 2^-n`, ...) are made without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// A rational number whose denominator is a power of two.
///
/// Normalized: the numerator is odd, or the value is zero with exponent 0.
/// Thresholds such as `1/2 - 2^0` are negative, so the numerator is signed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = Dyadic { num: num.into(), exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    pub fn half() -> Self {
        Dyadic { num: BigInt::one(), exp: 1 }
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic { num: BigInt::one(), exp: k }
    }

    /// `1/2 - 2^-k`, the threshold family used by the A'' windows and labels.
    pub fn half_minus_pow2(k: u32) -> Self {
        Self::half() - Self::pow2_neg(k)
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(n, 0)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.magnitude().trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.exp as u64) as u32;
        if shift > 0 {
            self.num >>= shift as usize;
            self.exp -= shift;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// The `k` in `m / 2^k` (after normalization).
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    /// Numerator after rescaling to denominator `2^k`; `None` if `k` is too
    /// coarse to represent the value exactly.
    pub fn scaled_numerator(&self, k: u32) -> Option<BigInt> {
        if k < self.exp {
            None
        } else {
            Some(&self.num << (k - self.exp) as usize)
        }
    }

    /// Divide by `2^k`.
    pub fn shr(&self, k: u32) -> Self {
        Self::new(self.num.clone(), self.exp + k)
    }

    /// Multiply by `2^k`.
    pub fn shl(&self, k: u32) -> Self {
        if k <= self.exp {
            Self::new(self.num.clone(), self.exp - k)
        } else {
            Self::new(&self.num << (k - self.exp) as usize, 0)
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { num: self.num.abs(), exp: self.exp }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Largest integer `q` with `q * 2^-k <= self`, for non-negative values.
    pub fn floor_units(&self, k: u32) -> BigUint {
        assert!(!self.is_negative(), "floor_units on a negative dyadic");
        let n = if k >= self.exp {
            &self.num << (k - self.exp) as usize
        } else {
            &self.num >> (self.exp - k) as usize
        };
        n.to_biguint().unwrap_or_default()
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exp.max(other.exp);
        (
            &self.num << (e - self.exp) as usize,
            &other.num << (e - other.exp) as usize,
            e,
        )
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Dyadic> for Dyadic {
    fn sub_assign(&mut self, rhs: &Dyadic) {
        *self = &*self - rhs;
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Mul<u64> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, k: u64) -> Dyadic {
        Dyadic::new(&self.num * BigInt::from(k), self.exp)
    }
}

impl Mul<&BigUint> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, k: &BigUint) -> Dyadic {
        Dyadic::new(&self.num * BigInt::from_biguint(Sign::Plus, k.clone()), self.exp)
    }
}

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |acc, x| &acc + &x)
    }
}

/// Prints `m/d` with `d = 2^k` in decimal, or a bare integer.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigUint::one() << self.exp as usize)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid dyadic literal {0:?}: expected m, m/d with d a power of two, or m/2^k")]
pub struct ParseDyadicError(pub String);

/// Accepts `m`, `m/d` (d a power of two) and `m/2^k`.
impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseDyadicError(s.to_string());
        let s = s.trim();
        let Some((n, d)) = s.split_once('/') else {
            return BigInt::from_str(s).map(|n| Dyadic::new(n, 0)).map_err(|_| err());
        };
        let num = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = d.trim();
        let exp = if let Some(k) = d.strip_prefix("2^") {
            k.parse::<u32>().map_err(|_| err())?
        } else {
            let den = BigUint::from_str(d).map_err(|_| err())?;
            if den.is_zero() || den.count_ones() != 1 {
                return Err(err());
            }
            den.trailing_zeros().unwrap_or(0) as u32
        };
        Ok(Dyadic::new(num, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn normalizes_on_construction() {
        let x = Dyadic::new(6, 4);
        assert_eq!(x.numerator(), &BigInt::from(3));
        assert_eq!(x.exponent(), 3);
        assert_eq!(Dyadic::new(0, 9).exponent(), 0);
        assert_eq!(Dyadic::new(8, 2), Dyadic::from_int(2));
    }

    #[test]
    fn arithmetic_and_order() {
        assert_eq!(d("1/4") + d("1/8"), d("3/8"));
        assert_eq!(d("1/2") - d("3/8"), d("1/8"));
        assert_eq!(Dyadic::half_minus_pow2(0), d("-1/2"));
        assert!(d("3/8") < d("1/2"));
        assert!(d("-1/2") < Dyadic::zero());
        assert_eq!(&d("1/512") * 3u64, d("3/512"));
        assert_eq!(d("3/8").shr(2), d("3/32"));
        assert_eq!(d("3/8").shl(3), d("3"));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(d("3/8").to_string(), "3/8");
        assert_eq!(d("6/16").to_string(), "3/8");
        assert_eq!(d("1/2^9").to_string(), "1/512");
        assert_eq!(d("-1/2").to_string(), "-1/2");
        assert_eq!(Dyadic::zero().to_string(), "0");
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
    }

    #[test]
    fn floor_units() {
        assert_eq!(d("3/8").floor_units(2), BigUint::from(1u32));
        assert_eq!(d("3/8").floor_units(5), BigUint::from(12u32));
    }
}
