//! Exact coefficient fields for rank computations.
//!
//! Everything downstream is generic over [`Field`]; the crate root exposes
//! concrete aliases for the prime fields and the rationals actually used.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// An exact field. Integer types satisfy `Num` but are deliberately not fields.
pub trait Field: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Send + Sync {
    /// Zero for the rationals.
    const CHARACTERISTIC: u64;

    fn from_i64(v: i64) -> Self;
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Integers modulo a prime `P < 2^32`, stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct PrimeField<const P: u64>(u64);

impl<const P: u64> PrimeField<P> {
    const MODULUS_FITS: () = assert!(P >= 2 && P < (1 << 32), "modulus must fit in 32 bits");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::MODULUS_FITS;
        PrimeField(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        PrimeField(acc)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> Zero for PrimeField<P> {
    fn zero() -> Self {
        PrimeField(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for PrimeField<P> {
    fn one() -> Self {
        PrimeField::new(1)
    }
}

impl<const P: u64> Add for PrimeField<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        PrimeField((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for PrimeField<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        PrimeField((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for PrimeField<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        PrimeField(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for PrimeField<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

/// Division in a field is exact, so the remainder is always zero.
impl<const P: u64> Rem for PrimeField<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "remainder by zero in F_{P}");
        PrimeField(0)
    }
}

impl<const P: u64> Neg for PrimeField<P> {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeField((P - self.0) % P)
    }
}

impl<const P: u64> Num for PrimeField<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        u64::from_str_radix(s, radix).map(Self::new)
    }
}

impl<const P: u64> Field for PrimeField<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        PrimeField(r as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = PrimeField<7>;

    #[test]
    fn arithmetic_mod_seven() {
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((a / b * b), a);
        assert_eq!((-a).value(), 4);
        assert_eq!(F7::from_i64(-1).value(), 6);
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for v in 1..7 {
            assert_eq!(F7::new(v) * F7::new(v).inverse(), F7::one());
        }
    }
}
