//! The field abstraction and its two implementations: the rationals with
//! arbitrary-precision arithmetic, and prime fields F_q for odd primes q
//! (represented by residues 0..q).

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// A field whose elements are plain data; all arithmetic goes through the
/// field object so that runtime parameters (the modulus of a prime field)
/// have somewhere to live.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    /// Human- and machine-readable text form ("3/4" over the rationals,
    /// the residue over a prime field).
    fn render(&self, a: &Self::Elem) -> String;
    /// Inverse of [`Field::render`]; also accepts plain integers.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
}

/// The rational numbers with exact big-integer arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(BigRational::new(int(n)?, d))
            }
            None => Ok(BigRational::from_integer(int(s)?)),
        }
    }
}

/// F_q for an odd prime q, elements stored as canonical residues in 0..q.
///
/// q = 2 is rejected: the bilinear-form machinery in this crate divides by
/// 2 and distinguishes symmetric from alternating forms, neither of which
/// survives characteristic 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q == 2 {
            return Err(Error::Range(
                "characteristic 2 not supported; the modulus must be an odd prime".into(),
            ));
        }
        if q < 2 || !is_prime(q) {
            return Err(Error::Range(format!("{q} is not prime")));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// All elements, 0 first. Handy for small-field enumeration.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.q as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.q
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.q - b) % self.q
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.q
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.q - a) % self.q
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(q-2) mod q.
        let mut result = 1u64;
        let mut base = *a % self.q;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.q;
            }
            base = base * base % self.q;
            e >>= 1;
        }
        Some(result)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        let n = s
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad residue {s:?}: {e}")))?;
        Ok(self.from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_basic() {
        let f = Rationals;
        let a = f.parse("3/4").unwrap();
        let b = f.parse("-2").unwrap();
        assert_eq!(f.render(&f.add(&a, &b)), "-5/4");
        assert_eq!(f.render(&f.mul(&a, &b)), "-3/2");
        assert_eq!(f.inv(&f.zero()), None);
        let inv = f.inv(&a).unwrap();
        assert!(f.is_one(&f.mul(&a, &inv)));
        assert!(f.parse("1/0").is_err());
        assert_eq!(f.render(&f.parse("-6/4").unwrap()), "-3/2");
    }

    #[test]
    fn prime_field_rejects_non_primes_and_two() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(1009).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.add(&3, &4), 2);
        assert_eq!(f.sub(&1, &3), 3);
        assert_eq!(f.mul(&3, &4), 2);
        for a in 1..5 {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1, "inverse of {a} mod 5");
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.parse("-2").unwrap(), 3);
    }
}
