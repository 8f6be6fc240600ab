//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every value carries the field it lives in, so mixed-field arithmetic is
//! caught immediately instead of producing garbage. Rationals are kept
//! normalized (positive denominator, lowest terms) by `num::BigRational`;
//! residues are kept in `0..p`.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// The coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, arbitrary precision.
    Rational,
    /// The integers modulo `p` (`p` must be prime).
    Prime(u64),
}

impl Field {
    pub fn is_rational(self) -> bool {
        matches!(self, Field::Rational)
    }

    /// The modulus for a prime field, `None` over the rationals.
    pub fn modulus(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic primality test by trial division; fine for the moduli
/// this library works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact scalar in one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn zero(field: Field) -> Scalar {
        Scalar::from_integer(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_integer(field, 1)
    }

    /// The canonical image of an integer in `field`.
    pub fn from_integer(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(p as i64) as u64;
                Scalar::Prime { p, value: m }
            }
        }
    }

    /// The rational `num / den`. Panics if `den == 0`.
    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    /// The residue in `0..p` for a prime-field scalar, `None` for a rational.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Prime { value, .. } => Some(*value),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "scalar field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    /// Multiplicative inverse. Panics on zero; callers test `is_zero` first.
    pub fn inverse(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: mod_inverse(*value, *p),
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inverse())
    }
}

/// Inverse of `a` modulo prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "{a} is not invertible modulo {p}");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_normalizes() {
        let a = Scalar::rational(2, 4);
        let b = Scalar::rational(1, 2);
        assert_eq!(a, b);
        assert_eq!(a.add(&b), Scalar::from_integer(Field::Rational, 1));
        assert_eq!(a.mul(&b), Scalar::rational(1, 4));
        assert_eq!(Scalar::rational(3, -6), Scalar::rational(-1, 2));
        assert_eq!(a.sub(&b), Scalar::zero(Field::Rational));
    }

    #[test]
    fn rational_display_uses_lowest_terms() {
        assert_eq!(Scalar::rational(-4, 6).to_string(), "-2/3");
        assert_eq!(Scalar::rational(8, 4).to_string(), "2");
        assert_eq!(Scalar::zero(Field::Rational).to_string(), "0");
    }

    #[test]
    fn prime_field_arithmetic_wraps() {
        let f = Field::Prime(5);
        let a = Scalar::from_integer(f, 3);
        let b = Scalar::from_integer(f, 4);
        assert_eq!(a.add(&b), Scalar::from_integer(f, 2));
        assert_eq!(a.mul(&b), Scalar::from_integer(f, 2));
        assert_eq!(a.neg(), Scalar::from_integer(f, 2));
        assert_eq!(Scalar::from_integer(f, -1), Scalar::from_integer(f, 4));
    }

    #[test]
    fn prime_field_inverses() {
        for p in [2u64, 3, 5, 7, 11, 241] {
            let f = Field::Prime(p);
            for v in 1..p.min(40) {
                let s = Scalar::from_integer(f, v as i64);
                assert!(s.mul(&s.inverse()).is_one(), "inverse failed for {v} mod {p}");
            }
        }
    }

    #[test]
    fn rational_inverse() {
        let a = Scalar::rational(-3, 7);
        assert!(a.mul(&a.inverse()).is_one());
        assert_eq!(a.div(&a), Scalar::one(Field::Rational));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_arithmetic_panics() {
        let _ = Scalar::one(Field::Rational).add(&Scalar::one(Field::Prime(3)));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(241));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(9));
        assert!(!is_prime(221)); // 13 * 17
    }
}
