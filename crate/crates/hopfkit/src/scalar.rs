//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every scalar in the crate is an element of ℚ or of GF(p) for a prime
//! p < 2³¹. All arithmetic is exact; equality of tensors is literal equality
//! of entries, never a tolerance comparison.

use crate::error::{HopfError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// The base field of a computation: ℚ or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers with arbitrary-precision arithmetic.
    Rational,
    /// The prime field GF(p), p a prime below 2³¹.
    Prime(u64),
}

impl Field {
    /// Construct GF(p), validating that `p` is a prime in range.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1u64 << 31).contains(&p) || !is_prime(p) {
            return Err(HopfError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Additive identity of this field.
    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, p: *p },
        }
    }

    /// Multiplicative identity of this field.
    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { value: 1 % *p, p: *p },
        }
    }

    /// Embed a machine integer into this field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { value: m, p: *p }
            }
        }
    }

    /// Parse a canonical scalar string (`"n"` or `"n/d"`) into this field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num_str
            .trim()
            .parse()
            .map_err(|_| HopfError::Parse(format!("bad numerator in scalar {s:?}")))?;
        let den: BigInt = den_str
            .trim()
            .parse()
            .map_err(|_| HopfError::Parse(format!("bad denominator in scalar {s:?}")))?;
        if den.is_zero() {
            return Err(HopfError::Parse(format!("zero denominator in scalar {s:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let nm = ((num % &pb) + &pb) % &pb;
                let dm = ((den % &pb) + &pb) % &pb;
                let n64: u64 = nm.try_into().expect("reduced residue fits in u64");
                let d64: u64 = dm.try_into().expect("reduced residue fits in u64");
                let d_inv = mod_inverse(d64, *p).ok_or(HopfError::DivisionByZero)?;
                Ok(Scalar::Mod { value: mod_mul(n64, d_inv, *p), p: *p })
            }
        }
    }

    fn name(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("GF({p})"),
        }
    }
}

/// Check that two fields coincide, or return a descriptive error.
pub fn require_same_field(a: Field, b: Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(HopfError::FieldMismatch(a.name(), b.name()))
    }
}

/// An exact element of the base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// An arbitrary-precision rational number.
    Rat(BigRational),
    /// A residue in GF(p).
    Mod { value: u64, p: u64 },
}

impl Scalar {
    /// The field this scalar belongs to.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    /// Whether this is the additive identity.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    /// Whether this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, p } => *value == 1 % *p,
        }
    }

    /// Exact sum. Panics on internal field mixups (callers validate fields
    /// at API boundaries).
    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: (a + b) % p, p: *p }
            }
            _ => panic!("scalar field mismatch in add"),
        }
    }

    /// Exact difference.
    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: mod_mul(*a, *b, *p), p: *p }
            }
            _ => panic!("scalar field mismatch in mul"),
        }
    }

    /// Additive inverse.
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p: *p },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    Err(HopfError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Mod { value, p } => {
                let inv = mod_inverse(*value, *p).ok_or(HopfError::DivisionByZero)?;
                Ok(Scalar::Mod { value: inv, p: *p })
            }
        }
    }

    /// Canonical string form: `"n"` for integers (and all GF(p) residues),
    /// `"n/d"` with d > 0 and gcd(n,d)=1 otherwise.
    pub fn canonical_string(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else if r.denom().is_negative() {
                    // BigRational normalizes sign into the numerator, but be
                    // defensive: always render a positive denominator.
                    format!("{}/{}", -r.numer(), -r.denom())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => value.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// Deterministic trial-division primality test; sufficient for p < 2³¹.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip_through_canonical_strings() {
        let f = Field::Rational;
        let x = f.parse("-3/6").unwrap();
        assert_eq!(x.canonical_string(), "-1/2");
        let y = f.parse(&x.canonical_string()).unwrap();
        assert_eq!(x, y);
        assert_eq!(f.parse("4/2").unwrap().canonical_string(), "2");
    }

    #[test]
    fn prime_field_arithmetic_matches_hand_values() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(5);
        assert_eq!(three.mul(&five), f.from_i64(1)); // 15 = 1 mod 7
        assert_eq!(three.add(&five), f.from_i64(1)); // 8 = 1 mod 7
        assert_eq!(five.inv().unwrap(), f.from_i64(3));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        // "1/2" parses to the inverse of 2, i.e. 4 mod 7.
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
    }

    #[test]
    fn prime_validation_rejects_composites_and_range() {
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err()); // 7 * 13
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(2147483647).is_ok()); // 2^31 - 1 is prime
    }

    #[test]
    fn zero_denominator_and_zero_inverse_error() {
        assert!(Field::Rational.parse("1/0").is_err());
        assert!(Field::Rational.zero().inv().is_err());
        assert!(Field::prime(5).unwrap().zero().inv().is_err());
    }
}
