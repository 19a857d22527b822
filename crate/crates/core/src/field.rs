//! Exact scalars.
//!
//! Every scalar is a [`BigRational`]. Over a prime field the value is kept as
//! the canonical integer representative in `0..p`, so equality and hashing of
//! scalars agree with equality in the field.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Default characteristic for the fast modular mode.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        // products of two residues must fit in u64 for the plain elimination path
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce_int(BigInt::from(n))
    }

    fn reduce_int(&self, n: BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::from_integer(n),
            Field::Prime(p) => Scalar::from_integer(n.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps a rational number into this field. Fails over 𝔽_p when the
    /// denominator vanishes modulo p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(q.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = q.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let num = q.numer().mod_floor(&pb);
                let inv = den.modpow(&(&pb - 2u32), &pb);
                Ok(Scalar::from_integer((num * inv).mod_floor(&pb)))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a + b,
            Field::Prime(_) => self.reduce_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a - b,
            Field::Prime(_) => self.reduce_int(a.numer() - b.numer()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rational => -a,
            Field::Prime(_) => self.reduce_int(-a.numer()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a * b,
            Field::Prime(_) => self.reduce_int(a.numer() * b.numer()),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(a.recip()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                Ok(Scalar::from_integer(a.numer().modpow(&(&pb - 2u32), &pb)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents need `a != 0`.
    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut out = self.one();
        for _ in 0..e.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        Ok(out)
    }

    /// Residue of a field element as a machine integer (𝔽_p only).
    pub(crate) fn residue(&self, a: &Scalar) -> u64 {
        a.numer().to_u64().unwrap_or(0)
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => {
                a.is_integer() && !a.is_negative() && a.numer() < &BigInt::from(*p)
            }
        }
    }

    /// Parses a scalar token `a` or `a/b` and maps it into the field.
    pub fn parse_scalar(&self, token: &str) -> Result<Scalar> {
        let q = parse_rational(token)?;
        self.from_rational(&q)
    }
}

/// Parses `a` or `a/b` into an exact rational.
pub fn parse_rational(token: &str) -> Result<BigRational> {
    let bad = || Error::parse(0, format!("`{token}` is not a rational number"));
    match token.split_once('/') {
        None => BigInt::from_str(token)
            .map(Scalar::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn format_scalar(a: &Scalar) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`/`q` or `F<p>`/`f<p>`.
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "Q" | "q" => Ok(Field::Rational),
            _ => {
                let rest = s
                    .strip_prefix('F')
                    .or_else(|| s.strip_prefix('f'))
                    .ok_or_else(|| Error::parse(0, format!("unknown field `{s}`")))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::parse(0, format!("unknown field `{s}`")))?;
                Field::prime(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_reduces_rationals() {
        let f = Field::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.from_rational(&q(1, 2)).unwrap(), q(4, 1));
        assert_eq!(f.from_rational(&q(-1, 1)).unwrap(), q(6, 1));
        assert!(f.from_rational(&q(1, 7)).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let f = Field::prime(101).unwrap();
        let a = f.from_int(17);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        assert_eq!(f.pow(&a, -2).unwrap(), f.inv(&f.mul(&a, &a)).unwrap());
        let r = Field::Rational;
        assert_eq!(r.pow(&q(2, 3), -1).unwrap(), q(3, 2));
        assert!(r.inv(&q(0, 1)).is_err());
    }

    #[test]
    fn field_declarations() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("F32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("F12".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
        assert_eq!(Field::Prime(5).to_string(), "F5");
    }

    #[test]
    fn scalar_text() {
        assert_eq!(format_scalar(&q(-6, 4)), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), q(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
