//! Exact scalars: the Gaussian rationals.
//!
//! Every scalar in this crate is a complex number `re + im*i` whose parts are
//! arbitrary-precision rationals. This field is dense in the complex numbers
//! and closed under every construction the crate performs, so all ranks,
//! kernels, and dimensions computed here coincide with their complex values.
//! There is no epsilon anywhere: equality is decidable and exact.
//!
//! The textual grammar is `p/q`, `p/q+r/s*i`, or `p/q-r/s*i`, with `/1`
//! omissible, e.g. `3`, `-2/5*i`, `1/2+3/4*i`. Printing and parsing
//! round-trip bit-exactly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A Gaussian rational.
///
/// Both parts are kept in lowest terms with a positive denominator;
/// `BigRational` re-establishes that after every operation. The derived
/// ordering is lexicographic on `(re, im)` and exists only so values can live
/// in ordered collections; it is not a field order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den` is zero.
    pub fn from_rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(re_num/re_den) + (im_num/im_den)*i`. Panics on zero denominators.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// True iff both parts are zero. Exact: there is no tolerance.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Scalar {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, a nonnegative rational, zero iff the scalar is zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Exact division; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inverse()?)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Division operator; panics on a zero divisor. Use [`Scalar::checked_div`]
/// where the divisor is not known to be nonzero.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if self.re.is_zero() {
            write_rational(f, &self.im)?;
            return write!(f, "*i");
        }
        write_rational(f, &self.re)?;
        if self.im.is_negative() {
            write!(f, "-")?;
            write_rational(f, &(-&self.im))?;
        } else {
            write!(f, "+")?;
            write_rational(f, &self.im)?;
        }
        write!(f, "*i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse("expected digits".into()));
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
            .ok_or_else(|| Error::Parse("invalid integer".into()))
    }

    /// `digits ('/' digits)?` with a nonzero denominator.
    fn unsigned_rational(&mut self) -> Result<BigRational, Error> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn signed_rational(&mut self) -> Result<BigRational, Error> {
        let negative = self.eat(b'-');
        let q = self.unsigned_rational()?;
        Ok(if negative { -q } else { q })
    }

    fn expect_imaginary_mark(&mut self) -> Result<(), Error> {
        if self.bump() == Some(b'*') && self.bump() == Some(b'i') {
            Ok(())
        } else {
            Err(Error::Parse("expected `*i`".into()))
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut cur = Cursor { bytes: trimmed.as_bytes(), pos: 0 };
        let first = cur.signed_rational()?;
        let scalar = match cur.peek() {
            None => Scalar::new(first, BigRational::zero()),
            Some(b'*') => {
                cur.expect_imaginary_mark()?;
                Scalar::new(BigRational::zero(), first)
            }
            Some(sign @ (b'+' | b'-')) => {
                cur.bump();
                let second = cur.unsigned_rational()?;
                cur.expect_imaginary_mark()?;
                let im = if sign == b'-' { -second } else { second };
                Scalar::new(first, im)
            }
            Some(other) => {
                return Err(Error::Parse(format!("unexpected character `{}`", other as char)));
            }
        };
        if cur.pos != cur.bytes.len() {
            return Err(Error::Parse("trailing input after scalar".into()));
        }
        Ok(scalar)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_scalar, substream};

    #[test]
    fn halves_add_to_one() {
        let half = Scalar::from_rational(1, 2);
        assert_eq!(&half + &half, Scalar::one());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_integer(-1));
    }

    #[test]
    fn self_division_is_one() {
        let x = Scalar::from_parts(1, 3, 1, 3);
        assert_eq!(x.checked_div(&x).unwrap(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = Scalar::one().checked_div(&Scalar::zero());
        assert!(matches!(err, Err(Error::DivisionByZero)));
    }

    #[test]
    fn is_zero_is_exact() {
        assert!(Scalar::zero().is_zero());
        assert!(!Scalar::from_rational(1, 1_000_000_000).is_zero());
        assert!(!Scalar::i().is_zero());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = substream(11, "field_axioms");
        for _ in 0..1000 {
            let a = random_scalar(&mut rng, 3);
            let b = random_scalar(&mut rng, 3);
            let c = random_scalar(&mut rng, 3);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                assert_eq!(&a * &a.inverse().unwrap(), Scalar::one());
            }
        }
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(Scalar::from_integer(3).to_string(), "3");
        assert_eq!(Scalar::from_rational(-2, 4).to_string(), "-1/2");
        assert_eq!(Scalar::from_parts(0, 1, -2, 5).to_string(), "-2/5*i");
        assert_eq!(Scalar::from_parts(1, 2, 3, 4).to_string(), "1/2+3/4*i");
        assert_eq!(Scalar::from_parts(1, 2, -3, 4).to_string(), "1/2-3/4*i");
        assert_eq!(Scalar::i().to_string(), "1*i");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_accepts_grammar_forms() {
        for (text, value) in [
            ("3", Scalar::from_integer(3)),
            ("-2/5*i", Scalar::from_parts(0, 1, -2, 5)),
            ("1/2+3/4*i", Scalar::from_parts(1, 2, 3, 4)),
            ("1/2-3/4*i", Scalar::from_parts(1, 2, -3, 4)),
            ("0", Scalar::zero()),
            ("1*i", Scalar::i()),
            ("-7", Scalar::from_integer(-7)),
            ("10/4", Scalar::from_rational(5, 2)),
        ] {
            assert_eq!(text.parse::<Scalar>().unwrap(), value, "parsing {text}");
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for text in ["", "i", "1+", "1/0", "1++2*i", "1+2", "1*j", "2*i+1", "1 + 2*i", "3x"] {
            assert!(text.parse::<Scalar>().is_err(), "should reject {text:?}");
        }
    }

    #[test]
    fn print_parse_round_trip() {
        let mut rng = substream(12, "round_trip");
        for _ in 0..1000 {
            let s = random_scalar(&mut rng, 5);
            let printed = s.to_string();
            let reparsed: Scalar = printed.parse().unwrap();
            assert_eq!(reparsed, s);
            assert_eq!(reparsed.to_string(), printed);
        }
    }
}
