//! Exact scalars: rationals with a machine-word fast path, and residues mod p.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..(1 << 62)).contains(&p) || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Q(Rational::Small(n, 1)),
            FieldSpec::Prime(p) => Scalar::Fp(n.rem_euclid(p as i64) as u64, p),
        }
    }

    /// `n / d`; fails when `d` vanishes in the field.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Scalar> {
        let d = self.int(d);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Field(format!("denominator is zero in {self}")))?;
        Ok(self.int(n) * inv)
    }

    /// Parses `"a"` or `"a/b"` with arbitrary-size integers.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s.trim()).map_err(|_| bad())?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(bad());
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Q(Rational::from_big(BigRational::new(n, d)))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&pb).to_u64().unwrap();
                let num = Scalar::Fp(reduce(&n), p);
                let den = Scalar::Fp(reduce(&d), p).inv().ok_or_else(bad)?;
                Ok(num * den)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "q" => Ok(FieldSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown field {other:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A rational number kept in lowest terms with positive denominator.
/// Values that fit in `i64` are always stored as `Small`, so structural
/// equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    fn from_i128(n: i128, d: i128) -> Rational {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if d != 1 {
            let g = n.gcd(&d);
            if g > 1 {
                n /= g;
                d /= g;
            }
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new(n.into(), d.into()))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Rational::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

/// An element of the active field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp(_, p) => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => *r == Rational::Small(1, 1),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::Fp(0, _) => None,
            Scalar::Fp(v, p) => Some(Scalar::Fp(pow_mod(*v, p - 2, *p), *p)),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn field_clash(a: &Scalar, b: &Scalar) -> ! {
    panic!("arithmetic across fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp((a + b) % p, *p),
            _ => field_clash(self, o),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp(mul_mod(*a, *b, *p), *p),
            _ => field_clash(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp(0, p) => Scalar::Fp(0, *p),
            Scalar::Fp(a, p) => Scalar::Fp(p - a, *p),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_overflows_into_bigints() {
        let q = FieldSpec::Rationals;
        let big = q.int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        let half = q.ratio(1, 2).unwrap();
        assert_eq!(&half + &half, q.one());
        assert_eq!(q.parse("-6/4").unwrap(), q.ratio(-3, 2).unwrap());
        assert_eq!(q.parse("-3/2").unwrap().to_string(), "-3/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.ratio(1, 2).unwrap(), f.int(3));
        assert_eq!(f.int(-1), f.int(4));
        assert!(f.zero().inv().is_none());
        assert_eq!(f.parse("3/4").unwrap(), f.int(2));
        assert!(FieldSpec::prime(9).is_err());
        assert_eq!("Fp:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::Prime(2).ratio(1, 2).is_err());
    }
}
