//! Ground fields: the rationals and prime fields of modulus below 2^31.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field a scalar, matrix or structure lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidInput(format!("modulus {p} does not fit in 31 bits")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// 0 for the rationals, p otherwise.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Rational::integer(n)),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Rational::from_big(BigRational::from_integer(n.clone()))),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        self.from_i64(num) * self.from_i64(den).inv().expect("nonzero denominator")
    }

    /// Parses a scalar in canonical form: `"-3/7"`, `"5"` over ℚ, a decimal
    /// residue in `[0, p)` over 𝔽_p.
    pub fn parse_scalar(self, s: &str) -> std::result::Result<Scalar, String> {
        match self {
            FieldSpec::Rationals => Rational::parse_canonical(s).map(Scalar::Rat),
            FieldSpec::Prime(p) => {
                if !is_canonical_natural(s) {
                    return Err(format!("residue {s:?} is not a canonical decimal"));
                }
                let v: u64 = s.parse().map_err(|_| format!("residue {s:?} out of range"))?;
                if v >= p as u64 {
                    return Err(format!("residue {v} not in [0, {p})"));
                }
                Ok(Scalar::Mod {
                    value: v as u32,
                    modulus: p,
                })
            }
        }
    }

    /// Maps a scalar into this field. Rationals reduce into any prime field
    /// whose characteristic does not divide the denominator.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rat(_)) => Ok(s.clone()),
            (FieldSpec::Prime(p), Scalar::Mod { modulus, .. }) if *modulus == p => Ok(s.clone()),
            (FieldSpec::Prime(_), Scalar::Rat(r)) => {
                let (n, d) = r.to_big_parts();
                let den = self.from_bigint(&d);
                let inv = den
                    .inv()
                    .ok_or_else(|| Error::InvalidInput(format!("denominator of {s} vanishes in {self}")))?;
                Ok(self.from_bigint(&n) * inv)
            }
            _ => Err(Error::FieldMismatch(format!("cannot reinterpret {s} over {self}"))),
        }
    }
}

fn is_canonical_natural(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            if !is_canonical_natural(p) {
                return Err(Error::InvalidInput(format!("bad modulus in field {s:?}")));
            }
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad modulus in field {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidInput(format!("unknown field {s:?}, expected q or fp:<p>")))
    }
}

/// An exact rational in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in `i64` use the `Small`
/// variant; everything else is boxed. The representation is canonical, so
/// derived equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn integer(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return Rational::Small(0, 1);
        }
        let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::from_big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn to_big_parts(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Rational) -> Rational {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(a, b) => Rational::from_i128(-(*a as i128), *b as i128),
            Rational::Big(r) => Rational::from_big(-(**r).clone()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(a, b) => Some(Rational::from_i128(*b as i128, *a as i128)),
            Rational::Big(r) => Some(Rational::from_big(r.recip())),
        }
    }

    fn parse_canonical(s: &str) -> std::result::Result<Rational, String> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !is_canonical_natural(num) {
            return Err(format!("scalar {s:?} is not a canonical rational"));
        }
        let mut n: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        if neg {
            if n.is_zero() {
                return Err(format!("scalar {s:?}: negative zero"));
            }
            n = -n;
        }
        let d: BigInt = match den {
            None => BigInt::one(),
            Some(d) => {
                if !is_canonical_natural(d) {
                    return Err(format!("scalar {s:?} has a non-canonical denominator"));
                }
                let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
                if d.is_zero() || d.is_one() {
                    return Err(format!("scalar {s:?}: denominator must be at least 2"));
                }
                d
            }
        };
        if !n.gcd(&d).is_one() {
            return Err(format!("scalar {s:?} is not in lowest terms"));
        }
        Ok(Rational::from_big(BigRational::new_raw(n, d)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// An element of ℚ or 𝔽_p. Mixing scalars of different fields panics: it is
/// a construction error that field-tagged matrices rule out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => *r == Rational::Small(1, 1),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::Mod { value: 0, .. } => None,
            Scalar::Mod { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let (mut base, mut exp, mut acc) = (*value as u64, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Mod {
                    value: acc as u32,
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `self += a * b` without intermediate clones on the fast paths.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = &*self + &(a * b);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => r.fmt(f),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn field_clash(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.add(b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.mul(b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    /// Panics on an empty iterator: the field is unknown.
    fn sum<I: Iterator<Item = Scalar>>(mut iter: I) -> Scalar {
        let first = iter.next().expect("sum of empty scalar iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}
