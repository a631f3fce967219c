//! Exact scalar fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "characteristic", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    Prime(u64),
}

/// Primes for which a prime-field type is compiled in.
pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rational => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }

    pub fn validate(&self) -> Result<(), LinalgError> {
        match self {
            FieldDescriptor::Rational => Ok(()),
            FieldDescriptor::Prime(p) if SUPPORTED_PRIMES.contains(p) => Ok(()),
            FieldDescriptor::Prime(p) if is_prime(*p) => Err(LinalgError::UnsupportedPrime(*p)),
            FieldDescriptor::Prime(p) => Err(LinalgError::NotPrime(*p)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = LinalgError;

    /// Accepts `rational`, `q`, `0`, a bare prime like `5`, or `F5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rational" || t == "q" || t == "0" {
            return Ok(FieldDescriptor::Rational);
        }
        let digits = t.strip_prefix('f').unwrap_or(&t);
        let p: u64 = digits.parse().map_err(|_| LinalgError::BadFieldSpec(s.to_string()))?;
        let d = FieldDescriptor::Prime(p);
        d.validate()?;
        Ok(d)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Serialized form of a scalar: `[numerator, denominator]` over the rationals, a residue otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarParts {
    Fraction(i64, i64),
    Residue(u64),
}

/// An exact field.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn descriptor() -> FieldDescriptor;

    fn characteristic() -> u64 {
        Self::descriptor().characteristic()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn to_parts(&self) -> Result<ScalarParts, LinalgError>;
    fn from_parts(parts: &ScalarParts) -> Result<Self, LinalgError>;
}

/// Arbitrary-precision rational number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Rational
    }
    fn to_parts(&self) -> Result<ScalarParts, LinalgError> {
        let n = self.0.numer().to_i64();
        let d = self.0.denom().to_i64();
        match (n, d) {
            (Some(n), Some(d)) => Ok(ScalarParts::Fraction(n, d)),
            _ => Err(LinalgError::ScalarOverflow(self.to_string())),
        }
    }
    fn from_parts(parts: &ScalarParts) -> Result<Self, LinalgError> {
        match parts {
            ScalarParts::Fraction(_, 0) => Err(LinalgError::BadScalar("zero denominator".into())),
            ScalarParts::Fraction(n, d) => Ok(Rational::new(*n, *d)),
            ScalarParts::Residue(_) => Err(LinalgError::BadScalar("residue given for a rational field".into())),
        }
    }
}

/// Element of the prime field `F_P`, stored as its canonical residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn residue(&self) -> u64 {
        self.0
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Small residues read better as signed representatives.
        if P > 2 && self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Prime(P)
    }
    fn to_parts(&self) -> Result<ScalarParts, LinalgError> {
        Ok(ScalarParts::Residue(self.0))
    }
    fn from_parts(parts: &ScalarParts) -> Result<Self, LinalgError> {
        match parts {
            ScalarParts::Residue(r) if *r < P => Ok(Fp(*r)),
            ScalarParts::Residue(r) => Err(LinalgError::BadScalar(format!("residue {r} out of range for F{P}"))),
            ScalarParts::Fraction(n, d) => {
                let d = Fp::<P>::new(*d)
                    .inv()
                    .ok_or_else(|| LinalgError::BadScalar(format!("denominator {d} vanishes mod {P}")))?;
                Ok(Fp::new(*n) * d)
            }
        }
    }
}

/// Runs `$body` with `$K` bound to the concrete field type named by a [`FieldDescriptor`].
///
/// Panics on primes outside [`SUPPORTED_PRIMES`]; call [`FieldDescriptor::validate`] first.
#[macro_export]
macro_rules! with_field {
    ($desc:expr, $K:ident => $body:expr) => {{
        use $crate::linalg::{FieldDescriptor as __FD, Fp as __Fp, Rational as __Q};
        match $desc {
            __FD::Rational => {
                type $K = __Q;
                $body
            }
            __FD::Prime(2) => {
                type $K = __Fp<2>;
                $body
            }
            __FD::Prime(3) => {
                type $K = __Fp<3>;
                $body
            }
            __FD::Prime(5) => {
                type $K = __Fp<5>;
                $body
            }
            __FD::Prime(7) => {
                type $K = __Fp<7>;
                $body
            }
            __FD::Prime(11) => {
                type $K = __Fp<11>;
                $body
            }
            __FD::Prime(13) => {
                type $K = __Fp<13>;
                $body
            }
            __FD::Prime(17) => {
                type $K = __Fp<17>;
                $body
            }
            __FD::Prime(19) => {
                type $K = __Fp<19>;
                $body
            }
            __FD::Prime(23) => {
                type $K = __Fp<23>;
                $body
            }
            __FD::Prime(29) => {
                type $K = __Fp<29>;
                $body
            }
            __FD::Prime(31) => {
                type $K = __Fp<31>;
                $body
            }
            __FD::Prime(p) => panic!("prime field F{} is not compiled in", p),
        }
    }};
}
