//! Exact base fields: the rationals and prime fields `F_p`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0} is not prime")]
pub struct PrimalityError(pub u64);

/// The field tag carried by every scalar and polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite (or degenerate) moduli.
    pub fn prime(p: u64) -> Result<Self, PrimalityError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(PrimalityError(p))
        }
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Mod {
                value: reduce_bigint(n, *p),
                modulus: *p,
            },
        }
    }

    /// `num/den` in this field, `None` when `den` vanishes here.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let den = self.from_bigint(den);
        if den.is_zero() {
            return None;
        }
        Some(self.from_bigint(num).div(&den))
    }

    /// Short tag used on the command line and in JSON: `q` or `fp:<p>`.
    pub fn tag(&self) -> String {
        match self {
            Field::Rational => "q".to_string(),
            Field::Prime(p) => format!("fp:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element. Rationals are kept reduced with positive
/// denominator (by `BigRational`); residues live in `[0, p)`.
///
/// Arithmetic between elements of different fields is a programming error
/// and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> u64 {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => 0,
            (Scalar::Mod { modulus: p, .. }, Scalar::Mod { modulus: q, .. }) if p == q => *p,
            _ => panic!("scalar arithmetic across fields: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => {
                let p = self.same_field(other);
                Scalar::Mod {
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => {
                self.same_field(other);
                unreachable!()
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => {
                let p = self.same_field(other);
                Scalar::Mod {
                    value: mul_mod(*a, *b, p),
                    modulus: p,
                }
            }
            _ => {
                self.same_field(other);
                unreachable!()
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero scalar"))
    }

    /// The image of the integer `n` in this scalar's field, times `self`.
    pub fn scale_int(&self, n: i64) -> Scalar {
        self.mul(&self.field().from_i64(n))
    }

    /// Numerator/denominator view used for serialization. Residues are
    /// reported as their representative in `[0, p)` over 1.
    pub fn as_fraction(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Mod { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// Only rationals can be negative; residues never are.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Mod { .. } => true,
        }
    }

    /// Total order inside one field, used only to make output deterministic.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => a.cmp(b),
            _ => self.field().characteristic().cmp(&other.field().characteristic()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}
