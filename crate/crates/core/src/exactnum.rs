//! Exact arithmetic: reduced rationals, classes in Q/Z and residues in Z/m.
//!
//! Every value is stored in canonical form, so equality is field-by-field and
//! the `Display` output ("num/den") is unique per value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(String),
    #[error("cannot parse {0:?} as num/den")]
    Parse(String),
}

fn split_fraction<T: Scalar>(s: &str) -> Result<(T, T), ExactError> {
    let bad = || ExactError::Parse(s.to_owned());
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n = n.parse::<T>().map_err(|_| bad())?;
    let d = d.parse::<T>().map_err(|_| bad())?;
    Ok((n, d))
}

/// A reduced fraction with positive denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat<T: Scalar>(Ratio<T>);

impl<T: Scalar> Rat<T> {
    pub fn new(num: T, den: T) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rat(Ratio::new(num, den)))
    }

    pub fn from_integer(v: T) -> Self {
        Rat(Ratio::from_integer(v))
    }

    pub fn zero() -> Self {
        Rat(Ratio::zero())
    }

    pub fn numer(&self) -> &T {
        self.0.numer()
    }

    pub fn denom(&self) -> &T {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<T> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| Rat(self.0.clone() / rhs.0.clone()))
    }
}

impl<T: Scalar> fmt::Display for Rat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl<T: Scalar> fmt::Debug for Rat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> FromStr for Rat<T> {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = split_fraction(s)?;
        Rat::new(n, d)
    }
}

impl<T: Scalar> From<T> for Rat<T> {
    fn from(v: T) -> Self {
        Rat::from_integer(v)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Rat<T> {
            type Output = Rat<T>;
            fn $method(self, rhs: Rat<T>) -> Rat<T> {
                Rat(self.0.$method(rhs.0))
            }
        }

        impl<'a, T: Scalar> $tr<&'a Rat<T>> for &'a Rat<T> {
            type Output = Rat<T>;
            fn $method(self, rhs: &'a Rat<T>) -> Rat<T> {
                Rat(self.0.clone().$method(rhs.0.clone()))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
// Division by zero panics, as for `Ratio`; use `checked_div` otherwise.
rat_binop!(Div, div);

impl<T: Scalar> Neg for Rat<T> {
    type Output = Rat<T>;
    fn neg(self) -> Rat<T> {
        Rat(-self.0)
    }
}

impl<T: Scalar> Neg for &Rat<T> {
    type Output = Rat<T>;
    fn neg(self) -> Rat<T> {
        Rat(-self.0.clone())
    }
}

/// A class in Q/Z, stored as its least nonnegative representative
/// `num/den` with `0 <= num < den` and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QmodZ<T: Scalar> {
    num: T,
    den: T,
}

impl<T: Scalar> QmodZ<T> {
    pub fn new(num: T, den: T) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let num = num.mod_floor(&den);
        let g = num.gcd(&den);
        Ok(QmodZ {
            num: num / g.clone(),
            den: den / g,
        })
    }

    pub fn zero() -> Self {
        QmodZ {
            num: T::zero(),
            den: T::one(),
        }
    }

    pub fn from_rational(r: &Rat<T>) -> Self {
        QmodZ::new(r.numer().clone(), r.denom().clone()).expect("rational has nonzero denominator")
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order of the class in the group Q/Z.
    pub fn order(&self) -> &T {
        &self.den
    }

    /// Representative in `[0, 1)` as a rational.
    pub fn to_rational(&self) -> Rat<T> {
        Rat::new(self.num.clone(), self.den.clone()).expect("den > 0")
    }

    /// Identifies `x` with `-x`: returns whichever of the two has the smaller
    /// representative, i.e. `num/den` with `2·num <= den`.
    pub fn fold_sign(&self) -> Self {
        let two = T::one() + T::one();
        if two * self.num.clone() > self.den {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl<T: Scalar> Add for QmodZ<T> {
    type Output = QmodZ<T>;
    fn add(self, rhs: QmodZ<T>) -> QmodZ<T> {
        &self + &rhs
    }
}

impl<'a, T: Scalar> Add<&'a QmodZ<T>> for &'a QmodZ<T> {
    type Output = QmodZ<T>;
    fn add(self, rhs: &'a QmodZ<T>) -> QmodZ<T> {
        let num = self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone();
        QmodZ::new(num, self.den.clone() * rhs.den.clone()).expect("den > 0")
    }
}

impl<T: Scalar> Neg for QmodZ<T> {
    type Output = QmodZ<T>;
    fn neg(self) -> QmodZ<T> {
        if self.num.is_zero() {
            self
        } else {
            QmodZ {
                num: self.den.clone() - self.num,
                den: self.den,
            }
        }
    }
}

impl<T: Scalar> Neg for &QmodZ<T> {
    type Output = QmodZ<T>;
    fn neg(self) -> QmodZ<T> {
        -self.clone()
    }
}

impl<T: Scalar> Sub for QmodZ<T> {
    type Output = QmodZ<T>;
    fn sub(self, rhs: QmodZ<T>) -> QmodZ<T> {
        self + (-rhs)
    }
}

// Ordered by the representative in [0, 1).
impl<T: Scalar> Ord for QmodZ<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.clone() * other.den.clone()).cmp(&(other.num.clone() * self.den.clone()))
    }
}

impl<T: Scalar> PartialOrd for QmodZ<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> fmt::Display for QmodZ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Scalar> fmt::Debug for QmodZ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} mod Z", self.num, self.den)
    }
}

impl<T: Scalar> FromStr for QmodZ<T> {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = split_fraction(s)?;
        QmodZ::new(n, d)
    }
}

/// An element of Z/m, stored as `0 <= value < modulus`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Residue<T: Scalar> {
    value: T,
    modulus: T,
}

impl<T: Scalar> Residue<T> {
    pub fn new(value: T, modulus: T) -> Result<Self, ExactError> {
        if !modulus.is_positive() {
            return Err(ExactError::NonPositiveModulus(modulus.to_string()));
        }
        Ok(Residue {
            value: value.mod_floor(&modulus),
            modulus,
        })
    }

    pub fn value(&self) -> &T {
        &self.value
    }

    pub fn modulus(&self) -> &T {
        &self.modulus
    }

    fn check_modulus(&self, other: &Self) {
        assert!(
            self.modulus == other.modulus,
            "residues mod {} and mod {} cannot be combined",
            self.modulus,
            other.modulus
        );
    }
}

/// `a ≡ b (mod m)`. A zero modulus means equality.
pub fn congruent<T: Scalar>(a: &T, b: &T, m: &T) -> bool {
    if m.is_zero() {
        a == b
    } else {
        (a.clone() - b.clone()).is_multiple_of(m)
    }
}

// Mixing moduli panics.
impl<T: Scalar> Add for Residue<T> {
    type Output = Residue<T>;
    fn add(self, rhs: Residue<T>) -> Residue<T> {
        self.check_modulus(&rhs);
        Residue::new(self.value + rhs.value, self.modulus).expect("modulus > 0")
    }
}

impl<T: Scalar> Sub for Residue<T> {
    type Output = Residue<T>;
    fn sub(self, rhs: Residue<T>) -> Residue<T> {
        self.check_modulus(&rhs);
        Residue::new(self.value - rhs.value, self.modulus).expect("modulus > 0")
    }
}

impl<T: Scalar> Neg for Residue<T> {
    type Output = Residue<T>;
    fn neg(self) -> Residue<T> {
        Residue::new(-self.value, self.modulus).expect("modulus > 0")
    }
}

impl<T: Scalar> fmt::Display for Residue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

macro_rules! string_serde {
    ($ty:ident) => {
        impl<T: Scalar> Serialize for $ty<T> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de, T: Scalar> Deserialize<'de> for $ty<T> {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(D::Error::custom)
            }
        }
    };
}

string_serde!(Rat);
string_serde!(QmodZ);

/// JSON number carrying the exact decimal expansion of an integer.
pub fn int_json<T: Scalar>(v: &T) -> serde_json::Value {
    let n: serde_json::Number = v.to_string().parse().expect("integer decimal is a JSON number");
    serde_json::Value::Number(n)
}
