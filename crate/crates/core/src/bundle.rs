//! Oriented rank-4 real vector bundles over S⁴.
//!
//! Such a bundle is classified by its Euler class `e = n·u` and first
//! Pontryagin class `p₁ = 2k·u`, where `u` generates H⁴(S⁴;Z). A pair
//! `(n, k)` is realized exactly when `2k ≡ 2n (mod 4)`, i.e. `k ≡ n (mod 2)`.
//! Only the integer coefficients are stored; the generator never appears.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{congruent, int_json};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("Euler class must be non-trivial (n = 0 gives H^4(M;Q) != 0)")]
    TrivialEuler,
    #[error("parity violation: k ≡ n (mod 2) required (got n = {n}, k = {k})")]
    Parity { n: String, k: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }

    /// Multiplies `v` by the sign.
    pub fn apply<V: std::ops::Neg<Output = V>>(self, v: V) -> V {
        match self {
            Orientation::Positive => v,
            Orientation::Negative => -v,
        }
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.sign())
    }
}

/// Isomorphism class of an oriented rank-4 bundle `E` over S⁴ with
/// `e(E) = euler·u` and `p₁(E) = 2·pont·u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BundleClass<T: Scalar> {
    euler: T,
    pont: T,
}

impl<T: Scalar> BundleClass<T> {
    pub fn new(euler: T, pont: T) -> Result<Self, BundleError> {
        if euler.is_zero() {
            return Err(BundleError::TrivialEuler);
        }
        if !congruent(&euler, &pont, &T::lit(2)) {
            return Err(BundleError::Parity {
                n: euler.to_string(),
                k: pont.to_string(),
            });
        }
        Ok(BundleClass { euler, pont })
    }

    /// Bundle with Milnor's parameters `(m, n)`, which correspond to
    /// `e = n·u`, `k = n + 2m`.
    pub fn from_milnor_params(m: T, n: T) -> Result<Self, BundleError> {
        let k = n.clone() + T::lit(2) * m;
        BundleClass::new(n, k)
    }

    /// Coefficient `n` of the Euler class.
    pub fn euler(&self) -> &T {
        &self.euler
    }

    /// The `k` in `p₁ = 2k·u`.
    pub fn pont(&self) -> &T {
        &self.pont
    }

    /// Same bundle with the opposite orientation: `e` flips sign, `p₁` does not.
    pub fn reverse_orientation(&self) -> Self {
        BundleClass {
            euler: -self.euler.clone(),
            pont: self.pont.clone(),
        }
    }

    /// Representative with `euler > 0`. The sphere bundle is the same manifold
    /// either way.
    pub fn normalized(&self) -> Self {
        if self.euler.is_negative() {
            self.reverse_orientation()
        } else {
            self.clone()
        }
    }

    /// `|n| = 1`, i.e. the sphere bundle is a homotopy sphere.
    pub fn is_milnor(&self) -> bool {
        self.euler.abs().is_one()
    }
}

impl<T: Scalar> fmt::Debug for BundleClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E(n={}, k={})", self.euler, self.pont)
    }
}

impl<T: Scalar> fmt::Display for BundleClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<T: Scalar> Serialize for BundleClass<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("euler", &int_json(&self.euler))?;
        map.serialize_entry("k", &int_json(&self.pont))?;
        map.end()
    }
}
