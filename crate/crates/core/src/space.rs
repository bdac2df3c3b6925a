//! Invariants of the sphere bundle `M_k = S(E_k)` and disk bundle
//! `W_k = D(E_k)` of a bundle `E_k` over S⁴.
//!
//! `W_k` is oriented so that the square of a generator of
//! H⁴(W_k, M_k; Z) ≅ Z is positive on the fundamental class, which makes
//! `sign(W_k) = +1`, and `M_k` carries the boundary orientation.
//! [`Orientation::Negative`] reverses both.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bundle::{BundleClass, Orientation};
use crate::exactnum::{int_json, QmodZ, Rat};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("mu-invariant is only computed for homotopy spheres (|n| = 1), got n = {0}")]
    NotHomotopySphere(String),
    #[error("mu-invariant needs odd k, got k = {0}")]
    EvenPont(String),
}

/// A finitely generated abelian group of rank at most one with at most one
/// cyclic torsion summand, which covers every group the Gysin sequence of an
/// S³-bundle over S⁴ produces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CohomologyGroup<T: Scalar> {
    Zero,
    Free,
    /// Z/mZ with m ≥ 2.
    Cyclic(T),
}

impl<T: Scalar> CohomologyGroup<T> {
    /// Z/mZ, with Z/0Z = Z and Z/±1Z = 0.
    pub fn cyclic(m: T) -> Self {
        let m = m.abs();
        if m.is_zero() {
            CohomologyGroup::Free
        } else if m.is_one() {
            CohomologyGroup::Zero
        } else {
            CohomologyGroup::Cyclic(m)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyGroup::Zero)
    }

    /// Number of elements; `None` for Z.
    pub fn order(&self) -> Option<T> {
        match self {
            CohomologyGroup::Zero => Some(T::one()),
            CohomologyGroup::Free => None,
            CohomologyGroup::Cyclic(m) => Some(m.clone()),
        }
    }
}

impl<T: Scalar> fmt::Display for CohomologyGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyGroup::Zero => f.write_str("0"),
            CohomologyGroup::Free => f.write_str("Z"),
            CohomologyGroup::Cyclic(m) => write!(f, "Z/{m}Z"),
        }
    }
}

impl<T: Scalar> Serialize for CohomologyGroup<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integral cohomology H^i(M; Z) for i = 0..7.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent, bound = "")]
pub struct CohomologyTable<T: Scalar> {
    groups: Vec<CohomologyGroup<T>>,
}

impl<T: Scalar> CohomologyTable<T> {
    pub fn degree(&self, i: usize) -> &CohomologyGroup<T> {
        &self.groups[i]
    }

    pub fn groups(&self) -> &[CohomologyGroup<T>] {
        &self.groups
    }

    /// Same cohomology as S⁷.
    pub fn is_sphere_like(&self) -> bool {
        self.groups.iter().enumerate().all(|(i, g)| match i {
            0 | 7 => *g == CohomologyGroup::Free,
            _ => g.is_zero(),
        })
    }
}

impl<T: Scalar> fmt::Display for CohomologyTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

const FIBER_DIM: i32 = 3;
const BASE_DIM: i32 = 4;
const TOTAL_DIM: i32 = FIBER_DIM + BASE_DIM;

// H^i(S⁴; Z): free in degrees 0 and 4, zero elsewhere. Either Zero or Free.
fn base_group<T: Scalar>(deg: i32) -> CohomologyGroup<T> {
    if deg == 0 || deg == BASE_DIM {
        CohomologyGroup::Free
    } else {
        CohomologyGroup::Zero
    }
}

// Cup product with e = n·u, H^deg(S⁴) → H^{deg+4}(S⁴), as (source, target, multiplier).
fn euler_map<T: Scalar>(deg: i32, n: &T) -> (CohomologyGroup<T>, CohomologyGroup<T>, T) {
    (base_group(deg), base_group(deg + BASE_DIM), n.clone())
}

fn cokernel<T: Scalar>((src, dst, n): (CohomologyGroup<T>, CohomologyGroup<T>, T)) -> CohomologyGroup<T> {
    match (src, dst) {
        (_, CohomologyGroup::Zero) => CohomologyGroup::Zero,
        (CohomologyGroup::Zero, d) => d,
        (CohomologyGroup::Free, CohomologyGroup::Free) => CohomologyGroup::cyclic(n),
        _ => unreachable!("base cohomology of S⁴ is torsion-free"),
    }
}

fn kernel<T: Scalar>((src, dst, n): (CohomologyGroup<T>, CohomologyGroup<T>, T)) -> CohomologyGroup<T> {
    match (src, dst) {
        (CohomologyGroup::Zero, _) => CohomologyGroup::Zero,
        (s, CohomologyGroup::Zero) => s,
        (CohomologyGroup::Free, CohomologyGroup::Free) if n.is_zero() => CohomologyGroup::Free,
        (CohomologyGroup::Free, CohomologyGroup::Free) => CohomologyGroup::Zero,
        _ => unreachable!("base cohomology of S⁴ is torsion-free"),
    }
}

/// Integral cohomology of the sphere bundle, read off the Gysin sequence
///
/// ```text
/// H^{i-4}(S⁴) --∪e--> H^i(S⁴) --π*--> H^i(M) --> H^{i-3}(S⁴) --∪e--> H^{i+1}(S⁴)
/// ```
///
/// so that `0 → coker(∪e) → H^i(M) → ker(∪e) → 0`. For base S⁴ at most one
/// end of each short exact sequence is nonzero.
pub fn cohomology<T: Scalar>(b: &BundleClass<T>) -> CohomologyTable<T> {
    let n = b.euler();
    let groups = (0..=TOTAL_DIM)
        .map(|i| {
            let sub = cokernel(euler_map(i - BASE_DIM, n));
            let quot = kernel(euler_map(i - FIBER_DIM, n));
            match (sub.is_zero(), quot.is_zero()) {
                (_, true) => sub,
                (true, false) => quot,
                (false, false) => unreachable!("no extension problem over S⁴"),
            }
        })
        .collect();
    CohomologyTable { groups }
}

/// Signature of `W_k` in the given orientation.
pub fn signature_w<T: Scalar>(o: Orientation) -> T {
    o.apply(T::one())
}

/// Relative Pontryagin number `p₁²[W_k]` for the orientation with
/// `sign(W_k) = +1`.
///
/// The Thom class `τ ∈ H⁴(W, M)` restricts to `e = n·π*u`, so the preimage of
/// `p₁(W) = 2k·π*u` is `x = (2k/n)·τ`, and `⟨τ², [W, M]⟩ = ⟨τ·π*e⟩ = n`.
/// Hence `⟨x², [W, M]⟩ = 4k²/n`, computed with `|n|` because that orientation
/// has `⟨τ², [W, M]⟩ > 0`.
pub fn p1_squared_w<T: Scalar>(b: &BundleClass<T>) -> Rat<T> {
    let k = b.pont().clone();
    Rat::new(T::lit(4) * k.clone() * k, b.euler().abs()).expect("euler is nonzero")
}

/// `p₁²[W_k]` in the given orientation of `W_k`.
pub fn p1_squared_w_oriented<T: Scalar>(b: &BundleClass<T>, o: Orientation) -> Rat<T> {
    o.apply(p1_squared_w(b))
}

/// Denominator 2⁷·7 of the Eells–Kuiper formula in dimension 7.
const EK_DENOMINATOR: i64 = 896;

/// Eells–Kuiper invariant of a Milnor sphere `M_k`, evaluated on the spin
/// coboundary `W_k`: `μ = (p₁²[W] − 4·sign(W)) / 896 mod Z`.
pub fn mu_invariant<T: Scalar>(b: &BundleClass<T>, o: Orientation) -> Result<QmodZ<T>, SpaceError> {
    if !b.is_milnor() {
        return Err(SpaceError::NotHomotopySphere(b.euler().to_string()));
    }
    if b.pont().is_even() {
        return Err(SpaceError::EvenPont(b.pont().to_string()));
    }
    let p1sq = p1_squared_w_oriented(b, o);
    let sign = Rat::from_integer(signature_w::<T>(o));
    let defect = p1sq - Rat::from_integer(T::lit(4)) * sign;
    let value = defect
        .checked_div(&Rat::from_integer(T::lit(EK_DENOMINATOR)))
        .expect("nonzero denominator");
    Ok(QmodZ::from_rational(&value))
}

// h ↦ h(h−1)/2 mod 28 has period dividing 56.
const MU_PERIOD_IN_H: i64 = 56;

/// μ-values of all Milnor spheres `M_k`, `k = 2h − 1` odd, for the standard
/// orientation. Sorted by representative in [0, 1).
pub fn realized_mu_set<T: Scalar>() -> BTreeSet<QmodZ<T>> {
    realized_mu_over::<T>(0..MU_PERIOD_IN_H)
}

pub(crate) fn realized_mu_over<T: Scalar>(hs: impl Iterator<Item = i64>) -> BTreeSet<QmodZ<T>> {
    hs.map(|h| {
        let b = BundleClass::new(T::one(), T::lit(2 * h - 1)).expect("odd k with n = 1");
        mu_invariant(&b, Orientation::Positive).expect("Milnor sphere")
    })
    .collect()
}

/// [`realized_mu_set`] with each class identified with its negative, i.e.
/// the μ-values of Milnor spheres up to orientation.
pub fn realized_mu_set_unoriented<T: Scalar>() -> BTreeSet<QmodZ<T>> {
    realized_mu_set::<T>().iter().map(QmodZ::fold_sign).collect()
}

/// Everything this crate knows about `M_k` and `W_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpaceDossier<T: Scalar> {
    pub bundle: BundleClass<T>,
    pub orientation: Orientation,
    pub cohomology: CohomologyTable<T>,
    pub is_homotopy_sphere: bool,
    pub sign_w: T,
    pub p1sq_w: Rat<T>,
    pub mu: Option<QmodZ<T>>,
}

pub fn dossier<T: Scalar>(b: &BundleClass<T>, o: Orientation) -> SpaceDossier<T> {
    let cohomology = cohomology(b);
    let is_homotopy_sphere = cohomology.is_sphere_like();
    debug_assert_eq!(is_homotopy_sphere, b.is_milnor());
    let mu = if is_homotopy_sphere {
        Some(mu_invariant(b, o).expect("homotopy sphere has odd k"))
    } else {
        None
    };
    SpaceDossier {
        bundle: b.clone(),
        orientation: o,
        cohomology,
        is_homotopy_sphere,
        sign_w: signature_w(o),
        p1sq_w: p1_squared_w_oriented(b, o),
        mu,
    }
}

impl<T: Scalar> Serialize for SpaceDossier<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(8))?;
        map.serialize_entry("euler", &int_json(self.bundle.euler()))?;
        map.serialize_entry("k", &int_json(self.bundle.pont()))?;
        map.serialize_entry("orientation", &self.orientation)?;
        map.serialize_entry("cohomology", &self.cohomology)?;
        map.serialize_entry("is_homotopy_sphere", &self.is_homotopy_sphere)?;
        map.serialize_entry("sign_W", &int_json(&self.sign_w))?;
        map.serialize_entry("p1sq_W", &self.p1sq_w)?;
        map.serialize_entry("mu", &self.mu)?;
        map.end()
    }
}
