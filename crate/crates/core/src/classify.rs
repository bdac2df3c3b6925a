//! Homeomorphism and diffeomorphism deciders for sphere bundles `M_k`, the
//! group Θ₇ of homotopy 7-spheres, Grove–Ziller families and censuses.
//!
//! The available criteria are one complete invariant (μ, for homotopy
//! spheres) and sufficient congruences for `n > 1`. A verdict is `No` only
//! when an invariant actually differs; otherwise an unmet congruence yields
//! `Unknown`.

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bundle::{BundleClass, Orientation};
use crate::exactnum::{congruent, int_json, QmodZ, Residue};
use crate::scalar::Scalar;
use crate::space::mu_invariant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("Euler coefficient must be positive, got {0}")]
    NonPositiveEuler(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    CohomologyObstruction,
    MuInvariantEqual,
    MuInvariantDiffer,
    CongruenceMod2n,
    CongruenceMod112n,
    TopologicalSphere,
    OutsideKnownCriteria,
}

impl Reason {
    /// The only answer this reason can justify.
    pub fn answer(self) -> Answer {
        match self {
            Reason::CohomologyObstruction | Reason::MuInvariantDiffer => Answer::No,
            Reason::MuInvariantEqual
            | Reason::CongruenceMod2n
            | Reason::CongruenceMod112n
            | Reason::TopologicalSphere => Answer::Yes,
            Reason::OutsideKnownCriteria => Answer::Unknown,
        }
    }
}

/// Answer to "are these two manifolds equivalent?" together with the
/// criterion that decided it. The answer is derived from the reason, so an
/// unsupported `No` cannot be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiffeoVerdict {
    reason: Reason,
}

impl DiffeoVerdict {
    pub fn from_reason(reason: Reason) -> Self {
        DiffeoVerdict { reason }
    }

    pub fn answer(&self) -> Answer {
        self.reason.answer()
    }

    pub fn reason(&self) -> Reason {
        self.reason
    }
}

impl fmt::Display for DiffeoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.answer(), self.reason)
    }
}

impl Serialize for DiffeoVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("answer", &self.answer())?;
        map.serialize_entry("reason", &self.reason)?;
        map.end()
    }
}

fn verdict(reason: Reason) -> DiffeoVerdict {
    DiffeoVerdict::from_reason(reason)
}

/// Homeomorphism of the sphere bundles. `|n|` is the order of H⁴; for
/// `|n| = 1` both are topological spheres; otherwise `k ≡ k' (mod 2n)` is
/// sufficient.
pub fn homeomorphic<T: Scalar>(b1: &BundleClass<T>, b2: &BundleClass<T>) -> DiffeoVerdict {
    let (b1, b2) = (b1.normalized(), b2.normalized());
    if b1.euler() != b2.euler() {
        return verdict(Reason::CohomologyObstruction);
    }
    let n = b1.euler();
    if n.is_one() {
        verdict(Reason::TopologicalSphere)
    } else if congruent(b1.pont(), b2.pont(), &(T::lit(2) * n.clone())) {
        verdict(Reason::CongruenceMod2n)
    } else {
        verdict(Reason::OutsideKnownCriteria)
    }
}

/// Orientation-preserving diffeomorphism of the sphere bundles, each with
/// the orientation induced from `W_k`.
pub fn oriented_diffeomorphic<T: Scalar>(b1: &BundleClass<T>, b2: &BundleClass<T>) -> DiffeoVerdict {
    diffeomorphic_by(b1, b2, |mu| mu)
}

/// Diffeomorphism ignoring orientation. For homotopy spheres μ is compared up
/// to sign; for `n > 1` only the oriented criterion is available.
pub fn unoriented_diffeomorphic<T: Scalar>(b1: &BundleClass<T>, b2: &BundleClass<T>) -> DiffeoVerdict {
    diffeomorphic_by(b1, b2, |mu| mu.fold_sign())
}

fn diffeomorphic_by<T: Scalar>(
    b1: &BundleClass<T>,
    b2: &BundleClass<T>,
    mu_key: impl Fn(QmodZ<T>) -> QmodZ<T>,
) -> DiffeoVerdict {
    let (b1, b2) = (b1.normalized(), b2.normalized());
    if b1.euler() != b2.euler() {
        return verdict(Reason::CohomologyObstruction);
    }
    let n = b1.euler();
    if n.is_one() {
        let mu = |b: &BundleClass<T>| mu_key(mu_invariant(b, Orientation::Positive).expect("n = 1"));
        if mu(&b1) == mu(&b2) {
            verdict(Reason::MuInvariantEqual)
        } else {
            verdict(Reason::MuInvariantDiffer)
        }
    } else if congruent(b1.pont(), b2.pont(), &family_step(n)) {
        verdict(Reason::CongruenceMod112n)
    } else {
        verdict(Reason::OutsideKnownCriteria)
    }
}

/// `112·n`: shifting `k` by this keeps the oriented diffeomorphism type.
pub fn family_step<T: Scalar>(n: &T) -> T {
    T::lit(112) * n.abs()
}

/// The first `count` bundles `k = l, l + 112n, l + 2·112n, …` starting at
/// `b = (n, l)`, all with oriented-diffeomorphic sphere bundles. `b` is first
/// normalized to `n > 0`.
pub fn gz_family<T: Scalar>(b: &BundleClass<T>, count: usize) -> Vec<BundleClass<T>> {
    let b = b.normalized();
    let step = family_step(b.euler());
    std::iter::successors(Some(b.pont().clone()), |k| Some(k.clone() + step.clone()))
        .take(count)
        .map(|k| BundleClass::new(b.euler().clone(), k).expect("step is even"))
        .collect()
}

pub const THETA7_ORDER: i64 = 28;

/// An element of Θ₇ ≅ Z/28, identified with μ = r/28.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Theta7Element<T: Scalar>(Residue<T>);

impl<T: Scalar> Theta7Element<T> {
    pub fn new(r: T) -> Self {
        Theta7Element(Residue::new(r, T::lit(THETA7_ORDER)).expect("28 > 0"))
    }

    pub fn value(&self) -> &T {
        self.0.value()
    }

    pub fn to_mu(&self) -> QmodZ<T> {
        QmodZ::new(self.value().clone(), T::lit(THETA7_ORDER)).expect("28 > 0")
    }

    /// `None` unless `28·mu` is an integer.
    pub fn from_mu(mu: &QmodZ<T>) -> Option<Self> {
        let scaled = mu.numer().clone() * T::lit(THETA7_ORDER);
        scaled
            .is_multiple_of(mu.denom())
            .then(|| Theta7Element::new(scaled / mu.denom().clone()))
    }

    /// Class of the Milnor sphere of `b`, which must have `|n| = 1`.
    pub fn of_milnor_sphere(b: &BundleClass<T>) -> Option<Self> {
        mu_invariant(b, Orientation::Positive)
            .ok()
            .and_then(|mu| Self::from_mu(&mu))
    }
}

/// Connected sum.
impl<T: Scalar> std::ops::Add for Theta7Element<T> {
    type Output = Theta7Element<T>;
    fn add(self, rhs: Self) -> Self {
        Theta7Element(self.0 + rhs.0)
    }
}

/// Orientation reversal.
impl<T: Scalar> std::ops::Neg for Theta7Element<T> {
    type Output = Theta7Element<T>;
    fn neg(self) -> Self {
        Theta7Element(-self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusClass<T: Scalar> {
    /// Smallest `k` in the class.
    pub representative: T,
    pub members_count: u64,
    /// Shared μ-value, present for `n = 1` (folded when unoriented).
    pub mu: Option<QmodZ<T>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport<T: Scalar> {
    pub n: T,
    pub from: T,
    pub to: T,
    pub unoriented: bool,
    /// Values of `k` in range with the wrong parity.
    pub skipped: u64,
    /// Sorted by representative.
    pub classes: Vec<CensusClass<T>>,
    /// Pairs of valid `k` in different classes whose verdict is `Unknown`.
    pub unknown_pairs_count: u128,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum ClassKey<T: Scalar> {
    Mu(QmodZ<T>),
    Residue(T),
}

fn pairs(m: u128) -> u128 {
    m * m.saturating_sub(1) / 2
}

/// Partitions the valid `k ∈ [from, to]` for Euler coefficient `n` into
/// classes on which the diffeomorphism decider answers `Yes`.
///
/// For `n = 1` the classes are the μ-values and every cross-class pair is
/// `No`. For `n > 1` the classes are residues `k mod 112n`, and cross-class
/// pairs are counted as unknown rather than merged.
pub fn census<T: Scalar>(n: &T, from: &T, to: &T, unoriented: bool) -> Result<CensusReport<T>, ClassifyError> {
    if !n.is_positive() {
        return Err(ClassifyError::NonPositiveEuler(n.to_string()));
    }
    let step = family_step(n);
    let mut skipped = 0u64;
    let mut index: HashMap<ClassKey<T>, usize> = HashMap::new();
    let mut classes: Vec<CensusClass<T>> = Vec::new();

    let mut k = from.clone();
    while k <= *to {
        match BundleClass::new(n.clone(), k.clone()) {
            Err(_) => skipped += 1,
            Ok(b) => {
                let (key, mu) = if n.is_one() {
                    let mu = mu_invariant(&b, Orientation::Positive).expect("n = 1");
                    let mu = if unoriented { mu.fold_sign() } else { mu };
                    (ClassKey::Mu(mu.clone()), Some(mu))
                } else {
                    (ClassKey::Residue(k.mod_floor(&step)), None)
                };
                // k increases, so the first member seen is the smallest
                let slot = *index.entry(key).or_insert_with(|| {
                    classes.push(CensusClass {
                        representative: k.clone(),
                        members_count: 0,
                        mu,
                    });
                    classes.len() - 1
                });
                classes[slot].members_count += 1;
            }
        }
        k = k + T::one();
    }

    let unknown_pairs_count = if n.is_one() {
        0
    } else {
        let total: u128 = classes.iter().map(|c| c.members_count as u128).sum();
        pairs(total) - classes.iter().map(|c| pairs(c.members_count as u128)).sum::<u128>()
    };

    Ok(CensusReport {
        n: n.clone(),
        from: from.clone(),
        to: to.clone(),
        unoriented,
        skipped,
        classes,
        unknown_pairs_count,
    })
}

impl<T: Scalar> CensusReport<T> {
    pub fn valid_count(&self) -> u64 {
        self.classes.iter().map(|c| c.members_count).sum()
    }

    /// One row per class, with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("representative\tmembers_count\tmu\n");
        for c in &self.classes {
            let mu = c.mu.as_ref().map_or_else(|| "-".to_owned(), ToString::to_string);
            out.push_str(&format!("{}\t{}\t{}\n", c.representative, c.members_count, mu));
        }
        out
    }
}

impl<T: Scalar> Serialize for CensusClass<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("representative", &int_json(&self.representative))?;
        map.serialize_entry("members_count", &self.members_count)?;
        map.serialize_entry("mu", &self.mu)?;
        map.end()
    }
}

impl<T: Scalar> Serialize for CensusReport<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("n", &int_json(&self.n))?;
        map.serialize_entry("range", &[int_json(&self.from), int_json(&self.to)])?;
        map.serialize_entry("unoriented", &self.unoriented)?;
        map.serialize_entry("skipped", &self.skipped)?;
        map.serialize_entry("classes", &self.classes)?;
        map.serialize_entry("unknown_pairs_count", &self.unknown_pairs_count)?;
        map.end()
    }
}
