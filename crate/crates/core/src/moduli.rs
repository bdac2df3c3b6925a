//! Separation of Grove–Ziller metrics in the moduli space of nonnegatively
//! curved metrics.
//!
//! Suppose `GZ(k0)` and `GZ(k1)` on `M ≅ M_{k0} ≅ M_{k1}` lie in one path
//! component. Gluing `W_{k0}`, a psc cylinder `M × [0, a]` and `−W_{k1}` gives
//! a closed spin 8-manifold `X` with `sign(X) = 1 − 1 = 0` and, by
//! Lichnerowicz, `Â(X) = 0`. The two index forms below are then a
//! nonsingular linear system forcing `⟨p₁(X)², [X]⟩ = 0`. Since
//! `⟨p₁(X)², [X]⟩ = p₁²[W_{k0}] − p₁²[W_{k1}]`, a nonzero difference
//! contradicts the assumption. Metrics appear only as labels.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bundle::{BundleClass, Orientation};
use crate::classify::gz_family;
use crate::exactnum::{int_json, Rat};
use crate::scalar::Scalar;
use crate::space::{p1_squared_w, signature_w};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("certificate needs equal Euler coefficients, got {0} and {1}")]
    MismatchedEuler(String, String),
}

fn lit<T: Scalar>(v: i64) -> Rat<T> {
    Rat::from_integer(T::lit(v))
}

/// Â-genus and signature of a closed 8-manifold from its Pontryagin numbers
/// `p₁²` and `p₂`:
///
/// ```text
/// Â    = (7·p₁² − 4·p₂) / 5760
/// sign = (7·p₂ − p₁²) / 45
/// ```
pub fn index_forms_dim8<T: Scalar>(p1sq: &Rat<T>, p2: &Rat<T>) -> (Rat<T>, Rat<T>) {
    let ahat = (&(&lit(7) * p1sq) - &(&lit(4) * p2)) / lit(5760);
    let sign = (&(&lit(7) * p2) - p1sq) / lit(45);
    (ahat, sign)
}

/// Inverts [`index_forms_dim8`]: the Pontryagin numbers `(p₁², p₂)` of a
/// closed 8-manifold with the given Â-genus and signature.
///
/// Solves `7·p₁² − 4·p₂ = 5760·Â`, `−p₁² + 7·p₂ = 45·sign` by Cramer's rule;
/// the determinant is 45.
pub fn deduce_pontryagin_numbers<T: Scalar>(ahat: &Rat<T>, sign: &Rat<T>) -> (Rat<T>, Rat<T>) {
    let (a11, a12, a21, a22) = (lit::<T>(7), lit::<T>(-4), lit::<T>(-1), lit::<T>(7));
    let rhs1 = &lit(5760) * ahat;
    let rhs2 = &lit(45) * sign;
    let det = &(&a11 * &a22) - &(&a12 * &a21);
    let p1sq = (&(&rhs1 * &a22) - &(&a12 * &rhs2)) / det.clone();
    let p2 = (&(&a11 * &rhs2) - &(&rhs1 * &a21)) / det;
    (p1sq, p2)
}

/// What is known about `Â(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AhatConstraint {
    /// `X` carries a metric of positive scalar curvature somewhere and
    /// nonnegative everywhere, so its Dirac operator is invertible.
    ForcedZero,
    Unconstrained,
}

impl Serialize for AhatConstraint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            AhatConstraint::ForcedZero => "forced-zero",
            AhatConstraint::Unconstrained => "unconstrained",
        })
    }
}

/// Invariants of `X = W_{k0} ∪ (M × [0, a]) ∪ −W_{k1}`. None of them depend
/// on the gluing maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GluedManifoldInvariants<T: Scalar> {
    pub sign_x: T,
    pub p1sq_x: Rat<T>,
    pub ahat_constraint: AhatConstraint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeparationVerdict {
    DistinctComponents,
    Inconclusive,
}

/// How the p₁² difference was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum P1sqDerivation {
    /// `n = 1`: `(2k0)² − (2k1)²`.
    MilnorClosedForm,
    /// General `n`: `4(k0² − k1²)/n` from the Thom isomorphism.
    ThomIsomorphism,
}

impl P1sqDerivation {
    pub fn formula(self) -> &'static str {
        match self {
            P1sqDerivation::MilnorClosedForm => "(2k0)^2-(2k1)^2",
            P1sqDerivation::ThomIsomorphism => "4(k0^2-k1^2)/n [derived via Thom isomorphism]",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvatureClass {
    NonnegativeSectional,
    PositiveRicci,
    PositiveScalar,
}

impl CurvatureClass {
    pub fn tag(self) -> &'static str {
        match self {
            CurvatureClass::NonnegativeSectional => "sec>=0",
            CurvatureClass::PositiveRicci => "Ric>0",
            CurvatureClass::PositiveScalar => "scal>0",
        }
    }

    /// Moduli spaces the separation applies to; `scal>0` is optional.
    pub fn separated(include_scal: bool) -> Vec<CurvatureClass> {
        let mut v = vec![CurvatureClass::NonnegativeSectional, CurvatureClass::PositiveRicci];
        if include_scal {
            v.push(CurvatureClass::PositiveScalar);
        }
        v
    }
}

impl Serialize for CurvatureClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Analytic steps of the argument that carry no finite data, as
/// `(name, statement)` pairs for human audit.
pub const PROVENANCE: &[(&str, &str)] = &[
    (
        "slice theorem",
        "a path between the classes in the moduli space lifts to a path of metrics on M (Ebin)",
    ),
    (
        "Ricci flow",
        "the lifted sec>=0 path is deformed into a path of Ric>0 metrics (Boehm-Wilking)",
    ),
    (
        "stretching",
        "the fiberwise psc metric on M x [0,a] has psc once a is large enough (Gromov-Lawson)",
    ),
    (
        "Lichnerowicz",
        "X is closed spin with scal >= 0, positive somewhere, so A-hat(X) = 0",
    ),
];

/// Transcript of the separation argument for one pair `(k0, k1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparationCertificate<T: Scalar> {
    pub pair: (BundleClass<T>, BundleClass<T>),
    pub metric_labels: (String, String),
    pub glued: GluedManifoldInvariants<T>,
    pub verdict: SeparationVerdict,
    /// `⟨p₁(X)², [X]⟩`, nonzero exactly when the verdict is
    /// `DistinctComponents`.
    pub contradiction_value: Rat<T>,
    pub derivation: P1sqDerivation,
    pub curvature_classes: Vec<CurvatureClass>,
}

pub fn metric_label<T: Scalar>(b: &BundleClass<T>) -> String {
    format!("GZ({})", b.pont())
}

/// Runs the gluing argument for `b0`, `b1` with equal Euler coefficient.
/// Whether the sphere bundles are oriented-diffeomorphic is for the caller to
/// establish; the certificate only transcribes the contradiction.
pub fn separation_certificate<T: Scalar>(
    b0: &BundleClass<T>,
    b1: &BundleClass<T>,
) -> Result<SeparationCertificate<T>, ModuliError> {
    if b0.euler() != b1.euler() {
        return Err(ModuliError::MismatchedEuler(
            b0.euler().to_string(),
            b1.euler().to_string(),
        ));
    }
    let (b0, b1) = (b0.normalized(), b1.normalized());

    // W_{k0} enters with its own orientation, W_{k1} reversed.
    let sign_x = signature_w::<T>(Orientation::Positive) - signature_w::<T>(Orientation::Positive);
    let p1sq_x = p1_squared_w(&b0) - p1_squared_w(&b1);
    let glued = GluedManifoldInvariants {
        sign_x,
        p1sq_x,
        ahat_constraint: AhatConstraint::ForcedZero,
    };

    let forced_p1sq = match glued.ahat_constraint {
        AhatConstraint::ForcedZero => {
            Some(deduce_pontryagin_numbers(&Rat::zero(), &Rat::from_integer(glued.sign_x.clone())).0)
        }
        AhatConstraint::Unconstrained => None,
    };
    let verdict = match forced_p1sq {
        Some(forced) if glued.sign_x.is_zero() && forced != glued.p1sq_x => SeparationVerdict::DistinctComponents,
        _ => SeparationVerdict::Inconclusive,
    };

    let derivation = if b0.euler().is_one() {
        P1sqDerivation::MilnorClosedForm
    } else {
        P1sqDerivation::ThomIsomorphism
    };

    Ok(SeparationCertificate {
        metric_labels: (metric_label(&b0), metric_label(&b1)),
        contradiction_value: glued.p1sq_x.clone(),
        pair: (b0, b1),
        glued,
        verdict,
        derivation,
        curvature_classes: CurvatureClass::separated(true),
    })
}

impl<T: Scalar> SeparationCertificate<T> {
    pub fn with_curvature_classes(mut self, classes: Vec<CurvatureClass>) -> Self {
        self.curvature_classes = classes;
        self
    }

    pub fn is_distinct(&self) -> bool {
        self.verdict == SeparationVerdict::DistinctComponents
    }
}

impl<T: Scalar> Serialize for SeparationCertificate<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (b0, b1) = &self.pair;
        let mut map = s.serialize_map(Some(11))?;
        map.serialize_entry("n", &int_json(b0.euler()))?;
        map.serialize_entry("k0", &int_json(b0.pont()))?;
        map.serialize_entry("k1", &int_json(b1.pont()))?;
        map.serialize_entry("metrics", &[&self.metric_labels.0, &self.metric_labels.1])?;
        map.serialize_entry("sign_X", &int_json(&self.glued.sign_x))?;
        map.serialize_entry("p1sq_X", &self.glued.p1sq_x)?;
        map.serialize_entry("p1sq_formula", self.derivation.formula())?;
        map.serialize_entry("ahat", &self.glued.ahat_constraint)?;
        map.serialize_entry("verdict", &self.verdict)?;
        map.serialize_entry("curvature_classes", &self.curvature_classes)?;
        map.end()
    }
}

/// Pairwise certificates over the first `pairs + 1` members of the family
/// `k ∈ l + 112n·N`. The family is unbounded, so all pairs being separated
/// witnesses infinitely many path components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentsReport<T: Scalar> {
    pub base: BundleClass<T>,
    pub family: Vec<BundleClass<T>>,
    /// Ordered lexicographically by `(k0, k1)`.
    pub certificates: Vec<SeparationCertificate<T>>,
    pub curvature_classes: Vec<CurvatureClass>,
}

pub const COMPONENTS_BANNER: &str = "infinitely many path components certified";

impl<T: Scalar> ComponentsReport<T> {
    /// `None` when there is nothing to certify.
    pub fn all_distinct(&self) -> Option<bool> {
        (!self.certificates.is_empty()).then(|| self.certificates.iter().all(SeparationCertificate::is_distinct))
    }

    pub fn banner(&self) -> Option<String> {
        (self.all_distinct() == Some(true)).then(|| {
            format!(
                "{COMPONENTS_BANNER}: {} pairwise certificates over k = {} + {}·j, j ≥ 0 (family is unbounded)",
                self.certificates.len(),
                self.base.pont(),
                crate::classify::family_step(self.base.euler()),
            )
        })
    }
}

pub fn infinite_components_report<T: Scalar>(b: &BundleClass<T>, pairs: usize) -> ComponentsReport<T> {
    infinite_components_report_with(b, pairs, CurvatureClass::separated(true))
}

pub fn infinite_components_report_with<T: Scalar>(
    b: &BundleClass<T>,
    pairs: usize,
    curvature_classes: Vec<CurvatureClass>,
) -> ComponentsReport<T> {
    let base = b.normalized();
    let family = gz_family(&base, pairs + 1);
    let mut certificates = Vec::new();
    for (i, b0) in family.iter().enumerate() {
        for b1 in &family[i + 1..] {
            let cert = separation_certificate(b0, b1)
                .expect("family shares the Euler coefficient")
                .with_curvature_classes(curvature_classes.clone());
            certificates.push(cert);
        }
    }
    ComponentsReport {
        base,
        family,
        certificates,
        curvature_classes,
    }
}

impl<T: Scalar> Serialize for ComponentsReport<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let ks: Vec<_> = self.family.iter().map(|b| int_json(b.pont())).collect();
        let mut map = s.serialize_map(Some(7))?;
        map.serialize_entry("n", &int_json(self.base.euler()))?;
        map.serialize_entry("l", &int_json(self.base.pont()))?;
        map.serialize_entry("family", &ks)?;
        map.serialize_entry("certificates", &self.certificates)?;
        map.serialize_entry("all_distinct", &self.all_distinct())?;
        map.serialize_entry("banner", &self.banner())?;
        map.serialize_entry("curvature_classes", &self.curvature_classes)?;
        map.end()
    }
}

impl fmt::Display for SeparationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Rat<BigInt> {
        Rat::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    fn b(n: i64, k: i64) -> BundleClass<BigInt> {
        BundleClass::new(BigInt::from(n), BigInt::from(k)).unwrap()
    }

    // HP²: p₁ = 2x, p₂ = 7x², so p₁² = 4 and p₂ = 7; signature 1, Â = 0.
    #[test]
    fn index_forms_quaternionic_plane() {
        assert_eq!(index_forms_dim8(&r(4, 1), &r(7, 1)), (r(0, 1), r(1, 1)));
        assert_eq!(deduce_pontryagin_numbers(&r(0, 1), &r(1, 1)), (r(4, 1), r(7, 1)));
    }

    #[test]
    fn index_forms_other_examples() {
        assert_eq!(index_forms_dim8(&r(0, 1), &r(0, 1)), (r(0, 1), r(0, 1)));
        assert_eq!(index_forms_dim8(&r(45, 1), &r(0, 1)), (r(7, 128), r(-1, 1)));
        assert_eq!(deduce_pontryagin_numbers(&r(0, 1), &r(0, 1)), (r(0, 1), r(0, 1)));
    }

    #[test]
    fn certificate_examples() {
        let c = separation_certificate(&b(1, 1), &b(1, 113)).unwrap();
        assert_eq!(c.glued.sign_x, BigInt::from(0));
        assert_eq!(c.contradiction_value.to_string(), "-51072/1");
        assert_eq!(c.verdict, SeparationVerdict::DistinctComponents);
        assert_eq!(c.derivation, P1sqDerivation::MilnorClosedForm);
        assert_eq!(c.metric_labels, ("GZ(1)".to_owned(), "GZ(113)".to_owned()));

        let c = separation_certificate(&b(1, 3), &b(1, 3)).unwrap();
        assert_eq!(c.verdict, SeparationVerdict::Inconclusive);
        assert!(c.contradiction_value.is_zero());

        let c = separation_certificate(&b(3, 1), &b(3, 337)).unwrap();
        assert_eq!(c.contradiction_value.to_string(), "-151424/1");
        assert_eq!(c.verdict, SeparationVerdict::DistinctComponents);
        assert_eq!(c.derivation, P1sqDerivation::ThomIsomorphism);

        // k1 = -k0 has the same p₁²: the method says nothing
        let c = separation_certificate(&b(1, 5), &b(1, -5)).unwrap();
        assert_eq!(c.verdict, SeparationVerdict::Inconclusive);
    }

    #[test]
    fn certificate_rejects_mismatched_euler() {
        assert_eq!(
            separation_certificate(&b(1, 1), &b(3, 1)),
            Err(ModuliError::MismatchedEuler("1".into(), "3".into()))
        );
    }

    #[test]
    fn certificate_json() {
        let c = separation_certificate(&b(1, 1), &b(1, 113)).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["p1sq_X"], "-51072/1");
        assert_eq!(v["ahat"], "forced-zero");
        assert_eq!(v["verdict"], "DistinctComponents");
        assert_eq!(v["sign_X"], 0);
        assert_eq!(v["curvature_classes"].to_string(), r#"["sec>=0","Ric>0","scal>0"]"#);
        let c = c.with_curvature_classes(CurvatureClass::separated(false));
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["curvature_classes"].to_string(), r#"["sec>=0","Ric>0"]"#);
    }

    #[test]
    fn components_examples() {
        let rep = infinite_components_report(&b(1, 3), 3);
        let ks: Vec<_> = rep.family.iter().map(|b| b.pont().clone()).collect();
        assert_eq!(ks, [3, 115, 227, 339].map(BigInt::from));
        assert_eq!(rep.certificates.len(), 6);
        assert_eq!(rep.all_distinct(), Some(true));
        assert!(rep.banner().unwrap().starts_with(COMPONENTS_BANNER));

        let rep = infinite_components_report(&b(10, 2), 2);
        let ks: Vec<_> = rep.family.iter().map(|b| b.pont().clone()).collect();
        assert_eq!(ks, [2, 1122, 2242].map(BigInt::from));
        assert_eq!(rep.all_distinct(), Some(true));

        let rep = infinite_components_report(&b(1, 3), 0);
        assert!(rep.certificates.is_empty());
        assert_eq!(rep.all_distinct(), None);
        assert_eq!(rep.banner(), None);
    }

    #[test]
    fn certificates_are_lexicographic() {
        let rep = infinite_components_report(&b(2, 2), 3);
        let pairs: Vec<_> = rep
            .certificates
            .iter()
            .map(|c| (c.pair.0.pont().clone(), c.pair.1.pont().clone()))
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
    }
}
