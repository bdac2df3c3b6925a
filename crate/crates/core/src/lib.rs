//! Exact topological invariants of linear S³-bundles over S⁴ and the
//! certificates built from them.
//!
//! The total space `M_k` of the bundle with Euler class `n·u` and
//! `p₁ = 2k·u` is a homotopy sphere exactly when `|n| = 1`. This crate
//! computes its cohomology, the relative Pontryagin number of the disk bundle
//! `W_k`, the Eells–Kuiper invariant, homeomorphism and diffeomorphism
//! verdicts, and separation certificates showing that Grove–Ziller metrics
//! `GZ(k)` along a family `k ∈ l + 112n·N` lie in pairwise distinct path
//! components of the moduli space of nonnegatively curved metrics.
//!
//! Everything is generic over an integer [`Scalar`]; the aliases below fix
//! it to `BigInt`, which is what the command-line tool uses.

pub mod bundle;
pub mod classify;
pub mod exactnum;
pub mod moduli;
pub mod scalar;
pub mod space;

pub use bundle::{BundleError, Orientation};
pub use classify::{Answer, ClassifyError, DiffeoVerdict, Reason};
pub use exactnum::ExactError;
pub use moduli::{AhatConstraint, CurvatureClass, ModuliError, SeparationVerdict};
pub use scalar::Scalar;
pub use space::SpaceError;

pub use num_bigint::BigInt;

pub type Rational = exactnum::Rat<BigInt>;
pub type QmodZ = exactnum::QmodZ<BigInt>;
pub type Residue = exactnum::Residue<BigInt>;
pub type BundleClass = bundle::BundleClass<BigInt>;
pub type CohomologyTable = space::CohomologyTable<BigInt>;
pub type SpaceDossier = space::SpaceDossier<BigInt>;
pub type Theta7Element = classify::Theta7Element<BigInt>;
pub type CensusReport = classify::CensusReport<BigInt>;
pub type GluedManifoldInvariants = moduli::GluedManifoldInvariants<BigInt>;
pub type SeparationCertificate = moduli::SeparationCertificate<BigInt>;
pub type ComponentsReport = moduli::ComponentsReport<BigInt>;
