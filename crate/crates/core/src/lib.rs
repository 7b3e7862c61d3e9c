//! Exact stability invariants of powers of monomial ideals.
//!
//! The engine works with monomial ideals through their minimal generators and
//! computes associated primes of powers, exact depth via multigraded Betti
//! numbers, analytic spread and the linear relation graph. For matroidal
//! ideals it certifies the indices `astab` and `dstab` against the bound
//! `min{d, ℓ(I)}`.
//!
//! ```
//! use monostab::{KnownCase, Mode, EngineConfig, astab};
//!
//! let k3 = monostab::matroid::uniform(3, 2).unwrap();
//! let a = astab(&k3, Mode::Certified, &EngineConfig::default()).unwrap();
//! assert_eq!(a.index, 2);
//! assert_eq!(KnownCase::Ex6.ideal().len(), 12);
//! ```

pub mod catalog;
pub mod config;
pub mod error;
pub mod field;
pub mod graph;
pub mod ideal;
pub mod linalg;
pub mod matroid;
pub mod monomial;
pub mod relation;
pub mod stability;

pub use catalog::KnownCase;
pub use config::{EngineConfig, FieldChoice};
pub use error::{Error, Result};
pub use field::{Field, PrimeField};
pub use graph::{graph_analysis, Graph, GraphAnalysis};
pub use ideal::{BasicInvariants, Localization, MonomialIdeal, Normalized};
pub use matroid::{
    cover_profile, graphic_ideal, is_matroidal, is_polymatroidal, random_instance,
    transversal_ideal, veronese_type, CoverProfile, ExchangeVerdict, MatroidSpec, RandomFamily,
    RandomSpec,
};
pub use monomial::{Exponent, Monomial, PrimeSupport};
pub use relation::{build_gamma, component_factorization, Factorization, RelationGraph};
pub use stability::{
    analytic_spread, ass_chain, ass_primes, astab, check_bounds, dstab, exact_depth,
    irreducible_decomposition, max_ideal_associated, AssSet, DepthEntry, Mode, StabilityReport,
    Verdict, VerdictStatus,
};

/// Exact rationals, for characteristic-zero ranks.
pub type Rational = num_rational::BigRational;
/// The default homology field, `GF(2^31 - 1)`.
pub type Fp = PrimeField<2147483647>;
pub type F32003 = PrimeField<32003>;
pub type F3 = PrimeField<3>;
pub type F2 = PrimeField<2>;
