//! Associated primes, depth and the stability indices of powers.

pub mod ass;
pub mod betti;
pub mod decomposition;
pub mod indices;
pub mod spread;

pub use ass::{ass_chain, ass_primes, max_ideal_associated, socle_witness, AssSet};
pub use betti::{betti_table, betti_table_over, exact_depth, lcm_lattice, BettiTable, ExactDepth};
pub use decomposition::{ass_from_decomposition, irreducible_decomposition, radical};
pub use indices::{
    astab, certify, check_bounds, depth_sequence, dstab, AstabResult, Certificate, ComponentDstab,
    DepthEntry, DstabMethod, DstabResult, Mode, StabilityReport, Verdict, VerdictStatus,
};
pub use spread::analytic_spread;
