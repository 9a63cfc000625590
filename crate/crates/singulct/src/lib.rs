//! Singularity invariants of polynomial hypersurfaces, and an exact p-adic
//! exponential-sum engine that probes the decay bounds those invariants
//! predict.
//!
//! The library computes, exactly:
//!
//! - the log canonical threshold of the pair ideal (f) + J_f², where J_f is
//!   the Jacobian ideal (f together with its partial derivatives), for
//!   monomial pair ideals and for two closed-form families (homogeneous
//!   diagonal and generic determinantal hypersurfaces);
//! - minimal exponents from Bernstein-Sato root data, Milnor numbers by
//!   colength stabilization, and the rational-singularities verdict
//!   `lct(f, J_f²) > 1` with a Saito cross-check;
//! - residue histograms of f over (ℤ/p^mℤ)^n, the normalized character sums
//!   E(p^m) they induce (with exact vanishing certificates in the cyclotomic
//!   lattice), empirical decay exponents, point counts, and the level-(m−1)
//!   localization identities.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --release --example diagonal_family
//! cargo run --release --example determinantal_family
//! cargo run --release --example monomial_lct
//! cargo run --release --example milnor_numbers
//! cargo run --release --example minimal_exponents
//! cargo run --release --example rational_singularities
//! cargo run --release --example exp_sum_decay
//! cargo run --release --example localization_identities
//! cargo run --release --example point_count_slopes
//! cargo run --release --example theorem_b_sweep
//! cargo run --release --example parse_and_evaluate
//! cargo run --release --example json_report
//! ```
//!
//! The same functionality is scriptable through the thin `singulct` binary
//! (`invariants`, `expsum`, `verify`, `report` subcommands).

pub mod arith;
pub mod error;
pub mod exact;
pub mod expsum;
pub mod harness;
pub mod invariants;

pub use error::{Error, Result};
