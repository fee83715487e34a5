//! Exact Poincaré series and Betti numbers of moduli spaces of rank-2 Higgs
//! bundles over a compact Riemann surface.
//!
//! Three independent evaluation routes are provided and cross-checked:
//!
//! - [`strata`]: the Morse-stratified sum over Harder-Narasimhan strata,
//!   including the per-stratum recursion for the intermediate spaces `X_d`;
//! - [`closed_forms`]: closed rational expressions, the residue pieces of
//!   the symmetric-product sum and its bivariate coefficient extraction;
//! - [`cohomology`]: the building blocks (Jacobians, `BU(1)`, gauge group
//!   classifying spaces, symmetric products and their covers).
//!
//! All arithmetic is exact over `BigRational`; series are truncated at an
//! explicit order and never report coefficients beyond it.
//!
//! ```
//! use higgs_betti::{strata, Determinant, ModuliSpec};
//!
//! let spec = ModuliSpec::new(2, 1, Determinant::Fixed, 16).unwrap();
//! let p = strata::moduli_series(&spec).unwrap();
//! assert_eq!(p.coeff(5), higgs_betti::series::rat(34));
//! ```

pub mod cli;
pub mod closed_forms;
pub mod cohomology;
pub mod error;
pub mod report;
pub mod series;
pub mod strata;
pub mod verify;

pub use cohomology::{Determinant, SurfaceSpec};
pub use error::{Error, Result};
pub use report::{BettiReport, Check, Route};
pub use strata::{ModuliSpec, StratumIndex};
