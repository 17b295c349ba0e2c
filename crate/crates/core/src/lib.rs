//! Numerical invariants, genus bounds and branch-curve enumeration for
//! surfaces of general type carrying a hyperelliptic fibration, viewed as
//! double covers of Hirzebruch surfaces.
//!
//! * [`invariants`]: χ, K², Δ and the relations between them for a branch
//!   datum `(k, l, r-list, t)`.
//! * [`bounds`]: genus bounds and the per-case fibre-degree bounds.
//! * [`enumerator`]: exhaustive search of admissible branch data per
//!   `(g, K² - 3χ)` cell.
//! * [`reference`]: the published maximal-χ table, for comparison.

pub mod bounds;
pub mod cli;
pub mod enumerator;
pub mod error;
pub mod invariants;
pub mod reference;
pub mod scalar;

pub use bounds::{genus_bound, k_bound_cases, Bound, CaseBound, CaseLabel, KBoundSummary};
pub use enumerator::{enumerate_cell, max_chi_table, CellQuery, CellResult, ChiTable, SearchCaps, SearchMode};
pub use error::{Error, Result};
pub use invariants::{canres_invariants, BranchConfig, SingularitySpectrum, SurfaceInvariants};
pub use reference::ReferenceTable;
pub use scalar::ExactScalar;
