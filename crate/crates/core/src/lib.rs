//! Fuzzy covering-based rough sets built on overlap functions and t-norms.
//!
//! The crate is `no_std` and only needs `alloc`. Modules:
//!
//! - [`fuzzy`]: fuzzy sets over a finite universe and fuzzy coverings
//! - [`logic`]: aggregators, residual implicators and grid checkers
//! - [`neighborhood`]: descriptions, derived coverings, the operators `N1..N4`
//! - [`rough`]: lower and upper approximations
//! - [`topsis`]: the precision-weighted TOPSIS ranking
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod fuzzy;
pub mod logic;
pub mod neighborhood;
pub mod rough;
pub mod topsis;

pub use error::{Error, Result};
pub use fuzzy::{FuzzyCovering, FuzzySet, Universe, EPS_EQ, REPORT_TOL};
pub use logic::{Aggregator, Family, Implicator, Logic};
pub use neighborhood::{Group, NeighborhoodOperator, Variant};
pub use rough::ApproximationModel;
pub use topsis::{DecisionProblem, DecisionResult, ModelSelector};
