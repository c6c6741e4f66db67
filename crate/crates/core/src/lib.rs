//! Finite quandles, their displacement groups, and the quandle Euler
//! characteristic `min { #Fix(g) : g ∈ Dis(X) }`.
//!
//! ```
//! use quandle_core::{constructors, euler};
//!
//! let sphere = constructors::discrete_sphere(2).unwrap();
//! let report = euler::euler_characteristic(&sphere, 1000).unwrap();
//! assert_eq!(report.chi, Some(2));
//! ```

pub mod cli;
pub mod closure;
pub mod constructors;
pub mod error;
pub mod euler;
pub mod group;
pub mod permutation;
pub mod quandle;
pub mod spec;

pub use closure::{ClosureResult, GroupKind, GroupOrder};
pub use constructors::WeightedGraphSpec;
pub use error::{Error, Result};
pub use euler::EulerReport;
pub use group::FiniteGroup;
pub use permutation::Permutation;
pub use quandle::FiniteQuandle;
pub use spec::{GroupSpec, QuandleSpec};
