//! Gruenberg–Kegel prime graphs of finite simple groups.
//!
//! [`groupspec`] describes a group, [`cocliques::build_graph`] produces its
//! compact prime graph and [`cocliques::theta_structure`] the maximum
//! cocliques with their Θ/Θ' decomposition. [`refdata`] holds the expected
//! tables and [`torus_oracle`] an independent adjacency check.

pub mod numth;
pub mod groupspec;
pub mod adjacency;
pub mod torus_oracle;
pub mod cocliques;
pub mod refdata;

pub use groupspec::{ClassKind, ClassPartition, Family, GroupSpec, SpecError, Vertex};
pub use numth::{FactorBudget, NumthError, PrimePower, Sign, SuzRee};
