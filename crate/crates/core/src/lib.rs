//! Schur rings over cyclic groups `Z_n`.
//!
//! A Schur ring over `Z_n` is determined by a partition of the residues mod
//! `n` whose classes span a subalgebra of the integer group ring. This crate
//! builds such rings ([`constructions`], [`automorphic`]), checks the axioms
//! ([`SchurPartition::check_axioms`]), enumerates every ring over a given
//! modulus ([`enumeration`]) and cross-checks the counts against closed forms
//! ([`formulas`]) and an exhaustive search ([`oracle`]).
//!
//! ```
//! use schur_core::{enumeration, formulas};
//!
//! assert_eq!(enumeration::omega(21), 27);
//! assert_eq!(formulas::omega_pq(3, 7), Ok(27));
//! ```

pub mod algebra;
pub mod automorphic;
pub mod constructions;
pub mod enumeration;
pub mod formulas;
pub mod oracle;
pub mod partition;

pub use algebra::{multiply, AlgebraElement, AlgebraError, GroupSubset};
pub use constructions::{Section, WedgeCore};
pub use enumeration::{EnumerationResult, Enumerator, Family};
pub use partition::{divisors, AxiomViolation, SchurPartition};
