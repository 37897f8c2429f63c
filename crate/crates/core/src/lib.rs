//! Exact SU(2)_4 anyon braiding and the order-648 qutrit gate group.
//!
//! Every scalar lives in a cyclotomic field (default Q(zeta_72)); no
//! decision anywhere in the crate is taken on floating-point values.

pub mod braid;
pub mod catalog;
pub mod cyclo;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod par;
pub mod presentation;
pub mod tqft;

pub use braid::{BraidSimulator, BraidWord, FusionSpace};
pub use catalog::Catalog;
pub use cyclo::{CyclotomicField, CyclotomicNumber, DEFAULT_ORDER};
pub use error::{Error, Result};
pub use groups::{closure, ClosureMode, ClosureOptions, Fingerprint, GroupClosure};
pub use linalg::{ExactMatrix, ScalarSet, StateVector};
pub use par::Execution;
pub use presentation::{GroupPresentation, Word};
pub use tqft::{AnyonCharge, Theory};
