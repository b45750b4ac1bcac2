//! Exact arithmetic for unit equations over number fields.
//!
//! The crate bundles polynomial arithmetic over Q and F_p, number-field
//! element arithmetic with certified prime splitting, quadratic-field class
//! groups and fundamental units, a verifier for the ambiguous class number
//! formula on quadratic fields, bounded unit and S-unit equation search, and
//! decision procedures that report whether a field satisfies known criteria
//! for the non-existence of unit-equation solutions and for the asymptotic
//! Fermat's Last Theorem.

pub mod arith;
pub mod chevalley;
pub mod criteria;
pub mod error;
pub mod field;
pub mod poly;
pub mod quadratic;
pub mod record;
pub mod report;
pub mod units;

pub use error::{Error, Result};
pub use field::{FieldElement, NumberField, SplittingReport};
pub use poly::{FactorizationModP, ModPolynomial, Polynomial};
pub use record::FieldRecord;
pub use report::ReportDocument;
