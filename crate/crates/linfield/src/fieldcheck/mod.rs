//! Concrete-equation support: explicit finite fields, polynomial
//! arithmetic, irreducibility and splitting tests, hypothesis validation,
//! and the spec-file format.

mod field;
mod parse;
mod poly;
mod validate;

pub use field::{FiniteField, Fq};
pub use parse::{canonical_spec_json, parse_spec_file, AbstractSpec, SpecDocument};
pub use poly::{is_irreducible, linearized_poly, splits_in_field, FieldPoly};
pub use validate::{validate_concrete, CheckResult, ConcreteSpec, ValidationReport};
