//! Words, finitely presented groups, coset enumeration and finite quotients.

pub mod catalog;
pub mod coset;
pub mod hom;
pub mod presentation;
pub mod quotient;
pub mod schreier;
pub mod word;

pub use coset::{todd_coxeter, CosetTable, EnumerationStatus, DEFAULT_COSET_BUDGET};
pub use hom::{verify_hom, BackendSpec, GroupHom, HomVerdict, PermRep, WordBackend};
pub use presentation::Presentation;
pub use quotient::{coxeter_quotient, induced_map, is_bijective, torsion_quotient, PermQuotient};
pub use schreier::{derived_membership, schreier_rewrite, DerivedMembership, IntLattice, SchreierSystem};
pub use word::{exponent_sum, is_in_derived_f2, parse_f2, Alphabet, Word};

#[cfg(test)]
mod tests;
