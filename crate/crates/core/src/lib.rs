pub mod cyclo;
pub mod error;
pub mod fpgroups;
pub mod garside;
pub mod gtaction;
pub mod linalg;
pub mod arrangement;
pub mod invariants;
pub mod matgroup;
pub mod monodromy;
pub mod poly;
pub mod suite;
pub mod upoly;
