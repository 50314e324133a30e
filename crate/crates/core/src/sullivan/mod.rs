//! Minimal Sullivan models `(ΛV, d)` and their rational cohomology.

mod catalog;
mod cohomology;
mod file;
mod model;

pub use catalog::{catalog_entry, witness_catalog, CatalogEntry, ExpectedClass};
pub use cohomology::{
    check_hilali, cohomology_profile, euler_characteristics, full_profile, is_nonzero_class,
    poincare_check, CohomologyError, CohomologyProfile, DifferentialMatrices, HilaliCheck,
};
pub use file::{ModelFile, ModelFileError};
pub use model::{ModelError, SullivanModel, Violation, ViolationKind};
