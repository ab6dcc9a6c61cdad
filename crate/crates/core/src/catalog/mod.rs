//! Catalog records, file formats and the builtin registry.

mod files;
mod ks;
mod record;
mod registry;

pub use files::{parse_data, parse_scaling};
pub use ks::{parse_ks, write_polytope, KsBlock};
pub use record::CatalogRecord;
pub use registry::{builtin, BUILTIN_HELP};
