//! File formats, the bundled group catalog, and IO helpers for the flock
//! command-line tool.

pub mod catalog_gen;
pub mod formats;
