//! Command-line support for `dgsym`: input loading, exhaustive sweeps over
//! the bundled catalogs, and the casebook of registered reproductions.

pub mod casebook;
pub mod input;
pub mod sweeps;
