//! Finite quasi-quantales, nuclei and relative spectra, with the submodule
//! lattices of finite abelian groups as the main source of examples.

pub mod bits;
pub mod corpus;
pub mod input;
pub mod inflator;
pub mod lattice;
pub mod module;
pub mod quantale;
pub mod report;
pub mod spectrum;
pub mod verify;
