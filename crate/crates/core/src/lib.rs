//! Exact linear algebra for finite-dimensional algebras, coalgebras,
//! bialgebras, their (co)modules, and the traces and characters built on them.

pub mod cli;
pub mod comodmod;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod field;
pub mod format;
pub mod report;
pub mod structures;
pub mod suite;
pub mod traces;
pub mod verify;

pub use error::{Error, Result};
