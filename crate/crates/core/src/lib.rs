pub mod atoms;
pub mod automata;
pub mod cli;
pub mod complexity;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod pairing;
pub mod render;
pub mod set;

pub use error::{Error, Result};
