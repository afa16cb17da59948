//! Recognition of t-perfect claw-free graphs.
//!
//! The [`recognizer`] decides t-perfection of a claw-free graph in polynomial
//! time; [`oracle`] holds exhaustive reference procedures used to cross-check
//! it on small graphs.

pub mod cli;
pub mod graph;
pub mod io;
pub mod linegraph;
pub mod oracle;
pub mod parity;
pub mod recognizer;
pub mod theta;
