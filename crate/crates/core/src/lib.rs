//! Rainbow disconnection colorings of small graphs: exact values, constructive
//! upper bounds with certificates, edge connectivity, proper edge colorings and
//! batch checks of structural results.

pub mod blocks;
pub mod coloring;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod rainbow;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::Graph;
