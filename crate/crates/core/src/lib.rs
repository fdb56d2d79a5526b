pub mod error;
pub mod exec;
pub mod freeness;
pub mod kernel;
pub mod lattice;
pub mod model;
pub mod rank2;
pub mod restriction;
