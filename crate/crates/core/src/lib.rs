pub mod linalg;
pub mod classify;
pub mod commutant;
pub mod representation;
pub mod io;
