pub mod catalog;
pub mod cli;
pub mod error;
pub mod galois;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod quasitriangular;
pub mod report;
pub mod suite;
pub mod twist;
pub mod yd;

pub use error::{Error, Result};
