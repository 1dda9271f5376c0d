//! Yetter-Drinfeld modules and algebras over a finite-dimensional Hopf algebra.

mod algebra;
mod functor;
mod module;

pub use algebra::*;
pub use functor::*;
pub use module::*;
