//! Exact linear algebra over `Q` and `F_p`.

mod field;
mod matrix;
mod tensor;

pub use field::{FieldSpec, Rational, Scalar};
pub use matrix::Matrix;
pub use tensor::Tensor;

/// Default bound on vector-space dimensions handled by the library.
pub const DEFAULT_MAX_DIM: usize = 64;

/// The configured dimension bound, overridable through `HOPFLAB_MAX_DIM`.
pub fn max_dim() -> usize {
    std::env::var("HOPFLAB_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}
