//! The lazy cocycle family σ_t on H4: verification, convolution and deformation.

use std::sync::Arc;

use hopflab::catalog::{sigma_t, sweedler_h4};
use hopflab::linalg::FieldSpec;
use hopflab::twist::{convolve2, deform, is_lazy, verify_two_cocycle};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    for t in [-1, 1, 2] {
        let s = sigma_t(&h, &f.int(t))?;
        println!("σ_{t}: cocycle {} lazy {}", verify_two_cocycle(&s).passed(), is_lazy(&s));
    }
    let (s1, s2, s3) = (sigma_t(&h, &f.int(1))?, sigma_t(&h, &f.int(2))?, sigma_t(&h, &f.int(3))?);
    println!("σ_1 * σ_2 = σ_3: {}", convolve2(&h, s1.sigma(), s2.sigma())? == *s3.sigma());
    println!("σ_1⁻¹ = σ_-1: {}", s1.sigma_inv() == sigma_t(&h, &f.int(-1))?.sigma());
    let hs = deform(&s1)?;
    println!("H^σ has the multiplication of H (lazy): {}", hs.mult() == h.mult());
    Ok(())
}
