//! The Miyashita-Ulbrich action, the algebra π(A) and its deformation.

use std::sync::Arc;

use hopflab::catalog::{regular_yd_r, sigma_t, sweedler_h4};
use hopflab::galois::{mu_action_and_pi, verify_pi, verify_pi_deformation, verify_unit_deformation};
use hopflab::linalg::FieldSpec;
use hopflab::yd::end_algebra;

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    let end = end_algebra(&regular_yd_r(&h, &f.one())?)?;
    let pi = mu_action_and_pi(&end)?;
    println!("π(End M) has dimension {}", pi.algebra.dim());
    println!("π checks pass: {}", verify_pi(&end, &pi).passed());
    let s = sigma_t(&h, &f.one())?;
    println!("{}", verify_pi_deformation(&s, &end));
    println!("χ* is an isomorphism σ̲(I) ≅ I: {}", verify_unit_deformation(&s).passed());
    Ok(())
}
