//! Dual cocycles θ_t and the coproduct deformation H_θ.

use std::sync::Arc;

use hopflab::catalog::{sweedler_h4, theta_t};
use hopflab::hopf::verify_hopf_axioms;
use hopflab::linalg::FieldSpec;
use hopflab::twist::{deform_dual, is_lazy_dual, verify_dual_cocycle};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    for t in [0, 1, 2] {
        let d = theta_t(&h, &f.int(t))?;
        let ht = deform_dual(&d)?;
        println!(
            "θ_{t}: dual cocycle {} lazy {} H_θ Hopf {} same Δ {}",
            verify_dual_cocycle(&d).passed(),
            is_lazy_dual(&d),
            verify_hopf_axioms(&ht).passed(),
            ht.comult() == h.comult()
        );
    }
    Ok(())
}
