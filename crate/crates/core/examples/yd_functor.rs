//! The braided monoidal functor σ̲ on Yetter-Drinfeld modules.

use std::sync::Arc;

use hopflab::catalog::{regular_yd_r, sigma_t, sweedler_h4};
use hopflab::galois::unit_object;
use hopflab::linalg::FieldSpec;
use hopflab::yd::{sigma_module, verify_braided_functor, verify_yd, YdModule};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    let s = sigma_t(&h, &f.one())?;
    let unit = unit_object(h.clone())?;
    let mods = [
        ("regular", regular_yd_r(&h, &f.one())?),
        ("unit object", unit.module().clone()),
        ("trivial", YdModule::trivial(h.clone(), 1)),
    ];
    for (name, m) in &mods {
        println!("σ̲({name}) is YD: {}", verify_yd(&sigma_module(&s, m)?).passed());
    }
    for (a, m) in &mods {
        for (b, n) in &mods {
            println!("η square for ({a}, {b}): {}", verify_braided_functor(&s, m, n).passed());
        }
    }
    Ok(())
}
