//! The braided Hopf algebra H_R, Galois decisions and the wedge product I∧I.

use std::sync::Arc;

use hopflab::catalog::{r_t, regular_yd_r, sweedler_h4};
use hopflab::galois::{
    build_hr, comodule_galois, galois_maps, is_bigalois_member, regular_comodule_algebra, unit_object,
    verify_braided_hopf, wedge_algebra,
};
use hopflab::linalg::FieldSpec;
use hopflab::yd::{end_algebra, YdAlgebra};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    let r = r_t(&h, &f.one())?;
    let bh = build_hr(&r)?;
    println!("H_R is a braided Hopf algebra: {}", verify_braided_hopf(&bh).passed());
    let unit = unit_object(h.clone())?;
    let algebras: [(&str, YdAlgebra); 3] = [
        ("I", unit.clone()),
        ("H regular", regular_comodule_algebra(&r)?),
        ("End(regular)", end_algebra(&regular_yd_r(&h, &f.one())?)?),
    ];
    for (name, a) in &algebras {
        let d = galois_maps(&bh, a)?;
        let c = comodule_galois(a)?;
        println!(
            "{name}: right Galois {} (rank {}/{}), left Galois {}, comodule Galois {}",
            d.right.galois, d.right.rank, d.right.target_dim, d.left.galois, c.galois
        );
    }
    let w = wedge_algebra(&bh, &unit, &unit)?;
    println!("I∧I has dimension {} and is bigalois: {}", w.dim(), is_bigalois_member(&bh, &w)?);
    Ok(())
}
