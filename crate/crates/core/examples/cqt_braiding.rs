//! CQT forms R_t, their deformations, and the braiding of the induced YD modules.

use std::sync::Arc;

use hopflab::catalog::{r_t, regular_yd_r, sigma_t, sweedler_h4};
use hopflab::linalg::FieldSpec;
use hopflab::quasitriangular::{deform_cqt, verify_cqt};
use hopflab::yd::{braiding, verify_yd};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    let r = r_t(&h, &f.int(2))?;
    println!("R_2 is CQT: {}", verify_cqt(&r).passed());
    for s in [-1, 1, 2] {
        let d = deform_cqt(&r, &sigma_t(&h, &f.int(s))?)?;
        println!("R_2^σ_{s} = R_{}: {}", 2 - s, d.r() == r_t(&h, &f.int(2 - s))?.r());
    }
    let m = regular_yd_r(&h, &f.one())?;
    let phi = braiding(&m, &m)?;
    println!("regular module is YD: {}", verify_yd(&m).passed());
    println!("braiding is a YD isomorphism: {}", phi.is_yd_map() && phi.is_invertible());
    println!("braiding rank {} of {}", phi.matrix.rank(), phi.matrix.rows());
    Ok(())
}
