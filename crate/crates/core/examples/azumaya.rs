//! Azumaya decisions for End of the regular YD module and its deformations.

use std::sync::Arc;

use hopflab::catalog::{kc2_trivial_algebra, regular_yd_r, sigma_t, sweedler_h4};
use hopflab::linalg::FieldSpec;
use hopflab::yd::{azumaya_check, end_algebra, is_azumaya, sigma_algebra};

fn main() -> hopflab::Result<()> {
    let f = FieldSpec::Rationals;
    let h = Arc::new(sweedler_h4(f)?);
    let end = end_algebra(&regular_yd_r(&h, &f.one())?)?;
    println!("End(M) has dimension {}", end.dim());
    println!("{}", azumaya_check(&end));
    for t in [-1, 1, 2] {
        let se = sigma_algebra(&sigma_t(&h, &f.int(t))?, &end)?;
        println!("σ̲_{t}(End M) Azumaya: {}", is_azumaya(&se));
    }
    println!("kC2 with trivial structure Azumaya: {}", is_azumaya(&kc2_trivial_algebra(f)?));
    Ok(())
}
