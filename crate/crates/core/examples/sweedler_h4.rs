//! Builds Sweedler's H4, prints its structure and checks the Hopf axioms.

use hopflab::catalog::{sweedler_h4, G, GH, H};
use hopflab::hopf::{verify_hopf_axioms, HopfAlgebra};
use hopflab::linalg::{FieldSpec, Scalar};

fn show(h: &HopfAlgebra, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(h.basis_names())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("({c}){n}"))
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn main() -> hopflab::Result<()> {
    let h = sweedler_h4(FieldSpec::Rationals)?;
    let (g, x, gx) = (h.basis(G), h.basis(H), h.basis(GH));
    println!("g·h   = {}", show(&h, &h.mul(&g, &x)));
    println!("h·g   = {}", show(&h, &h.mul(&x, &g)));
    println!("h·h   = {}", show(&h, &h.mul(&x, &x)));
    println!("S(h)  = {}", show(&h, &h.s(&x)));
    println!("S(gh) = {}", show(&h, &h.s(&gx)));
    println!("S²(h) = {}", show(&h, &h.s(&h.s(&x))));
    for (a, b, c) in h.comult_terms(H) {
        println!("Δh term: ({c}) {}⊗{}", h.basis_names()[*a], h.basis_names()[*b]);
    }
    println!("\naxioms over Q:\n{}", verify_hopf_axioms(&h));
    let f5 = sweedler_h4(FieldSpec::prime(5)?)?;
    println!("axioms over F5 pass: {}", verify_hopf_axioms(&f5).passed());
    Ok(())
}
