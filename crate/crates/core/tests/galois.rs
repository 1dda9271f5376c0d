use std::sync::Arc;

use hopflab::catalog::{cqt_c2, group_algebra_c2, kc2_trivial_algebra, r_t, regular_yd_r, sigma_t, sweedler_h4};
use hopflab::galois::*;
use hopflab::hopf::HopfAlgebra;
use hopflab::linalg::{FieldSpec, Scalar};
use hopflab::yd::{end_algebra, quantum_commutative, verify_yd, verify_yd_algebra};

const Q: FieldSpec = FieldSpec::Rationals;

fn h4() -> Arc<HopfAlgebra> {
    Arc::new(sweedler_h4(Q).unwrap())
}

fn q(n: i64) -> Scalar {
    Q.int(n)
}

#[test]
fn hr_of_kc2_with_trivial_form_is_kc2() {
    let c2 = Arc::new(group_algebra_c2(Q).unwrap());
    let bh = build_hr(&cqt_c2(&c2, &q(1)).unwrap()).unwrap();
    assert!(verify_braided_hopf(&bh).passed());
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(bh.star(&c2.basis(i), &c2.basis(j)), c2.mul(&c2.basis(i), &c2.basis(j)));
        }
    }
    assert_eq!(bh.antipode(), c2.antipode());
}

#[test]
fn hr_of_h4_verifies() {
    let h = h4();
    for t in [0, 1, -1] {
        assert!(verify_braided_hopf(&build_hr(&r_t(&h, &q(t)).unwrap()).unwrap()).passed(), "t={t}");
    }
}

#[test]
fn unit_object_is_the_dual_algebra() {
    let c2 = Arc::new(group_algebra_c2(Q).unwrap());
    let i = unit_object(c2.clone()).unwrap();
    assert!(verify_yd_algebra(&i).passed());
    // δ₁ and δ_g are orthogonal idempotents with δ₁ + δ_g = ε.
    let d1 = vec![q(1), q(0)];
    let dg = vec![q(0), q(1)];
    assert_eq!(i.mul(&d1, &d1), d1);
    assert_eq!(i.mul(&dg, &dg), dg);
    assert_eq!(i.mul(&d1, &dg), vec![q(0), q(0)]);
    assert_eq!(i.unit(), &[q(1), q(1)]);

    let h = h4();
    let i4 = unit_object(h.clone()).unwrap();
    assert_eq!(i4.dim(), 4);
    assert!(verify_yd(i4.module()).passed());
    assert!(quantum_commutative(&i4));
}

#[test]
fn galois_decisions() {
    let h = h4();
    let r = r_t(&h, &q(1)).unwrap();
    let bh = build_hr(&r).unwrap();
    let unit = unit_object(h.clone()).unwrap();

    let d = galois_maps(&bh, &unit).unwrap();
    assert!(d.bigalois());
    assert!(galois_report(&d).passed());
    assert!(!comodule_galois(&unit).unwrap().galois);
    assert!(is_bigalois_member(&bh, &unit).unwrap());

    let hreg = regular_comodule_algebra(&r).unwrap();
    assert!(verify_yd_algebra(&hreg).passed());
    assert!(!galois_maps(&bh, &hreg).unwrap().bigalois());
    assert!(comodule_galois(&hreg).unwrap().galois);
    assert_eq!(mu_action_and_pi(&hreg).unwrap().algebra.dim(), 4);

    let end = end_algebra(&regular_yd_r(&h, &q(1)).unwrap()).unwrap();
    let de = galois_maps(&bh, &end).unwrap();
    assert!(!de.right.galois);
    assert_eq!(de.right.coinvariant_dim, 16);
    let ce = comodule_galois(&end).unwrap();
    assert!(ce.galois);
    assert_eq!(comodule_coinvariants(&end).unwrap().cols(), 4);

    assert!(!comodule_galois(&kc2_trivial_algebra(Q).unwrap()).unwrap().galois);
}

#[test]
fn wedge_of_unit_objects() {
    let h = h4();
    let bh = build_hr(&r_t(&h, &q(1)).unwrap()).unwrap();
    let unit = unit_object(h.clone()).unwrap();
    let w = wedge_algebra(&bh, &unit, &unit).unwrap();
    assert_eq!(w.dim(), 4);
    assert!(verify_yd_algebra(&w).passed());
    assert!(is_bigalois_member(&bh, &w).unwrap());
    assert!(verify_wedge(&bh, unit.module(), unit.module()).passed());
}

#[test]
fn bimodules_and_coinvariants() {
    let h = h4();
    let bh = build_hr(&r_t(&h, &q(1)).unwrap()).unwrap();
    let reg = regular_yd_r(&h, &q(1)).unwrap();
    let b = bimodule_actions(&bh, &reg).unwrap();
    assert!(verify_bimodule(&bh, &b).passed());
    assert!(verify_coinvariants(&b).passed());
    for side in [Side::Left, Side::Right] {
        let a = coinvariants(&b, side).unwrap();
        let c = coinvariants_via_actions(&b, side).unwrap();
        assert_eq!(a.rank(), c.rank());
        assert!(a.cols() > 0);
    }
}

#[test]
fn deformation_of_the_unit_object_and_pi() {
    let h = h4();
    for t in [1, -1, 2] {
        let s = sigma_t(&h, &q(t)).unwrap();
        assert!(verify_unit_deformation(&s).passed(), "t={t}");
        let chi = chi_maps(&s);
        assert!(chi.chi.try_mul(&chi.chi_inv).unwrap().is_identity());
        assert_eq!(chi.chi_star, chi.chi.transpose());
    }
    let s = sigma_t(&h, &q(1)).unwrap();
    let end = end_algebra(&regular_yd_r(&h, &q(1)).unwrap()).unwrap();
    assert!(verify_pi_deformation(&s, &end).passed());
    assert!(verify_twist_isos(&s, unit_object(h.clone()).unwrap().module()).passed());
}
