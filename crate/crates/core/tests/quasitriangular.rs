use std::sync::Arc;

use hopflab::catalog::{cqt_c2, group_algebra_c2, qt_t, r_t, sigma_t, sweedler_h4, theta_t, G, GH, H, ONE};
use hopflab::hopf::HopfAlgebra;
use hopflab::linalg::{FieldSpec, Matrix, Scalar};
use hopflab::quasitriangular::*;
use hopflab::report::Status;
use hopflab::yd::{regular_action, regular_coaction, verify_yd, YdModule};

const Q: FieldSpec = FieldSpec::Rationals;

fn h4() -> Arc<HopfAlgebra> {
    Arc::new(sweedler_h4(Q).unwrap())
}

fn c2() -> Arc<HopfAlgebra> {
    Arc::new(group_algebra_c2(Q).unwrap())
}

fn q(n: i64) -> Scalar {
    Q.int(n)
}

#[test]
fn r_t_values_and_axioms() {
    let h = h4();
    let r1 = r_t(&h, &q(1)).unwrap();
    assert_eq!(r1.r().get(H, GH), &q(-1));
    assert_eq!(r1.r().get(G, G), &q(-1));
    assert_eq!(r1.r().get(GH, H), &q(1));
    for t in -2..=3 {
        assert!(verify_cqt(&r_t(&h, &q(t)).unwrap()).passed(), "R_{t}");
    }
}

#[test]
fn corrupted_r_fails_with_witness() {
    let h = h4();
    let mut m = r_t(&h, &q(1)).unwrap().r().clone();
    m.set(H, GH, q(1));
    let bad = CqtStructure::new(h, m, None).unwrap();
    let rep = verify_cqt(&bad);
    assert!(!rep.passed());
    assert!(rep.failures().all(|c| c.status == Status::Fail && c.witness.is_some()));
}

#[test]
fn kc2_bicharacters() {
    let c = c2();
    for sign in [1, -1] {
        let r = cqt_c2(&c, &q(sign)).unwrap();
        assert!(verify_cqt(&r).passed());
        // g ▷₁ g = g·R(g⊗g) on the regular comodule.
        let m = yd_from_comodule(&r, regular_coaction(&c)).unwrap();
        assert!(verify_yd(&m).passed());
        assert_eq!(m.act(&c.basis(1)).get(1, 1), &q(sign));
        assert_eq!(m.act(&c.basis(1)).get(0, 0), &q(1));
    }
    assert!(cqt_c2(&c, &q(2)).is_err());
}

#[test]
fn cqt_deformation_shifts_the_parameter() {
    let h = h4();
    for t in -2..=2 {
        for s in [-1, 1, 2] {
            let d = deform_cqt(&r_t(&h, &q(t)).unwrap(), &sigma_t(&h, &q(s)).unwrap()).unwrap();
            assert!(verify_cqt(&d).passed());
            assert_eq!(d.r(), r_t(&h, &q(t - s)).unwrap().r(), "t={t} s={s}");
        }
    }
    // Deforming by σ then by σ⁻¹ returns R.
    let r = r_t(&h, &q(2)).unwrap();
    let s = sigma_t(&h, &q(1)).unwrap();
    let once = deform_cqt(&r, &s).unwrap();
    let back = deform_cqt(&once, &s.inverse().unwrap()).unwrap();
    assert_eq!(back.r(), r.r());
}

#[test]
fn qt_structures() {
    let h = h4();
    let r0 = qt_t(&h, &q(0)).unwrap();
    // ℛ₀ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g).
    let half = Q.ratio(1, 2).unwrap();
    assert_eq!(r0.rr().get(ONE, ONE), &half);
    assert_eq!(r0.rr().get(G, G), &-half.clone());
    assert_eq!(r0.rr().get(H, H), &Q.zero());
    let r1 = qt_t(&h, &q(1)).unwrap();
    assert_eq!(r1.rr().get(H, H), &half);
    for t in -2..=3 {
        assert!(verify_qt(&qt_t(&h, &q(t)).unwrap()).passed(), "ℛ_{t}");
    }
    for t in -1..=2 {
        for s in [-1, 1, 2] {
            let d = deform_qt(&qt_t(&h, &q(t)).unwrap(), &theta_t(&h, &q(s)).unwrap()).unwrap();
            assert!(verify_qt(&d).passed());
            assert_eq!(d.rr(), qt_t(&h, &q(t - s)).unwrap().rr(), "t={t} s={s}");
        }
    }
}

#[test]
fn yd_from_module_on_the_regular_action() {
    let h = h4();
    let m = yd_from_module(&qt_t(&h, &q(1)).unwrap(), regular_action(&h)).unwrap();
    assert!(verify_yd(&m).passed());
    assert_eq!(m.action(), &regular_action(&h)[..]);
    // Trivial module: coaction is a ↦ a⊗1.
    let t = yd_from_module(&qt_t(&h, &q(1)).unwrap(), YdModule::trivial(h.clone(), 1).action().to_vec()).unwrap();
    assert_eq!(t.coaction(), YdModule::trivial(h.clone(), 1).coaction());
    // A non-module is refused.
    let mut bad = regular_action(&h);
    bad[G] = Matrix::zeros(Q, 4, 4);
    assert!(yd_from_module(&qt_t(&h, &q(1)).unwrap(), bad).is_err());
}
