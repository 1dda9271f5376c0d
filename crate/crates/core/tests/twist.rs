use std::sync::Arc;

use hopflab::catalog::{group_algebra_c2, sigma_t, sweedler_h4, theta_t, GH, H, ONE};
use hopflab::hopf::HopfAlgebra;
use hopflab::linalg::{FieldSpec, Matrix, Scalar};
use hopflab::report::Status;
use hopflab::twist::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn h4() -> Arc<HopfAlgebra> {
    Arc::new(sweedler_h4(Q).unwrap())
}

fn q(n: i64) -> Scalar {
    Q.int(n)
}

/// `(f*g)(x⊗y) = Σ f(x₁⊗y₁) g(x₂⊗y₂)` summed directly over structure constants.
fn convolve_oracle(h: &HopfAlgebra, f: &Matrix, g: &Matrix) -> Matrix {
    let n = h.dim();
    Matrix::from_fn(Q, n, n, |i, j| {
        let mut acc = Q.zero();
        for (a1, a2, x) in h.comult_terms(i) {
            for (b1, b2, y) in h.comult_terms(j) {
                acc += &(&(x * y) * &(f.get(*a1, *b1) * g.get(*a2, *b2)));
            }
        }
        acc
    })
}

fn eps2(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    Matrix::from_fn(Q, n, n, |i, j| &h.counit()[i] * &h.counit()[j])
}

#[test]
fn convolution_unit_and_sigma_group_law() {
    let h = h4();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = Matrix::from_fn(Q, 4, 4, |_, _| q(rng.gen_range(-3..=3)));
    assert_eq!(convolve2(&h, &f, &eps2(&h)).unwrap(), f);
    assert_eq!(conv_unit2(&h), eps2(&h));
    let s = |t| sigma_t(&h, &q(t)).unwrap();
    let s12 = convolve2(&h, s(1).sigma(), s(2).sigma()).unwrap();
    assert_eq!(s12, convolve_oracle(&h, s(1).sigma(), s(2).sigma()));
    assert_eq!(s12, *s(3).sigma());
    assert_eq!(convolve2(&h, s(1).sigma(), s(-1).sigma()).unwrap(), eps2(&h));
}

#[test]
fn convolution_inverses() {
    let h = h4();
    assert_eq!(conv_inverse2(&h, &eps2(&h)), Some(eps2(&h)));
    let s1 = sigma_t(&h, &q(1)).unwrap();
    let inv = conv_inverse2(&h, s1.sigma()).unwrap();
    assert_eq!(inv, *sigma_t(&h, &q(-1)).unwrap().sigma());
    assert_eq!(convolve_oracle(&h, &inv, s1.sigma()), eps2(&h));
    let c2 = group_algebra_c2(Q).unwrap();
    assert_eq!(conv_inverse2(&c2, &Matrix::zeros(Q, 2, 2)), None);
}

#[test]
fn two_cocycle_verification_and_corruption() {
    let h = h4();
    assert!(verify_two_cocycle(&sigma_t(&h, &q(1)).unwrap()).passed());
    assert!(verify_two_cocycle(&TwoCocycle::trivial(h.clone())).passed());
    let mut bad = sigma_t(&h, &q(1)).unwrap().sigma().clone();
    bad.set(H, H, q(1));
    let c = TwoCocycle::new(h.clone(), bad, None).unwrap();
    let rep = verify_two_cocycle(&c);
    let bad = rep.get("cocycle").unwrap();
    assert_eq!(bad.status, Status::Fail);
    assert_eq!(bad.witness.as_ref().map(|w| w.len()), Some(3));
}

#[test]
fn laziness() {
    let h = h4();
    assert!(is_lazy(&sigma_t(&h, &q(1)).unwrap()));
    assert!(is_lazy(&TwoCocycle::trivial(h.clone())));
    // A character has trivial coboundary.
    let chi = coboundary(h.clone(), &[q(1), q(-1), q(0), q(0)]).unwrap();
    assert_eq!(*chi.sigma(), eps2(&h));
    // μ(h) = 1 is not central.
    let mu = vec![q(1), q(1), q(1), q(0)];
    let c = coboundary(h.clone(), &mu).unwrap();
    assert!(verify_two_cocycle(&c).passed());
    let same_mult = deform(&c).unwrap().mult() == h.mult();
    assert_eq!(is_lazy(&c), same_mult);
    assert!(!is_lazy(&c));
}

#[test]
fn coboundaries() {
    let h = h4();
    let eps = LazyOneCocycle::new(h.clone(), h.counit().to_vec()).unwrap();
    assert_eq!(*coboundary_from(&eps).unwrap().sigma(), eps2(&h));

    let c2 = Arc::new(group_algebra_c2(Q).unwrap());
    for c in [2, -1, 5] {
        let mu = LazyOneCocycle::new(c2.clone(), vec![q(1), q(c)]).unwrap();
        let s = coboundary_from(&mu).unwrap();
        assert!(verify_two_cocycle(&s).passed());
        assert!(is_lazy(&s));
        // ∂μ(g⊗g) = μ(g)μ(g)μ⁻¹(1) = c².
        assert_eq!(s.sigma().get(1, 1), &q(c * c));
        assert_eq!(deform(&s).unwrap(), *c2);
    }
    // μ(h) = 1 breaks centrality on H₄.
    let err = LazyOneCocycle::new(h.clone(), vec![q(1), q(1), q(1), q(0)]).unwrap_err();
    assert!(err.to_string().contains("central"), "{err}");
}

#[test]
fn deformation_round_trips() {
    let h = h4();
    assert_eq!(deform(&TwoCocycle::trivial(h.clone())).unwrap(), *h);
    let s1 = sigma_t(&h, &q(1)).unwrap();
    assert_eq!(deform(&s1).unwrap().mult(), h.mult());
    let mu = vec![q(1), q(1), q(1), q(0)];
    let c = coboundary(h.clone(), &mu).unwrap();
    let back = deform(&c.inverse().unwrap()).unwrap();
    assert_eq!(back, *h);
}

#[test]
fn composing_cocycles() {
    let h = h4();
    let s = |t| sigma_t(&h, &q(t)).unwrap();
    let hs = Arc::new(deform(&s(2)).unwrap());
    let triv = TwoCocycle::trivial(hs.clone());
    assert_eq!(compose_cocycles(&triv, &s(2)).unwrap().sigma(), s(2).sigma());
    assert_eq!(compose_cocycles(&s(1), &s(2)).unwrap().sigma(), s(3).sigma());
    let inv = s(2).inverse().unwrap();
    assert_eq!(*compose_cocycles(&inv, &s(2)).unwrap().sigma(), eps2(&h));
}

fn theta_from(h: &Arc<HopfAlgebra>, entries: &[(usize, usize, Scalar)]) -> DualCocycle {
    let mut m = Matrix::zeros(Q, 4, 4);
    for (a, b, c) in entries {
        m.set(*a, *b, c.clone());
    }
    DualCocycle::new(h.clone(), m, None).unwrap()
}

#[test]
fn dual_cocycles() {
    let h = h4();
    let triv = DualCocycle::trivial(h.clone());
    assert!(verify_dual_cocycle(&triv).passed());
    assert!(is_lazy_dual(&triv));
    assert_eq!(deform_dual(&triv).unwrap(), *h);

    let t2 = theta_t(&h, &q(2)).unwrap();
    assert_eq!(t2.theta().get(H, GH), &q(1));
    assert!(verify_dual_cocycle(&t2).passed());
    assert!(is_lazy_dual(&t2));
    assert_eq!(deform_dual(&t2).unwrap().comult(), h.comult());
    assert_eq!(deform_dual(&t2.inverse().unwrap()).unwrap(), *h);

    let moved = theta_from(&h, &[(ONE, ONE, q(1)), (H, H, q(1))]);
    let rep = verify_dual_cocycle(&moved);
    assert!(!rep.passed());
    assert!(rep.failures().any(|c| c.witness.is_some()));

    let half = theta_from(&h, &[(ONE, ONE, q(1)), (H, H, Q.ratio(1, 2).unwrap())]);
    assert!(!(verify_dual_cocycle(&half).passed() && is_lazy_dual(&half)));
}
