use hopflab::catalog::{group_algebra_c2, sweedler_h4, G, GH, H, ONE};
use hopflab::hopf::{dual_hopf, op_cop, verify_hopf_axioms, HopfAlgebra};
use hopflab::linalg::{FieldSpec, Matrix, Scalar};
use hopflab::report::Status;
use hopflab::{io, Error};

const Q: FieldSpec = FieldSpec::Rationals;

/// `g^a h^b` with `a, b ∈ {0,1}` sits at index `a + 2b` in `(1, g, h, gh)`.
fn word(a: usize, b: usize) -> usize {
    a + 2 * b
}

/// Product of basis words from the presentation `g² = 1, h² = 0, hg = −gh`.
fn presented_product(x: usize, y: usize) -> Option<(i64, usize)> {
    let (a, b) = (x % 2, x / 2);
    let (c, d) = (y % 2, y / 2);
    if b + d >= 2 {
        return None;
    }
    let sign = if b * c == 1 { -1 } else { 1 };
    Some((sign, word((a + c) % 2, b + d)))
}

#[test]
fn h4_multiplication_matches_the_presentation() {
    let h = sweedler_h4(Q).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            let mut expected = vec![Q.zero(); 4];
            if let Some((c, k)) = presented_product(x, y) {
                expected[k] = Q.int(c);
            }
            assert_eq!(h.mul(&h.basis(x), &h.basis(y)), expected, "e{x}·e{y}");
        }
    }
    assert_eq!(h.mult().get(&[H, G, GH]), &Q.int(-1));
}

#[test]
fn h4_coproduct_and_antipode_by_hand() {
    let h = sweedler_h4(Q).unwrap();
    let pure = |pairs: &[(usize, usize, i64)]| {
        let mut v = vec![Q.zero(); 16];
        for &(a, b, c) in pairs {
            v[a * 4 + b] = Q.int(c);
        }
        v
    };
    assert_eq!(h.delta(&h.basis(G)), pure(&[(G, G, 1)]));
    assert_eq!(h.delta(&h.basis(H)), pure(&[(ONE, H, 1), (H, G, 1)]));
    assert_eq!(h.delta(&h.basis(GH)), pure(&[(G, GH, 1), (GH, ONE, 1)]));
    assert_eq!(h.s(&h.basis(H)), h.basis(GH));
    let s2h = h.s(&h.s(&h.basis(H)));
    let minus_h: Vec<Scalar> = h.basis(H).iter().map(|x| -x.clone()).collect();
    assert_eq!(s2h, minus_h);
}

#[test]
fn h4_over_q_and_f5_and_kc2_pass() {
    assert!(verify_hopf_axioms(&sweedler_h4(Q).unwrap()).passed());
    assert!(verify_hopf_axioms(&sweedler_h4(FieldSpec::prime(5).unwrap()).unwrap()).passed());
    assert!(verify_hopf_axioms(&group_algebra_c2(Q).unwrap()).passed());
    assert!(matches!(sweedler_h4(FieldSpec::prime(2).unwrap()), Err(Error::Field(_))));
}

fn corrupted_h4_json(image_of_h: [&str; 4]) -> std::path::PathBuf {
    let mut v = io::to_json(&hopflab::catalog::Payload::Hopf(sweedler_h4(Q).unwrap()));
    v["antipode"][H] = serde_json::json!(image_of_h);
    let path = std::env::temp_dir().join(format!("hopflab-corrupt-{}-{}.json", std::process::id(), image_of_h.join("")));
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

#[test]
fn corrupted_antipode_is_detected_at_h() {
    // S(h) = h makes S singular: strict loading refuses, validation reports.
    let path = corrupted_h4_json(["0", "0", "1", "0"]);
    assert!(matches!(io::load(&path), Err(Error::NotInvertible(_))));
    let rep = io::load_for_validation(&path).unwrap().verify();
    let bad = rep.get("antipode").unwrap();
    assert_eq!(bad.witness, Some(vec![H]));
    assert_eq!(rep.get("antipode_inverse").unwrap().status, Status::Fail);

    // S(h) = −gh keeps S invertible but breaks the antipode axiom at h.
    let path = corrupted_h4_json(["0", "0", "0", "-1"]);
    let rep = io::load(&path).unwrap().verify();
    assert_eq!(rep.get("antipode").unwrap().witness, Some(vec![H]));
}

#[test]
fn dual_of_kc2_is_kc2_after_basis_change() {
    let c2 = group_algebra_c2(Q).unwrap();
    let d = dual_hopf(&c2);
    assert!(verify_hopf_axioms(&d).passed());
    // 1 ↦ δ₁ + δ_g, g ↦ δ₁ − δ_g.
    let p = Matrix::from_rows(Q, vec![vec![Q.one(), Q.one()], vec![Q.one(), Q.int(-1)]]).unwrap();
    let img = |x: &[Scalar]| p.apply(x);
    for i in 0..2 {
        for j in 0..2 {
            let (x, y) = (c2.basis(i), c2.basis(j));
            assert_eq!(img(&c2.mul(&x, &y)), d.mul(&img(&x), &img(&y)));
        }
        let dx = c2.delta(&c2.basis(i));
        let pp = p.kron(&p);
        assert_eq!(pp.apply(&dx), d.delta(&img(&c2.basis(i))));
        assert_eq!(d.eps(&img(&c2.basis(i))), c2.counit()[i]);
    }
}

#[test]
fn double_dual_and_h4_self_duality() {
    let h = sweedler_h4(Q).unwrap();
    assert_eq!(dual_hopf(&dual_hopf(&h)), h);
    assert!(verify_hopf_axioms(&dual_hopf(&h)).passed());
}

#[test]
fn iterated_coproducts() {
    let h = sweedler_h4(Q).unwrap();
    assert_eq!(h.iterated_coproduct(1).to_matrix(1), Matrix::identity(Q, 4));
    assert_eq!(h.iterated_coproduct(2).entries(), h.comult().entries());
    // Both parenthesizations written out from the structure constants.
    let c = h.comult();
    let n = 4;
    let mut left = vec![Q.zero(); n * 64];
    let mut right = vec![Q.zero(); n * 64];
    for i in 0..n {
        for a in 0..n {
            for b in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        let l = &(c.get(&[i, a, b]) * c.get(&[a, x, y]));
                        left[i * 64 + x * 16 + y * 4 + b] += l;
                        let r = &(c.get(&[i, a, b]) * c.get(&[b, x, y]));
                        right[i * 64 + a * 16 + x * 4 + y] += r;
                    }
                }
            }
        }
    }
    assert_eq!(left, right);
    assert_eq!(h.iterated_coproduct(3).entries(), &left[..]);
}

#[test]
fn op_and_cop() {
    let h = sweedler_h4(Q).unwrap();
    assert_eq!(op_cop(&h, false, false), h);
    let c2 = group_algebra_c2(Q).unwrap();
    assert_eq!(op_cop(&c2, true, true), c2);
    let hop: HopfAlgebra = op_cop(&h, true, false);
    assert!(verify_hopf_axioms(&hop).passed());
    assert_eq!(hop.antipode(), h.antipode_inv());
}
