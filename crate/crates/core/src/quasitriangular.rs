//! Coquasitriangular forms `R` and quasitriangular elements `ℛ`, their
//! deformations, and the YD structures they induce.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{add_scaled, digits, pairs, triples, HopfAlgebra, Vector};
use crate::linalg::{Matrix, Scalar};
use crate::report::{expect, expect_none, CheckReport, Failure};
use crate::twist::{conv_inverse2, conv_unit2, convolve2, deform, deform_dual, pair2, DualCocycle, TwoCocycle};
use crate::yd::{is_comodule, is_module, YdModule};

/// A convolution-invertible form `R` on `H⊗H`.
#[derive(Clone, Debug, PartialEq)]
pub struct CqtStructure {
    host: Arc<HopfAlgebra>,
    r: Matrix,
    r_inv: Matrix,
}

impl CqtStructure {
    pub fn new(host: Arc<HopfAlgebra>, r: Matrix, r_inv: Option<Matrix>) -> Result<CqtStructure> {
        let n = host.dim();
        if r.rows() != n || r.cols() != n {
            return Err(Error::Shape(format!("R must be {n}x{n}")));
        }
        let r_inv = match r_inv {
            Some(inv) => {
                let u = conv_unit2(&host);
                if convolve2(&host, &r, &inv)? != u || convolve2(&host, &inv, &r)? != u {
                    return Err(Error::Invalid("r_inv is not the convolution inverse".into()));
                }
                inv
            }
            None => conv_inverse2(&host, &r).ok_or_else(|| Error::NotInvertible("R".into()))?,
        };
        Ok(CqtStructure { host, r, r_inv })
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn r(&self) -> &Matrix {
        &self.r
    }

    pub fn r_inv(&self) -> &Matrix {
        &self.r_inv
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        pair2(&self.r, x, y)
    }

    /// The functional `R(x⊗-)`.
    pub fn left_slot(&self, x: &[Scalar]) -> Vector {
        let n = self.host.dim();
        (0..n).map(|j| self.eval(x, &self.host.basis(j))).collect()
    }

    /// The functional `R(-⊗y)`.
    pub fn right_slot(&self, y: &[Scalar]) -> Vector {
        let n = self.host.dim();
        (0..n).map(|i| self.eval(&self.host.basis(i), y)).collect()
    }
}

pub fn verify_cqt(c: &CqtStructure) -> CheckReport {
    let h = &*c.host;
    let n = h.dim();
    let e = |i| h.basis(i);
    let r = |x: &[Scalar], y: &[Scalar]| c.eval(x, y);
    let mut rep = CheckReport::new();

    rep.run("cqt1", || {
        let one = h.unit();
        expect_none(
            (0..n)
                .find(|&i| r(&e(i), one) != h.counit()[i] || r(one, &e(i)) != h.counit()[i])
                .map(|i| vec![i]),
            "R(h⊗1) = R(1⊗h) = ε(h)",
        )
    });
    rep.run("cqt2", || {
        expect_none(
            triples(n)
                .find(|&(g, x, l)| {
                    let lhs = r(&e(g), &h.mul(&e(x), &e(l)));
                    let mut rhs = h.field().zero();
                    for (g1, g2, c0) in h.comult_terms(g) {
                        rhs += &(c0 * &(&r(&e(*g1), &e(l)) * &r(&e(*g2), &e(x))));
                    }
                    lhs != rhs
                })
                .map(|(a, b, c)| vec![a, b, c]),
            "R(g⊗hl) = ΣR(g₁⊗l)R(g₂⊗h)",
        )
    });
    rep.run("cqt3", || {
        expect_none(
            triples(n)
                .find(|&(x, l, g)| {
                    let lhs = r(&h.mul(&e(x), &e(l)), &e(g));
                    let mut rhs = h.field().zero();
                    for (g1, g2, c0) in h.comult_terms(g) {
                        rhs += &(c0 * &(&r(&e(x), &e(*g1)) * &r(&e(l), &e(*g2))));
                    }
                    lhs != rhs
                })
                .map(|(a, b, c)| vec![a, b, c]),
            "R(hl⊗g) = ΣR(h⊗g₁)R(l⊗g₂)",
        )
    });
    rep.run("cqt4", || {
        expect_none(
            pairs(n)
                .find(|&(g, x)| {
                    let mut lhs = h.zero();
                    let mut rhs = h.zero();
                    for (g1, g2, a) in h.comult_terms(g) {
                        for (h1, h2, b) in h.comult_terms(x) {
                            let ab = a * b;
                            add_scaled(&mut lhs, &(&ab * c.r.get(*g1, *h1)), &h.mul(&e(*g2), &e(*h2)));
                            add_scaled(&mut rhs, &(&ab * c.r.get(*g2, *h2)), &h.mul(&e(*h1), &e(*g1)));
                        }
                    }
                    lhs != rhs
                })
                .map(|(a, b)| vec![a, b]),
            "ΣR(g₁⊗h₁)g₂h₂ = ΣR(g₂⊗h₂)h₁g₁",
        )
    });
    rep.run("cqt4_prime", || {
        expect_none(
            pairs(n)
                .find(|&(g, x)| {
                    let mut lhs = h.zero();
                    for (g1, g2, a) in h.comult_terms(g) {
                        add_scaled(&mut lhs, &(a * c.r.get(*g2, x)), &e(*g1));
                    }
                    let mut rhs = h.zero();
                    for (cg, gl) in h.delta_terms(g, 2) {
                        for (ch, hl) in h.delta_terms(x, 3) {
                            let coeff = &(&cg * &ch) * c.r.get(gl[0], hl[1]);
                            if !coeff.is_zero() {
                                add_scaled(&mut rhs, &coeff, &h.prod(&[&h.s(&e(hl[0])), &e(gl[1]), &e(hl[2])]));
                            }
                        }
                    }
                    lhs != rhs
                })
                .map(|(a, b)| vec![a, b]),
            "Σg₁R(g₂⊗h) = ΣR(g₁⊗h₂)S(h₁)g₂h₃",
        )
    });
    rep.run("cqt4_second", || {
        expect_none(
            pairs(n)
                .find(|&(g, x)| {
                    let mut lhs = h.zero();
                    for (h1, h2, a) in h.comult_terms(x) {
                        add_scaled(&mut lhs, &(a * c.r.get(g, *h2)), &e(*h1));
                    }
                    let mut rhs = h.zero();
                    for (cg, gl) in h.delta_terms(g, 3) {
                        for (ch, hl) in h.delta_terms(x, 2) {
                            let coeff = &(&cg * &ch) * c.r.get(gl[1], hl[0]);
                            if !coeff.is_zero() {
                                add_scaled(&mut rhs, &coeff, &h.prod(&[&e(gl[2]), &e(hl[1]), &h.s_inv(&e(gl[0]))]));
                            }
                        }
                    }
                    lhs != rhs
                })
                .map(|(a, b)| vec![a, b]),
            "Σh₁R(g⊗h₂) = ΣR(g₂⊗h₁)g₃h₂S⁻¹(g₁)",
        )
    });
    rep.run("invertibility", || {
        let u = conv_unit2(h);
        let ok = convolve2(h, &c.r, &c.r_inv).ok() == Some(u.clone()) && convolve2(h, &c.r_inv, &c.r).ok() == Some(u);
        expect(ok, "R*R⁻¹ = R⁻¹*R = ε⊗ε")
    });
    rep
}

/// `R^σ(g⊗h) = Σσ(h₁⊗g₁)R(g₂⊗h₂)σ⁻¹(g₃⊗h₃)`, a CQT form on `H^σ`.
pub fn deform_cqt(c: &CqtStructure, s: &TwoCocycle) -> Result<CqtStructure> {
    if c.host != *s.host() {
        return Err(Error::HostMismatch);
    }
    let h = &*c.host;
    let n = h.dim();
    let mut r = Matrix::zeros(h.field(), n, n);
    for (i, j) in pairs(n) {
        let mut acc = h.field().zero();
        for (cg, g) in h.delta_terms(i, 3) {
            for (ch, x) in h.delta_terms(j, 3) {
                let v = &(s.sigma().get(x[0], g[0]) * c.r.get(g[1], x[1])) * s.sigma_inv().get(g[2], x[2]);
                if !v.is_zero() {
                    acc += &(&(&cg * &ch) * &v);
                }
            }
        }
        r.set(i, j, acc);
    }
    CqtStructure::new(Arc::new(deform(s)?), r, None)
}

/// An invertible `ℛ ∈ H⊗H`; `rr[i][j]` is the coefficient of `e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct QtStructure {
    host: Arc<HopfAlgebra>,
    rr: Matrix,
    rr_inv: Matrix,
}

impl QtStructure {
    pub fn new(host: Arc<HopfAlgebra>, rr: Matrix, rr_inv: Option<Matrix>) -> Result<QtStructure> {
        // Inverse handling is shared with dual cocycles: both are units of H⊗H.
        let d = DualCocycle::new(host, rr, rr_inv)?;
        Ok(QtStructure { host: d.host().clone(), rr: d.theta().clone(), rr_inv: d.theta_inv().clone() })
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn rr(&self) -> &Matrix {
        &self.rr
    }

    pub fn rr_inv(&self) -> &Matrix {
        &self.rr_inv
    }
}

pub fn verify_qt(q: &QtStructure) -> CheckReport {
    let h = &*q.host;
    let n = h.dim();
    let t = q.rr.entries();
    let mut rep = CheckReport::new();
    let cmp3 = |lhs: Vector, rhs: Vector, what: &str| match (0..lhs.len()).find(|&k| lhs[k] != rhs[k]) {
        None => Ok(String::new()),
        Some(k) => Err(Failure::at(digits(n, 3, k), format!("{what} violated"))),
    };
    rep.run("qt1", || {
        let rhs = h.tensor_mul(3, &h.embed2(3, t, 0, 2), &h.embed2(3, t, 1, 2));
        cmp3(h.delta_leg(2, t, 0), rhs, "(Δ⊗id)ℛ = ℛ₁₃ℛ₂₃")
    });
    rep.run("qt2", || {
        expect(h.eps_leg(2, t, 0) == h.unit() && h.eps_leg(2, t, 1) == h.unit(), "(ε⊗id)ℛ = (id⊗ε)ℛ = 1")
    });
    rep.run("qt3", || {
        let rhs = h.tensor_mul(3, &h.embed2(3, t, 0, 2), &h.embed2(3, t, 0, 1));
        cmp3(h.delta_leg(2, t, 1), rhs, "(id⊗Δ)ℛ = ℛ₁₃ℛ₁₂")
    });
    rep.run("qt4", || {
        expect_none(
            (0..n)
                .find(|&i| {
                    let d = h.delta(&h.basis(i));
                    h.tensor_mul(2, &h.flip2(&d), t) != h.tensor_mul(2, t, &d)
                })
                .map(|i| vec![i]),
            "Δ^cop(h)ℛ = ℛΔ(h)",
        )
    });
    rep.run("invertibility", || {
        let one = h.tensor_one(2);
        let ti = q.rr_inv.entries();
        expect(h.tensor_mul(2, t, ti) == one && h.tensor_mul(2, ti, t) == one, "ℛℛ⁻¹ = 1⊗1")
    });
    rep
}

/// `ℛ_θ = τ(θ)ℛθ⁻¹`, a QT structure on `H_θ`.
pub fn deform_qt(q: &QtStructure, d: &DualCocycle) -> Result<QtStructure> {
    if q.host != *d.host() {
        return Err(Error::HostMismatch);
    }
    let h = &*q.host;
    let n = h.dim();
    let prod = h.tensor_mul(
        2,
        &h.tensor_mul(2, &h.flip2(d.theta().entries()), q.rr.entries()),
        d.theta_inv().entries(),
    );
    let rr = Matrix::from_fn(h.field(), n, n, |i, j| prod[i * n + j].clone());
    QtStructure::new(Arc::new(deform_dual(d)?), rr, None)
}

/// The action `h▷₁m = Σm₀R(h⊗m₁)` on a right comodule.
pub fn yd_from_comodule(c: &CqtStructure, coaction: Vec<Matrix>) -> Result<YdModule> {
    let h = &*c.host;
    let dim = coaction.first().map_or(0, Matrix::rows);
    let trivial = YdModule::trivial(c.host.clone(), dim);
    let m = YdModule::new(c.host.clone(), trivial.action().to_vec(), coaction)?;
    if !is_comodule(&m) {
        return Err(Error::Invalid("not a right comodule".into()));
    }
    let action = (0..h.dim()).map(|i| m.coact_with(&c.left_slot(&h.basis(i)))).collect();
    YdModule::new(c.host.clone(), action, m.coaction().to_vec())
}

/// The coaction `a ↦ Σ(ℛ²·a)⊗ℛ¹` on a left module.
pub fn yd_from_module(q: &QtStructure, action: Vec<Matrix>) -> Result<YdModule> {
    let h = &*q.host;
    let dim = action.first().map_or(0, Matrix::rows);
    let trivial = YdModule::trivial(q.host.clone(), dim);
    let m = YdModule::new(q.host.clone(), action, trivial.coaction().to_vec())?;
    if !is_module(&m) {
        return Err(Error::Invalid("not a left module".into()));
    }
    let coaction = (0..h.dim()).map(|k| m.act(q.rr.row(k))).collect();
    YdModule::new(q.host.clone(), m.action().to_vec(), coaction)
}
