//! The braided Hopf algebra `𝓗_R`, its bimodule actions on YD modules,
//! coinvariants, the generalized cotensor product `∧`, the unit object
//! `I = H*`, Galois maps and the Miyashita-Ulbrich action.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::quasitriangular::{deform_cqt, yd_from_comodule, CqtStructure};
use crate::report::{expect, CheckReport, Failure, Outcome};
use crate::twist::{deform, pair2, TwoCocycle};
use crate::yd::{
    braided_product, eta_inv, quantum_commutative, restrict, sigma_algebra, sigma_module, tensor_product,
    verify_yd, verify_yd_algebra, BraidedAction, YdAlgebra, YdMap, YdModule,
};

fn mat_err(e: Error) -> Failure {
    Failure::msg(e.to_string())
}

fn map_outcome(map: &YdMap, what: &str) -> Outcome {
    match map.first_failure() {
        None => Ok(String::new()),
        Some((kind, i)) => Err(Failure::at(vec![i], format!("{what} does not commute with the {kind}"))),
    }
}

/// Coefficient of `e_k` in `x`, for every `k`, scaled by `c` and added to `acc`.
fn add_vec(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    crate::hopf::add_scaled(acc, c, x)
}

fn kernel_of_stack(ms: &[Matrix], cols: usize, f: FieldSpec) -> Result<Matrix> {
    if ms.is_empty() {
        return Ok(Matrix::identity(f, cols));
    }
    let refs: Vec<&Matrix> = ms.iter().collect();
    Ok(Matrix::vstack(&refs)?.kernel_basis())
}

/// Coordinates of the columns of `x` in the basis given by the columns of `basis`.
fn coords(basis: &Matrix, x: &Matrix) -> Result<Matrix> {
    basis
        .solve(x)?
        .ok_or_else(|| Error::Invalid("vector outside the subspace".into()))
}

/// The action `h▷₁m = Σ m₀R(h⊗m₁)`.
pub fn act1(c: &CqtStructure, m: &YdModule) -> Vec<Matrix> {
    let h = &**c.host();
    (0..h.dim()).map(|i| m.coact_with(&c.left_slot(&h.basis(i)))).collect()
}

/// The action `h▷₂m = Σ m₀R(m₁⊗S⁻¹(h))`.
pub fn act2(c: &CqtStructure, m: &YdModule) -> Vec<Matrix> {
    let h = &**c.host();
    (0..h.dim())
        .map(|i| m.coact_with(&c.right_slot(&h.s_inv(&h.basis(i)))))
        .collect()
}

/// `𝓗_R`: `H` as a coalgebra with product `⋆`, braided antipode `S_R`,
/// adjoint coaction and the induced action `▷₁`.
#[derive(Clone, Debug)]
pub struct BraidedHopf {
    cqt: CqtStructure,
    algebra: YdAlgebra,
    antipode: Matrix,
}

impl BraidedHopf {
    pub fn cqt(&self) -> &CqtStructure {
        &self.cqt
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        self.cqt.host()
    }

    /// `(𝓗_R, ⋆)` with the adjoint coaction and the action `▷₁`.
    pub fn algebra(&self) -> &YdAlgebra {
        &self.algebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn star(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra.mul(x, y)
    }
}

/// `ρ(h) = Σ h₂⊗S(h₁)h₃`.
pub fn adjoint_coaction(h: &HopfAlgebra) -> Vec<Matrix> {
    let n = h.dim();
    let mut out = vec![Matrix::zeros(h.field(), n, n); n];
    for i in 0..n {
        for (c, l) in h.delta_terms(i, 3) {
            let leg = h.mul(&h.s(&h.basis(l[0])), &h.basis(l[2]));
            for (k, w) in leg.iter().enumerate() {
                if !w.is_zero() {
                    out[k].add_at(l[1], i, &(&c * w));
                }
            }
        }
    }
    out
}

/// Builds `⋆`: `h⋆l = Σ l₂h₂ R(S⁻¹(l₃)l₁⊗h₁)`, and `S_R(h) = Σ S(h₂)R(S²(h₃)S(h₁)⊗h₄)`.
pub fn build_hr(c: &CqtStructure) -> Result<BraidedHopf> {
    let h = &**c.host();
    let n = h.dim();
    let f = h.field();
    let mut left = vec![Matrix::zeros(f, n, n); n];
    for (p, lp) in left.iter_mut().enumerate() {
        for (h1, h2, ch) in h.comult_terms(p) {
            for q in 0..n {
                let mut col = h.zero();
                for (cl, l) in h.delta_terms(q, 3) {
                    let arg = h.mul(&h.s_inv(&h.basis(l[2])), &h.basis(l[0]));
                    let w = c.eval(&arg, &h.basis(*h1));
                    if w.is_zero() {
                        continue;
                    }
                    add_vec(&mut col, &(&(ch * &cl) * &w), &h.mul(&h.basis(l[1]), &h.basis(*h2)));
                }
                for (r, v) in col.into_iter().enumerate() {
                    if !v.is_zero() {
                        lp.add_at(r, q, &v);
                    }
                }
            }
        }
    }
    let mut antipode = Matrix::zeros(f, n, n);
    for i in 0..n {
        for (coef, l) in h.delta_terms(i, 4) {
            let arg = h.mul(&h.s(&h.s(&h.basis(l[2]))), &h.s(&h.basis(l[0])));
            let w = c.eval(&arg, &h.basis(l[3]));
            if w.is_zero() {
                continue;
            }
            let img = h.s(&h.basis(l[1]));
            for (r, v) in img.iter().enumerate() {
                if !v.is_zero() {
                    antipode.add_at(r, i, &(&(&coef * &w) * v));
                }
            }
        }
    }
    let module = yd_from_comodule(c, adjoint_coaction(h))?;
    let algebra = YdAlgebra::from_left_mult(module, left, h.unit().to_vec())?;
    Ok(BraidedHopf { cqt: c.clone(), algebra, antipode })
}

/// Associativity, unit and the braided antipode identity of `𝓗_R`.
pub fn verify_braided_hopf(bh: &BraidedHopf) -> CheckReport {
    let h = &**bh.host();
    let a = &bh.algebra;
    let n = h.dim();
    let mut rep = CheckReport::new();
    rep.run("star_associative", || {
        for p in 0..n {
            for q in 0..n {
                let lhs = a.left(&a.mul(&h.basis(p), &h.basis(q)));
                if lhs != a.left_mult()[p].try_mul(&a.left_mult()[q]).map_err(mat_err)? {
                    return Err(Failure::at(vec![p, q], "(h⋆l)⋆k = h⋆(l⋆k) violated"));
                }
            }
        }
        Ok(String::new())
    });
    rep.run("star_unit", || {
        let ok = a.left(h.unit()).is_identity() && (0..n).all(|p| a.mul(&h.basis(p), h.unit()) == h.basis(p));
        expect(ok, "1⋆h = h⋆1 = h")
    });
    rep.run("braided_antipode", || {
        for i in 0..n {
            let mut l = h.zero();
            let mut r = h.zero();
            for (x, y, c) in h.comult_terms(i) {
                add_vec(&mut l, c, &a.mul(&bh.antipode.col(*x), &h.basis(*y)));
                add_vec(&mut r, c, &a.mul(&h.basis(*x), &bh.antipode.col(*y)));
            }
            let mut e = h.unit().to_vec();
            e.iter_mut().for_each(|v| *v = &*v * &h.counit()[i]);
            if l != e || r != e {
                return Err(Failure::at(vec![i], "Σ S_R(h₁)⋆h₂ = ε(h)1 = Σ h₁⋆S_R(h₂) violated"));
            }
        }
        Ok(String::new())
    });
    rep
}

/// A YD module with its `𝓗_R`-bimodule structure.
#[derive(Clone, Debug)]
pub struct BimoduleActions {
    pub module: YdModule,
    /// `h−▷m`.
    pub left_hr: Vec<Matrix>,
    /// `m◁−h`.
    pub right_hr: Vec<Matrix>,
    /// `h▷₁m`.
    pub act1: Vec<Matrix>,
    /// `h▷₂m`.
    pub act2: Vec<Matrix>,
}

/// `h−▷m = Σ S⁻¹(h₂)▷₁(h₁·m)`.
fn left_hr(h: &HopfAlgebra, a1: &[Matrix], m: &YdModule) -> Vec<Matrix> {
    let dim = m.dim();
    (0..h.dim())
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dim, dim);
            for (a, b, c) in h.comult_terms(i) {
                let op = crate::yd::combine(a1, &h.s_inv(&h.basis(*b)), dim);
                acc.axpy(c, &op.try_mul(&m.action()[*a]).unwrap());
            }
            acc
        })
        .collect()
}

/// `h−▷m = Σ(h₂·m₀)R(S⁻¹(h₄)⊗h₃m₁S⁻¹(h₁))`.
fn left_hr_second_form(c: &CqtStructure, m: &YdModule) -> Vec<Matrix> {
    let h = &**c.host();
    let n = h.dim();
    (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), m.dim(), m.dim());
            for (coef, l) in h.delta_terms(i, 4) {
                let x = h.s_inv(&h.basis(l[3]));
                let tail = h.s_inv(&h.basis(l[0]));
                let fk: Vector = (0..n)
                    .map(|k| c.eval(&x, &h.prod(&[&h.basis(l[2]), &h.basis(k), &tail])))
                    .collect();
                acc.axpy(&coef, &m.action()[l[1]].try_mul(&m.coact_with(&fk)).unwrap());
            }
            acc
        })
        .collect()
}

/// `m◁−h = Σ S(h₁)▷₂(h₂·m)`.
fn right_hr(h: &HopfAlgebra, a2: &[Matrix], m: &YdModule) -> Vec<Matrix> {
    let dim = m.dim();
    (0..h.dim())
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dim, dim);
            for (a, b, c) in h.comult_terms(i) {
                let op = crate::yd::combine(a2, &h.s(&h.basis(*a)), dim);
                acc.axpy(c, &op.try_mul(&m.action()[*b]).unwrap());
            }
            acc
        })
        .collect()
}

/// `m◁−h = Σ(h₃·m₀)R(h₄m₁S⁻¹(h₂)⊗h₁)`.
fn right_hr_second_form(c: &CqtStructure, m: &YdModule) -> Vec<Matrix> {
    let h = &**c.host();
    let n = h.dim();
    (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), m.dim(), m.dim());
            for (coef, l) in h.delta_terms(i, 4) {
                let tail = h.s_inv(&h.basis(l[1]));
                let fk: Vector = (0..n)
                    .map(|k| c.eval(&h.prod(&[&h.basis(l[3]), &h.basis(k), &tail]), &h.basis(l[0])))
                    .collect();
                acc.axpy(&coef, &m.action()[l[2]].try_mul(&m.coact_with(&fk)).unwrap());
            }
            acc
        })
        .collect()
}

/// Builds `−▷`, `◁−`, `▷₁` and `▷₂`; errors when the two displayed forms
/// of either bimodule action disagree.
pub fn bimodule_actions(bh: &BraidedHopf, m: &YdModule) -> Result<BimoduleActions> {
    if bh.host() != m.host() {
        return Err(Error::HostMismatch);
    }
    let c = bh.cqt();
    let h = &**c.host();
    let a1 = act1(c, m);
    let a2 = act2(c, m);
    let left = left_hr(h, &a1, m);
    if left != left_hr_second_form(c, m) {
        return Err(Error::Invalid("the two forms of the left 𝓗_R-action disagree".into()));
    }
    let right = right_hr(h, &a2, m);
    if right != right_hr_second_form(c, m) {
        return Err(Error::Invalid("the two forms of the right 𝓗_R-action disagree".into()));
    }
    Ok(BimoduleActions { module: m.clone(), left_hr: left, right_hr: right, act1: a1, act2: a2 })
}

/// Left and right action laws for `⋆` and commutation of the two actions.
pub fn verify_bimodule(bh: &BraidedHopf, b: &BimoduleActions) -> CheckReport {
    let h = &**bh.host();
    let n = h.dim();
    let dim = b.module.dim();
    let mut rep = CheckReport::new();
    let comb = |ms: &[Matrix], x: &[Scalar]| crate::yd::combine(ms, x, dim);
    rep.run("left_action", || {
        for p in 0..n {
            for q in 0..n {
                let lhs = comb(&b.left_hr, &bh.star(&h.basis(p), &h.basis(q)));
                if lhs != b.left_hr[p].try_mul(&b.left_hr[q]).map_err(mat_err)? {
                    return Err(Failure::at(vec![p, q], "(h⋆l)−▷m = h−▷(l−▷m) violated"));
                }
            }
        }
        expect(comb(&b.left_hr, h.unit()).is_identity(), "1−▷m = m")
    });
    rep.run("right_action", || {
        for p in 0..n {
            for q in 0..n {
                let lhs = comb(&b.right_hr, &bh.star(&h.basis(p), &h.basis(q)));
                if lhs != b.right_hr[q].try_mul(&b.right_hr[p]).map_err(mat_err)? {
                    return Err(Failure::at(vec![p, q], "m◁−(h⋆l) = (m◁−h)◁−l violated"));
                }
            }
        }
        expect(comb(&b.right_hr, h.unit()).is_identity(), "m◁−1 = m")
    });
    rep.run("actions_commute", || {
        for p in 0..n {
            for q in 0..n {
                let l = b.left_hr[p].try_mul(&b.right_hr[q]).map_err(mat_err)?;
                let r = b.right_hr[q].try_mul(&b.left_hr[p]).map_err(mat_err)?;
                if l != r {
                    return Err(Failure::at(vec![p, q], "(h−▷m)◁−l = h−▷(m◁−l) violated"));
                }
            }
        }
        Ok(String::new())
    });
    rep
}

/// Which coinvariants to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `_◇M`: `m◁−h = ε(h)m`.
    Left,
    /// `M_◇`: `h−▷m = ε(h)m`.
    Right,
}

fn minus_counit(h: &HopfAlgebra, ops: &[Matrix]) -> Vec<Matrix> {
    ops.iter()
        .enumerate()
        .map(|(i, a)| {
            let mut d = a.clone();
            d.axpy(&-h.counit()[i].clone(), &Matrix::identity(h.field(), a.rows()));
            d
        })
        .collect()
}

fn differences(xs: &[Matrix], ys: &[Matrix]) -> Vec<Matrix> {
    xs.iter().zip(ys).map(|(x, y)| x.try_sub(y).unwrap()).collect()
}

/// Basis (as columns) of the coinvariants on the chosen side.
pub fn coinvariants(b: &BimoduleActions, side: Side) -> Result<Matrix> {
    let h = &**b.module.host();
    let ops = match side {
        Side::Left => &b.right_hr,
        Side::Right => &b.left_hr,
    };
    kernel_of_stack(&minus_counit(h, ops), b.module.dim(), h.field())
}

/// The same coinvariants via `h·m = h▷₁m` (right) or `h·m = h▷₂m` (left).
pub fn coinvariants_via_actions(b: &BimoduleActions, side: Side) -> Result<Matrix> {
    let h = &**b.module.host();
    let other = match side {
        Side::Left => &b.act2,
        Side::Right => &b.act1,
    };
    kernel_of_stack(&differences(b.module.action(), other), b.module.dim(), h.field())
}

/// Both characterizations agree and give YD submodules, on each side.
pub fn verify_coinvariants(b: &BimoduleActions) -> CheckReport {
    let mut rep = CheckReport::new();
    for (side, name) in [(Side::Right, "right"), (Side::Left, "left")] {
        rep.run(format!("{name}_coinvariants_agree"), || {
            let x = coinvariants(b, side).map_err(mat_err)?;
            let y = coinvariants_via_actions(b, side).map_err(mat_err)?;
            if x.same_column_span(&y) {
                Ok(format!("dim {}", x.cols()))
            } else {
                Err(Failure::msg(format!("dims {} and {} or spans differ", x.cols(), y.cols())))
            }
        });
        rep.run(format!("{name}_coinvariants_yd_submodule"), || {
            let x = coinvariants(b, side).map_err(mat_err)?;
            if x.cols() == 0 {
                return Ok("dim 0".into());
            }
            restrict(&b.module, &x).map(|_| String::new()).map_err(mat_err)
        });
    }
    rep
}

/// `σ̲(M)_◇ = M_◇` and `_◇σ̲(M) = _◇M` as subspaces.
pub fn verify_sigma_coinvariants(c: &CqtStructure, s: &TwoCocycle, m: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let bh = build_hr(c)?;
        let bhs = build_hr(&deform_cqt(c, s)?)?;
        let b = bimodule_actions(&bh, m)?;
        let bs = bimodule_actions(&bhs, &sigma_module(s, m)?)?;
        Ok((b, bs))
    })();
    let (b, bs) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(mat_err(e)));
            return rep;
        }
    };
    for (side, name) in [(Side::Right, "right_coinvariants_equal"), (Side::Left, "left_coinvariants_equal")] {
        rep.run(name, || {
            let x = coinvariants(&b, side).map_err(mat_err)?;
            let y = coinvariants(&bs, side).map_err(mat_err)?;
            if x.same_column_span(&y) {
                Ok(format!("dim {}", x.cols()))
            } else {
                Err(Failure::msg(format!("dims {} and {} or spans differ", x.cols(), y.cols())))
            }
        });
    }
    rep
}

/// `M∧N` as a subspace of `M⊗N` together with its YD structure.
#[derive(Clone, Debug)]
pub struct Wedge {
    /// Columns span `M∧N` inside `M⊗N`.
    pub basis: Matrix,
    pub module: YdModule,
}

fn wedge_ops(h: &HopfAlgebra, m: &BimoduleActions, nn: &BimoduleActions) -> (Vec<Matrix>, Vec<Matrix>) {
    let dim = m.module.dim() * nn.module.dim();
    let mut first = vec![Matrix::zeros(h.field(), dim, dim); h.dim()];
    let mut second = first.clone();
    for i in 0..h.dim() {
        for (a, b, c) in h.comult_terms(i) {
            first[i].axpy(c, &m.module.action()[*a].kron(&nn.act1[*b]));
            second[i].axpy(c, &m.act2[*a].kron(&nn.module.action()[*b]));
        }
    }
    (first, second)
}

/// `M∧N = {x : Σh₁·m⊗h₂▷₁n = Σh₁▷₂m⊗h₂·n}` with action `h₁·m⊗h₂▷₁n` and
/// the tensor coaction; errors if the defining forms disagree.
pub fn wedge(bh: &BraidedHopf, m: &YdModule, nn: &YdModule) -> Result<Wedge> {
    let h = &**bh.host();
    let bm = bimodule_actions(bh, m)?;
    let bn = bimodule_actions(bh, nn)?;
    let (first, second) = wedge_ops(h, &bm, &bn);
    let basis = kernel_of_stack(&differences(&first, &second), m.dim() * nn.dim(), h.field())?;
    let by_bimodule: Vec<Matrix> = (0..h.dim())
        .map(|i| {
            bm.right_hr[i]
                .kron(&Matrix::identity(h.field(), nn.dim()))
                .try_sub(&Matrix::identity(h.field(), m.dim()).kron(&bn.left_hr[i]))
                .unwrap()
        })
        .collect();
    let other = kernel_of_stack(&by_bimodule, m.dim() * nn.dim(), h.field())?;
    if !basis.same_column_span(&other) {
        return Err(Error::Invalid("the two descriptions of M∧N disagree".into()));
    }
    if basis.cols() == 0 {
        return Err(Error::Invalid("M∧N is zero".into()));
    }
    let tensor = tensor_product(m, nn)?;
    let ambient = YdModule::new(bh.host().clone(), first, tensor.coaction().to_vec())?;
    let module = restrict(&ambient, &basis)?;
    Ok(Wedge { basis, module })
}

/// Dimension and YD validity of `M∧N`.
pub fn verify_wedge(bh: &BraidedHopf, m: &YdModule, nn: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    match wedge(bh, m, nn) {
        Err(e) => {
            rep.run("construction", || Err(mat_err(e)));
        }
        Ok(w) => {
            rep.run("wedge_dimension", || Ok(format!("dim {}", w.basis.cols())));
            rep.extend("wedge_yd", verify_yd(&w.module));
        }
    }
    rep
}

/// `η⁻¹(M∧N) = σ̲(M)∧σ̲(N)` and `η⁻¹` restricts to a YD isomorphism
/// `σ̲(M∧N) → σ̲(M)∧σ̲(N)`.
pub fn verify_sigma_wedge(c: &CqtStructure, s: &TwoCocycle, m: &YdModule, nn: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let bh = build_hr(c)?;
        let bhs = build_hr(&deform_cqt(c, s)?)?;
        let w = wedge(&bh, m, nn)?;
        let ws = wedge(&bhs, &sigma_module(s, m)?, &sigma_module(s, nn)?)?;
        let e = eta_inv(s, m, nn)?;
        Ok((w, ws, e))
    })();
    let (w, ws, e) = match built {
        Ok(x) => x,
        Err(err) => {
            rep.run("construction", || Err(mat_err(err)));
            return rep;
        }
    };
    rep.run("wedge_span", || {
        let image = e.matrix.try_mul(&w.basis).map_err(mat_err)?;
        if image.same_column_span(&ws.basis) {
            Ok(format!("dim {}", ws.basis.cols()))
        } else {
            Err(Failure::msg("η⁻¹(M∧N) differs from σ̲(M)∧σ̲(N)"))
        }
    });
    rep.run("wedge_yd_iso", || {
        let image = e.matrix.try_mul(&w.basis).map_err(mat_err)?;
        let restricted = coords(&ws.basis, &image).map_err(mat_err)?;
        let source = sigma_module(s, &w.module).map_err(mat_err)?;
        let map = YdMap::new(source, ws.module.clone(), restricted).map_err(mat_err)?;
        if !map.is_invertible() {
            return Err(Failure::msg("restriction of η⁻¹ is not bijective"));
        }
        map_outcome(&map, "η⁻¹")
    });
    rep
}

/// `η⁻¹: σ̲(A#_R B) → σ̲(A)#_{R^σ}σ̲(B)` is an algebra map, checked on the
/// whole of `A⊗B` and on a basis of `A∧B`.
pub fn verify_sigma_wedge_algebra(c: &CqtStructure, s: &TwoCocycle, a: &YdAlgebra, b: &YdAlgebra) -> CheckReport {
    let mut rep = verify_sigma_wedge(c, s, a.module(), b.module());
    let built = (|| -> Result<_> {
        let cs = deform_cqt(c, s)?;
        let src = sigma_algebra(s, &braided_product(a, b, BraidedAction::Induced(c))?)?;
        let dst = braided_product(&sigma_algebra(s, a)?, &sigma_algebra(s, b)?, BraidedAction::Induced(&cs))?;
        let e = eta_inv(s, a.module(), b.module())?;
        let w = wedge(&build_hr(c)?, a.module(), b.module())?;
        Ok((src, dst, e, w))
    })();
    let (src, dst, e, w) = match built {
        Ok(x) => x,
        Err(err) => {
            rep.run("algebra_construction", || Err(mat_err(err)));
            return rep;
        }
    };
    rep.run("eta_inv_unit", || expect(e.matrix.apply(src.unit()) == dst.unit(), "η⁻¹(1#1) = 1#1"));
    rep.run("eta_inv_multiplicative", || {
        let d = src.dim();
        for p in 0..d {
            let lhs = e.matrix.try_mul(&src.left_mult()[p]).map_err(mat_err)?;
            let rhs = dst.left(&e.matrix.col(p)).try_mul(&e.matrix).map_err(mat_err)?;
            if lhs != rhs {
                return Err(Failure::at(vec![p], "η⁻¹(x•y) = η⁻¹(x)η⁻¹(y) violated"));
            }
        }
        Ok(String::new())
    });
    rep.run("wedge_subalgebra", || {
        for i in 0..w.basis.cols() {
            let prod = src.left(&w.basis.col(i)).try_mul(&w.basis).map_err(mat_err)?;
            if !w.basis.spans(&prod) {
                return Err(Failure::at(vec![i], "A∧B is not closed under the product"));
            }
        }
        Ok(format!("dim {}", w.basis.cols()))
    });
    rep
}

/// `I = H*`: product dual to `Δ`, action `h·p = Σp₁⟨p₂,h⟩`, coaction dual to
/// `h*·p = Σh*₂pS⁻¹(h*₁)`, in the dual basis.
pub fn unit_object(h: Arc<HopfAlgebra>) -> Result<YdAlgebra> {
    let n = h.dim();
    let f = h.field();
    let action = (0..n)
        .map(|i| Matrix::from_fn(f, n, n, |k, j| h.mult().get(&[k, i, j]).clone()))
        .collect();
    let mut coaction = vec![Matrix::zeros(f, n, n); n];
    for r in 0..n {
        for (c, l) in h.delta_terms(r, 3) {
            let leg = h.mul(&h.s_inv(&h.basis(l[2])), &h.basis(l[0]));
            for (k, w) in leg.iter().enumerate() {
                if !w.is_zero() {
                    coaction[k].add_at(r, l[1], &(&c * w));
                }
            }
        }
    }
    let mult = (0..n)
        .map(|i| Matrix::from_fn(f, n, n, |k, j| h.comult().get(&[k, i, j]).clone()))
        .collect();
    let unit = h.counit().to_vec();
    YdAlgebra::from_left_mult(YdModule::new(h, action, coaction)?, mult, unit)
}

/// `χ(h) = Σσ⁻¹(h₄⊗S⁻¹(h₃)h₁)h₂`, its inverse from the closed formula, and
/// `χ* = χᵀ` in the dual basis.
#[derive(Clone, Debug)]
pub struct ChiMaps {
    pub chi: Matrix,
    pub chi_inv: Matrix,
    pub chi_star: Matrix,
}

pub fn chi_maps(s: &TwoCocycle) -> ChiMaps {
    let h = &**s.host();
    let n = h.dim();
    let f = h.field();
    let mut chi = Matrix::zeros(f, n, n);
    let mut chi_inv = Matrix::zeros(f, n, n);
    for i in 0..n {
        for (c, l) in h.delta_terms(i, 4) {
            let y = h.mul(&h.s_inv(&h.basis(l[2])), &h.basis(l[0]));
            let w = &c * &s.eval_inv(&h.basis(l[3]), &y);
            if !w.is_zero() {
                chi.add_at(l[1], i, &w);
            }
        }
        for (c, l) in h.delta_terms(i, 5) {
            let w1 = s.eval_inv(&h.s_inv(&h.basis(l[4])), &h.basis(l[0]));
            let w2 = s.eval(&h.s_inv(&h.basis(l[3])), &h.basis(l[2]));
            let w = &c * &(&w1 * &w2);
            if !w.is_zero() {
                chi_inv.add_at(l[1], i, &w);
            }
        }
    }
    let chi_star = chi.transpose();
    ChiMaps { chi, chi_inv, chi_star }
}

fn round_trip(name: &str, x: &Matrix, y: &Matrix) -> Outcome {
    let a = x.try_mul(y).map_err(mat_err)?;
    let b = y.try_mul(x).map_err(mat_err)?;
    expect(a.is_identity() && b.is_identity(), &format!("{name} round trip is the identity"))
}

/// `χ*: σ̲(I) → I^σ` is a bijective algebra, module and comodule map.
pub fn verify_unit_deformation(s: &TwoCocycle) -> CheckReport {
    let mut rep = CheckReport::new();
    let maps = chi_maps(s);
    rep.run("chi_round_trip", || round_trip("χ", &maps.chi, &maps.chi_inv));
    let built = (|| -> Result<_> {
        let si = sigma_algebra(s, &unit_object(s.host().clone())?)?;
        let is = unit_object(Arc::new(deform(s)?))?;
        Ok((si, is))
    })();
    let (si, is) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(mat_err(e)));
            return rep;
        }
    };
    let cs = &maps.chi_star;
    rep.run("chi_star_algebra_map", || {
        if cs.apply(si.unit()) != is.unit() {
            return Err(Failure::msg("χ*(1) ≠ 1"));
        }
        for p in 0..si.dim() {
            let lhs = cs.try_mul(&si.left_mult()[p]).map_err(mat_err)?;
            let rhs = is.left(&cs.col(p)).try_mul(cs).map_err(mat_err)?;
            if lhs != rhs {
                return Err(Failure::at(vec![p], "χ*(p•q) = χ*(p)χ*(q) violated"));
            }
        }
        Ok(String::new())
    });
    let map = YdMap::new(si.module().clone(), is.module().clone(), cs.clone());
    rep.run("chi_star_module_map", || {
        let map = map.clone().map_err(mat_err)?;
        for i in 0..si.module().host().dim() {
            let l = cs.try_mul(&si.module().action()[i]).map_err(mat_err)?;
            let r = is.module().action()[i].try_mul(cs).map_err(mat_err)?;
            if l != r {
                return Err(Failure::at(vec![i], "χ*(h·p) = h·χ*(p) violated"));
            }
        }
        expect(map.is_invertible(), "χ* bijective")
    });
    rep.run("chi_star_comodule_map", || {
        for k in 0..si.module().host().dim() {
            let l = cs.try_mul(&si.module().coaction()[k]).map_err(mat_err)?;
            let r = is.module().coaction()[k].try_mul(cs).map_err(mat_err)?;
            if l != r {
                return Err(Failure::at(vec![k], "ρ(χ*(p)) = (χ*⊗id)ρ(p) violated"));
            }
        }
        Ok(String::new())
    });
    rep
}

/// The isomorphisms of `A⊗H*`, `H*⊗A` and `A⊗H` together with their
/// closed-form inverses.
#[derive(Clone, Debug)]
pub struct TwistIsos {
    pub phi: Matrix,
    pub phi_inv: Matrix,
    pub psi: Matrix,
    pub psi_inv: Matrix,
    pub xi: Matrix,
    pub xi_inv: Matrix,
}

fn unit_matrix(f: FieldSpec, n: usize, r: usize, j: usize) -> Matrix {
    let mut e = Matrix::zeros(f, n, n);
    e.set(r, j, f.one());
    e
}

/// `φ(a⊗h*)(h) = Σa₀ s(a₁⊗S⁻¹(h₃)h₁)h*(h₂)` (`left = true`) or the mirror
/// `ψ(h*⊗a)(h) = Σ s(S⁻¹(h₃)h₁⊗a₁)h*(h₂)⊗a₀`.
fn dual_twist(h: &HopfAlgebra, s: &Matrix, a: &YdModule, left: bool) -> Matrix {
    let n = h.dim();
    let f = h.field();
    let m = a.dim();
    let mut out = Matrix::zeros(f, m * n, m * n);
    for r in 0..n {
        let mut per_j = vec![vec![f.zero(); n]; n];
        for (c, l) in h.delta_terms(r, 3) {
            let y = h.mul(&h.s_inv(&h.basis(l[2])), &h.basis(l[0]));
            for (k, slot) in per_j[l[1]].iter_mut().enumerate() {
                let v = if left { pair2(s, &h.basis(k), &y) } else { pair2(s, &y, &h.basis(k)) };
                *slot += &(&c * &v);
            }
        }
        for (j, fk) in per_j.iter().enumerate() {
            if fk.iter().all(Scalar::is_zero) {
                continue;
            }
            let e = unit_matrix(f, n, r, j);
            let cf = a.coact_with(fk);
            let block = if left { cf.kron(&e) } else { e.kron(&cf) };
            out.axpy(&f.one(), &block);
        }
    }
    out
}

/// `ξ(a⊗h) = Σa₀⊗h₄σ(S⁻¹(h₂)⊗h₁)σ⁻¹(S⁻¹(h₃)⊗a₁)` and
/// `ξ⁻¹(a⊗h) = Σa₀⊗h₃σ⁻¹(h₂⊗S⁻¹(h₁)a₁)`.
fn xi_pair(s: &TwoCocycle, a: &YdModule) -> (Matrix, Matrix) {
    let h = &**s.host();
    let n = h.dim();
    let f = h.field();
    let m = a.dim();
    let mut xi = Matrix::zeros(f, m * n, m * n);
    let mut xi_inv = xi.clone();
    for j in 0..n {
        for (c, l) in h.delta_terms(j, 4) {
            let w = &c * &s.eval(&h.s_inv(&h.basis(l[1])), &h.basis(l[0]));
            if w.is_zero() {
                continue;
            }
            let x = h.s_inv(&h.basis(l[2]));
            let fk: Vector = (0..n).map(|k| s.eval_inv(&x, &h.basis(k))).collect();
            xi.axpy(&w, &a.coact_with(&fk).kron(&unit_matrix(f, n, l[3], j)));
        }
        for (c, l) in h.delta_terms(j, 3) {
            let y = h.s_inv(&h.basis(l[0]));
            let fk: Vector = (0..n)
                .map(|k| s.eval_inv(&h.basis(l[1]), &h.mul(&y, &h.basis(k))))
                .collect();
            xi_inv.axpy(&c, &a.coact_with(&fk).kron(&unit_matrix(f, n, l[2], j)));
        }
    }
    (xi, xi_inv)
}

pub fn phi_psi_xi(s: &TwoCocycle, a: &YdModule) -> Result<TwistIsos> {
    if s.host() != a.host() {
        return Err(Error::HostMismatch);
    }
    let h = &**s.host();
    let (xi, xi_inv) = xi_pair(s, a);
    Ok(TwistIsos {
        phi: dual_twist(h, s.sigma(), a, true),
        phi_inv: dual_twist(h, s.sigma_inv(), a, true),
        psi: dual_twist(h, s.sigma(), a, false),
        psi_inv: dual_twist(h, s.sigma_inv(), a, false),
        xi,
        xi_inv,
    })
}

pub fn verify_twist_isos(s: &TwoCocycle, a: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    match phi_psi_xi(s, a) {
        Err(e) => {
            rep.run("construction", || Err(mat_err(e)));
        }
        Ok(t) => {
            rep.run("phi_round_trip", || round_trip("φ", &t.phi, &t.phi_inv));
            rep.run("psi_round_trip", || round_trip("ψ", &t.psi, &t.psi_inv));
            rep.run("xi_round_trip", || round_trip("ξ", &t.xi, &t.xi_inv));
        }
    }
    rep
}

/// Outcome of deciding bijectivity of a Galois map on `A⊗_{A'}A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisDecision {
    pub galois: bool,
    /// Relations `ax⊗b − a⊗xb` lie in the kernel, so the map is defined on
    /// the balanced tensor product.
    pub well_defined: bool,
    pub coinvariant_dim: usize,
    /// The coinvariants are the scalar multiples of the unit.
    pub trivial_coinvariants: bool,
    pub rank: usize,
    pub target_dim: usize,
    pub kernel_dim: usize,
    pub relation_dim: usize,
}

fn relations(a: &YdAlgebra, coinv: &Matrix) -> Result<Matrix> {
    let m = a.dim();
    let f = a.module().host().field();
    let id = Matrix::identity(f, m);
    let blocks: Vec<Matrix> = (0..coinv.cols())
        .map(|i| {
            let x = coinv.col(i);
            a.right(&x).kron(&id).try_sub(&id.kron(&a.left(&x)))
        })
        .collect::<Result<_>>()?;
    if blocks.is_empty() {
        return Ok(Matrix::zeros(f, m * m, 0));
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    Ok(Matrix::hstack(&refs)?.column_basis())
}

fn decide(a: &YdAlgebra, beta: &Matrix, coinv: &Matrix) -> Result<GaloisDecision> {
    let rel = relations(a, coinv)?;
    let ker = beta.kernel_basis();
    let rank = beta.rank();
    let well_defined = rel.cols() == 0 || beta.try_mul(&rel)?.is_zero();
    let unit = Matrix::column_vector(a.module().host().field(), a.unit());
    let trivial = coinv.cols() == 1 && coinv.same_column_span(&unit);
    let galois = well_defined && rank == beta.rows() && ker.same_column_span(&rel);
    Ok(GaloisDecision {
        galois,
        well_defined,
        coinvariant_dim: coinv.cols(),
        trivial_coinvariants: trivial,
        rank,
        target_dim: beta.rows(),
        kernel_dim: ker.cols(),
        relation_dim: rel.cols(),
    })
}

/// `β(e_p⊗e_q)` laid out as `Σ_i x_i ⊗ e_i` with `x_i = op_i(p, q)`.
fn beta_matrix(m: usize, n: usize, f: FieldSpec, op: impl Fn(usize, usize) -> Vector, outer_first: bool) -> Matrix {
    let mut beta = Matrix::zeros(f, m * n, m * m);
    for i in 0..n {
        for p in 0..m {
            for q in 0..m {
                let x = op(i, p * m + q);
                for (r, v) in x.into_iter().enumerate() {
                    if !v.is_zero() {
                        let row = if outer_first { r * n + i } else { i * m + r };
                        beta.set(row, p * m + q, v);
                    }
                }
            }
        }
    }
    beta
}

/// `β^r(a⊗b) = Σa⁽⁰⁾b⊗a⁽¹⁾` over `A_◇` and `β^l(a⊗b) = Σb⁽⁻¹⁾⊗ab⁽⁰⁾` over `_◇A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigaloisDecision {
    pub right: GaloisDecision,
    pub left: GaloisDecision,
}

impl BigaloisDecision {
    pub fn bigalois(&self) -> bool {
        self.right.galois && self.left.galois && self.right.trivial_coinvariants && self.left.trivial_coinvariants
    }
}

pub fn galois_maps(bh: &BraidedHopf, a: &YdAlgebra) -> Result<BigaloisDecision> {
    let b = bimodule_actions(bh, a.module())?;
    let m = a.dim();
    let n = bh.host().dim();
    let f = bh.host().field();
    let beta_r = beta_matrix(
        m,
        n,
        f,
        |i, pq| a.left(&b.left_hr[i].col(pq / m)).col(pq % m),
        true,
    );
    let beta_l = beta_matrix(
        m,
        n,
        f,
        |i, pq| a.left_mult()[pq / m].apply(&b.right_hr[i].col(pq % m)),
        false,
    );
    Ok(BigaloisDecision {
        right: decide(a, &beta_r, &coinvariants(&b, Side::Right)?)?,
        left: decide(a, &beta_l, &coinvariants(&b, Side::Left)?)?,
    })
}

fn decision_outcome(d: &GaloisDecision) -> Outcome {
    let detail = format!(
        "coinvariants {}, rank {}/{}, kernel {}, relations {}",
        d.coinvariant_dim, d.rank, d.target_dim, d.kernel_dim, d.relation_dim
    );
    if d.galois {
        Ok(detail)
    } else {
        Err(Failure::msg(detail))
    }
}

pub fn galois_report(d: &BigaloisDecision) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.run("right_galois", || decision_outcome(&d.right));
    rep.run("left_galois", || decision_outcome(&d.left));
    rep.run("bigalois_object", || expect(d.bigalois(), "both sides Galois with trivial coinvariants"));
    rep
}

/// `A₀ = {a : ρ(a) = a⊗1}`.
pub fn comodule_coinvariants(a: &YdAlgebra) -> Result<Matrix> {
    let h = &**a.module().host();
    let f = h.field();
    let ops: Vec<Matrix> = a
        .module()
        .coaction()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut d = c.clone();
            d.axpy(&-h.unit()[k].clone(), &Matrix::identity(f, a.dim()));
            d
        })
        .collect();
    kernel_of_stack(&ops, a.dim(), f)
}

fn comodule_beta(a: &YdAlgebra) -> Matrix {
    let m = a.dim();
    let n = a.module().host().dim();
    beta_matrix(
        m,
        n,
        a.module().host().field(),
        |k, pq| a.left_mult()[pq / m].apply(&a.module().coaction()[k].col(pq % m)),
        true,
    )
}

/// `β(a⊗b) = Σab₀⊗b₁` on `A⊗_{A₀}A`.
pub fn comodule_galois(a: &YdAlgebra) -> Result<GaloisDecision> {
    decide(a, &comodule_beta(a), &comodule_coinvariants(a)?)
}

/// `π(A) = C_A(A₀)` with the Miyashita-Ulbrich action.
#[derive(Clone, Debug)]
pub struct PiAlgebra {
    /// Columns span `π(A)` inside `A`.
    pub basis: Matrix,
    pub algebra: YdAlgebra,
    /// `β⁻¹(1⊗e_h)` as vectors in `A⊗A`.
    pub preimages: Vec<Vector>,
    /// Kernel of `β` on `A⊗A`.
    pub kernel: Matrix,
}

/// Basis of the centralizer of the columns of `sub`.
fn centralizer(a: &YdAlgebra, sub: &Matrix) -> Result<Matrix> {
    let ops: Vec<Matrix> = (0..sub.cols())
        .map(|i| {
            let x = sub.col(i);
            a.left(&x).try_sub(&a.right(&x))
        })
        .collect::<Result<_>>()?;
    kernel_of_stack(&ops, a.dim(), a.module().host().field())
}

fn mu_operator(a: &YdAlgebra, z: &[Scalar]) -> Matrix {
    let m = a.dim();
    let mut acc = Matrix::zeros(a.module().host().field(), m, m);
    for (pq, w) in z.iter().enumerate() {
        if !w.is_zero() {
            let op = a.left_mult()[pq / m].try_mul(&a.right(&a.basis(pq % m))).unwrap();
            acc.axpy(w, &op);
        }
    }
    acc
}

/// Restricts the product of `a` to the subalgebra spanned by `basis`.
fn restrict_algebra(a: &YdAlgebra, module: YdModule, basis: &Matrix) -> Result<YdAlgebra> {
    let mult = (0..basis.cols())
        .map(|i| coords(basis, &a.left(&basis.col(i)).try_mul(basis)?))
        .collect::<Result<Vec<_>>>()?;
    let unit = coords(basis, &Matrix::column_vector(a.module().host().field(), a.unit()))?.col(0);
    YdAlgebra::from_left_mult(module, mult, unit)
}

/// Computes `π(A)` with the action `h·a = ΣX_i(h)aY_i(h)`, where
/// `ΣX_i⊗Y_i = β⁻¹(1⊗h)`. Uses `basis` for `π(A)` when given.
pub fn mu_action_and_pi_in(a: &YdAlgebra, basis: Option<&Matrix>) -> Result<PiAlgebra> {
    let decision = comodule_galois(a)?;
    if !decision.galois {
        return Err(Error::Invalid("A/A₀ is not Galois".into()));
    }
    let h = &**a.module().host();
    let f = h.field();
    let n = h.dim();
    let m = a.dim();
    let beta = comodule_beta(a);
    let pi = centralizer(a, &comodule_coinvariants(a)?)?;
    let basis = match basis {
        Some(b) if b.same_column_span(&pi) => b.clone(),
        Some(_) => return Err(Error::Invalid("supplied basis does not span π(A)".into())),
        None => pi,
    };
    let mut preimages = Vec::with_capacity(n);
    let mut action = Vec::with_capacity(n);
    for k in 0..n {
        let mut rhs = vec![f.zero(); m * n];
        for (r, u) in a.unit().iter().enumerate() {
            rhs[r * n + k] = u.clone();
        }
        let z = beta
            .solve(&Matrix::column_vector(f, &rhs))?
            .ok_or_else(|| Error::Invalid("no preimage under β".into()))?
            .col(0);
        action.push(mu_operator(a, &z));
        preimages.push(z);
    }
    let ambient = YdModule::new(a.module().host().clone(), action, a.module().coaction().to_vec())?;
    let module = restrict(&ambient, &basis)?;
    let algebra = restrict_algebra(a, module, &basis)?;
    Ok(PiAlgebra { basis, algebra, preimages, kernel: beta.kernel_basis() })
}

pub fn mu_action_and_pi(a: &YdAlgebra) -> Result<PiAlgebra> {
    mu_action_and_pi_in(a, None)
}

/// Independence of the preimage, YD module algebra axioms and quantum
/// commutativity of `π(A)`.
pub fn verify_pi(a: &YdAlgebra, pi: &PiAlgebra) -> CheckReport {
    let mut rep = CheckReport::new();
    rep.run("mu_well_defined", || {
        for (k, z) in pi.preimages.iter().enumerate() {
            let base = mu_operator(a, z).try_mul(&pi.basis).map_err(mat_err)?;
            for j in 0..pi.kernel.cols() {
                let mut zz = z.clone();
                add_vec(&mut zz, &a.module().host().field().one(), &pi.kernel.col(j));
                if mu_operator(a, &zz).try_mul(&pi.basis).map_err(mat_err)? != base {
                    return Err(Failure::at(vec![k, j], "h·a depends on the preimage of 1⊗h"));
                }
            }
        }
        Ok(format!("kernel dim {}", pi.kernel.cols()))
    });
    rep.extend("yd", verify_yd_algebra(&pi.algebra));
    rep.run("pi_quantum_commutative", || {
        expect(quantum_commutative(&pi.algebra), "ab = Σb₀(b₁·a) on π(A)")
    });
    rep
}

/// `π(σ̲(A)) = σ̲(π(A))` as YD `H^σ`-module algebras, in a common basis.
pub fn verify_pi_deformation(s: &TwoCocycle, a: &YdAlgebra) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let pi = mu_action_and_pi(a)?;
        let sa = sigma_algebra(s, a)?;
        let pis = mu_action_and_pi_in(&sa, Some(&pi.basis))?;
        Ok((pi, sa, pis))
    })();
    let (pi, sa, pis) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(mat_err(e)));
            return rep;
        }
    };
    rep.extend("pi", verify_pi(a, &pi));
    rep.extend("pi_sigma", verify_pi(&sa, &pis));
    rep.run("pi_commutes_with_sigma", || {
        let lhs = sigma_algebra(s, &pi.algebra).map_err(mat_err)?;
        if lhs.module().action() != pis.algebra.module().action() {
            return Err(Failure::msg("actions of σ̲(π(A)) and π(σ̲(A)) differ"));
        }
        if lhs.module().coaction() != pis.algebra.module().coaction() {
            return Err(Failure::msg("coactions of σ̲(π(A)) and π(σ̲(A)) differ"));
        }
        expect(lhs == pis.algebra, "σ̲(π(A)) = π(σ̲(A))")?;
        Ok(format!("dim {}", pi.basis.cols()))
    });
    rep
}

/// `H^op` with coaction `Δ` and the action `▷₁` induced by `R`.
pub fn regular_comodule_algebra(c: &CqtStructure) -> Result<YdAlgebra> {
    let h = &**c.host();
    let n = h.dim();
    let module = yd_from_comodule(c, crate::yd::regular_coaction(h))?;
    let mult = (0..n)
        .map(|p| Matrix::from_fn(h.field(), n, n, |r, q| h.mult().get(&[q, p, r]).clone()))
        .collect();
    YdAlgebra::from_left_mult(module, mult, h.unit().to_vec())
}

/// `A∧B` as a subalgebra of `A#_R B`, with the wedge YD structure.
pub fn wedge_algebra(bh: &BraidedHopf, a: &YdAlgebra, b: &YdAlgebra) -> Result<YdAlgebra> {
    let w = wedge(bh, a.module(), b.module())?;
    let prod = braided_product(a, b, BraidedAction::Induced(bh.cqt()))?;
    restrict_algebra(&prod, w.module, &w.basis)
}

/// Bigalois and quantum commutative.
pub fn is_bigalois_member(bh: &BraidedHopf, a: &YdAlgebra) -> Result<bool> {
    Ok(galois_maps(bh, a)?.bigalois() && quantum_commutative(a))
}
