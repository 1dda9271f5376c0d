//! YD module algebras: braided products, `H`-opposites, endomorphism
//! algebras, quantum commutativity and the Azumaya test.

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{max_dim, Matrix, Scalar, Tensor};
use crate::quasitriangular::CqtStructure;
use crate::report::{expect, CheckReport, Failure, Outcome};

use super::module::{combine, tensor_product, tensor_structure, verify_yd, YdModule};

/// A YD module that is also an associative unital algebra.
///
/// `left_mult[p]` is the matrix of `v_p·(-)`.
#[derive(Clone, Debug, PartialEq)]
pub struct YdAlgebra {
    module: YdModule,
    left_mult: Vec<Matrix>,
    unit: Vector,
}

impl YdAlgebra {
    /// From `mult[p,q,r]`, the coefficient of `v_r` in `v_p v_q`.
    pub fn new(module: YdModule, mult: &Tensor, unit: Vector) -> Result<YdAlgebra> {
        let m = module.dim();
        if mult.shape() != [m, m, m] {
            return Err(Error::Shape(format!("mult must be [{m},{m},{m}]")));
        }
        let f = module.host().field();
        let left = (0..m)
            .map(|p| Matrix::from_fn(f, m, m, |r, q| mult.get(&[p, q, r]).clone()))
            .collect();
        YdAlgebra::from_left_mult(module, left, unit)
    }

    pub fn from_left_mult(module: YdModule, left_mult: Vec<Matrix>, unit: Vector) -> Result<YdAlgebra> {
        let m = module.dim();
        if left_mult.len() != m || unit.len() != m || left_mult.iter().any(|l| l.rows() != m || l.cols() != m) {
            return Err(Error::Shape("multiplication does not match the module dimension".into()));
        }
        Ok(YdAlgebra { module, left_mult, unit })
    }

    /// The ground field as a YD algebra.
    pub fn ground(host: std::sync::Arc<HopfAlgebra>) -> YdAlgebra {
        let f = host.field();
        YdAlgebra {
            module: YdModule::trivial(host, 1),
            left_mult: vec![Matrix::identity(f, 1)],
            unit: vec![f.one()],
        }
    }

    pub fn module(&self) -> &YdModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn left_mult(&self) -> &[Matrix] {
        &self.left_mult
    }

    pub fn mult_tensor(&self) -> Tensor {
        let m = self.dim();
        let mut t = Tensor::zeros(self.module.host().field(), &[m, m, m]);
        for p in 0..m {
            for q in 0..m {
                for r in 0..m {
                    t.set(&[p, q, r], self.left_mult[p].get(r, q).clone());
                }
            }
        }
        t
    }

    /// The operator `x·(-)`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        combine(&self.left_mult, x, self.dim())
    }

    /// The operator `(-)·x`.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = self.left_mult.iter().map(|l| l.apply(x)).collect();
        Matrix::from_cols(self.module.host().field(), self.dim(), &cols)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.left(x).apply(y)
    }

    pub fn basis(&self, p: usize) -> Vector {
        let f = self.module.host().field();
        (0..self.dim()).map(|q| if q == p { f.one() } else { f.zero() }).collect()
    }
}

fn mat_err(e: Error) -> Failure {
    Failure::msg(e.to_string())
}

fn check_associative(a: &YdAlgebra) -> Outcome {
    let m = a.dim();
    for p in 0..m {
        for q in 0..m {
            let lhs = a.left(&a.mul(&a.basis(p), &a.basis(q)));
            let rhs = a.left_mult[p].try_mul(&a.left_mult[q]).map_err(mat_err)?;
            if lhs != rhs {
                return Err(Failure::at(vec![p, q], "(ab)c = a(bc) violated"));
            }
        }
    }
    Ok(String::new())
}

fn check_unit(a: &YdAlgebra) -> Outcome {
    let ok = a.left(&a.unit).is_identity() && (0..a.dim()).all(|p| a.left_mult[p].apply(&a.unit) == a.basis(p));
    expect(ok, "1a = a1 = a")
}

fn check_module_algebra(a: &YdAlgebra) -> Outcome {
    let h = &**a.module.host();
    for i in 0..h.dim() {
        for p in 0..a.dim() {
            let lhs = a.module.action()[i].try_mul(&a.left_mult[p]).map_err(mat_err)?;
            let mut rhs = Matrix::zeros(h.field(), a.dim(), a.dim());
            for (x, y, c) in h.comult_terms(i) {
                let l = a.left(&a.module.action()[*x].col(p));
                rhs.axpy(c, &l.try_mul(&a.module.action()[*y]).map_err(mat_err)?);
            }
            if lhs != rhs {
                return Err(Failure::at(vec![i, p], "h·(ab) = Σ(h₁·a)(h₂·b) violated"));
            }
        }
    }
    let ok = (0..h.dim()).all(|i| {
        let mut e = a.unit.clone();
        e.iter_mut().for_each(|v| *v = &*v * &h.counit()[i]);
        a.module.action()[i].apply(&a.unit) == e
    });
    expect(ok, "h·1 = ε(h)1")
}

/// `ρ(ab) = Σ a₀b₀ ⊗ b₁a₁` and `ρ(1) = 1⊗1`.
fn check_comodule_algebra(a: &YdAlgebra) -> Outcome {
    let h = &**a.module.host();
    let n = h.dim();
    for k in 0..n {
        for p in 0..a.dim() {
            let lhs = a.module.coaction()[k].try_mul(&a.left_mult[p]).map_err(mat_err)?;
            let mut rhs = Matrix::zeros(h.field(), a.dim(), a.dim());
            for j in 0..n {
                let l = a.left(&a.module.coaction()[j].col(p));
                if l.is_zero() {
                    continue;
                }
                for q in 0..n {
                    let w = &h.mul(&h.basis(q), &h.basis(j))[k];
                    if !w.is_zero() {
                        rhs.axpy(w, &l.try_mul(&a.module.coaction()[q]).map_err(mat_err)?);
                    }
                }
            }
            if lhs != rhs {
                return Err(Failure::at(vec![k, p], "ρ(ab) = Σa₀b₀⊗b₁a₁ violated"));
            }
        }
    }
    let ok = (0..n).all(|k| {
        let mut e = a.unit.clone();
        e.iter_mut().for_each(|v| *v = &*v * &h.unit()[k]);
        a.module.coaction()[k].apply(&a.unit) == e
    });
    expect(ok, "ρ(1) = 1⊗1")
}

pub fn verify_yd_algebra(a: &YdAlgebra) -> CheckReport {
    let mut rep = verify_yd(&a.module);
    rep.run("associativity", || check_associative(a));
    rep.run("unit", || check_unit(a));
    rep.run("module_algebra", || check_module_algebra(a));
    rep.run("comodule_algebra", || check_comodule_algebra(a));
    rep
}

/// Which action of `H` on the right factor a braided product uses.
#[derive(Clone, Copy, Debug)]
pub enum BraidedAction<'a> {
    /// The YD action of the right factor.
    Module,
    /// The action `▷₁` induced from the coaction by a CQT form.
    Induced(&'a CqtStructure),
}

/// `(a#b)(c#d) = Σ ac₀ # (c₁·b)d` on `A⊗B`.
pub fn braided_product(a: &YdAlgebra, b: &YdAlgebra, via: BraidedAction<'_>) -> Result<YdAlgebra> {
    let module = tensor_product(&a.module, &b.module)?;
    let h = &**a.module.host();
    let n = h.dim();
    let acting: Vec<Matrix> = match via {
        BraidedAction::Module => b.module.action().to_vec(),
        BraidedAction::Induced(r) => {
            if r.host() != a.module.host() {
                return Err(Error::HostMismatch);
            }
            (0..n).map(|k| b.module.coact_with(&r.left_slot(&h.basis(k)))).collect()
        }
    };
    let (ma, mb) = (a.dim(), b.dim());
    let mut mult = Vec::with_capacity(ma * mb);
    for p in 0..ma {
        for q in 0..mb {
            let mut acc = Matrix::zeros(h.field(), ma * mb, ma * mb);
            for (k, act) in acting.iter().enumerate() {
                let left_a = a.left_mult[p].try_mul(&a.module.coaction()[k])?;
                if left_a.is_zero() {
                    continue;
                }
                acc.axpy(&h.field().one(), &left_a.kron(&b.left(&act.col(q))));
            }
            mult.push(acc);
        }
    }
    let unit = crate::hopf::outer(&[a.unit.clone(), b.unit.clone()]);
    YdAlgebra::from_left_mult(module, mult, unit)
}

/// `ā∘b̄ = Σ b₀(b₁·a)`.
pub fn h_opposite(a: &YdAlgebra) -> YdAlgebra {
    let n = a.module.host().dim();
    let mult = (0..a.dim())
        .map(|p| {
            let mut acc = Matrix::zeros(a.module.host().field(), a.dim(), a.dim());
            for k in 0..n {
                let r = a.right(&a.module.action()[k].col(p));
                acc.axpy(&a.module.host().field().one(), &r.try_mul(&a.module.coaction()[k]).unwrap());
            }
            acc
        })
        .collect();
    YdAlgebra { module: a.module.clone(), left_mult: mult, unit: a.unit.clone() }
}

/// `End(M)` with `(h·f) = Σ h₁ f S(h₂)` and `f₀⊗f₁ = Σ f(m₀)₀ ⊗ S⁻¹(m₁)f(m₀)₁`.
///
/// The basis vector `p·dim+q` is the matrix unit `E_pq`.
pub fn end_algebra(m: &YdModule) -> Result<YdAlgebra> {
    let f = m.host().field();
    let d = m.dim();
    let dd = d * d;
    if dd > max_dim() {
        return Err(Error::TooLarge { dim: dd, max: max_dim() });
    }
    let (action, coaction) = end_structure(m);
    let id = Matrix::identity(f, d);
    let mult = (0..dd)
        .map(|pq| {
            let mut e = Matrix::zeros(f, d, d);
            e.set(pq / d, pq % d, f.one());
            e.kron(&id)
        })
        .collect();
    let unit = id.entries().to_vec();
    YdAlgebra::from_left_mult(YdModule::new(m.host().clone(), action, coaction)?, mult, unit)
}

fn end_structure(m: &YdModule) -> (Vec<Matrix>, Vec<Matrix>) {
    let h = &**m.host();
    let n = h.dim();
    let d = m.dim();
    let f = h.field();
    let dd = d * d;
    let action = (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(f, dd, dd);
            for (a, b, c) in h.comult_terms(i) {
                let right = m.act(&h.s(&h.basis(*b))).transpose();
                acc.axpy(c, &m.action()[*a].kron(&right));
            }
            acc
        })
        .collect();
    let mut coaction = vec![Matrix::zeros(f, dd, dd); n];
    for j in 0..n {
        let sj = h.s_inv(&h.basis(j));
        let cj = m.coaction()[j].transpose();
        for k in 0..n {
            let leg = h.mul(&sj, &h.basis(k));
            if leg.iter().all(Scalar::is_zero) {
                continue;
            }
            let x = m.coaction()[k].kron(&cj);
            for (l, w) in leg.iter().enumerate() {
                if !w.is_zero() {
                    coaction[l].axpy(w, &x);
                }
            }
        }
    }
    (action, coaction)
}

/// `ab = Σ b₀(b₁·a)` for all `a, b`.
pub fn quantum_commutative(a: &YdAlgebra) -> bool {
    h_opposite(a).left_mult == a.left_mult
}

/// The operators `x ↦ Σ x₀(x₁·b)`, one per basis vector `b`.
fn f_right_factors(a: &YdAlgebra) -> Vec<Matrix> {
    let n = a.module.host().dim();
    (0..a.dim()).map(|q| twisted_right(a, &a.basis(q), n)).collect()
}

fn twisted_right(a: &YdAlgebra, b: &[Scalar], n: usize) -> Matrix {
    let mut acc = Matrix::zeros(a.module.host().field(), a.dim(), a.dim());
    for k in 0..n {
        let r = a.right(&a.module.action()[k].apply(b));
        acc.axpy(&a.module.host().field().one(), &r.try_mul(&a.module.coaction()[k]).unwrap());
    }
    acc
}

fn vec_columns(ops: &[Matrix], field: crate::linalg::FieldSpec, rows: usize) -> Matrix {
    let cols: Vec<Vector> = ops.iter().map(|o| o.entries().to_vec()).collect();
    Matrix::from_cols(field, rows, &cols)
}

/// `F(a#b̄) = a·(-)₀((-)₁·b)`, as an `m²×m²` matrix.
pub fn azumaya_f(a: &YdAlgebra) -> Matrix {
    let m = a.dim();
    let t = f_right_factors(a);
    let ops: Vec<Matrix> = (0..m * m).map(|pq| a.left_mult[pq / m].try_mul(&t[pq % m]).unwrap()).collect();
    vec_columns(&ops, a.module.host().field(), m * m)
}

/// `G(ā#b) = a₀(a₁·(-))b`, as an `m²×m²` matrix.
pub fn azumaya_g(a: &YdAlgebra) -> Matrix {
    let m = a.dim();
    let n = a.module.host().dim();
    let u: Vec<Matrix> = (0..m)
        .map(|p| {
            let mut acc = Matrix::zeros(a.module.host().field(), m, m);
            for k in 0..n {
                let l = a.left(&a.module.coaction()[k].col(p));
                acc.axpy(&a.module.host().field().one(), &l.try_mul(&a.module.action()[k]).unwrap());
            }
            acc
        })
        .collect();
    let ops: Vec<Matrix> = (0..m * m)
        .map(|pq| a.right(&a.basis(pq % m)).try_mul(&u[pq / m]).unwrap())
        .collect();
    vec_columns(&ops, a.module.host().field(), m * m)
}

/// Algebra-map property of `F` on the generators `a#1`, `1#b̄`.
fn check_f_multiplicative(a: &YdAlgebra) -> Outcome {
    let m = a.dim();
    let n = a.module.host().dim();
    let t = f_right_factors(a);
    let t_of = |b: &[Scalar]| twisted_right(a, b, n);
    if !t_of(&a.unit).is_identity() {
        return Err(Failure::msg("F(1#1) = id violated"));
    }
    let opp = h_opposite(a);
    for p in 0..m {
        for q in 0..m {
            let (ep, eq) = (a.basis(p), a.basis(q));
            // F(1#b̄)F(1#d̄) = F(1#b̄∘d̄)
            if t[p].try_mul(&t[q]).map_err(mat_err)? != t_of(&opp.mul(&ep, &eq)) {
                return Err(Failure::at(vec![p, q], "F(1#b̄)F(1#d̄) = F(1#b̄∘d̄) violated"));
            }
            // F(1#b̄)F(c#1) = Σ F(c₀ # c₁·b)
            let lhs = t[p].try_mul(&a.left_mult[q]).map_err(mat_err)?;
            let mut rhs = Matrix::zeros(a.module.host().field(), m, m);
            for k in 0..n {
                let c0 = a.module.coaction()[k].apply(&eq);
                if c0.iter().all(Scalar::is_zero) {
                    continue;
                }
                let b1 = a.module.action()[k].apply(&ep);
                rhs.axpy(&a.module.host().field().one(), &a.left(&c0).try_mul(&t_of(&b1)).map_err(mat_err)?);
            }
            if lhs != rhs {
                return Err(Failure::at(vec![p, q], "F(1#b̄)F(c#1) = F((1#b̄)(c#1)) violated"));
            }
        }
    }
    Ok(String::new())
}

/// `F: A#Ā → End(A)` commutes with the actions and coactions.
fn check_f_yd_map(a: &YdAlgebra) -> Outcome {
    let (src_act, src_coact) = tensor_structure(a.module(), h_opposite(a).module());
    let (end_act, end_coact) = end_structure(a.module());
    let f = azumaya_f(a);
    for (kind, src, dst) in [("action", &src_act, &end_act), ("coaction", &src_coact, &end_coact)] {
        for (i, (s, d)) in src.iter().zip(dst).enumerate() {
            if f.try_mul(s).map_err(mat_err)? != d.try_mul(&f).map_err(mat_err)? {
                return Err(Failure::at(vec![i], format!("F does not commute with the {kind}")));
            }
        }
    }
    Ok(String::new())
}

/// Bijectivity of `F` and `G`, and the algebra-map property of `F`.
pub fn azumaya_check(a: &YdAlgebra) -> CheckReport {
    let mut rep = CheckReport::new();
    let m = a.dim();
    rep.run("nonzero", || expect(m > 0, "A ≠ 0"));
    rep.run("f_bijective", || {
        let r = azumaya_f(a).rank();
        if r == m * m {
            Ok(format!("rank {r}"))
        } else {
            Err(Failure::msg(format!("rank of F is {r}, need {}", m * m)))
        }
    });
    rep.run("g_bijective", || {
        let r = azumaya_g(a).rank();
        if r == m * m {
            Ok(format!("rank {r}"))
        } else {
            Err(Failure::msg(format!("rank of G is {r}, need {}", m * m)))
        }
    });
    rep.run("f_algebra_map", || check_f_multiplicative(a));
    rep.run("f_yd_map", || check_f_yd_map(a));
    rep
}

pub fn is_azumaya(a: &YdAlgebra) -> bool {
    azumaya_check(a).passed()
}
