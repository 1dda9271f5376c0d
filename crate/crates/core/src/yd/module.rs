use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{max_dim, Matrix, Scalar, Tensor};
use crate::report::{expect, CheckReport, Failure, Outcome};

/// A Yetter-Drinfeld module: a left `H`-module and right `H`-comodule.
///
/// `action[i]` is the matrix of `e_i·(-)` and `coaction[k]` is the matrix
/// `C_k` with `ρ(v) = Σ_k C_k v ⊗ e_k` (columns are images of basis vectors).
/// With this layout `m₀⊗m₁⊗m₂ = Σ C_j C_l m ⊗ e_j ⊗ e_l`, so pairing the
/// comodule legs with functionals turns into products of matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct YdModule {
    host: Arc<HopfAlgebra>,
    action: Vec<Matrix>,
    coaction: Vec<Matrix>,
}

impl YdModule {
    pub fn new(host: Arc<HopfAlgebra>, action: Vec<Matrix>, coaction: Vec<Matrix>) -> Result<YdModule> {
        let n = host.dim();
        if action.len() != n || coaction.len() != n {
            return Err(Error::Shape(format!("need {n} action and coaction matrices")));
        }
        let m = action[0].rows();
        if m > max_dim() {
            return Err(Error::TooLarge { dim: m, max: max_dim() });
        }
        if action.iter().chain(&coaction).any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::Shape(format!("action and coaction matrices must be {m}x{m}")));
        }
        Ok(YdModule { host, action, coaction })
    }

    /// From `a[i,p,q]` (coefficient of `v_q` in `e_i·v_p`) and `c[p,q,k]`
    /// (`ρ(v_p) = Σ c[p,q,k] v_q⊗e_k`).
    pub fn from_tensors(host: Arc<HopfAlgebra>, action: &Tensor, coaction: &Tensor) -> Result<YdModule> {
        let n = host.dim();
        let (sa, sc) = (action.shape(), coaction.shape());
        if sa.len() != 3 || sc.len() != 3 || sa[0] != n || sc[2] != n {
            return Err(Error::Shape("action must be [n,m,m] and coaction [m,m,n]".into()));
        }
        let m = sa[1];
        if sa[2] != m || sc[0] != m || sc[1] != m {
            return Err(Error::Shape("inconsistent module dimension".into()));
        }
        let f = host.field();
        let act = (0..n)
            .map(|i| Matrix::from_fn(f, m, m, |q, p| action.get(&[i, p, q]).clone()))
            .collect();
        let coact = (0..n)
            .map(|k| Matrix::from_fn(f, m, m, |q, p| coaction.get(&[p, q, k]).clone()))
            .collect();
        YdModule::new(host, act, coact)
    }

    pub fn action_tensor(&self) -> Tensor {
        let (n, m) = (self.host.dim(), self.dim());
        let mut t = Tensor::zeros(self.host.field(), &[n, m, m]);
        for i in 0..n {
            for p in 0..m {
                for q in 0..m {
                    t.set(&[i, p, q], self.action[i].get(q, p).clone());
                }
            }
        }
        t
    }

    pub fn coaction_tensor(&self) -> Tensor {
        let (n, m) = (self.host.dim(), self.dim());
        let mut t = Tensor::zeros(self.host.field(), &[m, m, n]);
        for k in 0..n {
            for p in 0..m {
                for q in 0..m {
                    t.set(&[p, q, k], self.coaction[k].get(q, p).clone());
                }
            }
        }
        t
    }

    /// Trivial structures: `h·v = ε(h)v`, `ρ(v) = v⊗1`.
    pub fn trivial(host: Arc<HopfAlgebra>, dim: usize) -> YdModule {
        let f = host.field();
        let id = Matrix::identity(f, dim);
        let action = host.counit().iter().map(|c| id.scale(c)).collect();
        let coaction = host.unit().iter().map(|c| id.scale(c)).collect();
        YdModule { host, action, coaction }
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn dim(&self) -> usize {
        self.action[0].rows()
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn coaction(&self) -> &[Matrix] {
        &self.coaction
    }

    /// The operator `x·(-)` for `x ∈ H`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        combine(&self.action, x, self.dim())
    }

    /// The operator `m ↦ Σ m₀ f(m₁)` for a functional `f` on `H`.
    pub fn coact_with(&self, f: &[Scalar]) -> Matrix {
        combine(&self.coaction, f, self.dim())
    }

}

pub(crate) fn combine(ms: &[Matrix], x: &[Scalar], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(ms[0].field(), dim, dim);
    for (m, c) in ms.iter().zip(x) {
        out.axpy(c, m);
    }
    out
}

/// The regular comodule `(H, Δ)`.
pub fn regular_coaction(h: &HopfAlgebra) -> Vec<Matrix> {
    let n = h.dim();
    (0..n)
        .map(|k| Matrix::from_fn(h.field(), n, n, |a, i| h.comult().get(&[i, a, k]).clone()))
        .collect()
}

/// The left regular module `(H, m)`.
pub fn regular_action(h: &HopfAlgebra) -> Vec<Matrix> {
    let n = h.dim();
    (0..n)
        .map(|i| Matrix::from_fn(h.field(), n, n, |k, j| h.mult().get(&[i, j, k]).clone()))
        .collect()
}

/// A linear map `M → M⊗H`, stored by `H`-leg: `v ↦ Σ_l X_l v ⊗ e_l`.
pub(crate) struct MhMap {
    pub legs: Vec<Matrix>,
}

impl MhMap {
    pub fn zero(h: &HopfAlgebra, rows: usize, cols: usize) -> MhMap {
        MhMap { legs: vec![Matrix::zeros(h.field(), rows, cols); h.dim()] }
    }

    /// Adds `c · X ⊗ x`.
    pub fn add(&mut self, c: &Scalar, x_mat: &Matrix, x: &[Scalar]) {
        for (leg, coeff) in self.legs.iter_mut().zip(x) {
            if !coeff.is_zero() {
                leg.axpy(&(c * coeff), x_mat);
            }
        }
    }

    /// First `(leg, column)` where the two maps differ.
    pub fn first_difference(&self, o: &MhMap) -> Option<usize> {
        let cols = self.legs[0].cols();
        (0..cols).find(|&p| self.legs.iter().zip(&o.legs).any(|(a, b)| a.col(p) != b.col(p)))
    }
}

fn check_module_axioms(m: &YdModule) -> Outcome {
    let h = &*m.host;
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = m.action[i].try_mul(&m.action[j]).map_err(|e| Failure::msg(e.to_string()))?;
            let rhs = m.act(&h.mul(&h.basis(i), &h.basis(j)));
            if lhs != rhs {
                return Err(Failure::at(vec![i, j], "(xy)·v = x·(y·v) violated"));
            }
        }
    }
    expect(m.act(h.unit()).is_identity(), "1·v = v")
}

fn check_comodule_axioms(m: &YdModule) -> Outcome {
    let h = &*m.host;
    let n = h.dim();
    // C_j C_l = Σ_k d[k,j,l] C_k
    for j in 0..n {
        for l in 0..n {
            let lhs = m.coaction[j].try_mul(&m.coaction[l]).map_err(|e| Failure::msg(e.to_string()))?;
            let coeffs: Vector = (0..n).map(|k| h.comult().get(&[k, j, l]).clone()).collect();
            if lhs != m.coact_with(&coeffs) {
                return Err(Failure::at(vec![j, l], "(ρ⊗id)ρ = (id⊗Δ)ρ violated"));
            }
        }
    }
    expect(m.coact_with(h.counit()).is_identity(), "(id⊗ε)ρ = id")
}

pub(crate) fn is_module(m: &YdModule) -> bool {
    check_module_axioms(m).is_ok()
}

pub(crate) fn is_comodule(m: &YdModule) -> bool {
    check_comodule_axioms(m).is_ok()
}

/// Both sides of `h₁·m₀ ⊗ h₂m₁ = (h₂·m)₀ ⊗ (h₂·m)₁h₁` at `h = e_i`.
fn compatibility_sides(m: &YdModule, i: usize) -> (MhMap, MhMap) {
    let h = &*m.host;
    let dim = m.dim();
    let mut lhs = MhMap::zero(h, dim, dim);
    let mut rhs = MhMap::zero(h, dim, dim);
    for (a, b, c) in h.comult_terms(i) {
        for k in 0..h.dim() {
            // h₁·m₀ ⊗ h₂m₁
            let x = m.action[*a].try_mul(&m.coaction[k]).unwrap();
            lhs.add(c, &x, &h.mul(&h.basis(*b), &h.basis(k)));
            // (h₂·m)₀ ⊗ (h₂·m)₁h₁
            let y = m.coaction[k].try_mul(&m.action[*b]).unwrap();
            rhs.add(c, &y, &h.mul(&h.basis(k), &h.basis(*a)));
        }
    }
    (lhs, rhs)
}

/// Both sides of `ρ(h·m) = h₂·m₀ ⊗ h₃m₁S⁻¹(h₁)` at `h = e_i`.
fn coaction_of_action_sides(m: &YdModule, i: usize) -> (MhMap, MhMap) {
    let h = &*m.host;
    let dim = m.dim();
    let mut lhs = MhMap::zero(h, dim, dim);
    let mut rhs = MhMap::zero(h, dim, dim);
    let one = h.field().one();
    for k in 0..h.dim() {
        let x = m.coaction[k].try_mul(&m.action[i]).unwrap();
        lhs.add(&one, &x, &h.basis(k));
    }
    for (c, l) in h.delta_terms(i, 3) {
        for k in 0..h.dim() {
            let y = m.action[l[1]].try_mul(&m.coaction[k]).unwrap();
            let leg = h.prod(&[&h.basis(l[2]), &h.basis(k), &h.s_inv(&h.basis(l[0]))]);
            rhs.add(&c, &y, &leg);
        }
    }
    (lhs, rhs)
}

pub fn verify_yd(m: &YdModule) -> CheckReport {
    let mut r = CheckReport::new();
    r.run("module", || check_module_axioms(m));
    r.run("comodule", || check_comodule_axioms(m));
    for (name, sides) in [("compatibility", compatibility_sides as fn(&YdModule, usize) -> _), ("coaction_of_action", coaction_of_action_sides)] {
        r.run(name, || {
            for i in 0..m.host.dim() {
                let (l, rr) = sides(m, i);
                if let Some(p) = l.first_difference(&rr) {
                    return Err(Failure::at(vec![i, p], format!("{name} violated at (h, v)")));
                }
            }
            Ok(String::new())
        });
    }
    r
}

/// `M⊗N` with `h·(m⊗n) = h₁·m⊗h₂·n` and `ρ(m⊗n) = m₀⊗n₀⊗n₁m₁`.
pub fn tensor_product(m: &YdModule, nn: &YdModule) -> Result<YdModule> {
    if m.host != nn.host {
        return Err(Error::HostMismatch);
    }
    let (action, coaction) = tensor_structure(m, nn);
    YdModule::new(m.host.clone(), action, coaction)
}

/// Action and coaction matrices of `M⊗N`, without the dimension bound.
pub(crate) fn tensor_structure(m: &YdModule, nn: &YdModule) -> (Vec<Matrix>, Vec<Matrix>) {
    let h = &*m.host;
    let n = h.dim();
    let dim = m.dim() * nn.dim();
    let f = h.field();
    let mut action = vec![Matrix::zeros(f, dim, dim); n];
    for (i, a) in action.iter_mut().enumerate() {
        for (p, q, c) in h.comult_terms(i) {
            a.axpy(c, &m.action[*p].kron(&nn.action[*q]));
        }
    }
    let mut coaction = vec![Matrix::zeros(f, dim, dim); n];
    for j in 0..n {
        for k in 0..n {
            let kr = m.coaction[j].kron(&nn.coaction[k]);
            if kr.is_zero() {
                continue;
            }
            for (l, c) in h.mul_terms(k, j) {
                coaction[*l].axpy(c, &kr);
            }
        }
    }
    (action, coaction)
}

/// A linear map between YD modules over the same host.
#[derive(Clone, Debug)]
pub struct YdMap {
    pub source: YdModule,
    pub target: YdModule,
    pub matrix: Matrix,
}

impl YdMap {
    pub fn new(source: YdModule, target: YdModule, matrix: Matrix) -> Result<YdMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape("map does not fit source and target".into()));
        }
        Ok(YdMap { source, target, matrix })
    }

    /// Commutes with all actions and coactions.
    pub fn is_yd_map(&self) -> bool {
        self.first_failure().is_none()
    }

    /// `(kind, basis index)` of the first structure the map fails to respect.
    pub fn first_failure(&self) -> Option<(&'static str, usize)> {
        let n = self.source.host.dim();
        for i in 0..n {
            let l = self.matrix.try_mul(&self.source.action[i]).ok()?;
            let r = self.target.action[i].try_mul(&self.matrix).ok()?;
            if l != r {
                return Some(("action", i));
            }
        }
        for k in 0..n {
            let l = self.matrix.try_mul(&self.source.coaction[k]).ok()?;
            let r = self.target.coaction[k].try_mul(&self.matrix).ok()?;
            if l != r {
                return Some(("coaction", k));
            }
        }
        None
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

/// The flip `M⊗N → N⊗M`.
pub fn flip(f: crate::linalg::FieldSpec, dm: usize, dn: usize) -> Matrix {
    let mut p = Matrix::zeros(f, dm * dn, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            p.set(b * dm + a, a * dn + b, f.one());
        }
    }
    p
}

/// `Φ(m⊗n) = Σ n₀ ⊗ n₁·m`.
pub fn braiding(m: &YdModule, nn: &YdModule) -> Result<YdMap> {
    let h = &*m.host;
    if m.host != nn.host {
        return Err(Error::HostMismatch);
    }
    let f = h.field();
    let (dm, dn) = (m.dim(), nn.dim());
    let mut b = Matrix::zeros(f, dm * dn, dm * dn);
    for k in 0..h.dim() {
        b.axpy(&f.one(), &nn.coaction[k].kron(&m.action[k]));
    }
    let matrix = b.try_mul(&flip(f, dm, dn))?;
    YdMap::new(tensor_product(m, nn)?, tensor_product(nn, m)?, matrix)
}

/// Restricts the structures of `m` to the invariant subspace spanned by the
/// columns of `basis`; errors when the subspace is not invariant.
pub fn restrict(m: &YdModule, basis: &Matrix) -> Result<YdModule> {
    let restrict_one = |a: &Matrix| -> Result<Matrix> {
        basis
            .solve(&a.try_mul(basis)?)?
            .ok_or_else(|| Error::Invalid("subspace is not invariant".into()))
    };
    if basis.cols() == 0 {
        return Err(Error::Invalid("empty subspace".into()));
    }
    let action = m.action.iter().map(restrict_one).collect::<Result<Vec<_>>>()?;
    let coaction = m.coaction.iter().map(restrict_one).collect::<Result<Vec<_>>>()?;
    YdModule::new(m.host.clone(), action, coaction)
}
