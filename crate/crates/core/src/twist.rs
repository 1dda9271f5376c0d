//! Convolution of functionals on `H⊗H`, 2-cocycles, dual 2-cocycles and
//! the deformations `H^σ` and `H_θ`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{add_scaled, digits, pairs, triples, with_comult, with_mult, HopfAlgebra, Vector};
use crate::linalg::{Matrix, Scalar, Tensor};
use crate::report::{expect, expect_none, CheckReport, Failure};

/// `f(x⊗y)` for a bilinear form stored as a matrix.
pub fn pair2(f: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = f.field().zero();
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let v = f.get(i, j);
            if !v.is_zero() {
                acc += &(&(a * b) * v);
            }
        }
    }
    acc
}

/// The convolution unit `ε⊗ε`.
pub fn conv_unit2(h: &HopfAlgebra) -> Matrix {
    let c = h.counit();
    Matrix::from_fn(h.field(), h.dim(), h.dim(), |i, j| &c[i] * &c[j])
}

/// `(f*g)(x⊗y) = Σ f(x₁⊗y₁) g(x₂⊗y₂)`.
pub fn convolve2(h: &HopfAlgebra, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    let n = h.dim();
    for m in [f, g] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Shape(format!("functional on H⊗H must be {n}x{n}")));
        }
    }
    let mut out = Matrix::zeros(h.field(), n, n);
    for (i, j) in pairs(n) {
        let mut acc = h.field().zero();
        for (a1, a2, c) in h.comult_terms(i) {
            for (b1, b2, d) in h.comult_terms(j) {
                let v = &(f.get(*a1, *b1) * g.get(*a2, *b2)) * &(c * d);
                acc += &v;
            }
        }
        out.set(i, j, acc);
    }
    Ok(out)
}

/// Convolution inverse by one `n²×n²` solve, then a two-sided check.
pub fn conv_inverse2(h: &HopfAlgebra, f: &Matrix) -> Option<Matrix> {
    let n = h.dim();
    if f.rows() != n || f.cols() != n {
        return None;
    }
    let field = h.field();
    let cols: Vec<Vector> = (0..n * n)
        .map(|k| {
            let mut e = Matrix::zeros(field, n, n);
            e.set(k / n, k % n, field.one());
            convolve2(h, f, &e).ok().map(|m| m.entries().to_vec())
        })
        .collect::<Option<_>>()?;
    let op = Matrix::from_cols(field, n * n, &cols);
    let unit = conv_unit2(h);
    let x = op.solve(&Matrix::column_vector(field, unit.entries())).ok()??;
    let x = Matrix::from_fn(field, n, n, |i, j| x.get(i * n + j, 0).clone());
    let both = convolve2(h, f, &x).ok()? == unit && convolve2(h, &x, f).ok()? == unit;
    both.then_some(x)
}

/// Convolution inverse of a functional on `H`.
fn conv_inverse1(h: &HopfAlgebra, f: &[Scalar]) -> Option<Vector> {
    let n = h.dim();
    let field = h.field();
    // (f*x)(e_i) = Σ f(a₁) x(a₂): linear in x.
    let op = Matrix::from_fn(field, n, n, |i, k| {
        let mut acc = field.zero();
        for (a, b, c) in h.comult_terms(i) {
            if *b == k {
                acc += &(&f[*a] * c);
            }
        }
        acc
    });
    let x = op.solve(&Matrix::column_vector(field, h.counit())).ok()??.col(0);
    let conv = |p: &[Scalar], q: &[Scalar]| -> Vector {
        (0..n)
            .map(|i| {
                let mut acc = field.zero();
                for (a, b, c) in h.comult_terms(i) {
                    acc += &(&(&p[*a] * &q[*b]) * c);
                }
                acc
            })
            .collect()
    };
    (conv(f, &x) == h.counit() && conv(&x, f) == h.counit()).then_some(x)
}

fn check_host_shape(h: &HopfAlgebra, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != h.dim() || m.cols() != h.dim() {
        return Err(Error::Shape(format!("{what} must be {0}x{0}", h.dim())));
    }
    if m.field() != h.field() {
        return Err(Error::Field(format!("{what} is over {} but host over {}", m.field(), h.field())));
    }
    Ok(())
}

/// A convolution-invertible functional `σ` on `H⊗H` together with `σ⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCocycle {
    host: Arc<HopfAlgebra>,
    sigma: Matrix,
    sigma_inv: Matrix,
}

impl TwoCocycle {
    /// Checks shape and invertibility; the cocycle identities are checked by
    /// [`verify_two_cocycle`].
    pub fn new(host: Arc<HopfAlgebra>, sigma: Matrix, sigma_inv: Option<Matrix>) -> Result<TwoCocycle> {
        check_host_shape(&host, &sigma, "cocycle")?;
        let sigma_inv = match sigma_inv {
            Some(inv) => {
                check_host_shape(&host, &inv, "cocycle inverse")?;
                let u = conv_unit2(&host);
                if convolve2(&host, &sigma, &inv)? != u || convolve2(&host, &inv, &sigma)? != u {
                    return Err(Error::Invalid("sigma_inv is not the convolution inverse".into()));
                }
                inv
            }
            None => conv_inverse2(&host, &sigma).ok_or_else(|| Error::NotInvertible("cocycle".into()))?,
        };
        Ok(TwoCocycle { host, sigma, sigma_inv })
    }

    pub fn trivial(host: Arc<HopfAlgebra>) -> TwoCocycle {
        let u = conv_unit2(&host);
        TwoCocycle { host, sigma: u.clone(), sigma_inv: u }
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &Matrix {
        &self.sigma_inv
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        pair2(&self.sigma, x, y)
    }

    pub fn eval_inv(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        pair2(&self.sigma_inv, x, y)
    }

    /// `σ⁻¹` viewed as a 2-cocycle on `H^σ`.
    pub fn inverse(&self) -> Result<TwoCocycle> {
        Ok(TwoCocycle {
            host: Arc::new(deform(self)?),
            sigma: self.sigma_inv.clone(),
            sigma_inv: self.sigma.clone(),
        })
    }
}

/// Normalization, invertibility, the cocycle identity and its three
/// consequences, each on all basis tuples.
/// A scalar function of the four legs `g₁, h₁, g₂, h₂`.
type LegFn<'a> = dyn Fn(&[Scalar], &[Scalar], &[Scalar], &[Scalar]) -> Scalar + 'a;

pub fn verify_two_cocycle(c: &TwoCocycle) -> CheckReport {
    let h = &*c.host;
    let n = h.dim();
    let e = |i| h.basis(i);
    let s = |x: &[Scalar], y: &[Scalar]| c.eval(x, y);
    let si = |x: &[Scalar], y: &[Scalar]| c.eval_inv(x, y);
    let mut r = CheckReport::new();

    r.run("normalization", || {
        let one = h.unit();
        expect_none(
            (0..n)
                .find(|&i| s(&e(i), one) != h.counit()[i] || s(one, &e(i)) != h.counit()[i])
                .map(|i| vec![i]),
            "σ(h⊗1) = σ(1⊗h) = ε(h)",
        )
    });
    r.run("invertibility", || {
        let u = conv_unit2(h);
        let ok = convolve2(h, &c.sigma, &c.sigma_inv).ok() == Some(u.clone())
            && convolve2(h, &c.sigma_inv, &c.sigma).ok() == Some(u);
        expect(ok, "σ*σ⁻¹ = σ⁻¹*σ = ε⊗ε")
    });

    // Sums over Δ(g) ⊗ Δ(h) of F(g₁,h₁,g₂,h₂).
    let sum2 = |g: usize, hh: usize, f: &LegFn| {
        let mut acc = h.field().zero();
        for (g1, g2, a) in h.comult_terms(g) {
            for (h1, h2, b) in h.comult_terms(hh) {
                acc += &(&(a * b) * &f(&e(*g1), &e(*h1), &e(*g2), &e(*h2)));
            }
        }
        acc
    };

    r.run("cocycle", || {
        expect_none(
            triples(n)
                .find(|&(g, hh, l)| {
                    let lhs = sum2(g, hh, &|g1, h1, g2, h2| &s(g1, h1) * &s(&h.mul(g2, h2), &e(l)));
                    let rhs = sum2(hh, l, &|h1, l1, h2, l2| &s(h1, l1) * &s(&e(g), &h.mul(h2, l2)));
                    lhs != rhs
                })
                .map(|(a, b, c)| vec![a, b, c]),
            "Eq. 6",
        )
    });
    r.run("mixed_cocycle", || {
        expect_none(
            triples(n)
                .find(|&(g, hh, l)| {
                    // Σσ(g₁h₁⊗l₁)σ⁻¹(g₂⊗h₂l₂)
                    let mut lhs = h.field().zero();
                    for (cg, gl) in h.delta_terms(g, 2) {
                        for (ch, hl) in h.delta_terms(hh, 2) {
                            for (cl, ll) in h.delta_terms(l, 2) {
                                let v = &s(&h.mul(&e(gl[0]), &e(hl[0])), &e(ll[0]))
                                    * &si(&e(gl[1]), &h.mul(&e(hl[1]), &e(ll[1])));
                                lhs += &(&(&cg * &ch) * &(&cl * &v));
                            }
                        }
                    }
                    let rhs = {
                        let mut acc = h.field().zero();
                        for (h1, h2, c) in h.comult_terms(hh) {
                            acc += &(c * &(&si(&e(g), &e(*h1)) * &s(&e(*h2), &e(l))));
                        }
                        acc
                    };
                    lhs != rhs
                })
                .map(|(a, b, c)| vec![a, b, c]),
            "Eq. 7",
        )
    });
    r.run("inverse_cocycle", || {
        expect_none(
            triples(n)
                .find(|&(g, hh, l)| {
                    let lhs = sum2(g, hh, &|g1, h1, g2, h2| &si(&h.mul(g1, h1), &e(l)) * &si(g2, h2));
                    let rhs = sum2(hh, l, &|h1, l1, h2, l2| &si(&e(g), &h.mul(h1, l1)) * &si(h2, l2));
                    lhs != rhs
                })
                .map(|(a, b, c)| vec![a, b, c]),
            "Eq. 8",
        )
    });
    r.run("antipode_twist", || {
        expect_none(
            (0..n)
                .find(|&i| {
                    let mut acc = h.field().zero();
                    for (c, l) in h.delta_terms(i, 4) {
                        let v = &s(&e(l[0]), &h.s(&e(l[1]))) * &si(&h.s(&e(l[2])), &e(l[3]));
                        acc += &(&c * &v);
                    }
                    acc != h.counit()[i]
                })
                .map(|i| vec![i]),
            "Eq. 9",
        )
    });
    r
}

/// `Σσ(h₁⊗l₁)h₂l₂ = Σh₁l₁σ(h₂⊗l₂)` on all basis pairs.
pub fn is_lazy(c: &TwoCocycle) -> bool {
    let h = &*c.host;
    pairs(h.dim()).all(|(i, j)| {
        let mut lhs = h.zero();
        let mut rhs = h.zero();
        for (a1, a2, x) in h.comult_terms(i) {
            for (b1, b2, y) in h.comult_terms(j) {
                let xy = x * y;
                let prod1 = h.mul(&h.basis(*a2), &h.basis(*b2));
                add_scaled(&mut lhs, &(&xy * c.sigma.get(*a1, *b1)), &prod1);
                let prod2 = h.mul(&h.basis(*a1), &h.basis(*b1));
                add_scaled(&mut rhs, &(&xy * c.sigma.get(*a2, *b2)), &prod2);
            }
        }
        lhs == rhs
    })
}

/// The Hopf algebra `H^σ`.
pub fn deform(c: &TwoCocycle) -> Result<HopfAlgebra> {
    let h = &*c.host;
    let n = h.dim();
    let f = h.field();
    let e = |i| h.basis(i);
    let mut mult = Tensor::zeros(f, &[n, n, n]);
    for (i, j) in pairs(n) {
        let mut acc = h.zero();
        for (ca, a) in h.delta_terms(i, 3) {
            for (cb, b) in h.delta_terms(j, 3) {
                let coeff = &(&ca * &cb) * &(c.sigma.get(a[0], b[0]) * c.sigma_inv.get(a[2], b[2]));
                if !coeff.is_zero() {
                    add_scaled(&mut acc, &coeff, &h.mul(&e(a[1]), &e(b[1])));
                }
            }
        }
        for (k, v) in acc.into_iter().enumerate() {
            mult.set(&[i, j, k], v);
        }
    }
    let mut s_cols = Vec::with_capacity(n);
    let mut s_inv_cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = h.zero();
        let mut si = h.zero();
        for (c0, l) in h.delta_terms(i, 5) {
            let coeff = &c0
                * &(&c.eval(&e(l[0]), &h.s(&e(l[1]))) * &c.eval_inv(&h.s(&e(l[3])), &e(l[4])));
            add_scaled(&mut s, &coeff, &h.s(&e(l[2])));
            let coeff = &c0
                * &(&c.eval_inv(&e(l[4]), &h.s_inv(&e(l[3])))
                    * &c.eval(&h.s_inv(&e(l[1])), &e(l[0])));
            add_scaled(&mut si, &coeff, &h.s_inv(&e(l[2])));
        }
        s_cols.push(s);
        s_inv_cols.push(si);
    }
    with_mult(h, mult, Matrix::from_cols(f, n, &s_cols), Matrix::from_cols(f, n, &s_inv_cols))
}

/// `σ₁*σ` for `σ₁` a cocycle on `H^σ`; a cocycle on `H` with
/// `H^{σ₁*σ} = (H^σ)^{σ₁}`.
pub fn compose_cocycles(c1: &TwoCocycle, c: &TwoCocycle) -> Result<TwoCocycle> {
    let h_sigma = deform(c)?;
    if *c1.host != h_sigma {
        return Err(Error::HostMismatch);
    }
    let h = &*c.host;
    let sigma = convolve2(h, &c1.sigma, &c.sigma)?;
    let sigma_inv = convolve2(h, &c.sigma_inv, &c1.sigma_inv)?;
    let out = TwoCocycle::new(c.host.clone(), sigma, Some(sigma_inv))?;
    if deform(&out)? != deform(c1)? {
        return Err(Error::Invalid("H^(σ₁*σ) differs from (H^σ)^σ₁".into()));
    }
    Ok(out)
}

/// A normalized central element `μ` of `H*` with its convolution inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct LazyOneCocycle {
    host: Arc<HopfAlgebra>,
    mu: Vector,
    mu_inv: Vector,
}

impl LazyOneCocycle {
    pub fn new(host: Arc<HopfAlgebra>, mu: Vector) -> Result<LazyOneCocycle> {
        let h = &*host;
        if mu.len() != h.dim() {
            return Err(Error::Shape(format!("μ must have {} entries", h.dim())));
        }
        if !crate::hopf::dot(&mu, h.unit()).is_one() {
            return Err(Error::Invalid("μ(1) ≠ 1".into()));
        }
        if let Some(i) = (0..h.dim()).find(|&i| {
            let mut l = h.zero();
            let mut r = h.zero();
            for (a, b, c) in h.comult_terms(i) {
                add_scaled(&mut l, &(c * &mu[*a]), &h.basis(*b));
                add_scaled(&mut r, &(c * &mu[*b]), &h.basis(*a));
            }
            l != r
        }) {
            return Err(Error::Invalid(format!("μ is not central (fails on basis element {i})")));
        }
        let mu_inv = conv_inverse1(h, &mu).ok_or_else(|| Error::NotInvertible("μ".into()))?;
        Ok(LazyOneCocycle { host, mu, mu_inv })
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn mu(&self) -> &[Scalar] {
        &self.mu
    }

    pub fn mu_inv(&self) -> &[Scalar] {
        &self.mu_inv
    }
}

/// `σ(a⊗b) = Σμ(a₁)μ(b₁)μ⁻¹(a₂b₂)` for any normalized invertible `μ`,
/// central or not.
pub fn coboundary(host: Arc<HopfAlgebra>, mu: &[Scalar]) -> Result<TwoCocycle> {
    let h = &*host;
    let n = h.dim();
    if mu.len() != n {
        return Err(Error::Shape(format!("μ must have {n} entries")));
    }
    let mu_inv = conv_inverse1(h, mu).ok_or_else(|| Error::NotInvertible("μ".into()))?;
    let dot = crate::hopf::dot;
    let mut sigma = Matrix::zeros(h.field(), n, n);
    let mut sigma_inv = Matrix::zeros(h.field(), n, n);
    for (i, j) in pairs(n) {
        let mut s = h.field().zero();
        let mut si = h.field().zero();
        for (a1, a2, x) in h.comult_terms(i) {
            for (b1, b2, y) in h.comult_terms(j) {
                let xy = x * y;
                let s_term = &(&mu[*a1] * &mu[*b1]) * &dot(&mu_inv, &h.mul(&h.basis(*a2), &h.basis(*b2)));
                s += &(&xy * &s_term);
                let si_term =
                    &dot(mu, &h.mul(&h.basis(*a1), &h.basis(*b1))) * &(&mu_inv[*a2] * &mu_inv[*b2]);
                si += &(&xy * &si_term);
            }
        }
        sigma.set(i, j, s);
        sigma_inv.set(i, j, si);
    }
    TwoCocycle::new(host.clone(), sigma, Some(sigma_inv))
}

pub fn coboundary_from(mu: &LazyOneCocycle) -> Result<TwoCocycle> {
    coboundary(mu.host.clone(), &mu.mu)
}

/// An invertible `θ ∈ H⊗H` with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct DualCocycle {
    host: Arc<HopfAlgebra>,
    theta: Matrix,
    theta_inv: Matrix,
}

impl DualCocycle {
    pub fn new(host: Arc<HopfAlgebra>, theta: Matrix, theta_inv: Option<Matrix>) -> Result<DualCocycle> {
        check_host_shape(&host, &theta, "dual cocycle")?;
        let n = host.dim();
        let one = host.tensor_one(2);
        let theta_inv = match theta_inv {
            Some(inv) => {
                check_host_shape(&host, &inv, "dual cocycle inverse")?;
                let ok = host.tensor_mul(2, theta.entries(), inv.entries()) == one
                    && host.tensor_mul(2, inv.entries(), theta.entries()) == one;
                if !ok {
                    return Err(Error::Invalid("theta_inv is not the inverse of theta".into()));
                }
                inv
            }
            None => {
                let inv = host
                    .tensor_inverse(2, theta.entries())
                    .ok_or_else(|| Error::NotInvertible("dual cocycle".into()))?;
                Matrix::from_fn(host.field(), n, n, |i, j| inv[i * n + j].clone())
            }
        };
        Ok(DualCocycle { host, theta, theta_inv })
    }

    pub fn trivial(host: Arc<HopfAlgebra>) -> DualCocycle {
        let n = host.dim();
        let one = host.tensor_one(2);
        let m = Matrix::from_fn(host.field(), n, n, |i, j| one[i * n + j].clone());
        DualCocycle { host, theta: m.clone(), theta_inv: m }
    }

    pub fn host(&self) -> &Arc<HopfAlgebra> {
        &self.host
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn theta_inv(&self) -> &Matrix {
        &self.theta_inv
    }

    /// `θ⁻¹` viewed as a dual cocycle on `H_θ`.
    pub fn inverse(&self) -> Result<DualCocycle> {
        Ok(DualCocycle {
            host: Arc::new(deform_dual(self)?),
            theta: self.theta_inv.clone(),
            theta_inv: self.theta.clone(),
        })
    }
}

pub fn verify_dual_cocycle(d: &DualCocycle) -> CheckReport {
    let h = &*d.host;
    let n = h.dim();
    let t = d.theta.entries();
    let mut r = CheckReport::new();
    r.run("pentagon", || {
        let lhs = h.tensor_mul(3, &h.embed2(3, t, 0, 1), &h.delta_leg(2, t, 0));
        let rhs = h.tensor_mul(3, &h.embed2(3, t, 1, 2), &h.delta_leg(2, t, 1));
        match (0..lhs.len()).find(|&k| lhs[k] != rhs[k]) {
            None => Ok(String::new()),
            Some(k) => Err(Failure::at(digits(n, 3, k), "θ₁₂(Δ⊗id)θ = θ₂₃(id⊗Δ)θ violated")),
        }
    });
    r.run("normalization", || {
        let ok = h.eps_leg(2, t, 0) == h.unit() && h.eps_leg(2, t, 1) == h.unit();
        expect(ok, "(ε⊗id)θ = (id⊗ε)θ = 1")
    });
    r.run("invertibility", || {
        let one = h.tensor_one(2);
        let ti = d.theta_inv.entries();
        expect(h.tensor_mul(2, t, ti) == one && h.tensor_mul(2, ti, t) == one, "θθ⁻¹ = θ⁻¹θ = 1⊗1")
    });
    r
}

/// `θΔ(h) = Δ(h)θ` for all basis `h`.
pub fn is_lazy_dual(d: &DualCocycle) -> bool {
    let h = &*d.host;
    let t = d.theta.entries();
    (0..h.dim()).all(|i| {
        let di = h.delta(&h.basis(i));
        h.tensor_mul(2, t, &di) == h.tensor_mul(2, &di, t)
    })
}

/// The Hopf algebra `H_θ`: same algebra, `Δ_θ = θΔθ⁻¹`, `S_θ = U S(·) V`
/// with `U = Σθ¹S(θ²)` and `V = ΣS(θ⁻¹¹)θ⁻¹²`.
pub fn deform_dual(d: &DualCocycle) -> Result<HopfAlgebra> {
    let h = &*d.host;
    let n = h.dim();
    let f = h.field();
    let t = d.theta.entries();
    let ti = d.theta_inv.entries();
    let mut comult = Tensor::zeros(f, &[n, n, n]);
    for i in 0..n {
        let di = h.tensor_mul(2, &h.tensor_mul(2, t, &h.delta(&h.basis(i))), ti);
        for (jk, v) in di.into_iter().enumerate() {
            comult.set(&[i, jk / n, jk % n], v);
        }
    }
    let (u, v) = antipode_factors(h, t, ti);
    let cols: Vec<Vector> = (0..n).map(|i| h.prod(&[&u, &h.s(&h.basis(i)), &v])).collect();
    let s = Matrix::from_cols(f, n, &cols);
    let s_inv = s.inverse().ok_or_else(|| Error::NotInvertible("S_θ".into()))?;
    with_comult(h, comult, s, s_inv)
}

fn antipode_factors(h: &HopfAlgebra, t: &[Scalar], ti: &[Scalar]) -> (Vector, Vector) {
    let n = h.dim();
    let mut u = h.zero();
    let mut v = h.zero();
    for (ij, c) in t.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        add_scaled(&mut u, c, &h.mul(&h.basis(ij / n), &h.s(&h.basis(ij % n))));
    }
    for (ij, c) in ti.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        add_scaled(&mut v, c, &h.mul(&h.s(&h.basis(ij / n)), &h.basis(ij % n)));
    }
    (u, v)
}
