//! The deformation functors `σ̲` and `θ̲` together with their monoidal
//! structure maps `η`, `φ` and the natural isomorphism `ζ` of coboundaries.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{Matrix, Scalar};
use crate::report::{expect, CheckReport, Failure};
use crate::twist::{coboundary_from, deform, deform_dual, DualCocycle, LazyOneCocycle, TwoCocycle};

use super::algebra::YdAlgebra;
use super::module::{braiding, tensor_product, YdMap, YdModule};

fn check_host(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::HostMismatch)
    }
}

/// `h⇀m = Σ(h₂·m₀)₀ σ((h₂·m₀)₁⊗h₁) σ⁻¹(h₃⊗m₁)`.
pub fn sigma_action(s: &TwoCocycle, m: &YdModule) -> Vec<Matrix> {
    let h = &**s.host();
    let dim = m.dim();
    (0..h.dim())
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dim, dim);
            for (c, l) in h.delta_terms(i, 3) {
                let outer = m.coact_with(&s.sigma().col(l[0]));
                let inner = m.coact_with(s.sigma_inv().row(l[2]));
                let t = outer.try_mul(&m.action()[l[1]]).and_then(|x| x.try_mul(&inner)).unwrap();
                acc.axpy(&c, &t);
            }
            acc
        })
        .collect()
}

/// `h⇀m = Σ(h₃·m₀) σ(h₄m₁S⁻¹(h₂)⊗h₁) σ⁻¹(h₅⊗m₂)`.
pub fn sigma_action_second_form(s: &TwoCocycle, m: &YdModule) -> Vec<Matrix> {
    let h = &**s.host();
    let n = h.dim();
    let dim = m.dim();
    (0..n)
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dim, dim);
            for (c, l) in h.delta_terms(i, 5) {
                let tail = h.s_inv(&h.basis(l[1]));
                let first: Vector = (0..n)
                    .map(|j| {
                        let x = h.prod(&[&h.basis(l[3]), &h.basis(j), &tail]);
                        crate::twist::pair2(s.sigma(), &x, &h.basis(l[0]))
                    })
                    .collect();
                let t = m.action()[l[2]]
                    .try_mul(&m.coact_with(&first))
                    .and_then(|x| x.try_mul(&m.coact_with(s.sigma_inv().row(l[4]))))
                    .unwrap();
                acc.axpy(&c, &t);
            }
            acc
        })
        .collect()
}

/// `σ̲(M)`: the module over `H^σ` with the deformed action and the same coaction.
pub fn sigma_module(s: &TwoCocycle, m: &YdModule) -> Result<YdModule> {
    check_host(s.host(), m.host())?;
    sigma_module_over(s, m, Arc::new(deform(s)?))
}

pub(crate) fn sigma_module_over(s: &TwoCocycle, m: &YdModule, target: Arc<HopfAlgebra>) -> Result<YdModule> {
    let action = sigma_action(s, m);
    if action != sigma_action_second_form(s, m) {
        return Err(Error::Invalid("the two forms of the deformed action disagree".into()));
    }
    YdModule::new(target, action, m.coaction().to_vec())
}

fn coaction_pairing(f: &Matrix, m: &YdModule, nn: &YdModule, transpose: bool) -> Matrix {
    let n = f.rows();
    let dim = m.dim() * nn.dim();
    let mut out = Matrix::zeros(f.field(), dim, dim);
    for j in 0..n {
        for k in 0..n {
            let c = if transpose { f.get(k, j) } else { f.get(j, k) };
            if !c.is_zero() {
                out.axpy(c, &m.coaction()[j].kron(&nn.coaction()[k]));
            }
        }
    }
    out
}

/// `η(m⊗n) = Σ m₀⊗n₀ σ⁻¹(n₁⊗m₁)`, a map `σ̲(M)⊗σ̲(N) → σ̲(M⊗N)`.
pub fn eta(s: &TwoCocycle, m: &YdModule, nn: &YdModule) -> Result<YdMap> {
    check_host(s.host(), m.host())?;
    check_host(s.host(), nn.host())?;
    let hs = Arc::new(deform(s)?);
    let source = tensor_product(&sigma_module_over(s, m, hs.clone())?, &sigma_module_over(s, nn, hs.clone())?)?;
    let target = sigma_module_over(s, &tensor_product(m, nn)?, hs)?;
    YdMap::new(source, target, coaction_pairing(s.sigma_inv(), m, nn, true))
}

/// `η⁻¹(m⊗n) = Σ m₀⊗n₀ σ(n₁⊗m₁)`.
pub fn eta_inv(s: &TwoCocycle, m: &YdModule, nn: &YdModule) -> Result<YdMap> {
    let e = eta(s, m, nn)?;
    YdMap::new(e.target, e.source, coaction_pairing(s.sigma(), m, nn, true))
}

/// The braided-monoidal square `η_{N,M}∘Φ_{σ̲M,σ̲N} = σ̲(Φ_{M,N})∘η_{M,N}`
/// together with the structural properties of `η`.
pub fn verify_braided_functor(s: &TwoCocycle, m: &YdModule, nn: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let e_mn = eta(s, m, nn)?;
        let e_nm = eta(s, nn, m)?;
        let e_inv = eta_inv(s, m, nn)?;
        let phi_s = braiding(&sigma_module(s, m)?, &sigma_module(s, nn)?)?;
        let phi = braiding(m, nn)?;
        Ok((e_mn, e_nm, e_inv, phi_s, phi))
    })();
    let (e_mn, e_nm, e_inv, phi_s, phi) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(Failure::msg(e.to_string())));
            return rep;
        }
    };
    rep.run("eta_yd_map", || match e_mn.first_failure() {
        None => Ok(String::new()),
        Some((kind, i)) => Err(Failure::at(vec![i], format!("η does not commute with the {kind}"))),
    });
    rep.run("eta_inverse", || {
        let a = e_mn.matrix.try_mul(&e_inv.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        let b = e_inv.matrix.try_mul(&e_mn.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        expect(a.is_identity() && b.is_identity(), "ηη⁻¹ = η⁻¹η = id")
    });
    rep.run("braided_square", || {
        let lhs = e_nm.matrix.try_mul(&phi_s.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        let rhs = phi.matrix.try_mul(&e_mn.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        expect(lhs == rhs, "η_{N,M}Φ = σ̲(Φ)η_{M,N}")
    });
    rep
}

/// `σ̲(A)` with `a•b = Σ a₀b₀ σ⁻¹(b₁⊗a₁)`.
pub fn sigma_algebra(s: &TwoCocycle, a: &YdAlgebra) -> Result<YdAlgebra> {
    let module = sigma_module(s, a.module())?;
    let src = a.module();
    let dim = a.dim();
    let n = s.host().dim();
    let mult = (0..dim)
        .map(|p| {
            let mut acc = Matrix::zeros(s.host().field(), dim, dim);
            for j in 0..n {
                let left = a.left(&src.coaction()[j].col(p));
                if left.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let c = s.sigma_inv().get(l, j);
                    if !c.is_zero() {
                        acc.axpy(c, &left.try_mul(&src.coaction()[l]).unwrap());
                    }
                }
            }
            acc
        })
        .collect();
    YdAlgebra::from_left_mult(module, mult, a.unit().to_vec())
}

/// `ζ_M(m) = Σ m₀ μ(m₁)`, a YD isomorphism `M → σ̲(M)` for the coboundary of `μ`.
pub fn zeta_iso(mu: &LazyOneCocycle, m: &YdModule) -> Result<YdMap> {
    check_host(mu.host(), m.host())?;
    let s = coboundary_from(mu)?;
    YdMap::new(m.clone(), sigma_module(&s, m)?, m.coact_with(mu.mu()))
}

/// `ζ` is a YD isomorphism and `ζ_{M⊗N} = η_{M,N}∘(ζ_M⊗ζ_N)`.
pub fn verify_zeta(mu: &LazyOneCocycle, m: &YdModule, nn: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let s = coboundary_from(mu)?;
        Ok((zeta_iso(mu, m)?, zeta_iso(mu, nn)?, zeta_iso(mu, &tensor_product(m, nn)?)?, eta(&s, m, nn)?))
    })();
    let (zm, zn, zmn, e) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(Failure::msg(e.to_string())));
            return rep;
        }
    };
    for (name, z) in [("zeta_m_yd_map", &zm), ("zeta_n_yd_map", &zn), ("zeta_mn_yd_map", &zmn)] {
        rep.run(name, || match z.first_failure() {
            None => Ok(String::new()),
            Some((kind, i)) => Err(Failure::at(vec![i], format!("ζ does not commute with the {kind}"))),
        });
    }
    rep.run("zeta_invertible", || expect(zm.is_invertible() && zn.is_invertible(), "ζ bijective"));
    rep.run("monoidal_triangle", || {
        let rhs = e.matrix.try_mul(&zm.matrix.kron(&zn.matrix)).map_err(|e| Failure::msg(e.to_string()))?;
        expect(zmn.matrix == rhs, "ζ_{M⊗N} = η(ζ_M⊗ζ_N)")
    });
    rep
}

fn nonzero_entries(m: &Matrix) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !v.is_zero() {
                out.push((i, j, v.clone()));
            }
        }
    }
    out
}

/// `ρ_θ(m) = Σ θ¹·((θ⁻¹)²·m)₀ ⊗ θ²((θ⁻¹)²·m)₁(θ⁻¹)¹`.
pub fn theta_coaction(d: &DualCocycle, m: &YdModule) -> Vec<Matrix> {
    let h = &**d.host();
    let n = h.dim();
    let dim = m.dim();
    let mut out = vec![Matrix::zeros(h.field(), dim, dim); n];
    for (a, b, t) in nonzero_entries(d.theta()) {
        for (c, dd, ti) in nonzero_entries(d.theta_inv()) {
            let coef = &t * &ti;
            for k in 0..n {
                let x = m.action()[a]
                    .try_mul(&m.coaction()[k])
                    .and_then(|x| x.try_mul(&m.action()[dd]))
                    .unwrap();
                if x.is_zero() {
                    continue;
                }
                let leg = h.prod(&[&h.basis(b), &h.basis(k), &h.basis(c)]);
                for (l, w) in leg.iter().enumerate() {
                    if !w.is_zero() {
                        out[l].axpy(&(&coef * w), &x);
                    }
                }
            }
        }
    }
    out
}

/// `ρ_θ(m) = Σ (θ¹(θ⁻¹)²₂)·m₀ ⊗ θ²(θ⁻¹)²₃ m₁ S⁻¹((θ⁻¹)²₁)(θ⁻¹)¹`.
pub fn theta_coaction_second_form(d: &DualCocycle, m: &YdModule) -> Vec<Matrix> {
    let h = &**d.host();
    let n = h.dim();
    let dim = m.dim();
    let mut out = vec![Matrix::zeros(h.field(), dim, dim); n];
    for (a, b, t) in nonzero_entries(d.theta()) {
        for (c, dd, ti) in nonzero_entries(d.theta_inv()) {
            for (cd, l) in h.delta_terms(dd, 3) {
                let coef = &(&t * &ti) * &cd;
                let act = m.act(&h.mul(&h.basis(a), &h.basis(l[1])));
                let tail = h.mul(&h.s_inv(&h.basis(l[0])), &h.basis(c));
                for k in 0..n {
                    let x = act.try_mul(&m.coaction()[k]).unwrap();
                    if x.is_zero() {
                        continue;
                    }
                    let leg = h.prod(&[&h.basis(b), &h.basis(l[2]), &h.basis(k), &tail]);
                    for (q, w) in leg.iter().enumerate() {
                        if !w.is_zero() {
                            out[q].axpy(&(&coef * w), &x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `θ̲(M)`: same action, coaction `ρ_θ`, over `H_θ`.
pub fn theta_module(d: &DualCocycle, m: &YdModule) -> Result<YdModule> {
    check_host(d.host(), m.host())?;
    theta_module_over(d, m, Arc::new(deform_dual(d)?))
}

fn theta_module_over(d: &DualCocycle, m: &YdModule, target: Arc<HopfAlgebra>) -> Result<YdModule> {
    let coaction = theta_coaction(d, m);
    if coaction != theta_coaction_second_form(d, m) {
        return Err(Error::Invalid("the two forms of the deformed coaction disagree".into()));
    }
    YdModule::new(target, m.action().to_vec(), coaction)
}

fn theta_inv_action(d: &DualCocycle, m: &YdModule, nn: &YdModule) -> Matrix {
    let dim = m.dim() * nn.dim();
    let mut out = Matrix::zeros(m.host().field(), dim, dim);
    for (c, dd, ti) in nonzero_entries(d.theta_inv()) {
        out.axpy(&ti, &m.action()[c].kron(&nn.action()[dd]));
    }
    out
}

/// `φ(m⊗n) = θ⁻¹·(m⊗n)`, a map `θ̲(M)⊗θ̲(N) → θ̲(M⊗N)`.
pub fn theta_phi(d: &DualCocycle, m: &YdModule, nn: &YdModule) -> Result<YdMap> {
    check_host(d.host(), m.host())?;
    check_host(d.host(), nn.host())?;
    let ht = Arc::new(deform_dual(d)?);
    let source = tensor_product(&theta_module_over(d, m, ht.clone())?, &theta_module_over(d, nn, ht.clone())?)?;
    let target = theta_module_over(d, &tensor_product(m, nn)?, ht)?;
    YdMap::new(source, target, theta_inv_action(d, m, nn))
}

/// The braided square for `(θ̲, φ)` together with the properties of `φ`.
pub fn verify_theta_functor(d: &DualCocycle, m: &YdModule, nn: &YdModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let built = (|| -> Result<_> {
        let p_mn = theta_phi(d, m, nn)?;
        let p_nm = theta_phi(d, nn, m)?;
        let phi_t = braiding(&theta_module(d, m)?, &theta_module(d, nn)?)?;
        let phi = braiding(m, nn)?;
        Ok((p_mn, p_nm, phi_t, phi))
    })();
    let (p_mn, p_nm, phi_t, phi) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.run("construction", || Err(Failure::msg(e.to_string())));
            return rep;
        }
    };
    rep.run("phi_yd_map", || match p_mn.first_failure() {
        None => Ok(String::new()),
        Some((kind, i)) => Err(Failure::at(vec![i], format!("φ does not commute with the {kind}"))),
    });
    rep.run("phi_invertible", || expect(p_mn.is_invertible(), "φ bijective"));
    rep.run("braided_square", || {
        let lhs = p_nm.matrix.try_mul(&phi_t.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        let rhs = phi.matrix.try_mul(&p_mn.matrix).map_err(|e| Failure::msg(e.to_string()))?;
        expect(lhs == rhs, "φ_{N,M}Φ = θ̲(Φ)φ_{M,N}")
    });
    rep
}

/// `θ̲(A)` with `a•b = Σ((θ⁻¹)¹·a)((θ⁻¹)²·b)`.
pub fn theta_algebra(d: &DualCocycle, a: &YdAlgebra) -> Result<YdAlgebra> {
    let module = theta_module(d, a.module())?;
    let src = a.module();
    let dim = a.dim();
    let entries = nonzero_entries(d.theta_inv());
    let mult = (0..dim)
        .map(|p| {
            let mut acc = Matrix::zeros(src.host().field(), dim, dim);
            for (c, dd, ti) in &entries {
                let left = a.left(&src.action()[*c].col(p));
                acc.axpy(ti, &left.try_mul(&src.action()[*dd]).unwrap());
            }
            acc
        })
        .collect();
    YdAlgebra::from_left_mult(module, mult, a.unit().to_vec())
}
