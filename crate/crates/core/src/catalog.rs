//! Built-in instances: Sweedler's four-dimensional Hopf algebra with its
//! one-parameter families of structures, `kC₂`, and derived YD objects.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Vector};
use crate::linalg::{FieldSpec, Matrix, Scalar, Tensor};
use crate::quasitriangular::{CqtStructure, QtStructure};
use crate::twist::{DualCocycle, TwoCocycle};

/// Basis positions of `H₄ = span{1, g, h, gh}`.
pub const ONE: usize = 0;
pub const G: usize = 1;
pub const H: usize = 2;
pub const GH: usize = 3;

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn require_odd(f: FieldSpec) -> Result<()> {
    if f.characteristic() == 2 {
        Err(Error::Field("Sweedler's algebra needs characteristic other than 2".into()))
    } else {
        Ok(())
    }
}

/// Sweedler's algebra: `g² = 1`, `h² = 0`, `gh = -hg`, `Δg = g⊗g`,
/// `Δh = 1⊗h + h⊗g`, `S(g) = g`, `S(h) = gh`.
pub fn sweedler_h4(f: FieldSpec) -> Result<HopfAlgebra> {
    require_odd(f)?;
    let mut mult = Tensor::zeros(f, &[4, 4, 4]);
    let prods: [(usize, usize, usize, i64); 10] = [
        (ONE, ONE, ONE, 1),
        (ONE, G, G, 1),
        (ONE, H, H, 1),
        (ONE, GH, GH, 1),
        (G, ONE, G, 1),
        (G, G, ONE, 1),
        (G, H, GH, 1),
        (G, GH, H, 1),
        (H, ONE, H, 1),
        (H, G, GH, -1),
    ];
    for (i, j, k, c) in prods {
        mult.set(&[i, j, k], f.int(c));
    }
    mult.set(&[GH, ONE, GH], f.one());
    mult.set(&[GH, G, H], f.int(-1));
    let mut comult = Tensor::zeros(f, &[4, 4, 4]);
    for (i, j, k) in [(ONE, ONE, ONE), (G, G, G), (H, ONE, H), (H, H, G), (GH, G, GH), (GH, GH, ONE)] {
        comult.set(&[i, j, k], f.one());
    }
    let antipode = Matrix::from_fn(f, 4, 4, |r, c| match (r, c) {
        (ONE, ONE) | (G, G) | (GH, H) => f.one(),
        (H, GH) => f.int(-1),
        _ => f.zero(),
    });
    HopfAlgebra::new(
        f,
        names(&["1", "g", "h", "gh"]),
        mult,
        vec![f.one(), f.zero(), f.zero(), f.zero()],
        comult,
        vec![f.one(), f.one(), f.zero(), f.zero()],
        antipode,
        None,
    )
}

/// The group algebra of the cyclic group of order 2, basis `(1, g)`.
pub fn group_algebra_c2(f: FieldSpec) -> Result<HopfAlgebra> {
    let mut mult = Tensor::zeros(f, &[2, 2, 2]);
    let mut comult = Tensor::zeros(f, &[2, 2, 2]);
    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        mult.set(&[i, j, (i + j) % 2], f.one());
    }
    comult.set(&[0, 0, 0], f.one());
    comult.set(&[1, 1, 1], f.one());
    HopfAlgebra::new(
        f,
        names(&["1", "g"]),
        mult,
        vec![f.one(), f.zero()],
        comult,
        vec![f.one(), f.one()],
        Matrix::identity(f, 2),
        None,
    )
}

fn ensure_h4(h: &HopfAlgebra) -> Result<()> {
    if *h == sweedler_h4(h.field())? {
        Ok(())
    } else {
        Err(Error::Invalid("host is not Sweedler's algebra in the basis (1, g, h, gh)".into()))
    }
}

fn table(f: FieldSpec, rows: [[Scalar; 4]; 4]) -> Matrix {
    Matrix::from_fn(f, 4, 4, |i, j| rows[i][j].clone())
}

/// The CQT form `R_t` on `H₄`.
pub fn r_t(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<CqtStructure> {
    ensure_h4(h4)?;
    let f = h4.field();
    let (o, z, m) = (f.one(), f.zero(), f.int(-1));
    let nt = -t.clone();
    let r = table(
        f,
        [
            [o.clone(), o.clone(), z.clone(), z.clone()],
            [o.clone(), m, z.clone(), z.clone()],
            [z.clone(), z.clone(), t.clone(), nt],
            [z.clone(), z, t.clone(), t.clone()],
        ],
    );
    CqtStructure::new(h4.clone(), r, None)
}

/// The lazy 2-cocycle `σ_t` on `H₄`.
pub fn sigma_t(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<TwoCocycle> {
    ensure_h4(h4)?;
    let f = h4.field();
    let half = t.clone() * f.ratio(1, 2)?;
    let (o, z) = (f.one(), f.zero());
    let s = table(
        f,
        [
            [o.clone(), o.clone(), z.clone(), z.clone()],
            [o.clone(), o, z.clone(), z.clone()],
            [z.clone(), z.clone(), half.clone(), -half.clone()],
            [z.clone(), z, half.clone(), -half],
        ],
    );
    TwoCocycle::new(h4.clone(), s, None)
}

/// The dual cocycle `θ_t = 1⊗1 + (t/2) h⊗gh`.
pub fn theta_t(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<DualCocycle> {
    ensure_h4(h4)?;
    let f = h4.field();
    let half = t.clone() * f.ratio(1, 2)?;
    let mut th = Matrix::zeros(f, 4, 4);
    th.set(ONE, ONE, f.one());
    th.set(H, GH, half);
    DualCocycle::new(h4.clone(), th, None)
}

/// The QT structure
/// `ℛ_t = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (t/2)(1⊗1 + g⊗g + 1⊗g − g⊗1)(h⊗h)`.
pub fn qt_t(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<QtStructure> {
    ensure_h4(h4)?;
    let f = h4.field();
    let half = f.ratio(1, 2)?;
    let pure = |pairs: &[(usize, usize, i64)]| -> Vector {
        let mut v = vec![f.zero(); 16];
        for &(a, b, c) in pairs {
            v[a * 4 + b] += &f.int(c);
        }
        v
    };
    let r0 = pure(&[(ONE, ONE, 1), (ONE, G, 1), (G, ONE, 1), (G, G, -1)]);
    let r1 = h4.tensor_mul(2, &pure(&[(ONE, ONE, 1), (G, G, 1), (ONE, G, 1), (G, ONE, -1)]), &pure(&[(H, H, 1)]));
    let th = t.clone() * half.clone();
    let rr = Matrix::from_fn(f, 4, 4, |i, j| &(&half * &r0[i * 4 + j]) + &(&th * &r1[i * 4 + j]));
    QtStructure::new(h4.clone(), rr, None)
}

/// The bicharacter on `kC₂` with `R(g⊗g) = sign`.
pub fn cqt_c2(c2: &Arc<HopfAlgebra>, sign: &Scalar) -> Result<CqtStructure> {
    if **c2 != group_algebra_c2(c2.field())? {
        return Err(Error::Invalid("host is not kC₂ in the basis (1, g)".into()));
    }
    let f = c2.field();
    if !sign.is_one() && !(-sign.clone()).is_one() {
        return Err(Error::Invalid("the sign must be 1 or -1".into()));
    }
    let r = Matrix::from_fn(f, 2, 2, |i, j| if i == 1 && j == 1 { sign.clone() } else { f.one() });
    CqtStructure::new(c2.clone(), r, None)
}

/// How an entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Tabulated in the literature.
    Published,
    /// Computed from published data.
    Derived,
    /// A degenerate or textbook instance.
    Trivial,
}

/// The structure carried by a catalog entry.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Payload {
    Hopf(HopfAlgebra),
    Cocycle(TwoCocycle),
    DualCocycle(DualCocycle),
    OneCocycle(crate::twist::LazyOneCocycle),
    Cqt(CqtStructure),
    Qt(QtStructure),
    Module(crate::yd::YdModule),
    Algebra(crate::yd::YdAlgebra),
}

impl Payload {
    /// The verifier appropriate to the payload type.
    pub fn verify(&self) -> crate::report::CheckReport {
        use crate::report::CheckReport;
        match self {
            Payload::Hopf(h) => crate::hopf::verify_hopf_axioms(h),
            Payload::Cocycle(c) => crate::twist::verify_two_cocycle(c),
            Payload::DualCocycle(d) => crate::twist::verify_dual_cocycle(d),
            Payload::OneCocycle(m) => {
                let mut rep = CheckReport::new();
                rep.run("coboundary_cocycle", || {
                    let s = crate::twist::coboundary_from(m).map_err(|e| crate::report::Failure::msg(e.to_string()))?;
                    crate::report::expect(crate::twist::verify_two_cocycle(&s).passed(), "∂μ is a 2-cocycle")
                });
                rep
            }
            Payload::Cqt(c) => crate::quasitriangular::verify_cqt(c),
            Payload::Qt(q) => crate::quasitriangular::verify_qt(q),
            Payload::Module(m) => crate::yd::verify_yd(m),
            Payload::Algebra(a) => crate::yd::verify_yd_algebra(a),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Hopf(_) => "hopf",
            Payload::Cocycle(_) => "cocycle",
            Payload::DualCocycle(_) => "dual_cocycle",
            Payload::OneCocycle(_) => "one_cocycle",
            Payload::Cqt(_) => "cqt",
            Payload::Qt(_) => "qt",
            Payload::Module(_) => "yd_module",
            Payload::Algebra(_) => "yd_algebra",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<Scalar>,
    pub payload: Payload,
    pub provenance: Provenance,
    pub source: &'static str,
}

/// Static description of a catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct EntryInfo {
    pub name: &'static str,
    pub kind: &'static str,
    pub parametric: bool,
    pub provenance: Provenance,
    pub source: &'static str,
}

pub const ENTRIES: &[EntryInfo] = &[
    EntryInfo { name: "h4", kind: "hopf", parametric: false, provenance: Provenance::Published, source: "Sweedler's four-dimensional Hopf algebra" },
    EntryInfo { name: "kc2", kind: "hopf", parametric: false, provenance: Provenance::Trivial, source: "group algebra of the cyclic group of order 2" },
    EntryInfo { name: "sigma_t", kind: "cocycle", parametric: true, provenance: Provenance::Published, source: "lazy 2-cocycle family on H4" },
    EntryInfo { name: "theta_t", kind: "dual_cocycle", parametric: true, provenance: Provenance::Published, source: "dual cocycle family 1⊗1 + (t/2)h⊗gh on H4" },
    EntryInfo { name: "r_t", kind: "cqt", parametric: true, provenance: Provenance::Published, source: "CQT family on H4" },
    EntryInfo { name: "qt_t", kind: "qt", parametric: true, provenance: Provenance::Published, source: "QT family on H4" },
    EntryInfo { name: "cqt_c2_plus", kind: "cqt", parametric: false, provenance: Provenance::Trivial, source: "trivial bicharacter on kC2" },
    EntryInfo { name: "cqt_c2_minus", kind: "cqt", parametric: false, provenance: Provenance::Derived, source: "bicharacter R(g⊗g) = -1 on kC2" },
    EntryInfo { name: "mu_c2", kind: "one_cocycle", parametric: false, provenance: Provenance::Derived, source: "central functional μ(g) = 2 on kC2" },
    EntryInfo { name: "coboundary_c2", kind: "cocycle", parametric: false, provenance: Provenance::Derived, source: "coboundary of μ(g) = 2 on kC2" },
    EntryInfo { name: "regular_yd_r_t", kind: "yd_module", parametric: true, provenance: Provenance::Derived, source: "H4 with regular coaction and the action induced by R_t" },
    EntryInfo { name: "regular_yd_qt_t", kind: "yd_module", parametric: true, provenance: Provenance::Derived, source: "H4 with regular action and the coaction induced by the QT element" },
    EntryInfo { name: "trivial_h4", kind: "yd_module", parametric: false, provenance: Provenance::Trivial, source: "one-dimensional trivial YD module over H4" },
    EntryInfo { name: "unit_object_h4", kind: "yd_algebra", parametric: false, provenance: Provenance::Published, source: "dual algebra H4* as a YD module algebra" },
    EntryInfo { name: "unit_object_kc2", kind: "yd_algebra", parametric: false, provenance: Provenance::Derived, source: "dual algebra kC2* as a YD module algebra" },
    EntryInfo { name: "end_regular_t", kind: "yd_algebra", parametric: true, provenance: Provenance::Derived, source: "End of the regular YD module induced by R_t" },
    EntryInfo { name: "h_regular_t", kind: "yd_algebra", parametric: true, provenance: Provenance::Derived, source: "opposite algebra of H4 with coaction Δ and the action induced by R_t" },
    EntryInfo { name: "hr_t", kind: "yd_algebra", parametric: true, provenance: Provenance::Derived, source: "braided Hopf algebra of (H4, R_t) with adjoint coaction" },
    EntryInfo { name: "kc2_trivial_algebra", kind: "yd_algebra", parametric: false, provenance: Provenance::Trivial, source: "kC2 as an algebra with trivial YD structure over kC2" },
];

/// Regular YD module over `H₄` induced by `R_t`.
pub fn regular_yd_r(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<crate::yd::YdModule> {
    let r = r_t(h4, t)?;
    crate::quasitriangular::yd_from_comodule(&r, crate::yd::regular_coaction(h4))
}

/// Regular YD module over `H₄` induced by `ℛ_t`.
pub fn regular_yd_qt(h4: &Arc<HopfAlgebra>, t: &Scalar) -> Result<crate::yd::YdModule> {
    let q = qt_t(h4, t)?;
    crate::quasitriangular::yd_from_module(&q, crate::yd::regular_action(h4))
}

/// `kC₂` with trivial action and coaction, as an algebra over itself.
pub fn kc2_trivial_algebra(f: FieldSpec) -> Result<crate::yd::YdAlgebra> {
    let c2 = Arc::new(group_algebra_c2(f)?);
    let left = (0..2)
        .map(|p| Matrix::from_fn(f, 2, 2, |r, q| if r == (p + q) % 2 { f.one() } else { f.zero() }))
        .collect();
    crate::yd::YdAlgebra::from_left_mult(crate::yd::YdModule::trivial(c2, 2), left, vec![f.one(), f.zero()])
}

/// The central functional `μ = (1, 2)` on `kC₂`.
pub fn mu_c2(f: FieldSpec) -> Result<crate::twist::LazyOneCocycle> {
    let c2 = Arc::new(group_algebra_c2(f)?);
    crate::twist::LazyOneCocycle::new(c2, vec![f.one(), f.int(2)])
}

/// Builds an entry by name; `t` is used by the parametric families.
pub fn entry(name: &str, f: FieldSpec, t: &Scalar) -> Result<CatalogEntry> {
    let info = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Invalid(format!("unknown catalog entry {name}")))?;
    let h4 = || sweedler_h4(f).map(Arc::new);
    let c2 = || group_algebra_c2(f).map(Arc::new);
    let payload = match name {
        "h4" => Payload::Hopf(sweedler_h4(f)?),
        "kc2" => Payload::Hopf(group_algebra_c2(f)?),
        "sigma_t" => Payload::Cocycle(sigma_t(&h4()?, t)?),
        "theta_t" => Payload::DualCocycle(theta_t(&h4()?, t)?),
        "r_t" => Payload::Cqt(r_t(&h4()?, t)?),
        "qt_t" => Payload::Qt(qt_t(&h4()?, t)?),
        "cqt_c2_plus" => Payload::Cqt(cqt_c2(&c2()?, &f.one())?),
        "cqt_c2_minus" => Payload::Cqt(cqt_c2(&c2()?, &f.int(-1))?),
        "mu_c2" => Payload::OneCocycle(mu_c2(f)?),
        "coboundary_c2" => Payload::Cocycle(crate::twist::coboundary_from(&mu_c2(f)?)?),
        "regular_yd_r_t" => Payload::Module(regular_yd_r(&h4()?, t)?),
        "regular_yd_qt_t" => Payload::Module(regular_yd_qt(&h4()?, t)?),
        "trivial_h4" => Payload::Module(crate::yd::YdModule::trivial(h4()?, 1)),
        "unit_object_h4" => Payload::Algebra(crate::galois::unit_object(h4()?)?),
        "unit_object_kc2" => Payload::Algebra(crate::galois::unit_object(c2()?)?),
        "end_regular_t" => Payload::Algebra(crate::yd::end_algebra(&regular_yd_r(&h4()?, t)?)?),
        "h_regular_t" => Payload::Algebra(crate::galois::regular_comodule_algebra(&r_t(&h4()?, t)?)?),
        "hr_t" => Payload::Algebra(crate::galois::build_hr(&r_t(&h4()?, t)?)?.algebra().clone()),
        "kc2_trivial_algebra" => Payload::Algebra(kc2_trivial_algebra(f)?),
        _ => unreachable!("entry table and constructors are in sync"),
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        params: if info.parametric { vec![t.clone()] } else { Vec::new() },
        payload,
        provenance: info.provenance,
        source: info.source,
    })
}

/// Name of the host of a payload built by [`entry`].
pub fn host_name(h: &HopfAlgebra) -> Option<&'static str> {
    let f = h.field();
    if sweedler_h4(f).map(|x| x == *h).unwrap_or(false) {
        Some("h4")
    } else if group_algebra_c2(f).map(|x| x == *h).unwrap_or(false) {
        Some("kc2")
    } else {
        None
    }
}
