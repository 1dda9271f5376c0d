//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements of `H` are coordinate vectors on the basis `e_0..e_{n-1}`.
//! Elements of `H^{⊗k}` are flat vectors of length `n^k`, row-major, so
//! `e_i ⊗ e_j` sits at index `i*n + j`.

use crate::error::{Error, Result};
use crate::linalg::{max_dim, FieldSpec, Matrix, Scalar, Tensor};
use crate::report::{expect_none, CheckReport};

pub type Vector = Vec<Scalar>;

/// One summand of an iterated coproduct: coefficient and basis legs.
pub type Term = (Scalar, Vec<usize>);

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: FieldSpec,
    names: Vec<String>,
    mult: Tensor,
    unit: Vector,
    comult: Tensor,
    counit: Vector,
    antipode: Matrix,
    antipode_inv: Matrix,
    mult_terms: Vec<Vec<(usize, Scalar)>>,
    comult_terms: Vec<Vec<(usize, usize, Scalar)>>,
}

/// Structure constants only; basis names are cosmetic.
impl PartialEq for HopfAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
            && self.antipode == o.antipode
            && self.antipode_inv == o.antipode_inv
    }
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra, checking shapes and that the antipode is
    /// invertible. `antipode_inv` is computed when absent and validated when
    /// given. The axioms themselves are checked by [`verify_hopf_axioms`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        mult: Tensor,
        unit: Vector,
        comult: Tensor,
        counit: Vector,
        antipode: Matrix,
        antipode_inv: Option<Matrix>,
    ) -> Result<HopfAlgebra> {
        HopfAlgebra::build(field, names, mult, unit, comult, counit, antipode, antipode_inv, false)
    }

    /// Like [`HopfAlgebra::new`] but accepts a singular antipode, storing a
    /// zero inverse so that [`verify_hopf_axioms`] can report the failure.
    /// Only meant for validating untrusted input.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new_for_validation(
        field: FieldSpec,
        names: Vec<String>,
        mult: Tensor,
        unit: Vector,
        comult: Tensor,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        HopfAlgebra::build(field, names, mult, unit, comult, counit, antipode, None, true)
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        field: FieldSpec,
        names: Vec<String>,
        mult: Tensor,
        unit: Vector,
        comult: Tensor,
        counit: Vector,
        antipode: Matrix,
        antipode_inv: Option<Matrix>,
        lenient: bool,
    ) -> Result<HopfAlgebra> {
        let n = unit.len();
        if n == 0 {
            return Err(Error::Shape("Hopf algebra of dimension 0".into()));
        }
        if n > max_dim() {
            return Err(Error::TooLarge { dim: n, max: max_dim() });
        }
        let cube = [n, n, n];
        if mult.shape() != cube || comult.shape() != cube {
            return Err(Error::Shape(format!("structure tensors must have shape {cube:?}")));
        }
        if counit.len() != n || antipode.rows() != n || antipode.cols() != n || names.len() != n {
            return Err(Error::Shape(format!("counit, antipode and names must have size {n}")));
        }
        let antipode_inv = match antipode_inv {
            Some(inv) => {
                let ok = inv.rows() == n
                    && inv.cols() == n
                    && antipode.try_mul(&inv)?.is_identity()
                    && inv.try_mul(&antipode)?.is_identity();
                if !ok {
                    return Err(Error::Invalid("antipode_inv is not the inverse of antipode".into()));
                }
                inv
            }
            None => match antipode.inverse() {
                Some(inv) => inv,
                None if lenient => Matrix::zeros(field, n, n),
                None => return Err(Error::NotInvertible("antipode".into())),
            },
        };
        let mut mult_terms = vec![Vec::new(); n * n];
        let mut comult_terms = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = mult.get(&[i, j, k]);
                    if !c.is_zero() {
                        mult_terms[i * n + j].push((k, c.clone()));
                    }
                    let d = comult.get(&[i, j, k]);
                    if !d.is_zero() {
                        comult_terms[i].push((j, k, d.clone()));
                    }
                }
            }
        }
        Ok(HopfAlgebra {
            field,
            names,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
            mult_terms,
            comult_terms,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn mult(&self) -> &Tensor {
        &self.mult
    }

    pub fn comult(&self) -> &Tensor {
        &self.comult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn zero(&self) -> Vector {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// Index of the basis element named `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn mul_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult_terms[i * self.dim() + j]
    }

    /// Nonzero terms of `Δ(e_i)`.
    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult_terms[i]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mul_terms(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Product of a sequence of elements, left to right.
    pub fn prod(&self, xs: &[&[Scalar]]) -> Vector {
        xs.iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn s(&self, x: &[Scalar]) -> Vector {
        self.antipode.apply(x)
    }

    pub fn s_inv(&self, x: &[Scalar]) -> Vector {
        self.antipode_inv.apply(x)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        dot(&self.counit, x)
    }

    /// Sweedler expansion of `Δ^{(k-1)}(e_i)` into `k` legs.
    pub fn delta_terms(&self, i: usize, k: usize) -> Vec<Term> {
        assert!(k >= 1, "at least one leg");
        let mut terms = vec![(self.field.one(), vec![i])];
        for _ in 1..k {
            let mut next = Vec::new();
            for (c, legs) in &terms {
                let last = *legs.last().unwrap();
                for (a, b, d) in self.comult_terms(last) {
                    let mut l = legs[..legs.len() - 1].to_vec();
                    l.push(*a);
                    l.push(*b);
                    next.push((c * d, l));
                }
            }
            terms = next;
        }
        terms
    }

    /// Sweedler expansion of `Δ^{(k-1)}(x)` for an arbitrary element.
    pub fn delta_vec_terms(&self, x: &[Scalar], k: usize) -> Vec<Term> {
        let mut out = Vec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            out.extend(self.delta_terms(i, k).into_iter().map(|(c, l)| (a * &c, l)));
        }
        out
    }

    /// `Δ^{(k-1)}` as a tensor of shape `[n, n^k]`.
    pub fn iterated_coproduct(&self, k: usize) -> Tensor {
        let n = self.dim();
        let width = n.pow(k as u32);
        let mut t = Tensor::zeros(self.field, &[n, width]);
        for i in 0..n {
            let mut row = vec![self.field.zero(); width];
            for (c, legs) in self.delta_terms(i, k) {
                row[flat(n, &legs)] += &c;
            }
            for (j, v) in row.into_iter().enumerate() {
                t.set(&[i, j], v);
            }
        }
        t
    }

    /// `Δ(x)` as an element of `H⊗H`.
    pub fn delta(&self, x: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n * n];
        for (c, l) in self.delta_vec_terms(x, 2) {
            out[l[0] * n + l[1]] += &c;
        }
        out
    }

    /// The unit `1⊗…⊗1` of `H^{⊗k}`.
    pub fn tensor_one(&self, k: usize) -> Vector {
        let mut out = vec![self.unit.clone()];
        for _ in 1..k {
            out.push(self.unit.clone());
        }
        outer(&out)
    }

    /// Product in the algebra `H^{⊗k}`.
    pub fn tensor_mul(&self, k: usize, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n.pow(k as u32)];
        for (ia, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let da = digits(n, k, ia);
            for (ib, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let db = digits(n, k, ib);
                let mut acc: Vec<(usize, Scalar)> = vec![(0, x * y)];
                for l in 0..k {
                    let terms = self.mul_terms(da[l], db[l]);
                    let mut next = Vec::with_capacity(acc.len() * terms.len());
                    for (idx, c) in &acc {
                        for (t, d) in terms {
                            next.push((idx * n + t, c * d));
                        }
                    }
                    acc = next;
                    if acc.is_empty() {
                        break;
                    }
                }
                for (idx, c) in acc {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    /// Applies `Δ` to leg `leg` of an element of `H^{⊗k}`.
    pub fn delta_leg(&self, k: usize, a: &[Scalar], leg: usize) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n.pow(k as u32 + 1)];
        for (ia, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let d = digits(n, k, ia);
            for (p, q, c) in self.comult_terms(d[leg]) {
                let mut l = d[..leg].to_vec();
                l.push(*p);
                l.push(*q);
                l.extend_from_slice(&d[leg + 1..]);
                out[flat(n, &l)] += &(x * c);
            }
        }
        out
    }

    /// Applies `ε` to leg `leg` of an element of `H^{⊗k}`.
    pub fn eps_leg(&self, k: usize, a: &[Scalar], leg: usize) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n.pow(k as u32 - 1)];
        for (ia, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let d = digits(n, k, ia);
            let e = &self.counit[d[leg]];
            if e.is_zero() {
                continue;
            }
            let mut l = d[..leg].to_vec();
            l.extend_from_slice(&d[leg + 1..]);
            out[flat(n, &l)] += &(x * e);
        }
        out
    }

    /// Places a two-leg element `a` on legs `(p, q)` of `H^{⊗k}`, with `1`
    /// elsewhere. `p > q` is allowed and flips the legs.
    pub fn embed2(&self, k: usize, a: &[Scalar], p: usize, q: usize) -> Vector {
        let n = self.dim();
        let ones: Vec<(usize, Scalar)> = self
            .unit
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        let mut out = vec![self.field.zero(); n.pow(k as u32)];
        for (ia, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let (i, j) = (ia / n, ia % n);
            let mut acc: Vec<(usize, Scalar)> = vec![(0, x.clone())];
            for l in 0..k {
                let choices: Vec<(usize, Scalar)> = if l == p {
                    vec![(i, self.field.one())]
                } else if l == q {
                    vec![(j, self.field.one())]
                } else {
                    ones.clone()
                };
                acc = acc
                    .iter()
                    .flat_map(|(idx, c)| choices.iter().map(move |(t, d)| (idx * n + t, c * d)))
                    .collect();
            }
            for (idx, c) in acc {
                out[idx] += &c;
            }
        }
        out
    }

    /// The flip `τ(a⊗b) = b⊗a` on `H⊗H`.
    pub fn flip2(&self, a: &[Scalar]) -> Vector {
        let n = self.dim();
        (0..n * n).map(|ij| a[(ij % n) * n + ij / n].clone()).collect()
    }

    /// Inverse in the algebra `H^{⊗k}`, by a linear solve then a two-sided check.
    pub fn tensor_inverse(&self, k: usize, a: &[Scalar]) -> Option<Vector> {
        let n = self.dim();
        let len = n.pow(k as u32);
        let cols: Vec<Vector> = (0..len)
            .map(|j| {
                let mut e = vec![self.field.zero(); len];
                e[j] = self.field.one();
                self.tensor_mul(k, a, &e)
            })
            .collect();
        let left = Matrix::from_cols(self.field, len, &cols);
        let one = self.tensor_one(k);
        let x = left.solve(&Matrix::column_vector(self.field, &one)).ok()??.col(0);
        (self.tensor_mul(k, &x, a) == one).then_some(x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul_terms(i, j) == self.mul_terms(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let d = self.delta(&self.basis(i));
            self.flip2(&d) == d
        })
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub(crate) fn flat(n: usize, legs: &[usize]) -> usize {
    legs.iter().fold(0, |acc, l| acc * n + l)
}

pub(crate) fn digits(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for slot in d.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    d
}

/// Tensor product of vectors, row-major.
pub(crate) fn outer(vs: &[Vector]) -> Vector {
    let mut acc = vec![vs[0][0].field().one()];
    for v in vs {
        let mut next = Vec::with_capacity(acc.len() * v.len());
        for a in &acc {
            for b in v {
                next.push(a * b);
            }
        }
        acc = next;
    }
    acc
}

/// Checks every Hopf algebra axiom on basis tuples.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> CheckReport {
    let n = h.dim();
    let mut r = CheckReport::new();
    let e = |i| h.basis(i);

    r.run("associativity", || {
        expect_none(
            triples(n).find(|&(i, j, k)| {
                h.mul(&h.mul(&e(i), &e(j)), &e(k)) != h.mul(&e(i), &h.mul(&e(j), &e(k)))
            })
            .map(|(i, j, k)| vec![i, j, k]),
            "(xy)z = x(yz)",
        )
    });
    r.run("unit", || {
        expect_none(
            (0..n).find(|&i| h.mul(&h.unit, &e(i)) != e(i) || h.mul(&e(i), &h.unit) != e(i)).map(|i| vec![i]),
            "1x = x = x1",
        )
    });
    r.run("coassociativity", || {
        expect_none(
            (0..n)
                .find(|&i| {
                    let d = h.delta(&e(i));
                    h.delta_leg(2, &d, 0) != h.delta_leg(2, &d, 1)
                })
                .map(|i| vec![i]),
            "(Δ⊗id)Δ = (id⊗Δ)Δ",
        )
    });
    r.run("counit", || {
        expect_none(
            (0..n)
                .find(|&i| {
                    let d = h.delta(&e(i));
                    h.eps_leg(2, &d, 0) != e(i) || h.eps_leg(2, &d, 1) != e(i)
                })
                .map(|i| vec![i]),
            "(ε⊗id)Δ = id = (id⊗ε)Δ",
        )
    });
    r.run("comult_multiplicative", || {
        let unit_ok = h.delta(&h.unit) == h.tensor_one(2);
        if !unit_ok {
            return Err(crate::report::Failure::msg("Δ(1) ≠ 1⊗1"));
        }
        expect_none(
            pairs(n)
                .find(|&(i, j)| {
                    h.delta(&h.mul(&e(i), &e(j))) != h.tensor_mul(2, &h.delta(&e(i)), &h.delta(&e(j)))
                })
                .map(|(i, j)| vec![i, j]),
            "Δ(xy) = Δ(x)Δ(y)",
        )
    });
    r.run("counit_multiplicative", || {
        if !h.eps(&h.unit).is_one() {
            return Err(crate::report::Failure::msg("ε(1) ≠ 1"));
        }
        expect_none(
            pairs(n)
                .find(|&(i, j)| h.eps(&h.mul(&e(i), &e(j))) != &h.counit[i] * &h.counit[j])
                .map(|(i, j)| vec![i, j]),
            "ε(xy) = ε(x)ε(y)",
        )
    });
    r.run("antipode", || {
        expect_none(
            (0..n)
                .find(|&i| {
                    let mut left = h.zero();
                    let mut right = h.zero();
                    for (a, b, c) in h.comult_terms(i) {
                        add_scaled(&mut left, c, &h.mul(&h.s(&e(*a)), &e(*b)));
                        add_scaled(&mut right, c, &h.mul(&e(*a), &h.s(&e(*b))));
                    }
                    let target: Vector = h.unit.iter().map(|u| u * &h.counit[i]).collect();
                    left != target || right != target
                })
                .map(|i| vec![i]),
            "S(x₁)x₂ = ε(x)1 = x₁S(x₂)",
        )
    });
    r.run("antipode_inverse", || {
        let ok = h.antipode.try_mul(&h.antipode_inv).map(|m| m.is_identity()) == Ok(true)
            && h.antipode_inv.try_mul(&h.antipode).map(|m| m.is_identity()) == Ok(true);
        crate::report::expect(ok, "S∘S⁻¹ = id")
    });
    r
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

/// The dual Hopf algebra on the dual basis.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let f = h.field();
    let mut mult = Tensor::zeros(f, &[n, n, n]);
    let mut comult = Tensor::zeros(f, &[n, n, n]);
    for (i, j, k) in triples(n) {
        mult.set(&[i, j, k], h.comult.get(&[k, i, j]).clone());
        comult.set(&[k, i, j], h.mult.get(&[i, j, k]).clone());
    }
    let names = h.names.iter().map(|s| format!("{s}*")).collect();
    HopfAlgebra::new(
        f,
        names,
        mult,
        h.counit.clone(),
        comult,
        h.unit.clone(),
        h.antipode.transpose(),
        Some(h.antipode_inv.transpose()),
    )
    .expect("dual of a valid Hopf algebra is well formed")
}

/// `H^op`, `H^cop` or `H^{op,cop}`.
pub fn op_cop(h: &HopfAlgebra, flip_mult: bool, flip_comult: bool) -> HopfAlgebra {
    let n = h.dim();
    let f = h.field();
    let mut mult = h.mult.clone();
    let mut comult = h.comult.clone();
    for (i, j, k) in triples(n) {
        if flip_mult {
            mult.set(&[i, j, k], h.mult.get(&[j, i, k]).clone());
        }
        if flip_comult {
            comult.set(&[i, j, k], h.comult.get(&[i, k, j]).clone());
        }
    }
    let (s, s_inv) = if flip_mult != flip_comult {
        (h.antipode_inv.clone(), h.antipode.clone())
    } else {
        (h.antipode.clone(), h.antipode_inv.clone())
    };
    HopfAlgebra::new(f, h.names.clone(), mult, h.unit.clone(), comult, h.counit.clone(), s, Some(s_inv))
        .expect("op/cop of a valid Hopf algebra is well formed")
}

/// Rebuilds `h` with a different multiplication (used by deformations).
pub(crate) fn with_mult(h: &HopfAlgebra, mult: Tensor, s: Matrix, s_inv: Matrix) -> Result<HopfAlgebra> {
    HopfAlgebra::new(
        h.field,
        h.names.clone(),
        mult,
        h.unit.clone(),
        h.comult.clone(),
        h.counit.clone(),
        s,
        Some(s_inv),
    )
}

/// Rebuilds `h` with a different comultiplication.
pub(crate) fn with_comult(h: &HopfAlgebra, comult: Tensor, s: Matrix, s_inv: Matrix) -> Result<HopfAlgebra> {
    HopfAlgebra::new(
        h.field,
        h.names.clone(),
        h.mult.clone(),
        h.unit.clone(),
        comult,
        h.counit.clone(),
        s,
        Some(s_inv),
    )
}
