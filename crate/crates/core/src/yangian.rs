//! Finite-dimensional modules over the Yangian Y(gl_n).
//!
//! A module stores the generator matrices `t_ab^(d)` for `d < D` together with
//! a monic recurrence `m(u) = Σ m_k u^k` of degree `D` satisfying
//! `Σ_k m_k t_ab^(j+k) = 0` for every `j ≥ 0`. Equivalently
//! `t_ab(u) = δ_ab + N_ab(u) / m(u)` with `deg N_ab < D`, so every generator
//! and every generating series is determined exactly by the stored data.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{compositions, segment_lengths, Partition, Permutation, Weight};
use crate::error::{Error, Result};
use crate::exactnum::{integer_root_multiset, rational_roots, ratfun_ratio_solve};
use crate::linalg::{is_zero_vec, largest_invariant_subspace, quotient_action, restrict_action, spin, Subspace};
use crate::poly::Poly;
use crate::scalar::{as_i64, rat, Rational};
use crate::spectral::{joint_eigenspaces, minimal_polynomial};
use crate::{Matrix, RatFun, UniPoly};

/// Bound on module dimension for the composition-series oracle.
pub const ORACLE_DIM_BOUND: usize = 64;

const MEATAXE_ATTEMPTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct YangianModule {
    pub n: usize,
    pub dim: usize,
    pub degree_bound: usize,
    #[serde(with = "crate::json::poly")]
    pub recurrence: UniPoly,
    #[serde(with = "crate::json::matrices")]
    t: Vec<Matrix>,
}

impl YangianModule {
    /// `t` lists `t_ab^(d)` at index `((a-1) n + (b-1)) D + d` for `d < D`.
    pub fn new(n: usize, dim: usize, recurrence: UniPoly, t: Vec<Matrix>) -> Result<Self> {
        let m = YangianModule { n, dim, degree_bound: recurrence.degree().unwrap_or(0), recurrence, t };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidModule("n must be positive".into()));
        }
        if !self.recurrence.is_monic() {
            return Err(Error::InvalidModule("recurrence is not monic".into()));
        }
        if self.recurrence.degree() != Some(self.degree_bound) {
            return Err(Error::InvalidModule("degree bound differs from the recurrence degree".into()));
        }
        if self.t.len() != self.n * self.n * self.degree_bound {
            return Err(Error::InvalidModule(format!("expected {} generator matrices, found {}", self.n * self.n * self.degree_bound, self.t.len())));
        }
        if self.t.iter().any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return Err(Error::InvalidModule(format!("generator matrices must be {0}x{0}", self.dim)));
        }
        Ok(())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let m: YangianModule = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// The zero-dimensional module.
    pub fn zero(n: usize) -> Self {
        YangianModule { n, dim: 0, degree_bound: 0, recurrence: UniPoly::one(), t: Vec::new() }
    }

    /// The one-dimensional module with `t_ab(u) = δ_ab`.
    pub fn trivial(n: usize) -> Self {
        YangianModule { n, dim: 1, degree_bound: 0, recurrence: UniPoly::one(), t: Vec::new() }
    }

    fn index(&self, a: usize, b: usize, d: usize) -> usize {
        assert!((1..=self.n).contains(&a) && (1..=self.n).contains(&b) && d < self.degree_bound);
        ((a - 1) * self.n + (b - 1)) * self.degree_bound + d
    }

    /// Stored generator `t_ab^(d)`, `d < D`.
    pub fn stored(&self, a: usize, b: usize, d: usize) -> &Matrix {
        &self.t[self.index(a, b, d)]
    }

    pub fn stored_mut(&mut self, a: usize, b: usize, d: usize) -> &mut Matrix {
        let i = self.index(a, b, d);
        &mut self.t[i]
    }

    /// `t_ab^(0) .. t_ab^(count-1)`, extending the stored levels by the recurrence.
    pub fn levels(&self, a: usize, b: usize, count: usize) -> Vec<Matrix> {
        let d = self.degree_bound;
        let mut out: Vec<Matrix> = (0..d.min(count)).map(|k| self.stored(a, b, k).clone()).collect();
        let m = self.recurrence.coeffs();
        while out.len() < count {
            let j = out.len() - d.min(out.len());
            let mut next = Matrix::zeros(self.dim, self.dim);
            if d > 0 {
                for k in 0..d {
                    if !m[k].is_zero() {
                        next = &next - &out[j + k].scale(&m[k]);
                    }
                }
            }
            out.push(next);
        }
        out
    }

    pub fn level(&self, a: usize, b: usize, d: usize) -> Matrix {
        if d < self.degree_bound {
            self.stored(a, b, d).clone()
        } else {
            self.levels(a, b, d + 1).pop().expect("nonempty")
        }
    }

    /// Table `[(a-1) n + (b-1)][d]` of generators for `d < count`.
    pub fn table(&self, count: usize) -> Vec<Vec<Matrix>> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for a in 1..=self.n {
            for b in 1..=self.n {
                out.push(self.levels(a, b, count));
            }
        }
        out
    }

    /// All stored generators; they generate the action of the whole algebra.
    pub fn generators(&self) -> Vec<Matrix> {
        self.t.clone()
    }

    /// The commuting family `t_ii^(d)`, `d < D`, ordered by `i` then `d`.
    pub fn cartan(&self) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for d in 0..self.degree_bound {
                out.push(self.stored(i, i, d).clone());
            }
        }
        out
    }

    /// The gl_n generators `E_ab = t_ab^(0)`.
    pub fn gl(&self, a: usize, b: usize) -> Matrix {
        self.level(a, b, 0)
    }

    /// Coefficients of `N_ab(u) = m(u) (t_ab(u) - δ_ab)`, ascending.
    pub fn numerator(&self, a: usize, b: usize) -> Vec<Matrix> {
        let d = self.degree_bound;
        let m = self.recurrence.coeffs();
        (0..d)
            .map(|j| {
                let mut acc = Matrix::zeros(self.dim, self.dim);
                for k in (j + 1)..=d {
                    if !m[k].is_zero() {
                        acc = &acc + &self.stored(a, b, k - j - 1).scale(&m[k]);
                    }
                }
                acc
            })
            .collect()
    }

    fn map_generators(&self, dim: usize, f: impl Fn(&[Matrix]) -> Vec<Matrix>) -> Self {
        YangianModule { n: self.n, dim, degree_bound: self.degree_bound, recurrence: self.recurrence.clone(), t: f(&self.t) }
    }

    /// Action on an invariant subspace, in its row-echelon basis.
    pub fn submodule(&self, sub: &Subspace<Rational>) -> Self {
        self.map_generators(sub.dim(), |g| restrict_action(g, sub))
    }

    /// Action on the quotient by an invariant subspace, in free coordinates.
    pub fn quotient(&self, sub: &Subspace<Rational>) -> Self {
        self.map_generators(self.dim - sub.dim(), |g| quotient_action(g, sub))
    }

    /// Re-expresses the module with a larger recurrence `q`, a multiple of the current one.
    pub fn with_recurrence(&self, q: &UniPoly) -> Result<Self> {
        let q = q.monic();
        if !q.div_rem(&self.recurrence).1.is_zero() {
            return Err(Error::InvalidModule("new recurrence is not a multiple of the old one".into()));
        }
        let d = q.degree().unwrap_or(0);
        let mut t = Vec::with_capacity(self.n * self.n * d);
        for a in 1..=self.n {
            for b in 1..=self.n {
                t.extend(self.levels(a, b, d));
            }
        }
        Ok(YangianModule { n: self.n, dim: self.dim, degree_bound: d, recurrence: q, t })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let g = self.recurrence.gcd(&other.recurrence);
        let l = (&self.recurrence.div_rem(&g).0 * &other.recurrence).monic();
        let (x, y) = (self.with_recurrence(&l)?, other.with_recurrence(&l)?);
        let t = x.t.iter().zip(&y.t).map(|(p, q)| p.direct_sum(q)).collect();
        Ok(YangianModule { n: self.n, dim: self.dim + other.dim, degree_bound: x.degree_bound, recurrence: l, t })
    }
}

fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `E_ab` on `Λ^k C^n` in the basis of increasing index sets.
pub fn wedge_gl(n: usize, k: usize, a: usize, b: usize) -> Matrix {
    let basis = wedge_basis(n, k);
    let pos: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (col, s) in basis.iter().enumerate() {
        if !s.contains(&b) || (a != b && s.contains(&a)) {
            continue;
        }
        let between = s.iter().filter(|&&x| x != b && x > a.min(b) && x < a.max(b)).count();
        let mut t: Vec<usize> = s.iter().map(|&x| if x == b { a } else { x }).collect();
        t.sort_unstable();
        m.set(pos[&t], col, if between % 2 == 0 { rat(1) } else { rat(-1) });
    }
    m
}

/// The evaluation module `ev_a(Λ^k C^n)` with `t_ab(u) = δ_ab + E_ab / (u - a)`.
pub fn evaluation_module(k: usize, a: &Rational, n: usize) -> Result<YangianModule> {
    if n == 0 || k > n {
        return Err(Error::BadFundamentalIndex { k, n });
    }
    if k == 0 {
        return Ok(YangianModule::trivial(n));
    }
    let mut t = Vec::with_capacity(n * n);
    for p in 1..=n {
        for q in 1..=n {
            t.push(wedge_gl(n, k, p, q));
        }
    }
    let dim = t[0].rows();
    YangianModule::new(n, dim, Poly::linear(a), t)
}

/// Tensor product through the coproduct `t_ij(u) ↦ Σ_a t_ia(u) ⊗ t_aj(u)`.
pub fn tensor(x: &YangianModule, y: &YangianModule) -> Result<YangianModule> {
    if x.n != y.n {
        return Err(Error::RankMismatch(x.n, y.n));
    }
    let n = x.n;
    let recurrence = &x.recurrence * &y.recurrence;
    let d = recurrence.degree().unwrap_or(0);
    let (tx, ty) = (x.table(d), y.table(d));
    let (ix, iy) = (Matrix::identity(x.dim), Matrix::identity(y.dim));
    let at = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut t = Vec::with_capacity(n * n * d);
    for i in 1..=n {
        for j in 1..=n {
            for level in 0..d {
                let mut acc = &tx[at(i, j)][level].kron(&iy) + &ix.kron(&ty[at(i, j)][level]);
                for p in 0..level {
                    let q = level - 1 - p;
                    for a in 1..=n {
                        let (l, r) = (&tx[at(i, a)][p], &ty[at(a, j)][q]);
                        if !l.is_zero() && !r.is_zero() {
                            acc = &acc + &l.kron(r);
                        }
                    }
                }
                t.push(acc);
            }
        }
    }
    YangianModule::new(n, x.dim * y.dim, recurrence, t)
}

/// The standard tensor module `ev_{μ_1}(Λ^{ℓ_1}) ⊗ ... ⊗ ev_{μ_r}(Λ^{ℓ_r})`, `ℓ = λ - μ`.
pub fn standard_tensor_module(lambda: &Weight, mu: &Weight, n: usize) -> Result<YangianModule> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let lengths = segment_lengths(lambda, mu).filter(|l| l.iter().all(|&x| x <= n));
    let Some(lengths) = lengths else {
        return Err(Error::NotAdmissible(format!("{mu} for {lambda} and n = {n}")));
    };
    let mut out = YangianModule::trivial(n);
    for (l, m) in lengths.iter().zip(mu.entries()) {
        if *l > 0 {
            out = tensor(&out, &evaluation_module(*l, m, n)?)?;
        }
    }
    Ok(out)
}

/// `Sing(Y) = ∩ ker t_ij^(d)` over `i < j` and `d < D`; complete by the recurrence.
pub fn singular_space(y: &YangianModule) -> Subspace<Rational> {
    let mut rows = Subspace::zero(y.dim);
    for i in 1..=y.n {
        for j in (i + 1)..=y.n {
            for d in 0..y.degree_bound {
                for r in y.stored(i, j, d).row_vecs() {
                    if !is_zero_vec(&r) {
                        rows.insert(r);
                    }
                }
            }
        }
    }
    rows.annihilator()
}

/// Eigenvalue series `f(u) = 1 + Σ c_d u^{-d-1}` of `t_ii(u)` from the
/// eigenvalues `c_0 .. c_{D-1}` of the stored levels.
fn eigen_series(m: &UniPoly, values: &[Rational]) -> RatFun {
    let d = values.len();
    let mc = m.coeffs();
    let num: Vec<Rational> = (0..d).map(|j| ((j + 1)..=d).map(|k| &mc[k] * &values[k - j - 1]).sum()).collect();
    RatFun::new(m + &Poly::new(num), m.clone())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HighestWeightData {
    /// A basis vector of the joint eigenspace.
    #[serde(with = "crate::scalar::serde_rational_vec")]
    pub vector: Vec<Rational>,
    /// Dimension of the joint eigenspace inside `Sing(Y)`.
    pub multiplicity: usize,
    /// Eigenvalues of `t_ii(u)`.
    #[serde(with = "crate::json::ratfuns")]
    pub eigen: Vec<RatFun>,
    /// `ζ_i(u)`, the eigenvalue of `t_ii(u - i)`.
    #[serde(with = "crate::json::ratfuns")]
    pub zeta: Vec<RatFun>,
    /// Whether the vector generates the module.
    pub generates: bool,
}

/// Joint eigenvectors of the `t_ii` family on the singular space.
pub fn highest_weight_data(y: &YangianModule) -> Result<Vec<HighestWeightData>> {
    if y.dim == 0 {
        return Ok(Vec::new());
    }
    let sing = singular_space(y);
    if sing.is_zero() {
        return Ok(Vec::new());
    }
    let gens = y.generators();
    let d = y.degree_bound;
    let mut out = Vec::new();
    for piece in joint_eigenspaces(&y.cartan(), &sing)? {
        let eigen: Vec<RatFun> = (0..y.n).map(|i| eigen_series(&y.recurrence, &piece.values[i * d..(i + 1) * d])).collect();
        let zeta = eigen.iter().enumerate().map(|(i, f)| f.shift(&rat(-(i as i64 + 1)))).collect();
        let vector = piece.space.basis()[0].clone();
        let generates = spin(&gens, [vector.clone()], y.dim).is_full();
        out.push(HighestWeightData { vector, multiplicity: piece.space.dim(), eigen, zeta, generates });
    }
    Ok(out)
}

/// Drinfeld polynomials `Q_1 .. Q_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DrinfeldPolys {
    pub q: Vec<UniPoly>,
}

impl DrinfeldPolys {
    pub fn trivial(n: usize) -> Self {
        DrinfeldPolys { q: vec![UniPoly::one(); n.saturating_sub(1)] }
    }

    /// Integer roots with multiplicities of each `Q_k`, when all are integral.
    pub fn roots(&self) -> Option<Vec<Vec<(i64, usize)>>> {
        self.q.iter().map(integer_root_multiset).collect()
    }

    /// Total degree `Σ deg Q_k`.
    pub fn degree(&self) -> usize {
        self.q.iter().map(|p| p.degree().unwrap_or(0)).sum()
    }
}

impl Ord for DrinfeldPolys {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |d: &Self| d.q.iter().map(|p| (p.degree(), p.coeffs().to_vec())).collect::<Vec<_>>();
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for DrinfeldPolys {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for DrinfeldPolys {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.q.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

#[derive(Serialize, Deserialize)]
struct DrinfeldRepr {
    #[serde(with = "crate::json::polys")]
    q: Vec<UniPoly>,
    #[serde(default, skip_deserializing)]
    roots: Option<Vec<Vec<(i64, usize)>>>,
}

impl Serialize for DrinfeldPolys {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DrinfeldRepr { q: self.q.clone(), roots: self.roots() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DrinfeldPolys {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DrinfeldRepr::deserialize(d)?;
        if r.q.iter().any(|p| !p.is_monic()) {
            return Err(serde::de::Error::custom("Drinfeld polynomials must be monic"));
        }
        Ok(DrinfeldPolys { q: r.q })
    }
}

/// `Q_k` from `ζ_k(u) / ζ_{k+1}(u+1) = Q_k(u+1) / Q_k(u)`.
pub fn drinfeld_polys(hw: &HighestWeightData) -> Result<DrinfeldPolys> {
    let n = hw.zeta.len();
    let q = (0..n.saturating_sub(1))
        .map(|k| {
            let next = hw.zeta[k + 1].shift(&rat(1));
            ratfun_ratio_solve(&(&hw.zeta[k] / &next))
        })
        .collect::<Result<_>>()?;
    Ok(DrinfeldPolys { q })
}

/// Closed form `Q_k(u) = Π_{i : λ_i - μ_i = k} (u - λ_i)` for standard parameters.
pub fn drinfeld_closed_form(lambda: &Weight, mu: &Weight, n: usize) -> Result<DrinfeldPolys> {
    let lengths = segment_lengths(lambda, mu).ok_or_else(|| Error::NotAdmissible(format!("{mu} for {lambda}")))?;
    let q = (1..n)
        .map(|k| {
            let roots: Vec<Rational> = lengths.iter().zip(lambda.entries()).filter(|(l, _)| **l == k).map(|(_, x)| x.clone()).collect();
            Poly::from_roots(&roots)
        })
        .collect();
    Ok(DrinfeldPolys { q })
}

/// Predicted `ζ_i(u) = Π_{j : ℓ_j ≥ i} (1 + 1/(u - i - μ_j))` of `M(λ, μ)`.
pub fn standard_zeta(lambda: &Weight, mu: &Weight, n: usize) -> Result<Vec<RatFun>> {
    let lengths = segment_lengths(lambda, mu).ok_or_else(|| Error::NotAdmissible(format!("{mu} for {lambda}")))?;
    Ok((1..=n)
        .map(|i| {
            lengths.iter().zip(mu.entries()).filter(|(l, _)| **l >= i).fold(RatFun::one(), |acc, (_, m)| {
                &acc * &RatFun::one_plus_pole(&(m + rat(i as i64)))
            })
        })
        .collect())
}

type MatPoly = Vec<Matrix>;

fn matpoly_mul(p: &MatPoly, q: &MatPoly, dim: usize) -> MatPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Matrix::zeros(dim, dim); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            if !b.is_zero() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
    }
    out
}

/// `P(u + c)`.
fn matpoly_shift(p: &MatPoly, c: &Rational, dim: usize) -> MatPoly {
    let mut out = vec![Matrix::zeros(dim, dim); p.len()];
    for (j, a) in p.iter().enumerate() {
        let mut binom = rat(1);
        for i in (0..=j).rev() {
            // coefficient of u^i in (u + c)^j is binom(j, i) c^(j - i)
            let k = j - i;
            let coeff = &binom * num_traits::pow::pow(c.clone(), k);
            if !coeff.is_zero() {
                out[i] = &out[i] + &a.scale(&coeff);
            }
            binom = binom * rat((j - k) as i64) / rat(k as i64 + 1);
        }
    }
    out
}

/// Scalar by which the quantum determinant
/// `Σ_w sgn(w) t_{w(1),1}(u) t_{w(2),2}(u-1) ... t_{w(n),n}(u-n+1)` acts.
pub fn qdet_scalar(y: &YangianModule, hw: &HighestWeightData) -> Result<RatFun> {
    let (n, dim) = (y.n, y.dim);
    let m = &y.recurrence;
    let entry = |a: usize, b: usize| -> MatPoly {
        let mut p: MatPoly = y.numerator(a, b);
        if a == b {
            p.resize(y.degree_bound + 1, Matrix::zeros(dim, dim));
            for (k, c) in m.coeffs().iter().enumerate() {
                p[k] = &p[k] + &Matrix::scalar(dim, c);
            }
        }
        p
    };
    let shifted: Vec<Vec<MatPoly>> = (1..=n).map(|b| (1..=n).map(|a| matpoly_shift(&entry(a, b), &rat(1 - b as i64), dim)).collect()).collect();
    let mut total: MatPoly = Vec::new();
    for w in Permutation::all(n)? {
        let mut prod: MatPoly = vec![Matrix::identity(dim)];
        for k in 1..=n {
            prod = matpoly_mul(&prod, &shifted[k - 1][w.apply(k - 1)], dim);
            if prod.is_empty() {
                break;
            }
        }
        if total.len() < prod.len() {
            total.resize(prod.len(), Matrix::zeros(dim, dim));
        }
        for (t, p) in total.iter_mut().zip(&prod) {
            *t = if w.sign() > 0 { &*t + p } else { &*t - p };
        }
    }
    let mut coeffs = Vec::with_capacity(total.len());
    for c in &total {
        let s = if dim == 0 { rat(0) } else { c.get(0, 0).clone() };
        if *c != Matrix::scalar(dim, &s) {
            return Err(Error::NotScalar);
        }
        coeffs.push(s);
    }
    let q = Poly::new(coeffs);
    let den = (1..=n).fold(UniPoly::one(), |acc, k| &acc * &m.shift(&rat(1 - k as i64)));
    let value = RatFun::new(q, den);
    let expected_on_vector = qdet_expected(hw);
    if hw.vector.len() != dim || value != expected_on_vector {
        return Err(Error::NotScalar);
    }
    Ok(value)
}

/// `Π_k f_k(u - k + 1)` with `f_k` the eigenvalue of `t_kk(u)`; in terms of the
/// shifted components this is `Π_k ζ_k(u + 1)`.
pub fn qdet_expected(hw: &HighestWeightData) -> RatFun {
    hw.eigen.iter().enumerate().fold(RatFun::one(), |acc, (k, f)| &acc * &f.shift(&rat(-(k as i64))))
}

/// gl_n character in the Schur basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlnCharacter {
    pub n: usize,
    #[serde(with = "crate::json::pairs")]
    pub schur_mult: BTreeMap<Partition, usize>,
}

impl GlnCharacter {
    pub fn dim(&self) -> u64 {
        self.schur_mult.iter().map(|(p, m)| *m as u64 * weyl_dimension(p, self.n)).sum()
    }

    pub fn get(&self, p: &Partition) -> usize {
        self.schur_mult.get(p).copied().unwrap_or(0)
    }

    /// Converts a weight multiset into Schur multiplicities by peeling leading weights.
    pub fn from_weights(n: usize, weights: &BTreeMap<Vec<i64>, i64>) -> Result<Self> {
        let mut rest: BTreeMap<Vec<i64>, i64> = weights.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (k.clone(), *v)).collect();
        let mut schur_mult = BTreeMap::new();
        while let Some((top, &m)) = rest.iter().next_back() {
            let top = top.clone();
            if m < 0 || top.windows(2).any(|w| w[0] < w[1]) || top.iter().any(|&x| x < 0) || top.len() != n {
                return Err(Error::NegativeMultiplicity(top));
            }
            let shape = Partition::new(top.iter().map(|&x| x as usize).collect()).expect("dominant");
            for (beta, k) in weights_of(&shape, n) {
                let key: Vec<i64> = beta.iter().map(|&x| x as i64).collect();
                let slot = rest.entry(key.clone()).or_insert(0);
                *slot -= m * k as i64;
                if *slot == 0 {
                    rest.remove(&key);
                }
            }
            schur_mult.insert(shape, m as usize);
        }
        Ok(GlnCharacter { n, schur_mult })
    }
}

/// `dim L(λ) = Π_{i<j} (λ_i - λ_j + j - i) / (j - i)` for gl_n.
pub fn weyl_dimension(p: &Partition, n: usize) -> u64 {
    if p.len() > n {
        return 0;
    }
    let l: Vec<i64> = (0..n).map(|i| p.part(i) as i64).collect();
    let mut v = rat(1);
    for i in 0..n {
        for j in (i + 1)..n {
            v = v * rat(l[i] - l[j] + (j - i) as i64) / rat((j - i) as i64);
        }
    }
    as_i64(&v).expect("integral") as u64
}

/// Kostka number `K_{λ,β}`: semistandard tableaux of shape λ and content β.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let Some((&last, init)) = content.split_last() else {
        return u64::from(shape.iter().all(|&x| x == 0));
    };
    let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    if shape.len() > content.len() || shape.iter().sum::<usize>() != content.iter().sum::<usize>() {
        return 0;
    }
    // remove a horizontal strip of size `last`: λ_{i+1} ≤ ν_i ≤ λ_i
    let mut total = 0;
    let mut nu = vec![0usize; shape.len()];
    fn strips(shape: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == shape.len() {
            if left == 0 {
                f(nu);
            }
            return;
        }
        let lower = shape.get(i + 1).copied().unwrap_or(0);
        for take in 0..=(shape[i] - lower).min(left) {
            nu[i] = shape[i] - take;
            strips(shape, i + 1, left - take, nu, f);
        }
    }
    strips(&shape, 0, last, &mut nu, &mut |nu| total += kostka(nu, init));
    total
}

/// Weights of `L(λ)` for gl_n with their multiplicities.
pub fn weights_of(shape: &Partition, n: usize) -> Vec<(Vec<usize>, u64)> {
    if shape.len() > n {
        return Vec::new();
    }
    compositions(shape.size(), n, shape.size())
        .into_iter()
        .filter_map(|beta| {
            let k = kostka(shape.parts(), &beta);
            (k > 0).then_some((beta, k))
        })
        .collect()
}

/// gl_n weight spaces from the joint eigenspaces of `t_ii^(0)`.
pub fn gl_weights(y: &YangianModule) -> Result<BTreeMap<Vec<i64>, i64>> {
    let mut out = BTreeMap::new();
    if y.dim == 0 {
        return Ok(out);
    }
    let ops: Vec<Matrix> = (1..=y.n).map(|i| y.gl(i, i)).collect();
    let pieces = joint_eigenspaces(&ops, &Subspace::full(y.dim))?;
    let mut total = 0;
    for p in pieces {
        let w: Option<Vec<i64>> = p.values.iter().map(as_i64).collect();
        let w = w.ok_or_else(|| Error::InvalidModule("non-integral gl_n weight".into()))?;
        total += p.space.dim();
        *out.entry(w).or_insert(0) += p.space.dim() as i64;
    }
    if total != y.dim {
        return Err(Error::InvalidModule("gl_n action is not diagonalizable over the rationals".into()));
    }
    Ok(out)
}

pub fn gln_character(y: &YangianModule) -> Result<GlnCharacter> {
    GlnCharacter::from_weights(y.n, &gl_weights(y)?)
}

/// One simple constituent of a composition series.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompositionFactor {
    pub drinfeld: DrinfeldPolys,
    pub dim: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompositionSeries {
    pub factors: Vec<CompositionFactor>,
    pub seed: u64,
    /// Simple pieces certified by the singular-line criterion.
    pub certified_by_singular_line: usize,
    /// Simple pieces certified by the meataxe dual-spin criterion.
    pub certified_by_meataxe: usize,
}

impl CompositionSeries {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim * f.multiplicity).sum()
    }

    /// Multiset `{Drinfeld polynomials: multiplicity}`.
    pub fn by_drinfeld(&self) -> BTreeMap<DrinfeldPolys, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.drinfeld.clone()).or_insert(0) += f.multiplicity;
        }
        out
    }
}

enum Split {
    Sub(Subspace<Rational>),
    Simple { by_meataxe: bool },
}

fn transposes(gens: &[Matrix]) -> Vec<Matrix> {
    gens.iter().map(Matrix::transpose).collect()
}

fn find_submodule(y: &YangianModule, rng: &mut ChaCha8Rng, seed: u64) -> Result<Split> {
    let gens = y.generators();
    let sing = singular_space(y);
    let pieces = joint_eigenspaces(&y.cartan(), &sing)?;
    for piece in &pieces {
        let s = spin(&gens, [piece.space.basis()[0].clone()], y.dim);
        if !s.is_full() {
            return Ok(Split::Sub(s));
        }
    }
    if sing.dim() == 1 && pieces.len() == 1 {
        return Ok(Split::Simple { by_meataxe: false });
    }
    meataxe(y, &gens, rng, seed)
}

/// Norton's criterion with `θ = Σ c_i E_ii - c` for random `c_i` and an eigenvalue `c`.
fn meataxe(y: &YangianModule, gens: &[Matrix], rng: &mut ChaCha8Rng, seed: u64) -> Result<Split> {
    let cartan0: Vec<Matrix> = (1..=y.n).map(|i| y.gl(i, i)).collect();
    for _ in 0..MEATAXE_ATTEMPTS {
        let mut theta = Matrix::zeros(y.dim, y.dim);
        for e in &cartan0 {
            theta = &theta + &e.scale(&rat(rng.gen_range(1..=10_000)));
        }
        let (roots, _) = rational_roots(&minimal_polynomial(&theta));
        let kernels: Vec<(Matrix, Vec<Vec<Rational>>)> = roots
            .iter()
            .map(|(c, _)| {
                let shifted = &theta - &Matrix::scalar(y.dim, c);
                let ker = shifted.nullspace();
                (shifted, ker)
            })
            .collect();
        let Some((shifted, ker)) = kernels.into_iter().min_by_key(|(_, k)| k.len()) else {
            continue;
        };
        for v in &ker {
            let s = spin(gens, [v.clone()], y.dim);
            if !s.is_full() {
                return Ok(Split::Sub(s));
            }
        }
        if ker.len() == 1 {
            let w = shifted.transpose().nullspace().into_iter().next().expect("square matrix with a kernel");
            let dual = spin(&transposes(gens), [w], y.dim);
            if dual.is_full() {
                return Ok(Split::Simple { by_meataxe: true });
            }
            return Ok(Split::Sub(dual.annihilator()));
        }
    }
    Err(Error::InconclusiveIrreducibility { attempts: MEATAXE_ATTEMPTS, seed })
}

fn label_simple(y: &YangianModule) -> Result<DrinfeldPolys> {
    let hws = highest_weight_data(y)?;
    match hws.as_slice() {
        [hw] if hw.multiplicity == 1 => drinfeld_polys(hw),
        _ => Err(Error::InvalidModule("simple constituent without a unique singular line".into())),
    }
}

/// Jordan-Hölder multiset labeled by Drinfeld polynomials and dimension.
pub fn composition_factors(y: &YangianModule, seed: u64) -> Result<CompositionSeries> {
    composition_factors_bounded(y, seed, ORACLE_DIM_BOUND)
}

pub fn composition_factors_bounded(y: &YangianModule, seed: u64, bound: usize) -> Result<CompositionSeries> {
    if y.dim > bound {
        return Err(Error::OracleBoundExceeded { dim: y.dim, bound });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<(DrinfeldPolys, usize), usize> = BTreeMap::new();
    let (mut by_line, mut by_meataxe) = (0, 0);
    let mut stack = vec![y.clone()];
    while let Some(piece) = stack.pop() {
        if piece.dim == 0 {
            continue;
        }
        match find_submodule(&piece, &mut rng, seed)? {
            Split::Sub(s) => {
                debug_assert!(!s.is_zero() && !s.is_full());
                stack.push(piece.quotient(&s));
                stack.push(piece.submodule(&s));
            }
            Split::Simple { by_meataxe: mx } => {
                if mx {
                    by_meataxe += 1;
                } else {
                    by_line += 1;
                }
                *counts.entry((label_simple(&piece)?, piece.dim)).or_insert(0) += 1;
            }
        }
    }
    let factors = counts.into_iter().map(|((drinfeld, dim), multiplicity)| CompositionFactor { drinfeld, dim, multiplicity }).collect();
    Ok(CompositionSeries { factors, seed, certified_by_singular_line: by_line, certified_by_meataxe: by_meataxe })
}

/// Whether a module is simple, by the composition oracle.
pub fn is_simple(y: &YangianModule, seed: u64) -> Result<bool> {
    let s = composition_factors(y, seed)?;
    Ok(s.factors.len() == 1 && s.factors[0].multiplicity == 1)
}

/// Largest submodule meeting the span of `v`'s weight space trivially; zero
/// exactly when the module generated by a highest-weight vector `v` is simple.
pub fn radical_below(y: &YangianModule, v: &[Rational]) -> Result<Subspace<Rational>> {
    let ops: Vec<Matrix> = (1..=y.n).map(|i| y.gl(i, i)).collect();
    let pieces = joint_eigenspaces(&ops, &Subspace::full(y.dim))?;
    let mut others = Subspace::zero(y.dim);
    for p in pieces {
        if !p.space.contains(v) {
            others = others.sum(&p.space);
        }
    }
    Ok(largest_invariant_subspace(&y.generators(), &others))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct YangianReport {
    pub checked: usize,
    pub violation_count: usize,
    /// The first few violations found.
    pub violations: Vec<RelationViolation>,
}

impl YangianReport {
    pub fn ok(&self) -> bool {
        self.violation_count == 0
    }
}

const REPORTED_VIOLATIONS: usize = 16;

struct Sparse {
    rows: Vec<Vec<(usize, Rational)>>,
}

impl Sparse {
    fn from_dense(m: &Matrix) -> Self {
        let mut rows = vec![Vec::new(); m.rows()];
        for (i, j, v) in m.triplets() {
            rows[i].push((j, v.clone()));
        }
        Sparse { rows }
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }
}

/// `acc ± a b` for a dense row-major accumulator.
fn accumulate(acc: &mut [Rational], dim: usize, a: &Sparse, b: &Sparse, negate: bool) {
    for (i, row) in a.rows.iter().enumerate() {
        for (k, x) in row {
            for (j, y) in &b.rows[*k] {
                let p = x * y;
                if negate {
                    acc[i * dim + j] -= p;
                } else {
                    acc[i * dim + j] += p;
                }
            }
        }
    }
}

/// Exhaustive check of
/// `[t_ij^(r), t_kl^(s-1)] - [t_ij^(r-1), t_kl^(s)] = t_kj^(r-1) t_il^(s-1) - t_kj^(s-1) t_il^(r-1)`
/// for `0 ≤ r ≤ rmax`, `0 ≤ s ≤ smax`, with `t^(-1) = δ id`.
pub fn verify_yangian(y: &YangianModule, rmax: usize, smax: usize) -> YangianReport {
    let (n, dim) = (y.n, y.dim);
    let count = rmax.max(smax) + 1;
    let zero = Sparse { rows: vec![Vec::new(); dim] };
    let one = Sparse::from_dense(&Matrix::identity(dim));
    let table: Vec<Vec<Sparse>> = y.table(count).iter().map(|ls| ls.iter().map(Sparse::from_dense).collect()).collect();
    // level index shifted by one so that 0 holds t^(-1)
    let get = |a: usize, b: usize, level: usize| -> &Sparse {
        if level == 0 {
            if a == b {
                &one
            } else {
                &zero
            }
        } else {
            &table[(a - 1) * n + (b - 1)][level - 1]
        }
    };
    let mut report = YangianReport::default();
    let mut acc = vec![rat(0); dim * dim];
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    for r in 0..=rmax {
                        for s in 0..=smax {
                            for x in acc.iter_mut() {
                                *x = rat(0);
                            }
                            let terms: [(&Sparse, &Sparse, bool); 6] = [
                                (get(i, j, r + 1), get(k, l, s), false),
                                (get(k, l, s), get(i, j, r + 1), true),
                                (get(i, j, r), get(k, l, s + 1), true),
                                (get(k, l, s + 1), get(i, j, r), false),
                                (get(k, j, r), get(i, l, s), true),
                                (get(k, j, s), get(i, l, r), false),
                            ];
                            for (a, b, neg) in terms {
                                if !a.is_zero() && !b.is_zero() {
                                    accumulate(&mut acc, dim, a, b, neg);
                                }
                            }
                            report.checked += 1;
                            if acc.iter().any(|x| !x.is_zero()) {
                                report.violation_count += 1;
                                if report.violations.len() < REPORTED_VIOLATIONS {
                                    report.violations.push(RelationViolation { i, j, k, l, r, s });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// `[E_ij, E_kl] = δ_kj E_il - δ_il E_kj` for the level-zero generators.
pub fn verify_gl(y: &YangianModule) -> bool {
    let n = y.n;
    let e: Vec<Matrix> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).map(|(a, b)| y.gl(a, b)).collect();
    let at = |a: usize, b: usize| &e[(a - 1) * n + (b - 1)];
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let mut rhs = Matrix::zeros(y.dim, y.dim);
                    if k == j {
                        rhs = &rhs + at(i, l);
                    }
                    if i == l {
                        rhs = &rhs - at(k, j);
                    }
                    if at(i, j).commutator(at(k, l)) != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn pole(a: i64) -> RatFun {
        RatFun::one_plus_pole(&rat(a))
    }

    #[test]
    fn wedge_action_is_gl() {
        for n in 1..=4 {
            for k in 0..=n {
                let y = evaluation_module(k, &rat(0), n).unwrap();
                assert!(verify_gl(&y), "n={n} k={k}");
                let binom = (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64);
                assert_eq!(y.dim as u64, binom);
            }
        }
        assert!(matches!(evaluation_module(3, &rat(0), 2), Err(Error::BadFundamentalIndex { .. })));
    }

    #[test]
    fn evaluation_series() {
        // t_ab(u) = δ_ab + E_ab / (u - a)
        let a = ratio(3, 2);
        let y = evaluation_module(1, &a, 2).unwrap();
        for d in 0..4 {
            let expected = wedge_gl(2, 1, 1, 2).scale(&num_traits::pow::pow(a.clone(), d));
            assert_eq!(y.level(1, 2, d), expected);
        }
        assert!(verify_yangian(&y, 3, 3).ok());
    }

    #[test]
    fn evaluation_highest_weight() {
        for n in 1..=4 {
            for k in 0..=n {
                for a in -2..=2 {
                    let y = evaluation_module(k, &rat(a), n).unwrap();
                    let hws = highest_weight_data(&y).unwrap();
                    assert_eq!(hws.len(), 1);
                    let hw = &hws[0];
                    assert_eq!(hw.multiplicity, 1);
                    assert!(hw.generates);
                    for i in 1..=n {
                        let expected = if i <= k { pole(i as i64 + a) } else { RatFun::one() };
                        assert_eq!(hw.zeta[i - 1], expected);
                    }
                    let q = drinfeld_polys(hw).unwrap();
                    for j in 1..n {
                        let expected = if j == k { Poly::linear(&rat(a + k as i64)) } else { UniPoly::one() };
                        assert_eq!(q.q[j - 1], expected);
                    }
                    let det = qdet_scalar(&y, hw).unwrap();
                    if k == 1 {
                        assert_eq!(det, pole(a));
                    }
                    if k == 0 {
                        assert!(det.is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_example() {
        let y = tensor(&evaluation_module(1, &rat(1), 2).unwrap(), &evaluation_module(1, &rat(0), 2).unwrap()).unwrap();
        assert_eq!(y.dim, 4);
        // level zero is E⊗1 + 1⊗E
        let e = wedge_gl(2, 1, 1, 2);
        let expected = &e.kron(&Matrix::identity(2)) + &Matrix::identity(2).kron(&e);
        assert_eq!(y.gl(1, 2), expected);
        assert!(verify_yangian(&y, 3, 3).ok());
        let hws = highest_weight_data(&y).unwrap();
        let top = hws.iter().find(|h| h.vector[0] != rat(0)).unwrap();
        assert_eq!(top.zeta[0], &pole(2) * &pole(1));
        assert!(top.zeta[1].is_one());
        let q = drinfeld_polys(top).unwrap();
        assert_eq!(q.q[0], Poly::from_roots(&[rat(1), rat(2)]));
        let ch = gln_character(&y).unwrap();
        assert_eq!(ch.get(&Partition::new(vec![2]).unwrap()), 1);
        assert_eq!(ch.get(&Partition::new(vec![1, 1]).unwrap()), 1);
        assert_eq!(ch.dim(), 4);
    }

    #[test]
    fn standard_tensor_modules() {
        let lam = Weight::from_ints(&[2, 1]);
        let y = standard_tensor_module(&lam, &Weight::from_ints(&[1, 0]), 2).unwrap();
        assert_eq!(y.dim, 4);
        let y = standard_tensor_module(&lam, &Weight::from_ints(&[0, 1]), 2).unwrap();
        assert_eq!(y.dim, 1);
        let y = standard_tensor_module(&lam, &lam, 2).unwrap();
        assert_eq!(y, YangianModule::trivial(2));
        assert!(matches!(standard_tensor_module(&lam, &Weight::from_ints(&[-1, 1]), 2), Err(Error::NotAdmissible(_))));
        assert!(matches!(standard_tensor_module(&Weight::from_ints(&[0, 1]), &Weight::from_ints(&[0, 0]), 2), Err(Error::NotDominant(_))));
    }

    #[test]
    fn closed_forms_match() {
        let cases: &[(&[i64], &[i64], usize)] = &[(&[2, 1], &[1, 0], 2), (&[3, 1, 0], &[1, 0, 0], 3), (&[4, 2, 2], &[2, 1, 1], 3), (&[2, 2, 0], &[1, 1, 0], 2)];
        for &(l, m, n) in cases {
            let (lam, mu) = (Weight::from_ints(l), Weight::from_ints(m));
            let y = standard_tensor_module(&lam, &mu, n).unwrap();
            let zeta = standard_zeta(&lam, &mu, n).unwrap();
            let hws = highest_weight_data(&y).unwrap();
            let hw = hws.iter().find(|h| h.zeta == zeta).expect("standard highest weight present");
            assert!(hw.generates);
            assert_eq!(drinfeld_polys(hw).unwrap(), drinfeld_closed_form(&lam, &mu, n).unwrap());
            assert_eq!(qdet_scalar(&y, hw).unwrap(), qdet_expected(hw));
        }
    }

    #[test]
    fn quantum_determinant_is_central_product() {
        // n = 1: qdet = t_11(u)
        let y = evaluation_module(1, &rat(4), 1).unwrap();
        let hw = &highest_weight_data(&y).unwrap()[0];
        assert_eq!(qdet_scalar(&y, hw).unwrap(), pole(4));
        // product of evaluation scalars for a tensor product
        let y = tensor(&evaluation_module(1, &rat(0), 2).unwrap(), &evaluation_module(1, &rat(5), 2).unwrap()).unwrap();
        let hw = &highest_weight_data(&y).unwrap()[0];
        assert_eq!(qdet_scalar(&y, hw).unwrap(), &pole(0) * &pole(5));
        // Λ^2 C^2 at 0: t_11(u) t_22(u - 1) on e_1 ∧ e_2
        let y = evaluation_module(2, &rat(0), 2).unwrap();
        let hw = &highest_weight_data(&y).unwrap()[0];
        assert_eq!(qdet_scalar(&y, hw).unwrap(), &pole(0) * &pole(1));
    }

    #[test]
    fn composition_examples() {
        let ev = |a: i64| evaluation_module(1, &rat(a), 2).unwrap();
        let y = tensor(&ev(1), &ev(0)).unwrap();
        let s = composition_factors(&y, 7).unwrap();
        assert_eq!(s.total_dim(), 4);
        let dims: Vec<(usize, usize)> = s.factors.iter().map(|f| (f.dim, f.multiplicity)).collect();
        assert_eq!(dims.len(), 2);
        assert!(dims.contains(&(3, 1)) && dims.contains(&(1, 1)));
        let three = s.factors.iter().find(|f| f.dim == 3).unwrap();
        assert_eq!(three.drinfeld.q[0], Poly::from_roots(&[rat(1), rat(2)]));
        let one = s.factors.iter().find(|f| f.dim == 1).unwrap();
        assert!(one.drinfeld.q[0].is_one());
        assert_eq!(s, composition_factors(&y, 8).map(|mut t| {
            t.seed = 7;
            t
        }).unwrap());

        let generic = tensor(&ev(0), &ev(5)).unwrap();
        let s = composition_factors(&generic, 7).unwrap();
        assert_eq!(s.factors.len(), 1);
        assert_eq!(s.factors[0].dim, 4);

        let big = YangianModule { dim: 65, ..YangianModule::trivial(2) };
        assert!(matches!(composition_factors(&big, 1), Err(Error::OracleBoundExceeded { .. })));
        assert!(composition_factors(&YangianModule::zero(2), 1).unwrap().factors.is_empty());
    }

    #[test]
    fn meataxe_certifies_simple() {
        let ev = |k: usize, a: i64| evaluation_module(k, &rat(a), 3).unwrap();
        let y = tensor(&ev(1, 0), &ev(1, 7)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let gens = y.generators();
        assert!(matches!(meataxe(&y, &gens, &mut rng, 3).unwrap(), Split::Simple { by_meataxe: true }));
        let red = tensor(&ev(1, 1), &ev(1, 0)).unwrap();
        assert!(matches!(meataxe(&red, &red.generators(), &mut rng, 3).unwrap(), Split::Sub(_)));
        let top = highest_weight_data(&red).unwrap().into_iter().find(|h| h.vector[0] != rat(0)).unwrap();
        assert!(top.generates);
        assert_eq!(radical_below(&red, &top.vector).unwrap().dim(), 3);
    }

    #[test]
    fn mutation_is_detected() {
        let mut y = tensor(&evaluation_module(1, &rat(0), 2).unwrap(), &evaluation_module(1, &rat(1), 2).unwrap()).unwrap();
        assert!(verify_yangian(&y, 3, 3).ok());
        let m = y.stored_mut(1, 2, 1);
        let v = m.get(0, 1) + rat(1);
        m.set(0, 1, v);
        let report = verify_yangian(&y, 3, 3);
        assert!(!report.ok());
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn kostka_and_weyl() {
        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&[2, 1], &[2, 1]), 1);
        assert_eq!(kostka(&[2, 1], &[1, 2]), 1);
        assert_eq!(kostka(&[3], &[1, 1, 1]), 1);
        assert_eq!(weyl_dimension(&p(vec![2, 1]), 3), 8);
        assert_eq!(weyl_dimension(&p(vec![1, 1]), 2), 1);
        assert_eq!(weyl_dimension(&p(vec![1, 1, 1]), 2), 0);
        for n in 1..=3 {
            for size in 0..=4 {
                for shape in Partition::all(size) {
                    let total: u64 = weights_of(&shape, n).iter().map(|(_, k)| k).sum();
                    assert_eq!(total, weyl_dimension(&shape, n));
                }
            }
        }
    }

    #[test]
    fn direct_sum_and_json() {
        let a = evaluation_module(1, &rat(0), 2).unwrap();
        let b = evaluation_module(1, &rat(3), 2).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.dim, 4);
        assert_eq!(s.degree_bound, 2);
        assert!(verify_yangian(&s, 2, 2).ok());
        let back = YangianModule::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
        let hw = &highest_weight_data(&a).unwrap()[0];
        let q = drinfeld_polys(hw).unwrap();
        let text = serde_json::to_string(&q).unwrap();
        assert!(text.contains("roots"));
        assert_eq!(serde_json::from_str::<DrinfeldPolys>(&text).unwrap(), q);
    }
}
