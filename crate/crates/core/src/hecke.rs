//! Finite-dimensional modules of the degenerate affine Hecke algebra `H_ℓ`.
//!
//! A module is given by matrices for `s_1..s_{ℓ-1}` and `ε_1..ε_ℓ`, subject to
//! `s_i ε_p - ε_{s_i(p)} s_i = -α_i(ε_p)` with `α_i(ε_p) = δ_{ip} - δ_{i+1,p}`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{segment_lengths, Partition, Permutation, Weight};
use crate::error::{Error, Result};
use crate::linalg::{largest_invariant_subspace, quotient_action, quotient_coords, Subspace};
use crate::scalar::{format_rational, rat, Rational};
use crate::wrep::{decompose, isotypic_projector, WModule};
use crate::Matrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HeckeParams {
    Interval { a: String, b: String },
    Standard { lambda: Weight, mu: Weight },
    Induced { factors: Vec<HeckeParams> },
    SimpleQuotient { of: Box<HeckeParams> },
    Other,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeckeModule {
    pub ell: usize,
    pub dim: usize,
    pub w_action: WModule,
    #[serde(with = "crate::json::matrices")]
    pub eps: Vec<Matrix>,
    #[serde(with = "crate::scalar::serde_rational_opt_vec")]
    pub distinguished: Option<Vec<Rational>>,
    pub params: HeckeParams,
}

impl HeckeModule {
    pub fn new(w_action: WModule, eps: Vec<Matrix>, distinguished: Option<Vec<Rational>>, params: HeckeParams) -> Self {
        assert_eq!(eps.len(), w_action.ell, "need ℓ ε-matrices");
        HeckeModule { ell: w_action.ell, dim: w_action.dim, w_action, eps, distinguished, params }
    }

    pub fn s(&self, i: usize) -> &Matrix {
        &self.w_action.gens[i - 1]
    }

    pub fn eps(&self, p: usize) -> &Matrix {
        &self.eps[p - 1]
    }

    /// All generator matrices: `s_1..s_{ℓ-1}` then `ε_1..ε_ℓ`.
    pub fn generators(&self) -> Vec<Matrix> {
        self.w_action.gens.iter().chain(&self.eps).cloned().collect()
    }

    /// Transposition `s_{ij}`.
    pub fn transposition(&self, i: usize, j: usize) -> Matrix {
        self.w_action.element(&Permutation::transposition(self.ell, i, j))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `C_[a,b]`: `s_i ↦ 1`, `ε_i ↦ a + i - 1`, with `ℓ = b - a + 1`.
pub fn one_dim(a: &Rational, b: &Rational) -> Result<HeckeModule> {
    let len = b - a + rat(1);
    let ell = crate::scalar::as_i64(&len).filter(|&v| v >= 0).ok_or_else(|| Error::BadInterval { a: format_rational(a), b: format_rational(b) })?
        as usize;
    let eps = (0..ell).map(|i| Matrix::scalar(1, &(a + rat(i as i64)))).collect();
    Ok(HeckeModule::new(
        WModule::trivial(ell),
        eps,
        Some(vec![rat(1)]),
        HeckeParams::Interval { a: format_rational(a), b: format_rational(b) },
    ))
}

/// Minimal-length representatives of `W_ℓ / (W_{ℓ_1} × ... × W_{ℓ_k})`:
/// permutations increasing on every block, in lexicographic order.
pub fn minimal_coset_reps(blocks: &[usize]) -> Result<Vec<Permutation>> {
    let ell: usize = blocks.iter().sum();
    let bounds = block_bounds(blocks);
    Ok(Permutation::all(ell)?
        .into_iter()
        .filter(|x| bounds.iter().all(|&(s, e)| (s + 1..e).all(|a| x.apply(a - 1) < x.apply(a))))
        .collect())
}

fn block_bounds(blocks: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut s = 0;
    for &b in blocks {
        out.push((s, s + b));
        s += b;
    }
    out
}

/// Sorts the values of `y` inside each block: the minimal element of `y W_J`.
fn minimal_in_coset(y: &Permutation, bounds: &[(usize, usize)]) -> Permutation {
    let mut images = y.images().to_vec();
    for &(s, e) in bounds {
        images[s..e].sort_unstable();
    }
    Permutation::from_zero_based(images)
}

/// `H_ℓ ⊗_{H_{ℓ_1} ⊗ ... ⊗ H_{ℓ_k}} (M_1 ⊗ ... ⊗ M_k)`.
pub fn induce(factors: &[HeckeModule]) -> Result<HeckeModule> {
    let blocks: Vec<usize> = factors.iter().map(|m| m.ell).collect();
    let ell: usize = blocks.iter().sum();
    let bounds = block_bounds(&blocks);
    let inner_dim: usize = factors.iter().map(|m| m.dim).product();
    let dims: Vec<usize> = factors.iter().map(|m| m.dim).collect();

    // inner module M_1 ⊗ ... ⊗ M_k, factor 0 most significant
    let embed = |k: usize, m: &Matrix| -> Matrix {
        let left: usize = dims[..k].iter().product();
        let right: usize = dims[k + 1..].iter().product();
        Matrix::identity(left).kron(m).kron(&Matrix::identity(right))
    };
    let mut inner_s: Vec<Option<Matrix>> = vec![None; ell.saturating_sub(1)];
    let mut inner_eps: Vec<Matrix> = Vec::with_capacity(ell);
    for (k, (m, &(s, _))) in factors.iter().zip(&bounds).enumerate() {
        for i in 1..m.ell {
            inner_s[s + i - 1] = Some(embed(k, m.s(i)));
        }
        for p in 1..=m.ell {
            inner_eps.push(embed(k, m.eps(p)));
        }
    }
    let inner_element = |v: &Permutation| -> Matrix {
        v.reduced_word().iter().fold(Matrix::identity(inner_dim), |acc, &i| {
            &acc * inner_s[i - 1].as_ref().expect("letter of a parabolic element")
        })
    };

    let reps = minimal_coset_reps(&blocks)?;
    let index: HashMap<&Permutation, usize> = reps.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let dim = reps.len() * inner_dim;

    let s_mats: Vec<Matrix> = (1..ell)
        .map(|i| {
            let si = Permutation::simple(ell, i);
            let mut m = Matrix::zeros(dim, dim);
            for (col_rep, x) in reps.iter().enumerate() {
                let y = si.mul(x);
                let x2 = minimal_in_coset(&y, &bounds);
                let v = x2.inverse().mul(&y);
                let row_rep = index[&x2];
                let inner = if v.is_identity() { Matrix::identity(inner_dim) } else { inner_element(&v) };
                for (a, b, val) in inner.triplets() {
                    m.set(row_rep * inner_dim + a, col_rep * inner_dim + b, val.clone());
                }
            }
            m
        })
        .collect();

    // ε_p (s_i R ⊗ n) = s_i ε_{s_i(p)} (R ⊗ n) - α_i(ε_p) (R ⊗ n), processed by length.
    let mut eps_mats: Vec<Matrix> = vec![Matrix::zeros(dim, dim); ell];
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_key(|&k| reps[k].length());
    for k in order {
        let x = &reps[k];
        let word = x.reduced_word();
        if word.is_empty() {
            for p in 0..ell {
                for (a, b, val) in inner_eps[p].triplets() {
                    eps_mats[p].set(k * inner_dim + a, k * inner_dim + b, val.clone());
                }
            }
            continue;
        }
        let i = word[0];
        let rest = Permutation::simple(ell, i).mul(x);
        let kr = index[&rest];
        for p in 1..=ell {
            let sp = if p == i {
                i + 1
            } else if p == i + 1 {
                i
            } else {
                p
            };
            let alpha = if p == i {
                1
            } else if p == i + 1 {
                -1
            } else {
                0
            };
            for m in 0..inner_dim {
                let col = eps_mats[sp - 1].col(kr * inner_dim + m);
                let mut out = s_mats[i - 1].mul_vec(&col);
                if alpha != 0 {
                    out[kr * inner_dim + m] -= rat(alpha);
                }
                for (row, val) in out.into_iter().enumerate() {
                    if !num_traits::Zero::is_zero(&val) {
                        eps_mats[p - 1].set(row, k * inner_dim + m, val);
                    }
                }
            }
        }
    }

    let distinguished = factors.iter().try_fold(vec![rat(1)], |acc, m| {
        m.distinguished.as_ref().map(|d| {
            let mut out = Vec::with_capacity(acc.len() * d.len());
            for a in &acc {
                for b in d {
                    out.push(a * b);
                }
            }
            out
        })
    });
    let distinguished = distinguished.map(|inner| {
        let mut v = vec![rat(0); dim];
        // the identity is the first representative
        v[..inner_dim].clone_from_slice(&inner);
        v
    });
    let params = HeckeParams::Induced { factors: factors.iter().map(|m| m.params.clone()).collect() };
    Ok(HeckeModule::new(WModule::new(ell, dim, s_mats), eps_mats, distinguished, params))
}

pub fn induce_outer(m1: &HeckeModule, m2: &HeckeModule) -> Result<HeckeModule> {
    induce(&[m1.clone(), m2.clone()])
}

/// Segments `[μ_i, λ_i - 1]` of a standard module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardParams {
    pub lambda: Weight,
    pub mu: Weight,
    pub lengths: Vec<usize>,
}

impl StandardParams {
    pub fn new(lambda: &Weight, mu: &Weight) -> Result<Self> {
        if lambda.rank() != mu.rank() {
            return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let lengths = segment_lengths(lambda, mu).ok_or_else(|| Error::NotAdmissible(format!("{mu} for λ = {lambda}")))?;
        Ok(StandardParams { lambda: lambda.clone(), mu: mu.clone(), lengths })
    }

    pub fn ell(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// `ν_{λ,μ}`: the segment lengths sorted into a partition.
    pub fn nu(&self) -> Partition {
        Partition::from_unsorted(self.lengths.clone())
    }

    /// Value of the central element `ε_1 + ... + ε_ℓ`.
    pub fn eps_sum(&self) -> Rational {
        let mut s = rat(0);
        for (m, &l) in self.mu.entries().iter().zip(&self.lengths) {
            for k in 0..l {
                s += m + rat(k as i64);
            }
        }
        s
    }
}

/// `K(λ,μ)`, induced from `C_[μ_1, λ_1 - 1] ⊗ ... ⊗ C_[μ_r, λ_r - 1]`.
pub fn standard_module(p: &StandardParams) -> Result<HeckeModule> {
    let factors = p
        .mu
        .entries()
        .iter()
        .zip(p.lambda.entries())
        .map(|(m, l)| one_dim(m, &(l - rat(1))))
        .collect::<Result<Vec<_>>>()?;
    let mut k = induce(&factors)?;
    k.params = HeckeParams::Standard { lambda: p.lambda.clone(), mu: p.mu.clone() };
    Ok(k)
}

/// `y_i = ε_i - Σ_{j<i} s_{ji}`.
pub fn y_operators(m: &HeckeModule) -> Vec<Matrix> {
    (1..=m.ell)
        .map(|i| {
            let mut y = m.eps(i).clone();
            for j in 1..i {
                y = &y - &m.transposition(j, i);
            }
            y
        })
        .collect()
}

/// `y`-operators after checking `w y_i = y_{w(i)} w` and `[y_i, y_j] = -(y_i - y_j) s_{ij}`.
pub fn checked_y_operators(m: &HeckeModule) -> Result<Vec<Matrix>> {
    let ys = y_operators(m);
    if let Some(v) = y_violations(m, &ys).into_iter().next() {
        return Err(Error::RelationViolation(v.to_string()));
    }
    Ok(ys)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    Involution,
    Braid,
    FarCommutation,
    EpsCommutation,
    CrossRelation,
    YEquivariance,
    YCommutator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl HeckeReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn y_violations(m: &HeckeModule, ys: &[Matrix]) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 1..m.ell {
        let s = m.s(k);
        let w = Permutation::simple(m.ell, k);
        for i in 1..=m.ell {
            let wi = w.apply(i - 1) + 1;
            if s * &ys[i - 1] != &ys[wi - 1] * s {
                out.push(Violation { kind: ViolationKind::YEquivariance, detail: format!("s_{k} y_{i} != y_{wi} s_{k}") });
            }
        }
    }
    for i in 1..=m.ell {
        for j in i + 1..=m.ell {
            let lhs = ys[i - 1].commutator(&ys[j - 1]);
            let rhs = -&(&(&ys[i - 1] - &ys[j - 1]) * &m.transposition(i, j));
            if lhs != rhs {
                out.push(Violation { kind: ViolationKind::YCommutator, detail: format!("[y_{i}, y_{j}] != -(y_{i} - y_{j}) s_{i}{j}") });
            }
        }
    }
    out
}

/// Checks every defining relation and the `y`-relations.
pub fn verify_hecke(m: &HeckeModule) -> HeckeReport {
    let mut out = Vec::new();
    let mut checked = 0;
    let ell = m.ell;
    for i in 1..ell {
        checked += 1;
        if !(m.s(i) * m.s(i)).is_identity() && m.dim > 0 {
            out.push(Violation { kind: ViolationKind::Involution, detail: format!("s_{i}^2 != 1") });
        }
        for j in i + 1..ell {
            checked += 1;
            let (a, b) = (m.s(i), m.s(j));
            if j == i + 1 {
                if &(a * b) * a != &(b * a) * b {
                    out.push(Violation { kind: ViolationKind::Braid, detail: format!("s_{i} s_{j} s_{i} != s_{j} s_{i} s_{j}") });
                }
            } else if a * b != b * a {
                out.push(Violation { kind: ViolationKind::FarCommutation, detail: format!("s_{i} s_{j} != s_{j} s_{i}") });
            }
        }
    }
    for p in 1..=ell {
        for q in p + 1..=ell {
            checked += 1;
            if m.eps(p).commutator(m.eps(q)) != Matrix::zeros(m.dim, m.dim) {
                out.push(Violation { kind: ViolationKind::EpsCommutation, detail: format!("[ε_{p}, ε_{q}] != 0") });
            }
        }
    }
    for i in 1..ell {
        for p in 1..=ell {
            checked += 1;
            let (sp, alpha) = match p {
                _ if p == i => (i + 1, 1),
                _ if p == i + 1 => (i, -1),
                _ => (p, 0),
            };
            let lhs = &(m.s(i) * m.eps(p)) - &(m.eps(sp) * m.s(i));
            if lhs != Matrix::scalar(m.dim, &rat(-alpha)) {
                out.push(Violation { kind: ViolationKind::CrossRelation, detail: format!("s_{i} ε_{p} - ε_{sp} s_{i} != {}", -alpha) });
            }
        }
    }
    if out.is_empty() {
        let ys = y_operators(m);
        checked += ell * ell;
        out.extend(y_violations(m, &ys));
    }
    HeckeReport { checked, violations: out }
}

/// Quotient of a module by an invariant subspace, in free coordinates.
pub fn quotient_module(m: &HeckeModule, sub: &Subspace<Rational>, params: HeckeParams) -> HeckeModule {
    let s = quotient_action(&m.w_action.gens, sub);
    let e = quotient_action(&m.eps, sub);
    let dim = m.dim - sub.dim();
    let distinguished = m.distinguished.as_ref().map(|v| quotient_coords(sub, v));
    HeckeModule::new(WModule::new(m.ell, dim, s), e, distinguished, params)
}

/// Largest submodule with no `ν`-isotypic part.
pub fn radical_avoiding(m: &HeckeModule, nu: &Partition) -> Result<Subspace<Rational>> {
    let proj = isotypic_projector(&m.w_action, nu)?;
    let complement = Subspace::from_vectors(m.dim, proj.nullspace());
    Ok(largest_invariant_subspace(&m.generators(), &complement))
}

/// `L(λ,μ)`: the quotient of `K(λ,μ)` by its unique maximal submodule.
pub fn simple_quotient(k: &HeckeModule) -> Result<HeckeModule> {
    let HeckeParams::Standard { lambda, mu } = &k.params else {
        return Err(Error::InvalidModule("simple_quotient expects a standard module".into()));
    };
    let p = StandardParams::new(lambda, mu)?;
    let nu = p.nu();
    let n = radical_avoiding(k, &nu)?;
    let q = quotient_module(k, &n, HeckeParams::SimpleQuotient { of: Box::new(k.params.clone()) });
    if decompose(&q.w_action)?.get(&nu) != 1 {
        return Err(Error::InvalidModule(format!("simple quotient does not contain U({nu}) exactly once")));
    }
    Ok(q)
}

/// Basis of `Hom_H(M1, M2)` as matrices `X` with `X g_1 = g_2 X`.
pub fn intertwiners(m1: &HeckeModule, m2: &HeckeModule) -> Vec<Matrix> {
    if m1.ell != m2.ell {
        return Vec::new();
    }
    let (d1, d2) = (m1.dim, m2.dim);
    let var = |a: usize, b: usize| a * d1 + b;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (a_g, b_g) in m1.generators().iter().zip(m2.generators().iter()) {
        for i in 0..d2 {
            for j in 0..d1 {
                let mut row = vec![rat(0); d1 * d2];
                for k in 0..d1 {
                    row[var(i, k)] += a_g.get(k, j);
                }
                for k in 0..d2 {
                    row[var(k, j)] -= b_g.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return vec![Matrix::identity(d1)];
    }
    Matrix::from_rows(rows).nullspace().into_iter().map(|v| Matrix::from_fn(d2, d1, |i, j| v[var(i, j)].clone())).collect()
}

/// Whether some intertwiner is invertible; tries each basis element and small combinations.
pub fn is_isomorphic(m1: &HeckeModule, m2: &HeckeModule) -> bool {
    if m1.dim != m2.dim || m1.ell != m2.ell {
        return false;
    }
    let basis = intertwiners(m1, m2);
    let mut candidate = Matrix::zeros(m1.dim, m1.dim);
    for (k, x) in basis.iter().enumerate() {
        if x.inverse().is_ok() {
            return true;
        }
        candidate = &candidate + &x.scale(&rat(k as i64 * 7 + 1));
        if candidate.inverse().is_ok() {
            return true;
        }
    }
    false
}
