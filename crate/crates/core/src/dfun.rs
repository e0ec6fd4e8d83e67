//! The Drinfeld functor `D_ℓ(M) = (M ⊗ (C^n)^{⊗ℓ}) / Σ_i Im(s_i + 1)`, where
//! `s_i` acts diagonally as `K_i P_i`, with the Yangian acting by
//! `t_ab^(d) ↦ Σ_i y_i^d ⊗ τ_i(E_ab)`.
//!
//! The quotient is computed one gl_n weight block at a time. The block of
//! weight `β` is spanned by `M ⊗ u_b` for the weakly increasing sequence `b`
//! of content `β`, and equals `M / Σ_{i : b_i = b_{i+1}} Im(1 + s_i)`. Any
//! `x ⊗ u_c` is moved into its block by adjacent swaps
//! `x ⊗ u_c ≡ -(s_i x) ⊗ u_{P_i c}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{compositions, Partition};
use crate::error::{Error, Result};
use crate::hecke::{induce_outer, y_operators, HeckeModule};
use crate::linalg::{is_zero_vec, unit, Subspace};
use crate::scalar::{rat, Rational};
use crate::spectral::minimal_polynomial;
use crate::wrep::decompose;
use crate::yangian::{gln_character, highest_weight_data, tensor, GlnCharacter, YangianModule};
use crate::{Matrix, RatFun, UniPoly};

/// One gl_n weight block of the coinvariant space.
#[derive(Clone, Debug)]
pub struct Block {
    pub weight: Vec<usize>,
    /// The weakly increasing index sequence with content `weight`, 1-based.
    pub sequence: Vec<usize>,
    /// `Σ Im(1 + s_i)` over the stabilizing positions, inside `M`.
    pub relations: Subspace<Rational>,
    /// Coordinates of `M` surviving in the quotient.
    pub free: Vec<usize>,
    /// Position of the block's first coordinate in the quotient basis.
    pub offset: usize,
}

/// The coinvariant space of `M ⊗ (C^n)^{⊗ℓ}`.
#[derive(Clone, Debug)]
pub struct CoinvariantSpace {
    pub n: usize,
    pub ell: usize,
    pub module_dim: usize,
    pub ambient_dim: usize,
    pub basis_dim: usize,
    pub blocks: Vec<Block>,
    index: BTreeMap<Vec<usize>, usize>,
    s: Vec<Matrix>,
}

impl CoinvariantSpace {
    pub fn new(m: &HeckeModule, n: usize) -> Self {
        let ell = m.ell;
        let mut blocks = Vec::new();
        let mut index = BTreeMap::new();
        let mut offset = 0;
        let weights = if ell == 0 { vec![vec![0; n]] } else { compositions(ell, n, ell) };
        for weight in weights {
            let sequence: Vec<usize> = weight.iter().enumerate().flat_map(|(k, &c)| std::iter::repeat(k + 1).take(c)).collect();
            let mut relations = Subspace::zero(m.dim);
            for i in 1..ell {
                if sequence[i - 1] == sequence[i] {
                    let g = &Matrix::identity(m.dim) + m.s(i);
                    for col in 0..m.dim {
                        relations.insert(g.col(col));
                    }
                }
            }
            let free = relations.free_coords();
            index.insert(weight.clone(), blocks.len());
            let len = free.len();
            blocks.push(Block { weight, sequence, relations, free, offset });
            offset += len;
        }
        let ambient_dim = m.dim * n.pow(ell as u32);
        CoinvariantSpace { n, ell, module_dim: m.dim, ambient_dim, basis_dim: offset, blocks, index, s: m.w_action.gens.clone() }
    }

    fn content(&self, c: &[usize]) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for &x in c {
            w[x - 1] += 1;
        }
        w
    }

    /// Class of `x ⊗ u_c` in quotient coordinates.
    pub fn project(&self, x: &[Rational], c: &[usize]) -> Vec<Rational> {
        let mut out = vec![rat(0); self.basis_dim];
        self.project_into(&mut out, x, c);
        out
    }

    fn project_into(&self, out: &mut [Rational], x: &[Rational], c: &[usize]) {
        if is_zero_vec(x) {
            return;
        }
        let mut x = x.to_vec();
        let mut c = c.to_vec();
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for i in 1..c.len() {
                if c[i - 1] > c[i] {
                    c.swap(i - 1, i);
                    x = self.s[i - 1].mul_vec(&x).into_iter().map(|v| -v).collect();
                    sorted = false;
                }
            }
        }
        let block = &self.blocks[self.index[&self.content(&c)]];
        let reduced = block.relations.reduce(&x);
        for (k, &f) in block.free.iter().enumerate() {
            out[block.offset + k] += &reduced[f];
        }
    }

    /// Representative `(x, b)` of a quotient basis vector.
    pub fn section(&self, k: usize) -> (Vec<Rational>, Vec<usize>) {
        let block = self.blocks.iter().rev().find(|b| b.offset <= k && !b.free.is_empty()).expect("index in range");
        (unit(self.module_dim, block.free[k - block.offset]), block.sequence.clone())
    }

    fn ambient_index(&self, x: usize, c: &[usize]) -> usize {
        c.iter().fold(x, |acc, &v| acc * self.n + (v - 1))
    }

    fn all_sequences(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.ell {
            out = out.into_iter().flat_map(|s| (1..=self.n).map(move |v| [s.clone(), vec![v]].concat())).collect();
        }
        out
    }

    /// Projection as an explicit `basis_dim × ambient_dim` matrix. Ambient
    /// coordinates are ordered with the `M` index first, then the tensor factors.
    pub fn projection_matrix(&self) -> Matrix {
        let mut p = Matrix::zeros(self.basis_dim, self.ambient_dim);
        for c in self.all_sequences() {
            for x in 0..self.module_dim {
                let col = self.project(&unit(self.module_dim, x), &c);
                let j = self.ambient_index(x, &c);
                for (i, v) in col.into_iter().enumerate() {
                    p.set(i, j, v);
                }
            }
        }
        p
    }

    /// A right inverse of the projection.
    pub fn section_matrix(&self) -> Matrix {
        let mut s = Matrix::zeros(self.ambient_dim, self.basis_dim);
        for k in 0..self.basis_dim {
            let (x, b) = self.section(k);
            let xi = x.iter().position(|v| !v.is_zero()).expect("unit vector");
            s.set(self.ambient_index(xi, &b), k, rat(1));
        }
        s
    }

    /// Matrix of `s_i = K_i P_i` on the full ambient space.
    pub fn ambient_s(&self, i: usize) -> Matrix {
        let mut out = Matrix::zeros(self.ambient_dim, self.ambient_dim);
        for c in self.all_sequences() {
            let mut d = c.clone();
            d.swap(i - 1, i);
            for x in 0..self.module_dim {
                for y in 0..self.module_dim {
                    let v = self.s[i - 1].get(y, x);
                    if !v.is_zero() {
                        out.set(self.ambient_index(y, &d), self.ambient_index(x, &c), v.clone());
                    }
                }
            }
        }
        out
    }
}

/// `D_ℓ(M)` with its coinvariant space.
#[derive(Clone, Debug)]
pub struct DrinfeldImage {
    pub module: YangianModule,
    pub space: CoinvariantSpace,
}

/// The Yangian module `D_ℓ(M)`.
pub fn drinfeld_image(m: &HeckeModule, n: usize) -> Result<YangianModule> {
    Ok(drinfeld_image_full(m, n)?.module)
}

pub fn drinfeld_image_full(m: &HeckeModule, n: usize) -> Result<DrinfeldImage> {
    if n == 0 {
        return Err(Error::BadFundamentalIndex { k: 0, n });
    }
    let space = CoinvariantSpace::new(m, n);
    let ys = y_operators(m);
    let recurrence = ys.iter().fold(UniPoly::one(), |acc, y| {
        let p = minimal_polynomial(y);
        let g = acc.gcd(&p);
        (&acc.div_rem(&g).0 * &p).monic()
    });
    let depth = recurrence.degree().unwrap_or(0);
    // powers[i][d] = y_{i+1}^d
    let powers: Vec<Vec<Matrix>> = ys
        .iter()
        .map(|y| {
            let mut out = vec![Matrix::identity(m.dim)];
            for d in 1..depth {
                let next = &out[d - 1] * y;
                out.push(next);
            }
            out
        })
        .collect();
    let dim = space.basis_dim;
    let apply = |x: &[Rational], c: &[usize], a: usize, b: usize, d: usize, out: &mut Vec<Rational>| {
        for i in 0..c.len() {
            if c[i] != b {
                continue;
            }
            let mut e = c.to_vec();
            e[i] = a;
            space.project_into(out, &powers[i][d].mul_vec(x), &e);
        }
    };
    let mut t = Vec::with_capacity(n * n * depth);
    for a in 1..=n {
        for b in 1..=n {
            for d in 0..depth {
                let mut mat = Matrix::zeros(dim, dim);
                for k in 0..dim {
                    let (x, seq) = space.section(k);
                    let mut col = vec![rat(0); dim];
                    apply(&x, &seq, a, b, d, &mut col);
                    for (i, v) in col.into_iter().enumerate() {
                        if !v.is_zero() {
                            mat.set(i, k, v);
                        }
                    }
                }
                // residue: kernel generators of each block must map to zero
                for block in &space.blocks {
                    for g in block.relations.basis() {
                        let mut col = vec![rat(0); dim];
                        apply(g, &block.sequence, a, b, d, &mut col);
                        if !is_zero_vec(&col) {
                            return Err(Error::RelationViolation(format!(
                                "t_{a}{b}^({d}) does not preserve the relations in block {:?}",
                                block.weight
                            )));
                        }
                    }
                }
                t.push(mat);
            }
        }
    }
    let module = YangianModule::new(n, dim, recurrence, t)?;
    Ok(DrinfeldImage { module, space })
}

/// Predicted and observed gl_n decompositions of `D_ℓ(M)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlnDecomposition {
    pub predicted: GlnCharacter,
    pub observed: GlnCharacter,
}

/// `U(ν)^{c_ν}` in `M` contributes `L(ν')^{c_ν}` when `ν_1 ≤ n`.
pub fn predicted_gln(m: &HeckeModule, n: usize) -> Result<GlnCharacter> {
    let mut schur_mult = BTreeMap::new();
    if m.ell == 0 {
        if m.dim > 0 {
            schur_mult.insert(Partition::empty(), m.dim);
        }
        return Ok(GlnCharacter { n, schur_mult });
    }
    let dec = decompose(&m.w_action)?;
    for (nu, &c) in &dec.multiplicities {
        if c > 0 && nu.first_part() <= n {
            *schur_mult.entry(nu.transpose()).or_insert(0) += c;
        }
    }
    Ok(GlnCharacter { n, schur_mult })
}

#[allow(non_snake_case)]
pub fn glN_decomposition(m: &HeckeModule, n: usize) -> Result<GlnDecomposition> {
    let predicted = predicted_gln(m, n)?;
    let observed = gln_character(&drinfeld_image(m, n)?)?;
    if predicted != observed {
        return Err(Error::DecompositionMismatch { predicted: format!("{:?}", predicted.schur_mult), observed: format!("{:?}", observed.schur_mult) });
    }
    Ok(GlnDecomposition { predicted, observed })
}

/// Comparison of `D(M_1) ⊗ D(M_2)` with `D(Ind(M_1 ⊗ M_2))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorCompatReport {
    pub dim_left: usize,
    pub dim_right: usize,
    pub character_left: GlnCharacter,
    pub character_right: GlnCharacter,
    /// `ζ`-series of generating singular vectors, when present on both sides.
    #[serde(with = "crate::json::ratfuns")]
    pub zeta_left: Vec<RatFun>,
    #[serde(with = "crate::json::ratfuns")]
    pub zeta_right: Vec<RatFun>,
    pub highest_weight_compared: bool,
    pub agree: bool,
}

fn generating_zeta(y: &YangianModule) -> Result<Option<Vec<RatFun>>> {
    Ok(highest_weight_data(y)?.into_iter().find(|h| h.generates && h.multiplicity == 1).map(|h| h.zeta))
}

pub fn verify_tensor_compat(m1: &HeckeModule, m2: &HeckeModule, n: usize) -> Result<TensorCompatReport> {
    let left = tensor(&drinfeld_image(m1, n)?, &drinfeld_image(m2, n)?)?;
    let right = drinfeld_image(&induce_outer(m1, m2)?, n)?;
    let (character_left, character_right) = (gln_character(&left)?, gln_character(&right)?);
    let (zl, zr) = (generating_zeta(&left)?, generating_zeta(&right)?);
    let highest_weight_compared = zl.is_some() && zr.is_some();
    let agree = left.dim == right.dim && character_left == character_right && (!highest_weight_compared || zl == zr);
    Ok(TensorCompatReport {
        dim_left: left.dim,
        dim_right: right.dim,
        character_left,
        character_right,
        zeta_left: zl.unwrap_or_default(),
        zeta_right: zr.unwrap_or_default(),
        highest_weight_compared,
        agree,
    })
}

/// `Π_i binom(n, ℓ_i)`: dimension of a tensor product of fundamental modules.
pub fn product_dimension(lengths: &[usize], n: usize) -> usize {
    lengths
        .iter()
        .map(|&l| if l > n { 0 } else { (0..l).fold(1usize, |acc, i| acc * (n - i) / (i + 1)) })
        .product()
}
