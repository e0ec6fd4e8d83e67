//! Partitions, weights, permutations of `S_r`, Bruhat order, double cosets
//! and admissible weight sets.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{as_i64, format_rational, rat, ratio, Rational};

/// Largest rank for which `S_r` is enumerated explicitly.
pub const DEFAULT_RANK_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Zero parts are dropped; the rest must be weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        Partition((0..self.first_part()).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dominance order `self ⊵ other` on partitions of the same size.
    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> u64 {
        let t = self.transpose();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                den *= (p - j - 1 + t.part(j) - i - 1 + 1) as u128;
            }
        }
        num /= den;
        num as u64
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Multiplicity vector `m_i` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first_part() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::scalar::serde_rational_vec")] Vec<Rational>);

impl Weight {
    pub fn new(entries: Vec<Rational>) -> Self {
        Weight(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Weight(entries.iter().map(|&v| rat(v)).collect())
    }

    /// `((r-1)/2, (r-3)/2, ..., -(r-1)/2)`.
    pub fn rho(r: usize) -> Self {
        Weight((0..r).map(|i| ratio(r as i64 - 1 - 2 * i as i64, 2)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(as_i64).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|q| q.is_integer())
    }

    /// `λ(α) ∉ {-1, -2, ...}` for every positive root `α = ε_i - ε_j`, `i < j`.
    pub fn is_dominant(&self) -> bool {
        (0..self.rank()).all(|i| {
            (i + 1..self.rank()).all(|j| {
                let d = &self.0[i] - &self.0[j];
                !(d.is_integer() && d.is_negative())
            })
        })
    }

    /// `(w·μ)_i = μ_{w^{-1}(i)}`.
    pub fn permuted(&self, w: &Permutation) -> Self {
        assert_eq!(w.rank(), self.rank(), "rank mismatch");
        let mut out = self.0.clone();
        for (i, v) in self.0.iter().enumerate() {
            out[w.apply(i)] = v.clone();
        }
        Weight(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Permutations fixing this weight.
    pub fn stabilizer(&self) -> Result<Vec<Permutation>> {
        Ok(Permutation::all(self.rank())?.into_iter().filter(|w| self.permuted(w) == *self).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A permutation of `{1..r}`, stored 0-based. Products compose right to left:
/// `(xy)(i) = x(y(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From 1-based one-line notation.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let r = one_line.len();
        let mut seen = vec![false; r];
        for &v in &one_line {
            if v == 0 || v > r || seen[v - 1] {
                return Err(Error::Parse(format!("{one_line:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line.into_iter().map(|v| v - 1).collect()))
    }

    pub fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation(images)
    }

    pub fn identity(r: usize) -> Self {
        Permutation((0..r).collect())
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 ≤ i < r`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} out of range for S_{r}");
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Transposition of the 1-based points `a` and `b`.
    pub fn transposition(r: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(a - 1, b - 1);
        Permutation(v)
    }

    pub fn longest(r: usize) -> Self {
        Permutation((0..r).rev().collect())
    }

    /// Product of simple reflections `s_{i1} s_{i2} ...`.
    pub fn from_word(r: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(r), |acc, &i| acc.mul(&Self::simple(r, i)))
    }

    /// All of `S_r` in lexicographic order of one-line notation.
    pub fn all(r: usize) -> Result<Vec<Permutation>> {
        if r > DEFAULT_RANK_BOUND {
            return Err(Error::RankTooLarge { rank: r, bound: DEFAULT_RANK_BOUND });
        }
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..r).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..r).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..r).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.rank()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w] = i;
        }
        Permutation(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let r = self.rank();
        (0..r).map(|i| (i + 1..r).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// Lexicographically first reduced word `[i1, ..., ik]` with `w = s_{i1} ... s_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.rank()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = Permutation::simple(w.rank(), i).mul(&w);
        }
        word
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type as a partition.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.rank()];
        let mut lens = Vec::new();
        for s in 0..self.rank() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bruhat order, by comparing the rank matrices `#{a ≤ i : w(a) ≥ k}`.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    let r = x.rank();
    for k in 0..r {
        let (mut cx, mut cy) = (0usize, 0usize);
        for i in 0..r {
            cx += usize::from(x.0[i] >= k);
            cy += usize::from(y.0[i] >= k);
            if cx > cy {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetRep {
    /// Sorted lexicographically.
    pub coset_elements: Vec<Permutation>,
    /// Unique element of maximal length.
    pub w_lr: Permutation,
    /// Unique element of minimal length; the representative `w` below.
    pub w_min: Permutation,
    /// Longest element of `w_min W_μ`.
    pub w_r: Permutation,
    /// Longest element of `W_λ w_min`.
    pub w_l: Permutation,
}

impl DoubleCosetRep {
    pub fn contains(&self, w: &Permutation) -> bool {
        self.coset_elements.binary_search(w).is_ok()
    }
}

fn longest_of<'a>(it: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
    it.into_iter().max_by(|a, b| a.length().cmp(&b.length()).then_with(|| b.cmp(a))).expect("nonempty").clone()
}

/// Longest element of the left coset `w W_μ`.
pub fn longest_in_right_coset(w: &Permutation, stab: &[Permutation]) -> Permutation {
    let elems: Vec<Permutation> = stab.iter().map(|v| w.mul(v)).collect();
    longest_of(&elems)
}

/// Longest element of the right coset `W_λ w`.
pub fn longest_in_left_coset(w: &Permutation, stab: &[Permutation]) -> Permutation {
    let elems: Vec<Permutation> = stab.iter().map(|v| v.mul(w)).collect();
    longest_of(&elems)
}

/// Partition of `S_r` into `W_λ \ S_r / W_μ` double cosets, ordered by their
/// minimal elements.
pub fn double_cosets(lambda: &Weight, mu: &Weight) -> Result<Vec<DoubleCosetRep>> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    let all = Permutation::all(lambda.rank())?;
    let wl = lambda.stabilizer()?;
    let wm = mu.stabilizer()?;
    let mut assigned: BTreeSet<Permutation> = BTreeSet::new();
    let mut out = Vec::new();
    for w in &all {
        if assigned.contains(w) {
            continue;
        }
        let mut elems: BTreeSet<Permutation> = BTreeSet::new();
        for u in &wl {
            for v in &wm {
                elems.insert(u.mul(w).mul(v));
            }
        }
        assigned.extend(elems.iter().cloned());
        let coset_elements: Vec<Permutation> = elems.into_iter().collect();
        let w_lr = longest_of(&coset_elements);
        let w_min = coset_elements.iter().min_by_key(|p| p.length()).expect("nonempty").clone();
        let w_r = longest_in_right_coset(&w_min, &wm);
        let w_l = longest_in_left_coset(&w_min, &wl);
        out.push(DoubleCosetRep { coset_elements, w_lr, w_min, w_r, w_l });
    }
    out.sort_by(|a, b| a.w_min.length().cmp(&b.w_min.length()).then_with(|| a.w_min.cmp(&b.w_min)));
    Ok(out)
}

/// All weak compositions of `total` into `parts` parts, each at most `cap`,
/// in decreasing lexicographic order.
pub fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest > cap * left {
            return;
        }
        for p in (0..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, left - 1, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, cap, &mut Vec::new(), &mut out);
    out
}

/// `S(λ;ℓ)` when `n` is `None`, otherwise `S^(n)(λ;ℓ)`; sorted ascending.
pub fn admissible_weights(lambda: &Weight, ell: usize, n: Option<usize>) -> Vec<Weight> {
    let cap = n.map_or(ell, |n| n.min(ell));
    let mut out: Vec<Weight> = compositions(ell, lambda.rank(), cap)
        .into_iter()
        .map(|d| Weight(lambda.0.iter().zip(&d).map(|(l, &k)| l - rat(k as i64)).collect()))
        .collect();
    out.sort();
    out
}

/// Segment lengths `λ_i - μ_i` when every one is a nonnegative integer.
pub fn segment_lengths(lambda: &Weight, mu: &Weight) -> Option<Vec<usize>> {
    if lambda.rank() != mu.rank() {
        return None;
    }
    lambda
        .0
        .iter()
        .zip(&mu.0)
        .map(|(l, m)| {
            let d = l - m;
            if d.is_integer() && !d.is_negative() {
                as_i64(&d).map(|v| v as usize)
            } else {
                None
            }
        })
        .collect()
}

/// Membership in `S(λ;ℓ)` (`n = None`) or `S^(n)(λ;ℓ)` with `ℓ = Σ(λ_i - μ_i)`.
pub fn is_admissible(lambda: &Weight, mu: &Weight, n: Option<usize>) -> bool {
    match segment_lengths(lambda, mu) {
        Some(ls) => n.map_or(true, |n| ls.iter().all(|&l| l <= n)),
        None => false,
    }
}

pub(crate) fn require_integral_dominant(w: &Weight) -> Result<()> {
    if !w.is_integral() {
        return Err(Error::NotIntegral(w.to_string()));
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.to_string()));
    }
    Ok(())
}

/// `W^(n)(λ,μ) = {w : w·μ ∈ S^(n)(λ;ℓ)}`.
pub fn wset_n(lambda: &Weight, mu: &Weight, n: usize) -> Result<Vec<Permutation>> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    require_integral_dominant(lambda)?;
    require_integral_dominant(mu)?;
    Ok(Permutation::all(lambda.rank())?.into_iter().filter(|w| is_admissible(lambda, &mu.permuted(w), Some(n))).collect())
}

/// The double cosets meeting `W^(n)(λ,μ)`.
pub fn wset_n_cosets(lambda: &Weight, mu: &Weight, n: usize) -> Result<Vec<DoubleCosetRep>> {
    let ws = wset_n(lambda, mu, n)?;
    Ok(double_cosets(lambda, mu)?.into_iter().filter(|c| ws.iter().any(|w| c.contains(w))).collect())
}

pub fn is_zero_weight(w: &Weight) -> bool {
    w.0.iter().all(Zero::is_zero)
}
