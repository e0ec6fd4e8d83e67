//! Representations of the symmetric group `W_ℓ`: Murnaghan-Nakayama
//! characters, Young's seminormal form and isotypic decomposition.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, Permutation};
use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};
use crate::Matrix;

/// A `W_ℓ`-module given by the matrices of `s_1, ..., s_{ℓ-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WModule {
    pub ell: usize,
    pub dim: usize,
    #[serde(with = "crate::json::matrices")]
    pub gens: Vec<Matrix>,
}

impl WModule {
    pub fn new(ell: usize, dim: usize, gens: Vec<Matrix>) -> Self {
        assert_eq!(gens.len(), ell.saturating_sub(1), "need ℓ-1 generators");
        assert!(gens.iter().all(|g| g.rows() == dim && g.cols() == dim), "generator shape");
        WModule { ell, dim, gens }
    }

    pub fn trivial(ell: usize) -> Self {
        Self::new(ell, 1, vec![Matrix::identity(1); ell.saturating_sub(1)])
    }

    pub fn sign(ell: usize) -> Self {
        Self::new(ell, 1, vec![Matrix::scalar(1, &rat(-1)); ell.saturating_sub(1)])
    }

    /// Left regular representation on the basis `S_ℓ` in lexicographic order.
    pub fn regular(ell: usize) -> Result<Self> {
        let all = Permutation::all(ell)?;
        let index: HashMap<&Permutation, usize> = all.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let gens = (1..ell)
            .map(|i| {
                let s = Permutation::simple(ell, i);
                let mut m = Matrix::zeros(all.len(), all.len());
                for (k, w) in all.iter().enumerate() {
                    m.set(index[&s.mul(w)], k, Rational::one());
                }
                m
            })
            .collect();
        Ok(Self::new(ell, all.len(), gens))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.ell, other.ell);
        Self::new(self.ell, self.dim + other.dim, self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect())
    }

    /// Checks involutions, braid relations and far commutation.
    pub fn validate(&self) -> Result<()> {
        for (k, g) in self.gens.iter().enumerate() {
            if !(g * g).is_identity() && self.dim > 0 {
                return Err(Error::NotARepresentation(format!("s_{} is not an involution", k + 1)));
            }
            for (j, h) in self.gens.iter().enumerate().skip(k + 1) {
                let ok = if j == k + 1 { &(&(g * h) * g) == &(&(h * g) * h) } else { g * h == h * g };
                if !ok {
                    return Err(Error::NotARepresentation(format!("relation between s_{} and s_{} fails", k + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Matrix of an arbitrary group element, via its reduced word.
    pub fn element(&self, w: &Permutation) -> Matrix {
        w.reduced_word().iter().fold(Matrix::identity(self.dim), |acc, &i| &acc * &self.gens[i - 1])
    }

    /// Matrices of every element of `S_ℓ`, built breadth-first.
    pub fn all_elements(&self) -> Vec<(Permutation, Matrix)> {
        let e = Permutation::identity(self.ell);
        let mut seen: HashMap<Permutation, Matrix> = HashMap::new();
        seen.insert(e.clone(), Matrix::identity(self.dim));
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for i in 1..self.ell {
                let sw = Permutation::simple(self.ell, i).mul(&w);
                if !seen.contains_key(&sw) {
                    let m = &self.gens[i - 1] * &seen[&w];
                    seen.insert(sw.clone(), m);
                    queue.push_back(sw);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Character table of `S_ℓ`, rows indexed by partitions and columns by cycle types.
#[derive(Debug)]
pub struct CharacterTable {
    pub ell: usize,
    pub partitions: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<BigInt>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn order(&self) -> BigInt {
        (1..=self.ell).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    }

    pub fn row(&self, nu: &Partition) -> &[i64] {
        let k = self.partitions.iter().position(|p| p == nu).expect("partition of ℓ");
        &self.values[k]
    }

    pub fn class_index(&self, ct: &Partition) -> usize {
        self.classes.iter().position(|c| c == ct).expect("cycle type of ℓ")
    }
}

/// `ℓ! / Π i^{m_i} m_i!`.
pub fn class_size(cycle_type: &Partition) -> BigInt {
    let ell = cycle_type.size();
    let mut num = (1..=ell).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    for (i, &m) in cycle_type.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            num /= BigInt::from(i) * BigInt::from(k);
        }
    }
    num
}

fn mn_beta(beta: &mut Vec<usize>, rest: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, tail)) = rest.split_first() else {
        return 1;
    };
    let key = (beta.clone(), rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        beta[idx] = b - k;
        total += sign * mn_beta(beta, tail, memo);
        beta[idx] = b;
    }
    memo.insert(key, total);
    total
}

/// Irreducible character `χ^ν` at the class of the given cycle type.
pub fn mn_character(nu: &Partition, cycle_type: &Partition) -> Result<Rational> {
    if nu.size() != cycle_type.size() {
        return Err(Error::SizeMismatch(nu.size(), cycle_type.size()));
    }
    Ok(rat(mn_value(nu, cycle_type)))
}

fn mn_value(nu: &Partition, cycle_type: &Partition) -> i64 {
    let len = nu.len();
    let mut beta: Vec<usize> = nu.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    mn_beta(&mut beta, cycle_type.parts(), &mut HashMap::new())
}

static TABLES: OnceLock<Mutex<BTreeMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Memoized character table; each entry is written once.
pub fn character_table(ell: usize) -> Arc<CharacterTable> {
    let tables = TABLES.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(t) = tables.lock().expect("table lock").get(&ell) {
        return Arc::clone(t);
    }
    let partitions = Partition::all(ell);
    let classes = partitions.clone();
    let class_sizes = classes.iter().map(class_size).collect();
    let values = partitions.iter().map(|nu| classes.iter().map(|c| mn_value(nu, c)).collect()).collect();
    let table = Arc::new(CharacterTable { ell, partitions, classes, class_sizes, values });
    let mut guard = tables.lock().expect("table lock");
    Arc::clone(guard.entry(ell).or_insert(table))
}

/// Standard Young tableaux of shape `ν`, each as the (row, column) of entries `1..ℓ`.
pub fn standard_tableaux(nu: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn go(nu: &Partition, fill: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == nu.size() {
            out.push(cur.clone());
            return;
        }
        for r in 0..nu.len() {
            let c = fill[r];
            if c < nu.part(r) && (r == 0 || fill[r - 1] > c) {
                fill[r] += 1;
                cur.push((r, c));
                go(nu, fill, cur, out);
                cur.pop();
                fill[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(nu, &mut vec![0; nu.len()], &mut Vec::new(), &mut out);
    out
}

/// Irreducible module `U(ν)` in Young's seminormal form.
pub fn specht_module(nu: &Partition) -> WModule {
    let ell = nu.size();
    let tabs = standard_tableaux(nu);
    let index: HashMap<&Vec<(usize, usize)>, usize> = tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let dim = tabs.len();
    let gens = (1..ell)
        .map(|i| {
            let mut m = Matrix::zeros(dim, dim);
            for (k, t) in tabs.iter().enumerate() {
                let (ra, ca) = t[i - 1];
                let (rb, cb) = t[i];
                if ra == rb {
                    m.set(k, k, rat(1));
                } else if ca == cb {
                    m.set(k, k, rat(-1));
                } else {
                    let a = (cb as i64 - rb as i64) - (ca as i64 - ra as i64);
                    let inv_a = Rational::new(BigInt::from(1), BigInt::from(a));
                    let mut swapped = t.clone();
                    swapped.swap(i - 1, i);
                    let k2 = index[&swapped];
                    m.set(k, k, inv_a.clone());
                    if a < 0 {
                        m.set(k2, k, rat(1));
                    } else {
                        m.set(k2, k, rat(1) - &inv_a * &inv_a);
                    }
                }
            }
            m
        })
        .collect();
    WModule::new(ell, dim, gens)
}

/// A representative permutation of each cycle type, cycles on consecutive points.
pub fn class_representative(cycle_type: &Partition) -> Permutation {
    let ell = cycle_type.size();
    let mut images: Vec<usize> = (0..ell).collect();
    let mut start = 0;
    for &len in cycle_type.parts() {
        for k in 0..len {
            images[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    Permutation::from_zero_based(images)
}

/// Traces of class representatives, in character-table column order.
pub fn class_traces(m: &WModule) -> Result<Vec<Rational>> {
    m.validate()?;
    let table = character_table(m.ell);
    Ok(table.classes.iter().map(|c| m.element(&class_representative(c)).trace()).collect())
}

/// Isotypic multiplicities, keyed by partition; zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicDecomposition {
    #[serde(with = "crate::json::pairs")]
    pub multiplicities: BTreeMap<Partition, usize>,
}

impl IsotypicDecomposition {
    pub fn get(&self, nu: &Partition) -> usize {
        self.multiplicities.get(nu).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u64 {
        self.multiplicities.iter().map(|(nu, &m)| m as u64 * nu.num_standard_tableaux()).sum()
    }
}

pub fn decompose(m: &WModule) -> Result<IsotypicDecomposition> {
    let traces = class_traces(m)?;
    let table = character_table(m.ell);
    let order = Rational::from_integer(table.order());
    let mut multiplicities = BTreeMap::new();
    for (nu, row) in table.partitions.iter().zip(&table.values) {
        let mut s = Rational::zero();
        for ((size, chi), tr) in table.class_sizes.iter().zip(row).zip(&traces) {
            s += Rational::from_integer(size * BigInt::from(*chi)) * tr;
        }
        s /= &order;
        if !s.is_integer() || s < Rational::zero() {
            return Err(Error::NotARepresentation(format!("multiplicity of {nu} is {s}")));
        }
        let v = s.to_integer().to_usize().expect("small multiplicity");
        if v > 0 {
            multiplicities.insert(nu.clone(), v);
        }
    }
    Ok(IsotypicDecomposition { multiplicities })
}

/// Central idempotent `(χ^ν(1)/ℓ!) Σ_w χ^ν(w) M(w)`.
pub fn isotypic_projector(m: &WModule, nu: &Partition) -> Result<Matrix> {
    m.validate()?;
    if nu.size() != m.ell {
        return Err(Error::SizeMismatch(nu.size(), m.ell));
    }
    let table = character_table(m.ell);
    let row = table.row(nu);
    let mut acc = Matrix::zeros(m.dim, m.dim);
    for (w, mat) in m.all_elements() {
        let chi = row[table.class_index(&w.cycle_type())];
        if chi != 0 {
            acc = &acc + &mat.scale(&rat(chi));
        }
    }
    let dim = Rational::from_integer(BigInt::from(nu.num_standard_tableaux()));
    Ok(acc.scale(&(dim / Rational::from_integer(table.order()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mn_examples() {
        for ell in 1..=6 {
            for c in Partition::all(ell) {
                assert_eq!(mn_character(&part(&[ell]), &c).unwrap(), rat(1));
            }
        }
        assert_eq!(mn_character(&part(&[1, 1, 1, 1]), &part(&[2, 1, 1])).unwrap(), rat(-1));
        let vals: Vec<Rational> = [&[1, 1, 1][..], &[2, 1], &[3]].iter().map(|c| mn_character(&part(&[2, 1]), &part(c)).unwrap()).collect();
        assert_eq!(vals, vec![rat(2), rat(0), rat(-1)]);
        assert!(matches!(mn_character(&part(&[2]), &part(&[1])), Err(Error::SizeMismatch(2, 1))));
    }

    #[test]
    fn specht_traces_match_characters() {
        for ell in 1..=5 {
            let table = character_table(ell);
            for nu in Partition::all(ell) {
                let m = specht_module(&nu);
                m.validate().unwrap();
                assert_eq!(m.dim as u64, nu.num_standard_tableaux());
                assert_eq!(m.dim, standard_tableaux(&nu).len());
                let traces = class_traces(&m).unwrap();
                let expected: Vec<Rational> = table.row(&nu).iter().map(|&v| rat(v)).collect();
                assert_eq!(traces, expected, "{nu}");
            }
        }
        let triv = specht_module(&part(&[4]));
        assert_eq!(triv.dim, 1);
        assert!(triv.gens.iter().all(|g| g.is_identity()));
    }

    #[test]
    fn column_orthogonality_and_dimension_sum() {
        for ell in 1..=6 {
            let t = character_table(ell);
            for a in 0..t.classes.len() {
                for b in 0..t.classes.len() {
                    let s: i64 = t.values.iter().map(|row| row[a] * row[b]).sum();
                    let expected = if a == b { t.order() / &t.class_sizes[a] } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expected);
                }
            }
            let dims: u64 = t.partitions.iter().map(|nu| nu.num_standard_tableaux().pow(2)).sum();
            assert_eq!(BigInt::from(dims), t.order());
            let total: BigInt = t.class_sizes.iter().sum();
            assert_eq!(total, t.order());
        }
    }

    #[test]
    fn decompose_examples() {
        let reg = WModule::regular(3).unwrap();
        let d = decompose(&reg).unwrap();
        assert_eq!(d.get(&part(&[3])), 1);
        assert_eq!(d.get(&part(&[2, 1])), 2);
        assert_eq!(d.get(&part(&[1, 1, 1])), 1);
        let reg2 = WModule::regular(2).unwrap();
        let d = decompose(&reg2).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(part(&[2]), 1), (part(&[1, 1]), 1)]));
        assert_eq!(decompose(&WModule::trivial(4)).unwrap().multiplicities, BTreeMap::from([(part(&[4]), 1)]));
        for ell in 1..=5 {
            for nu in Partition::all(ell) {
                assert_eq!(decompose(&specht_module(&nu)).unwrap().multiplicities, BTreeMap::from([(nu.clone(), 1)]));
            }
        }
    }

    #[test]
    fn decompose_is_additive() {
        let a = specht_module(&part(&[2, 1, 1]));
        let b = WModule::regular(4).unwrap();
        let da = decompose(&a).unwrap();
        let db = decompose(&b).unwrap();
        let ds = decompose(&a.direct_sum(&b)).unwrap();
        for nu in Partition::all(4) {
            assert_eq!(ds.get(&nu), da.get(&nu) + db.get(&nu));
        }
        assert_eq!(ds.total_dim(), 3 + 24);
    }

    #[test]
    fn projector_examples() {
        let reg2 = WModule::regular(2).unwrap();
        let p = isotypic_projector(&reg2, &part(&[2])).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.mul_vec(&[rat(1), rat(1)]), vec![rat(1), rat(1)]);
        let reg3 = WModule::regular(3).unwrap();
        let p = isotypic_projector(&reg3, &part(&[2, 1])).unwrap();
        assert_eq!(&p * &p, p);
        assert_eq!(p.rank(), 4);
        for g in &reg3.gens {
            assert_eq!(&p * g, g * &p);
        }
    }

    #[test]
    fn invalid_module_is_rejected() {
        let mut m = specht_module(&part(&[2, 1]));
        m.gens[0].set(0, 0, rat(5));
        assert!(matches!(decompose(&m), Err(Error::NotARepresentation(_))));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&part(&[2, 1])), BigInt::from(3));
        assert_eq!(class_size(&part(&[2, 2])), BigInt::from(3));
        assert_eq!(class_size(&part(&[1, 1, 1, 1])), BigInt::from(1));
        for ct in Partition::all(5) {
            assert_eq!(class_representative(&ct).cycle_type(), ct);
        }
    }
}
