//! Dense matrices and reduced row-echelon subspaces over an exact field.
//!
//! Matrices act on column vectors. Pivots are always the first nonzero
//! entry, so every basis produced here is reproducible.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        DenseMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: &[Vec<F>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.mul_ref(c)).collect() }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        let mut out = vec![F::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *slot += &a.mul_ref(x);
                }
            }
        }
        out
    }

    /// `v^T A` as a vector.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector-matrix product");
        let mut out = vec![F::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *slot += &x.mul_ref(a);
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Self::zeros(r, c);
        for (i, j, a) in self.triplets() {
            for (k, l, b) in other.triplets() {
                m.set(i * other.rows + k, j * other.cols + l, a.mul_ref(b));
            }
        }
        m
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn rank(&self) -> usize {
        Subspace::from_vectors(self.cols, self.row_vecs()).dim()
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        Subspace::from_vectors(self.cols, self.row_vecs()).annihilator_basis()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.get(col, col).inv();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.axpy_row(r, col, &f);
                    inv.axpy_row(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &F) {
        for j in 0..self.cols {
            self.data[r * self.cols + j] *= c;
        }
    }

    /// row[target] -= f * row[src]
    fn axpy_row(&mut self, target: usize, src: usize, f: &F) {
        for j in 0..self.cols {
            let t = self.data[src * self.cols + j].mul_ref(f);
            if !t.is_zero() {
                self.data[target * self.cols + j] -= &t;
            }
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for (i, j, v) in self.triplets() {
            m.set(i, j, v.clone());
        }
        for (i, j, v) in other.triplets() {
            m.set(self.rows + i, self.cols + j, v.clone());
        }
        m
    }
}

impl<F: Field> std::ops::Mul for &DenseMatrix<F> {
    type Output = DenseMatrix<F>;
    fn mul(self, rhs: &DenseMatrix<F>) -> DenseMatrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &a.mul_ref(b);
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> std::ops::Add for &DenseMatrix<F> {
    type Output = DenseMatrix<F>;
    fn add(self, rhs: &DenseMatrix<F>) -> DenseMatrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect() }
    }
}

impl<F: Field> std::ops::Sub for &DenseMatrix<F> {
    type Output = DenseMatrix<F>;
    fn sub(self, rhs: &DenseMatrix<F>) -> DenseMatrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect() }
    }
}

impl<F: Field> std::ops::Neg for &DenseMatrix<F> {
    type Output = DenseMatrix<F>;
    fn neg(self) -> DenseMatrix<F> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A subspace of `F^n` held as a fully reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; they index a basis of the quotient.
    pub fn free_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Subtracts the component along the basis, leaving zeros at every pivot.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &r.mul_ref(&f);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &r.mul_ref(&f);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// Coordinates of a member vector in this basis.
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Vector with the given coordinates in this basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in out.iter_mut().zip(row) {
                *x += &r.mul_ref(c);
            }
        }
        out
    }

    /// Basis of `{x : <b, x> = 0 for every basis vector b}`.
    pub fn annihilator_basis(&self) -> Vec<Vec<F>> {
        self.free_coords()
            .into_iter()
            .map(|f| {
                let mut x = vec![F::zero(); self.ambient];
                x[f] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }

    pub fn annihilator(&self) -> Self {
        Self::from_vectors(self.ambient, self.annihilator_basis())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Self) -> Self {
        // (A ∩ B)^⊥ = A^⊥ + B^⊥
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Matrix whose rows are the basis vectors.
    pub fn to_matrix(&self) -> DenseMatrix<F> {
        if self.rows.is_empty() {
            return DenseMatrix::zeros(0, self.ambient);
        }
        DenseMatrix::from_rows(self.rows.clone())
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Smallest subspace containing `seeds` and stable under every generator.
pub fn spin<F: Field>(gens: &[DenseMatrix<F>], seeds: impl IntoIterator<Item = Vec<F>>, ambient: usize) -> Subspace<F> {
    let mut space = Subspace::zero(ambient);
    let mut queue = VecDeque::new();
    for v in seeds {
        if space.insert(v.clone()) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if space.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v);
            if space.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    space
}

/// Largest generator-stable subspace contained in `within`.
pub fn largest_invariant_subspace<F: Field>(gens: &[DenseMatrix<F>], within: &Subspace<F>) -> Subspace<F> {
    // X = {v : Cv = 0}; repeatedly add C g to the constraints.
    let n = within.ambient();
    let mut constraints = within.annihilator();
    let mut frontier: Vec<Vec<F>> = constraints.basis().to_vec();
    while !frontier.is_empty() && !constraints.is_full() {
        let mut next = Vec::new();
        for c in &frontier {
            for g in gens {
                let cg = g.vec_mul(c);
                if constraints.insert(cg.clone()) {
                    next.push(cg);
                }
            }
        }
        frontier = next;
    }
    Subspace::from_vectors(n, constraints.annihilator_basis())
}

/// Whether `g(sub) ⊆ sub` for every generator.
pub fn is_invariant<F: Field>(gens: &[DenseMatrix<F>], sub: &Subspace<F>) -> bool {
    gens.iter().all(|g| sub.basis().iter().all(|b| sub.contains(&g.mul_vec(b))))
}

/// Matrices of the generators on an invariant subspace, in its row basis.
pub fn restrict_action<F: Field>(gens: &[DenseMatrix<F>], sub: &Subspace<F>) -> Vec<DenseMatrix<F>> {
    gens.iter()
        .map(|g| {
            let cols: Vec<Vec<F>> = sub
                .basis()
                .iter()
                .map(|b| {
                    let w = g.mul_vec(b);
                    debug_assert!(sub.contains(&w), "subspace is not invariant");
                    sub.coords(&w)
                })
                .collect();
            DenseMatrix::from_cols(&cols, sub.dim())
        })
        .collect()
}

/// Matrices of the generators on `F^n / sub`, in the basis of free coordinates.
pub fn quotient_action<F: Field>(gens: &[DenseMatrix<F>], sub: &Subspace<F>) -> Vec<DenseMatrix<F>> {
    let free = sub.free_coords();
    gens.iter()
        .map(|g| {
            let cols: Vec<Vec<F>> = free
                .iter()
                .map(|&f| {
                    let w = sub.reduce(&g.col(f));
                    free.iter().map(|&k| w[k].clone()).collect()
                })
                .collect();
            DenseMatrix::from_cols(&cols, free.len())
        })
        .collect()
}

/// Projection of a vector to quotient coordinates.
pub fn quotient_coords<F: Field>(sub: &Subspace<F>, v: &[F]) -> Vec<F> {
    let w = sub.reduce(v);
    sub.free_coords().into_iter().map(|k| w[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use num_rational::Ratio;
    use proptest::prelude::*;

    type M = DenseMatrix<Rational>;

    fn m(rows: &[&[i64]]) -> M {
        M::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[test]
    fn product_inverse_and_kernel() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        let b = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(b.rank(), 1);
        let ker = b.nullspace();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(is_zero_vec(&b.mul_vec(&v)));
        }
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_err());
    }

    #[test]
    fn spin_and_invariants() {
        // shift operator on F^3
        let s = m(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let sp = spin(&[s.clone()], [unit(3, 1)], 3);
        assert_eq!(sp.dim(), 2);
        assert!(is_invariant(&[s.clone()], &sp));
        let inv = largest_invariant_subspace(&[s.clone()], &Subspace::from_vectors(3, [unit(3, 0), unit(3, 2)]));
        assert_eq!(inv.dim(), 1);
        assert!(inv.contains(&unit(3, 2)));
        let q = quotient_action(&[s.clone()], &sp);
        assert_eq!(q[0], m(&[&[0]]));
        let r = restrict_action(&[s], &sp);
        assert_eq!(r[0], m(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn intersection() {
        let a = Subspace::from_vectors(3, [vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Subspace::from_vectors(3, [vec![rat(1), rat(1), rat(1)], vec![rat(0), rat(1), rat(0)]]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&unit(3, 1)));
    }

    proptest! {
        #[test]
        fn rref_rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
            // same algorithm over a machine-word rational field
            let a = DenseMatrix::<Ratio<i64>>::from_fn(3, 4, |i, j| Ratio::from_integer(entries[i * 4 + j]));
            let ker = a.nullspace();
            prop_assert_eq!(a.rank() + ker.len(), 4);
            for v in &ker {
                prop_assert!(is_zero_vec(&a.mul_vec(v)));
            }
            let s = Subspace::from_vectors(4, a.row_vecs());
            for row in a.row_vecs() {
                prop_assert!(s.contains(&row));
                prop_assert_eq!(s.combine(&s.coords(&row)), row);
            }
        }
    }
}
