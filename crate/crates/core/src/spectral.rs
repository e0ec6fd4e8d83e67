//! Minimal polynomials and joint eigenspaces over the rationals.

use crate::error::{Error, Result};
use crate::exactnum::{rational_roots, UniPoly};
use crate::linalg::{is_invariant, restrict_action, unit, Subspace};
use crate::poly::Poly;
use crate::scalar::Rational;
use crate::Matrix;

/// Monic generator of `{p : p(A) v = 0}`, together with the Krylov vectors.
pub fn local_minpoly(a: &Matrix, v: &[Rational]) -> (UniPoly, Vec<Vec<Rational>>) {
    let n = a.rows();
    let mut krylov: Vec<Vec<Rational>> = Vec::new();
    let mut span = Subspace::zero(n);
    let mut cur = v.to_vec();
    while span.insert(cur.clone()) {
        krylov.push(cur.clone());
        cur = a.mul_vec(&cur);
    }
    // cur = Σ c_j krylov_j; kernel of [K_0 .. K_{k-1} | cur] is one-dimensional
    let mut cols = krylov.clone();
    cols.push(cur);
    let m = Matrix::from_cols(&cols, n);
    let ker = m.nullspace();
    debug_assert_eq!(ker.len(), 1);
    let c = &ker[0];
    let lead = c[c.len() - 1].clone();
    let coeffs = c.iter().map(|x| x / &lead).collect();
    (Poly::new(coeffs), krylov)
}

fn lcm(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let g = p.gcd(q);
    (&p.div_rem(&g).0 * q).monic()
}

/// Minimal polynomial, as the lcm of local minimal polynomials of vectors
/// whose cyclic subspaces together span the space.
pub fn minimal_polynomial(a: &Matrix) -> UniPoly {
    let n = a.rows();
    let mut covered = Subspace::zero(n);
    let mut m = UniPoly::one();
    for i in 0..n {
        let e = unit(n, i);
        if covered.contains(&e) {
            continue;
        }
        let (p, krylov) = local_minpoly(a, &e);
        m = lcm(&m, &p);
        for k in krylov {
            covered.insert(k);
        }
        if covered.is_full() {
            break;
        }
    }
    m
}

/// Common eigenspace of a commuting family, with the eigenvalue of each member.
#[derive(Clone, Debug)]
pub struct JointEigenspace {
    pub values: Vec<Rational>,
    pub space: Subspace<Rational>,
}

/// Joint eigenspaces with rational eigenvalues of a family commuting on the
/// invariant subspace `within`. Spaces are expressed in ambient coordinates.
pub fn joint_eigenspaces(ops: &[Matrix], within: &Subspace<Rational>) -> Result<Vec<JointEigenspace>> {
    if !is_invariant(ops, within) {
        return Err(Error::InvalidModule("subspace is not invariant under the operator family".into()));
    }
    let local = restrict_action(ops, within);
    let k = within.dim();
    let mut pieces: Vec<(Vec<Rational>, Subspace<Rational>)> = vec![(Vec::new(), Subspace::full(k))];
    for op in &local {
        let mut next = Vec::new();
        for (vals, piece) in pieces {
            if !is_invariant(std::slice::from_ref(op), &piece) {
                return Err(Error::InvalidModule("operator family does not commute".into()));
            }
            let a = &restrict_action(std::slice::from_ref(op), &piece)[0];
            let (roots, _) = rational_roots(&minimal_polynomial(a));
            for (c, _) in roots {
                let shifted = a - &Matrix::scalar(a.rows(), &c);
                let ker: Vec<Vec<Rational>> = shifted.nullspace().into_iter().map(|v| piece.combine(&v)).collect();
                let mut vals = vals.clone();
                vals.push(c);
                next.push((vals, Subspace::from_vectors(k, ker)));
            }
        }
        pieces = next;
    }
    Ok(pieces
        .into_iter()
        .map(|(values, piece)| JointEigenspace {
            values,
            space: Subspace::from_vectors(within.ambient(), piece.basis().iter().map(|v| within.combine(v))),
        })
        .collect())
}
