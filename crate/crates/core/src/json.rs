//! Serde adapters for exact matrices and polynomials.
//!
//! Matrices are written as sparse triplets `[row, col, "p/q"]`, polynomials
//! as ascending coefficient arrays.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{format_rational, parse_rational};
use crate::{Matrix, UniPoly};

#[derive(Serialize, Deserialize)]
struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl From<&Matrix> for SparseMatrix {
    fn from(m: &Matrix) -> Self {
        SparseMatrix { rows: m.rows(), cols: m.cols(), entries: m.triplets().map(|(i, j, v)| (i, j, format_rational(v))).collect() }
    }
}

impl SparseMatrix {
    fn into_matrix<E: serde::de::Error>(self) -> Result<Matrix, E> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries {
            if i >= self.rows || j >= self.cols {
                return Err(E::custom(format!("entry ({i}, {j}) outside a {}x{} matrix", self.rows, self.cols)));
            }
            m.set(i, j, parse_rational(&v).map_err(E::custom)?);
        }
        Ok(m)
    }
}

pub mod matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
        SparseMatrix::from(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Matrix, D::Error> {
        SparseMatrix::deserialize(d)?.into_matrix()
    }
}

pub mod matrices {
    use super::*;

    pub fn serialize<S: Serializer>(ms: &[Matrix], s: S) -> Result<S::Ok, S::Error> {
        ms.iter().map(SparseMatrix::from).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Matrix>, D::Error> {
        Vec::<SparseMatrix>::deserialize(d)?.into_iter().map(SparseMatrix::into_matrix).collect()
    }
}

pub mod poly {
    use super::*;
    use crate::poly::Poly;

    pub fn serialize<S: Serializer>(p: &UniPoly, s: S) -> Result<S::Ok, S::Error> {
        p.coeffs().iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<UniPoly, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v.iter().map(|c| parse_rational(c).map_err(serde::de::Error::custom)).collect::<Result<_, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

pub mod polys {
    use super::*;

    pub fn serialize<S: Serializer>(ps: &[UniPoly], s: S) -> Result<S::Ok, S::Error> {
        ps.iter().map(|p| p.coeffs().iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<UniPoly>, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        v.into_iter()
            .map(|cs| {
                let coeffs = cs.iter().map(|c| parse_rational(c).map_err(serde::de::Error::custom)).collect::<Result<_, _>>()?;
                Ok(crate::poly::Poly::new(coeffs))
            })
            .collect()
    }
}

pub mod ratfun {
    use super::*;
    use crate::poly::Poly;
    use crate::RatFun;

    #[derive(Serialize, Deserialize)]
    struct Raw {
        num: Vec<String>,
        den: Vec<String>,
    }

    pub fn serialize<S: Serializer>(f: &RatFun, s: S) -> Result<S::Ok, S::Error> {
        let render = |p: &UniPoly| p.coeffs().iter().map(format_rational).collect::<Vec<_>>();
        Raw { num: render(f.num()), den: render(f.den()) }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RatFun, D::Error> {
        let raw = Raw::deserialize(d)?;
        let parse = |v: &[String]| -> Result<UniPoly, D::Error> {
            Ok(Poly::new(v.iter().map(|c| parse_rational(c).map_err(serde::de::Error::custom)).collect::<Result<_, _>>()?))
        };
        let den = parse(&raw.den)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(RatFun::new(parse(&raw.num)?, den))
    }
}

pub mod ratfuns {
    use super::*;
    use crate::RatFun;

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::ratfun")] RatFun);

    pub fn serialize<S: Serializer>(fs: &[RatFun], s: S) -> Result<S::Ok, S::Error> {
        fs.iter().map(|f| Wrap(f.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<RatFun>, D::Error> {
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

/// Maps with non-string keys, written as arrays of `[key, value]` pairs.
pub mod pairs {
    use super::*;
    use std::collections::BTreeMap;

    pub fn serialize<K: Serialize, V: Serialize, S: Serializer>(m: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, K, V, D>(d: D) -> Result<BTreeMap<K, V>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        V: Deserialize<'de>,
        D: Deserializer<'de>,
    {
        Ok(Vec::<(K, V)>::deserialize(d)?.into_iter().collect())
    }
}

/// Polynomial as an ascending coefficient array of rendered rationals.
pub fn poly_value(p: &UniPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(|c| serde_json::Value::String(format_rational(c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Holder {
        #[serde(with = "super::matrix")]
        m: Matrix,
        #[serde(with = "super::poly")]
        p: UniPoly,
    }

    #[test]
    fn round_trip() {
        let mut m = Matrix::zeros(2, 3);
        m.set(1, 2, ratio(-1, 2));
        m.set(0, 0, rat(3));
        let h = Holder { m, p: crate::poly::Poly::new(vec![rat(2), rat(-3), rat(1)]) };
        let s = serde_json::to_string(&h).unwrap();
        assert!(s.contains(r#"[1,2,"-1/2"]"#));
        assert!(s.contains(r#""p":["2","-3","1"]"#));
        let back: Holder = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<Holder>(r#"{"m":{"rows":1,"cols":1,"entries":[[3,0,"1"]]},"p":[]}"#).is_err());
    }
}
