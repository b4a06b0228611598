use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::linalg;

/// Square matrix over a cyclotomic field, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    dim: usize,
    entries: Vec<CycNum>,
}

impl RMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![CycNum::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = CycNum::one();
        }
        RMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Invalid("matrix must be square and nonempty".into()));
        }
        Ok(RMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(diag: Vec<CycNum>) -> Self {
        let dim = diag.len();
        let mut m = Self::identity(dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<CycNum>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn trace(&self) -> CycNum {
        (0..self.dim).fold(CycNum::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn det(&self) -> CycNum {
        linalg::determinant(&self.rows())
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        RMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) - CycNum::one();
            m.set(i, i, v);
        }
        m
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows())
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = linalg::inverse(&self.rows()).ok_or(Error::DivisionByZero)?;
        Self::from_rows(inv)
    }

    pub fn transpose(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.get(j, i).clone());
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = self.transpose();
        for e in m.entries.iter_mut() {
            *e = e.conj();
        }
        m
    }

    pub fn galois(&self, k: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.galois(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(RMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Least common multiple of the cyclotomic orders of the entries.
    pub fn conductor(&self) -> u32 {
        self.entries
            .iter()
            .fold(1u32, |acc, e| num_integer::lcm(acc, e.order()))
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .chunks(self.dim)
            .map(|r| r.iter().map(CycNum::to_complex).collect())
            .collect()
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;
    fn mul(self, rhs: &RMatrix) -> RMatrix {
        let n = self.dim;
        assert_eq!(n, rhs.dim, "dimension mismatch");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycNum::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                entries.push(acc);
            }
        }
        RMatrix { dim: n, entries }
    }
}

impl Mul for RMatrix {
    type Output = RMatrix;
    fn mul(self, rhs: RMatrix) -> RMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            f.write_str(&cells.join(", "))?;
        }
        f.write_str("]")
    }
}

impl Serialize for RMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<CycNum>>::deserialize(d)?;
        RMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
