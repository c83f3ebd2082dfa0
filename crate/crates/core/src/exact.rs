//! Small exact linear-algebra kernel.
//!
//! Everything here is generic over a [`Field`], so it can be driven by
//! `BigRational` (the crate's [`Rational`](crate::Rational)), by a
//! fixed-width `Ratio<i64>` in tests, or by anything else that behaves like
//! a field under `num-traits`. The rest of the crate only instantiates it
//! with exact rationals.

use std::fmt;
use std::ops::{Index, Neg};

use num_traits::{Num, Zero};

use crate::error::{Error, Result};

/// Scalar types the kernel can work over.
pub trait Field: Num + Clone + PartialEq + fmt::Debug + Neg<Output = Self> {}

impl<T> Field for T where T: Num + Clone + PartialEq + fmt::Debug + Neg<Output = T> {}

/// A dense vector with a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T: Field> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector { entries: vec![T::zero(); dim] }
    }

    /// `e_i - e_j` in dimension `dim` (0-based indices).
    pub fn difference_of_units(dim: usize, i: usize, j: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = T::one();
        v.entries[j] = v.entries[j].clone() - T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector::new(self.entries.iter().map(|x| x.clone() * factor.clone()).collect())
    }

    fn axpy(&self, factor: &T, other: &Self) -> Self {
        Vector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + factor.clone() * b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        Ok(self.axpy(&-T::one(), other))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        Ok(self.axpy(&T::one(), other))
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T: Field> From<Vec<T>> for Vector<T> {
    fn from(entries: Vec<T>) -> Self {
        Vector::new(entries)
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

fn check_dims<T>(a: &Vector<T>, b: &Vector<T>) -> Result<()> {
    if a.entries.len() != b.entries.len() {
        return Err(Error::DimensionMismatch { left: a.entries.len(), right: b.entries.len() });
    }
    Ok(())
}

/// Euclidean inner product.
pub fn inner_product<T: Field>(a: &Vector<T>, b: &Vector<T>) -> Result<T> {
    check_dims(a, b)?;
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone()))
}

/// Coefficients (ascending degree) of the unique polynomial of degree
/// `< nodes.len()` through the given points.
///
/// Uses Newton divided differences and then expands the Newton form into
/// the monomial basis.
pub fn solve_vandermonde<T: Field>(nodes: &[T], values: &[T]) -> Result<Vec<T>> {
    if nodes.len() != values.len() {
        return Err(Error::NodeValueMismatch { nodes: nodes.len(), values: values.len() });
    }
    let len = nodes.len();
    for i in 0..len {
        for j in (i + 1)..len {
            if nodes[i] == nodes[j] {
                return Err(Error::RepeatedNodes);
            }
        }
    }

    // divided differences, in place
    let mut diffs: Vec<T> = values.to_vec();
    for level in 1..len {
        for i in (level..len).rev() {
            let num = diffs[i].clone() - diffs[i - 1].clone();
            let den = nodes[i].clone() - nodes[i - level].clone();
            diffs[i] = num / den;
        }
    }

    // Horner expansion: p(x) = d0 + (x - x0)(d1 + (x - x1)(d2 + ...))
    let mut coeffs: Vec<T> = vec![T::zero(); len];
    for k in (0..len).rev() {
        // coeffs <- coeffs * (x - x_k) + d_k
        let mut next = vec![T::zero(); len];
        for (deg, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if deg + 1 < len {
                next[deg + 1] = next[deg + 1].clone() + c.clone();
            }
            next[deg] = next[deg].clone() - c.clone() * nodes[k].clone();
        }
        next[0] = next[0].clone() + diffs[k].clone();
        coeffs = next;
    }
    Ok(coeffs)
}

/// Horner evaluation of an ascending-degree coefficient list.
pub fn evaluate_polynomial<T: Field>(coeffs: &[T], x: &T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Orthogonal basis of `span(basis)` by Gram-Schmidt, or an error if the
/// input vectors are dependent.
pub fn gram_schmidt<T: Field>(basis: &[Vector<T>]) -> Result<Vec<Vector<T>>> {
    let mut ortho: Vec<(Vector<T>, T)> = Vec::with_capacity(basis.len());
    for b in basis {
        if let Some((first, _)) = ortho.first() {
            check_dims(first, b)?;
        }
        let mut v = b.clone();
        for (q, qq) in &ortho {
            let coef = inner_product(&v, q)? / qq.clone();
            v = v.axpy(&-coef, q);
        }
        let norm = inner_product(&v, &v)?;
        if norm.is_zero() {
            return Err(Error::DependentBasis);
        }
        ortho.push((v, norm));
    }
    Ok(ortho.into_iter().map(|(v, _)| v).collect())
}

/// `v` minus its orthogonal projection onto `span(basis)`.
pub fn project_orthogonal<T: Field>(v: &Vector<T>, basis: &[Vector<T>]) -> Result<Vector<T>> {
    let ortho = gram_schmidt(basis)?;
    let mut out = v.clone();
    for q in &ortho {
        let coef = inner_product(&out, q)? / inner_product(q, q)?;
        out = out.axpy(&-coef, q);
    }
    Ok(out)
}

/// Determinant of a square matrix given by rows (fraction-producing
/// Gaussian elimination).
#[allow(clippy::needless_range_loop)]
pub fn determinant<T: Field>(rows: &[Vec<T>]) -> Result<T> {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows.to_vec();
    for r in &m {
        if r.len() != n {
            return Err(Error::DimensionMismatch { left: r.len(), right: n });
        }
    }
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(T::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            for c in col..n {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
    }
    Ok(det)
}

/// Coordinates of `v` in terms of the (independent) vectors `basis`, or
/// `None` when `v` is not in their span.
#[allow(clippy::needless_range_loop)]
pub fn coordinates_in<T: Field>(v: &Vector<T>, basis: &[Vector<T>]) -> Result<Option<Vec<T>>> {
    let k = basis.len();
    // normal equations: Gram * c = B v
    let mut aug: Vec<Vec<T>> = Vec::with_capacity(k);
    for bi in basis {
        let mut row = Vec::with_capacity(k + 1);
        for bj in basis {
            row.push(inner_product(bi, bj)?);
        }
        row.push(inner_product(bi, v)?);
        aug.push(row);
    }
    for col in 0..k {
        let pivot = (col..k).find(|&r| !aug[r][col].is_zero()).ok_or(Error::DependentBasis)?;
        aug.swap(pivot, col);
        let p = aug[col][col].clone();
        for c in col..=k {
            aug[col][c] = aug[col][c].clone() / p.clone();
        }
        for r in 0..k {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in col..=k {
                let sub = factor.clone() * aug[col][c].clone();
                aug[r][c] = aug[r][c].clone() - sub;
            }
        }
    }
    let coords: Vec<T> = aug.into_iter().map(|row| row[k].clone()).collect();

    let mut recon = Vector::zeros(v.dim());
    for (c, b) in coords.iter().zip(basis) {
        recon = recon.axpy(c, b);
    }
    if recon != *v {
        return Ok(None);
    }
    Ok(Some(coords))
}
