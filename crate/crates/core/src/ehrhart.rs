//! Ehrhart polynomials by exact interpolation of dilation counts.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::counter::count_dilation;
use crate::error::Result;
use crate::exact::{evaluate_polynomial, solve_vandermonde};
use crate::permdata::{face_factorization, SubsetIndex, WeightVector};
use crate::{Integer, Rational};

/// `i(P, t)` as exact coefficients in ascending degree. The coefficient of
/// `t^r` is the homogeneous component `Lat^r(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EhrhartPolynomial {
    coeffs: Vec<Rational>,
}

impl EhrhartPolynomial {
    /// Trailing zero coefficients are dropped (the zero polynomial keeps a
    /// single zero).
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        EhrhartPolynomial { coeffs }
    }

    pub fn point() -> Self {
        EhrhartPolynomial { coeffs: vec![Rational::one()] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("non-empty")
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        evaluate_polynomial(&self.coeffs, t)
    }

    /// Product polynomial; Ehrhart polynomials multiply under cartesian
    /// products.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        EhrhartPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} t")?,
                _ => write!(f, "{c} t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// Dimension of `Σ w_k Δ_{k,n+1}`: `n` unless every weight is zero.
pub fn dimension(w: &WeightVector) -> usize {
    if w.is_zero() {
        0
    } else {
        w.n()
    }
}

/// Interpolates the counts at `t = 0, ..., dilations`.
pub fn ehrhart_from_dilations(w: &WeightVector, dilations: u64) -> Result<EhrhartPolynomial> {
    let nodes: Vec<Rational> = (0..=dilations).map(|t| Rational::from_integer(t.into())).collect();
    let values: Vec<Rational> = (0..=dilations)
        .map(|t| Rational::from_integer(Integer::from(count_dilation(w, t))))
        .collect();
    Ok(EhrhartPolynomial::from_coeffs(solve_vandermonde(&nodes, &values)?))
}

/// `i(Σ w_k Δ_{k,n+1}, t)` from the counts at `t = 0..=dim`.
pub fn ehrhart_of_weights(w: &WeightVector) -> EhrhartPolynomial {
    ehrhart_from_dilations(w, dimension(w) as u64).expect("integer nodes are distinct")
}

/// `i(Σ_{j ∈ J} Δ_{j,n+1}, t)`; `J = ∅` is the origin.
pub fn ehrhart_of_subset_sum(j: &SubsetIndex) -> EhrhartPolynomial {
    ehrhart_of_weights(&WeightVector::subset_sum(j))
}

/// Coefficient of `t^r`, zero past the degree.
pub fn lat_r(p: &EhrhartPolynomial, r: usize) -> Rational {
    p.coeffs.get(r).cloned().unwrap_or_else(Rational::zero)
}

/// Normalized volume as the leading Ehrhart coefficient.
pub fn nvol(w: &WeightVector) -> Rational {
    ehrhart_of_weights(w).leading().clone()
}

/// `nvol(F_S)` for the face `F_S` of `Perm(parent)`.
pub fn nvol_face(s: &SubsetIndex, parent: &WeightVector) -> Result<Rational> {
    EhrhartCache::new().nvol_face(s, parent)
}

/// Shared memo of Ehrhart polynomials keyed by weight vector.
///
/// Safe to use from several threads; two threads racing on the same key may
/// both compute it, and the results are identical.
#[derive(Debug, Default)]
pub struct EhrhartCache {
    polys: Mutex<HashMap<WeightVector, Arc<EhrhartPolynomial>>>,
}

impl EhrhartCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ehrhart(&self, w: &WeightVector) -> Arc<EhrhartPolynomial> {
        if let Some(p) = self.polys.lock().expect("cache poisoned").get(w) {
            return Arc::clone(p);
        }
        let p = Arc::new(ehrhart_of_weights(w));
        let mut guard = self.polys.lock().expect("cache poisoned");
        Arc::clone(guard.entry(w.clone()).or_insert(p))
    }

    pub fn subset_sum(&self, j: &SubsetIndex) -> Arc<EhrhartPolynomial> {
        self.ehrhart(&WeightVector::subset_sum(j))
    }

    pub fn nvol(&self, w: &WeightVector) -> Rational {
        self.ehrhart(w).leading().clone()
    }

    pub fn nvol_face(&self, s: &SubsetIndex, parent: &WeightVector) -> Result<Rational> {
        let f = face_factorization(s, parent)?;
        Ok(f.factors.iter().fold(Rational::one(), |acc, w| acc * self.nvol(w)))
    }

    pub fn len(&self) -> usize {
        self.polys.lock().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permdata::orbit_size;
    use crate::{int, rat};

    fn hyper(n: usize, k: usize) -> WeightVector {
        WeightVector::hypersimplex(n, k).unwrap()
    }

    #[test]
    fn hypersimplex_polynomials() {
        assert_eq!(
            ehrhart_of_weights(&hyper(5, 1)).coeffs(),
            &[int(1), rat(137, 60), rat(15, 8), rat(17, 24), rat(1, 8), rat(1, 120)]
        );
        assert_eq!(
            ehrhart_of_weights(&hyper(5, 3)).coeffs(),
            &[int(1), rat(37, 10), rat(25, 4), rat(23, 4), rat(11, 4), rat(11, 20)]
        );
        assert_eq!(ehrhart_of_weights(&WeightVector::new(vec![0, 0, 0])), EhrhartPolynomial::point());
    }

    #[test]
    fn subset_sum_polynomials() {
        let j = SubsetIndex::new(3, vec![1, 3]).unwrap();
        assert_eq!(
            ehrhart_of_subset_sum(&j).coeffs(),
            &[int(1), rat(11, 3), int(5), rat(10, 3)]
        );
        let j = SubsetIndex::new(3, vec![1]).unwrap();
        assert_eq!(ehrhart_of_subset_sum(&j).coeffs(), &[int(1), rat(11, 6), int(1), rat(1, 6)]);
        assert_eq!(ehrhart_of_subset_sum(&SubsetIndex::empty(3)), EhrhartPolynomial::point());
    }

    #[test]
    fn lat_r_examples() {
        assert_eq!(lat_r(&ehrhart_of_weights(&hyper(5, 1)), 1), rat(137, 60));
        assert_eq!(lat_r(&ehrhart_of_weights(&hyper(5, 1)), 0), int(1));
        assert_eq!(lat_r(&ehrhart_of_weights(&hyper(5, 1)), 9), int(0));
        let j = SubsetIndex::new(3, vec![1, 3]).unwrap();
        assert_eq!(lat_r(&ehrhart_of_subset_sum(&j), 2), int(5));
    }

    #[test]
    fn nvol_examples() {
        assert_eq!(nvol(&hyper(5, 1)), rat(1, 120));
        assert_eq!(nvol(&WeightVector::new(vec![])), int(1));
        assert_eq!(nvol(&WeightVector::regular(2)), int(3));
        // hexagon counts 1, 7, 19
        assert_eq!(ehrhart_of_weights(&WeightVector::regular(2)).coeffs(), &[int(1), int(3), int(3)]);
    }

    #[test]
    fn nvol_face_examples() {
        let pi2 = WeightVector::regular(2);
        assert_eq!(nvol_face(&SubsetIndex::full(2), &pi2).unwrap(), int(3));
        assert_eq!(nvol_face(&SubsetIndex::empty(3), &WeightVector::regular(3)).unwrap(), int(1));
        let edge = SubsetIndex::new(3, vec![1]).unwrap();
        assert_eq!(nvol_face(&edge, &WeightVector::regular(3)).unwrap(), int(1));
    }

    #[test]
    fn reinterpolation_is_stable() {
        for w in [vec![1, 1, 1], vec![2, 0, 1], vec![0, 1, 0, 1], vec![1, 2]] {
            let w = WeightVector::new(w);
            let d = dimension(&w) as u64;
            assert_eq!(ehrhart_from_dilations(&w, d + 1).unwrap(), ehrhart_of_weights(&w));
        }
    }

    #[test]
    fn constant_term_and_leading_sign() {
        for code in 1..27u64 {
            let w = WeightVector::new(vec![code % 3, (code / 3) % 3, code / 9]);
            let p = ehrhart_of_weights(&w);
            assert_eq!(p.coeffs()[0], int(1));
            assert!(p.leading() > &int(0));
            assert_eq!(p.degree(), 3);
        }
    }

    #[test]
    fn second_coefficient_is_half_facet_volume() {
        let cache = EhrhartCache::new();
        for n in 1..=4 {
            let pi = WeightVector::regular(n);
            let facets: Rational = SubsetIndex::all(n)
                .into_iter()
                .filter(|s| s.len() + 1 == n)
                .map(|s| {
                    let mult = Rational::from_integer(orbit_size(&s).into());
                    mult * cache.nvol_face(&s, &pi).unwrap()
                })
                .sum();
            let p = cache.ehrhart(&pi);
            assert_eq!(lat_r(&p, n - 1), facets / int(2), "n = {n}");
        }
    }

    #[test]
    fn cache_reuses_entries() {
        let cache = EhrhartCache::new();
        let w = WeightVector::regular(3);
        let a = cache.ehrhart(&w);
        let b = cache.ehrhart(&w);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.len(), 1);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn polynomial_predicts_later_dilations(w in proptest::collection::vec(0u64..=2, 1..=4), t in 0u64..6) {
            let w = WeightVector::new(w);
            let p = ehrhart_of_weights(&w);
            prop_assert_eq!(p.degree(), dimension(&w));
            let predicted = p.evaluate(&Rational::from_integer(t.into()));
            let counted = Rational::from_integer(crate::counter::count_dilation(&w, t).into());
            prop_assert_eq!(predicted, counted);
        }
    }
}
