//! Mixed lattice-point valuations of hypersimplices.
//!
//! `MLat^k(Δ_{s_1}, ..., Δ_{s_k})` is obtained by Möbius inversion over the
//! sub-sums of the arguments, reading each `Lat^k` off a cached Ehrhart
//! polynomial. An independent route fits the multivariate polynomial
//! `Lat(t_1 Δ_{s_1} + ... + t_k Δ_{s_k})` on a grid and reads the
//! coefficient of `t_1 ... t_k`.

use num_traits::Zero;

use crate::counter::count_dilation;
use crate::ehrhart::{lat_r, EhrhartCache};
use crate::error::{Error, Result};
use crate::exact::solve_vandermonde;
use crate::permdata::{factorial, SubsetIndex, WeightVector};
use crate::{Integer, Rational};

/// Grid points allowed for [`mixed_lat_via_polynomial`].
pub const GRID_BUDGET: u128 = 200_000;

/// A multiset of hypersimplex indices drawn from `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedLatQuery {
    n: usize,
    indices: Vec<usize>,
}

impl MixedLatQuery {
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        if indices.iter().any(|&s| s == 0 || s > n) {
            return Err(Error::InvalidSubset { n, members: indices });
        }
        indices.sort_unstable();
        Ok(MixedLatQuery { n, indices })
    }

    pub fn from_subset(s: &SubsetIndex) -> Self {
        MixedLatQuery { n: s.n(), indices: s.members().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    /// Weight vector of `Σ_i t_i Δ_{s_i}`.
    fn weights_for(&self, multipliers: impl Iterator<Item = u64>) -> WeightVector {
        let mut w = vec![0u64; self.n];
        for (&s, t) in self.indices.iter().zip(multipliers) {
            w[s - 1] += t;
        }
        WeightVector::new(w)
    }
}

/// `k! MLat^k(Δ_{s_1}, ..., Δ_{s_k}) = Σ_J (-1)^{k-|J|} Lat^k(Σ_{j∈J} Δ_{s_j})`,
/// with the argument positions treated as distinguishable.
pub fn scaled_mixed_lat(q: &MixedLatQuery, cache: &EhrhartCache) -> Rational {
    let k = q.degree();
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << k) {
        let w = q.weights_for((0..k).map(|i| (mask >> i) & 1));
        let term = lat_r(&cache.ehrhart(&w), k);
        if (k - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `MLat^k(Δ_{s_1,n+1}, ..., Δ_{s_k,n+1})` by Möbius inversion.
pub fn mixed_lat(q: &MixedLatQuery, cache: &EhrhartCache) -> Rational {
    scaled_mixed_lat(q, cache) / Rational::from_integer(factorial(q.degree()).into())
}

/// Same quantity from a tensor-grid fit of `Lat(Σ t_i Δ_{s_i})`.
///
/// Each `t_i` ranges over `0..=n` (the total degree is at most `n`). The
/// coefficient of `t_1 ... t_k` is extracted one axis at a time.
pub fn mixed_lat_via_polynomial(q: &MixedLatQuery) -> Result<Rational> {
    let k = q.degree();
    let side = q.n + 1;
    let cells = (side as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if k > 6 || cells > GRID_BUDGET {
        return Err(Error::BudgetExceeded { cells, cap: GRID_BUDGET });
    }
    let nodes: Vec<Rational> = (0..side).map(|t| Rational::from_integer(t.into())).collect();

    // values[idx] with idx = Σ t_i side^i
    let mut values: Vec<Rational> = (0..cells as usize)
        .map(|idx| {
            let ts = (0..k).map(|i| ((idx / side.pow(i as u32)) % side) as u64);
            let count = count_dilation(&q.weights_for(ts), 1);
            Rational::from_integer(Integer::from(count))
        })
        .collect();

    // Peel axis 0 repeatedly: the remaining axes shift down by one.
    for _ in 0..k {
        let rest = values.len() / side;
        let mut next = Vec::with_capacity(rest);
        for r in 0..rest {
            let line: Vec<Rational> = (0..side).map(|t| values[t + side * r].clone()).collect();
            let coeffs = solve_vandermonde(&nodes, &line)?;
            next.push(coeffs.get(1).cloned().unwrap_or_else(Rational::zero));
        }
        values = next;
    }
    let squarefree = values.pop().expect("single coefficient");
    Ok(squarefree / Rational::from_integer(factorial(k).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn query(n: usize, idx: &[usize]) -> MixedLatQuery {
        MixedLatQuery::new(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let cache = EhrhartCache::new();
        let q = query(3, &[1, 3]);
        assert_eq!(scaled_mixed_lat(&q, &cache), int(3));
        assert_eq!(mixed_lat(&q, &cache), rat(3, 2));
        assert_eq!(mixed_lat_via_polynomial(&q).unwrap(), rat(3, 2));
    }

    #[test]
    fn mixed_hypersimplices_are_one() {
        let cache = EhrhartCache::new();
        for n in 1..=5 {
            let q = query(n, &(1..=n).collect::<Vec<_>>());
            assert_eq!(mixed_lat(&q, &cache), int(1), "n = {n}");
        }
    }

    #[test]
    fn singleton_is_lat_one() {
        let cache = EhrhartCache::new();
        assert_eq!(mixed_lat(&query(5, &[1]), &cache), rat(137, 60));
        for n in 1..=4 {
            for k in 1..=n {
                let expected = lat_r(&cache.ehrhart(&WeightVector::hypersimplex(n, k).unwrap()), 1);
                assert_eq!(mixed_lat_via_polynomial(&query(n, &[k])).unwrap(), expected);
            }
        }
    }

    #[test]
    fn repeated_indices() {
        let cache = EhrhartCache::new();
        let q = query(2, &[1, 1]);
        assert_eq!(mixed_lat(&q, &cache), rat(1, 2));
        assert_eq!(mixed_lat_via_polynomial(&q).unwrap(), rat(1, 2));
    }

    #[test]
    fn empty_query() {
        let cache = EhrhartCache::new();
        assert_eq!(mixed_lat(&query(3, &[]), &cache), int(1));
        assert_eq!(mixed_lat_via_polynomial(&query(3, &[])).unwrap(), int(1));
    }

    #[test]
    fn invalid_query() {
        assert!(MixedLatQuery::new(3, vec![0]).is_err());
        assert!(MixedLatQuery::new(3, vec![4]).is_err());
    }

    #[test]
    fn grid_budget() {
        assert!(matches!(
            mixed_lat_via_polynomial(&query(6, &[1, 2, 3, 4, 5, 6, 1])),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    /// Every multiset of size <= 3 over [n], n <= 4.
    fn multisets(n: usize, max: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..max {
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.last().copied().unwrap_or(1);
                for s in start..=n {
                    let mut e: Vec<usize> = m.clone();
                    e.push(s);
                    next.push(e);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn mobius_matches_grid_fit_exhaustively() {
        for n in 1..=4 {
            let cache = EhrhartCache::new();
            for idx in multisets(n, 3) {
                let q = query(n, &idx);
                assert_eq!(mixed_lat(&q, &cache), mixed_lat_via_polynomial(&q).unwrap(), "{q:?}");
            }
        }
    }

    #[test]
    fn multilinear_in_first_argument() {
        // MLat^2(2Δ_a, Δ_b) = 2 MLat^2(Δ_a, Δ_b): fit Lat(t_1·2Δ_a + t_2Δ_b)
        // and compare the t_1 t_2 coefficient.
        let n = 3;
        for a in 1..=n {
            for b in 1..=n {
                let fit = |scale: u64| -> Rational {
                    let side = n + 1;
                    let nodes: Vec<Rational> = (0..side).map(|t| int(t as i64)).collect();
                    let mut row = Vec::new();
                    for t2 in 0..side as u64 {
                        let line: Vec<Rational> = (0..side as u64)
                            .map(|t1| {
                                let mut w = vec![0u64; n];
                                w[a - 1] += scale * t1;
                                w[b - 1] += t2;
                                Rational::from_integer(count_dilation(&WeightVector::new(w), 1).into())
                            })
                            .collect();
                        row.push(solve_vandermonde(&nodes, &line).unwrap()[1].clone());
                    }
                    solve_vandermonde(&nodes, &row).unwrap()[1].clone() / int(2)
                };
                assert_eq!(fit(2), fit(1) * int(2), "a = {a}, b = {b}");
                assert_eq!(fit(1), mixed_lat_via_polynomial(&query(n, &[a, b])).unwrap());
            }
        }
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn order_of_arguments_is_irrelevant(n in 1usize..=4, idx in proptest::collection::vec(1usize..=4, 0..=3)) {
            let idx: Vec<usize> = idx.into_iter().map(|i| (i - 1) % n + 1).collect();
            let mut rev = idx.clone();
            rev.reverse();
            let cache = EhrhartCache::new();
            prop_assert_eq!(
                scaled_mixed_lat(&query(n, &idx), &cache),
                scaled_mixed_lat(&query(n, &rev), &cache)
            );
        }

        #[test]
        fn mobius_matches_grid_fit(n in 1usize..=4, idx in proptest::collection::vec(1usize..=4, 1..=2)) {
            let q = query(n, &idx.into_iter().map(|i| (i - 1) % n + 1).collect::<Vec<_>>());
            prop_assert_eq!(mixed_lat(&q, &EhrhartCache::new()), mixed_lat_via_polynomial(&q).unwrap());
        }
    }
}
