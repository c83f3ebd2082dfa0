//! Weight vectors, compositions and subsets indexing the face orbits of
//! `Perm(v)`.
//!
//! A permutohedron `Perm(v)` with `v_1 < ... < v_{n+1}` is encoded by its
//! weights `w_i = v_{i+1} - v_i`, i.e. as the Minkowski sum
//! `w_1 Δ_{1,n+1} + ... + w_n Δ_{n,n+1}`. Face orbits are indexed either by a
//! composition `m` of `n + 1` or by the subset `S ⊆ [n]` of edge directions
//! `e_i - e_{i+1}` spanning the canonical representative face `F_S`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::{Natural, Rational};

/// Non-negative integer weights `(w_1, ..., w_n)`; ambient space `R^{n+1}`.
///
/// `n = 0` (no weights) is a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    weights: Vec<u64>,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Self {
        WeightVector { weights }
    }

    /// The regular permutohedron `Π_n`: all weights one.
    pub fn regular(n: usize) -> Self {
        WeightVector { weights: vec![1; n] }
    }

    /// Hypersimplex `Δ_{k,n+1}`, `1 <= k <= n`.
    pub fn hypersimplex(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOrder(format!("hypersimplex index {k} outside 1..={n}")));
        }
        let mut weights = vec![0; n];
        weights[k - 1] = 1;
        Ok(WeightVector { weights })
    }

    /// Indicator weights of `J`: the Minkowski sum `Σ_{j ∈ J} Δ_{j,n+1}`.
    pub fn subset_sum(j: &SubsetIndex) -> Self {
        let mut weights = vec![0; j.n()];
        for &m in j.members() {
            weights[m - 1] = 1;
        }
        WeightVector { weights }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    /// Weights multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Self {
        WeightVector { weights: self.weights.iter().map(|w| w * factor).collect() }
    }

    /// A representative `v` with `v_1 = 0` and consecutive differences equal
    /// to the weights.
    pub fn v_vector(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.n() + 1);
        let mut acc = 0;
        v.push(acc);
        for w in &self.weights {
            acc += w;
            v.push(acc);
        }
        v
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A composition `(m_1, ..., m_l)` of `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            let n = parts.iter().sum::<usize>().saturating_sub(1);
            return Err(Error::InvalidComposition { n, parts });
        }
        Ok(Composition { parts })
    }

    /// Checked constructor against an ambient `n`.
    pub fn for_ambient(n: usize, parts: Vec<usize>) -> Result<Self> {
        let c = Composition::new(parts)?;
        if c.total() != n + 1 {
            return Err(Error::InvalidComposition { n, parts: c.parts });
        }
        Ok(c)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Ambient `n`, i.e. `Σ m_i - 1`.
    pub fn n(&self) -> usize {
        self.total() - 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// A subset `S ⊆ [n]`, stored as a strictly increasing list of 1-based
/// members.
///
/// Ordered by ambient `n`, then size, then lexicographically, which is the
/// order in which tables of alpha values are usually listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    n: usize,
    members: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        let dup = members.windows(2).any(|w| w[0] == w[1]);
        if dup || members.iter().any(|&m| m == 0 || m > n) {
            return Err(Error::InvalidSubset { n, members });
        }
        Ok(SubsetIndex { n, members })
    }

    pub fn empty(n: usize) -> Self {
        SubsetIndex { n, members: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        SubsetIndex { n, members: (1..=n).collect() }
    }

    /// `[n] \ complement`.
    pub fn from_complement(n: usize, complement: &[usize]) -> Result<Self> {
        let missing = SubsetIndex::new(n, complement.to_vec())?;
        Ok(missing.complement())
    }

    /// Every subset of `[n]`, smallest first, lexicographic within a size.
    pub fn all(n: usize) -> Vec<SubsetIndex> {
        let mut out: Vec<SubsetIndex> = (0u64..(1u64 << n))
            .map(|mask| SubsetIndex {
                n,
                members: (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect(),
            })
            .collect();
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> SubsetIndex {
        SubsetIndex { n: self.n, members: (1..=self.n).filter(|&i| !self.contains(i)).collect() }
    }

    /// Codimension of `F_S` in `Perm(v)`.
    pub fn codim(&self) -> usize {
        self.n - self.members.len()
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.members.len().cmp(&other.members.len()))
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `F_S ≅ Perm(v_{M_1}) × ... × Perm(v_{M_l})`, one weight vector per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceFactorization {
    pub factors: Vec<WeightVector>,
}

/// `S = [n] \ {m_1, m_1 + m_2, ...}`.
pub fn composition_to_subset(m: &Composition) -> SubsetIndex {
    let n = m.n();
    let mut cuts = Vec::with_capacity(m.parts.len());
    let mut acc = 0;
    for &p in &m.parts {
        acc += p;
        cuts.push(acc);
    }
    SubsetIndex { n, members: (1..=n).filter(|i| cuts.binary_search(i).is_err()).collect() }
}

/// Inverse of [`composition_to_subset`]: the gaps of `[n+1] \ S`.
pub fn subset_to_composition(s: &SubsetIndex) -> Composition {
    let mut parts = Vec::with_capacity(s.n + 1 - s.len());
    let mut prev = 0;
    for t in (1..=s.n + 1).filter(|&t| !s.contains(t)) {
        parts.push(t - prev);
        prev = t;
    }
    Composition { parts }
}

pub fn factorial(k: usize) -> Natural {
    (1..=k).fold(Natural::one(), |acc, i| acc * Natural::from(i))
}

/// `(n+1)! / (m_1! ... m_l!)`, the number of faces in the orbit of `F_S`.
pub fn orbit_size(s: &SubsetIndex) -> Natural {
    let m = subset_to_composition(s);
    let denom = m.parts.iter().fold(Natural::one(), |acc, &p| acc * factorial(p));
    factorial(s.n + 1) / denom
}

/// `C_n(S) = Π (m_i - 1)!`, the coefficient of the squarefree monomial
/// `Π_{i∈S} w_i` in `nvol(F_S)`.
pub fn c_constant(s: &SubsetIndex) -> Natural {
    subset_to_composition(s).parts.iter().fold(Natural::one(), |acc, &p| acc * factorial(p - 1))
}

/// Splits `parent` into consecutive blocks of sizes `m_1, ..., m_l`; each
/// block keeps the parent weights strictly inside it.
pub fn face_factorization(s: &SubsetIndex, parent: &WeightVector) -> Result<FaceFactorization> {
    if s.n != parent.n() {
        return Err(Error::DimensionMismatch { left: s.n, right: parent.n() });
    }
    let m = subset_to_composition(s);
    let mut factors = Vec::with_capacity(m.parts.len());
    let mut start = 0;
    for &p in &m.parts {
        // block covers v-positions start+1..=start+p; inner weights are
        // w_{start+1}..w_{start+p-1}
        factors.push(WeightVector::new(parent.weights[start..start + p - 1].to_vec()));
        start += p;
    }
    Ok(FaceFactorization { factors })
}

/// Checks `1 / (|O_n(S)| C_n(S)) = (m_1 ... m_l) / (n+1)!`.
pub fn oc_identity_check(s: &SubsetIndex) -> bool {
    let m = subset_to_composition(s);
    let lhs = Rational::new(1.into(), (orbit_size(s) * c_constant(s)).into());
    let prod = m.parts.iter().fold(Natural::one(), |acc, &p| acc * Natural::from(p));
    let rhs = Rational::new(prod.into(), factorial(s.n + 1).into());
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, members: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, members.to_vec()).unwrap()
    }

    fn comp(n: usize, parts: &[usize]) -> Composition {
        Composition::for_ambient(n, parts.to_vec()).unwrap()
    }

    #[test]
    fn composition_to_subset_examples() {
        assert_eq!(composition_to_subset(&comp(5, &[3, 2, 1])), sub(5, &[1, 2, 4]));
        assert_eq!(composition_to_subset(&comp(3, &[1, 1, 1, 1])), SubsetIndex::empty(3));
        assert_eq!(composition_to_subset(&comp(3, &[4])), SubsetIndex::full(3));
    }

    #[test]
    fn subset_to_composition_examples() {
        assert_eq!(subset_to_composition(&sub(5, &[1, 2, 4])).parts(), &[3, 2, 1]);
        assert_eq!(subset_to_composition(&sub(3, &[1, 3])).parts(), &[2, 2]);
        assert_eq!(subset_to_composition(&SubsetIndex::empty(3)).parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(SubsetIndex::new(3, vec![0]).is_err());
        assert!(SubsetIndex::new(3, vec![4]).is_err());
        assert!(SubsetIndex::new(3, vec![2, 2]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        assert!(Composition::for_ambient(3, vec![2, 1]).is_err());
        assert!(WeightVector::hypersimplex(3, 4).is_err());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&sub(3, &[1, 3])), Natural::from(6u32));
        assert_eq!(orbit_size(&SubsetIndex::empty(3)), Natural::from(24u32));
        assert_eq!(orbit_size(&sub(5, &[1, 2, 4])), Natural::from(60u32));
    }

    #[test]
    fn c_constants() {
        assert_eq!(c_constant(&sub(3, &[1, 3])), Natural::from(1u32));
        assert_eq!(c_constant(&SubsetIndex::full(3)), Natural::from(6u32));
        assert_eq!(c_constant(&sub(5, &[1, 2, 4])), Natural::from(2u32));
    }

    #[test]
    fn face_factorizations() {
        let f = face_factorization(&sub(5, &[1, 2, 4]), &WeightVector::regular(5)).unwrap();
        assert_eq!(
            f.factors,
            vec![WeightVector::new(vec![1, 1]), WeightVector::new(vec![1]), WeightVector::new(vec![])]
        );

        let parent = WeightVector::new(vec![2, 1, 3]);
        let f = face_factorization(&SubsetIndex::full(3), &parent).unwrap();
        assert_eq!(f.factors, vec![parent.clone()]);

        let f = face_factorization(&SubsetIndex::empty(3), &parent).unwrap();
        assert_eq!(f.factors.len(), 4);
        assert!(f.factors.iter().all(|w| w.n() == 0));
    }

    #[test]
    fn factorization_sizes_add_up() {
        let parent = WeightVector::new(vec![1, 2, 3, 4, 5]);
        for s in SubsetIndex::all(5) {
            let f = face_factorization(&s, &parent).unwrap();
            assert_eq!(f.factors.iter().map(|w| w.n() + 1).sum::<usize>(), 6);
        }
    }

    #[test]
    fn oc_identity_examples() {
        assert!(oc_identity_check(&sub(3, &[1, 3])));
        assert!(oc_identity_check(&sub(5, &[1, 2, 4])));
        assert!(oc_identity_check(&SubsetIndex::empty(1)));
    }

    #[test]
    fn bijection_round_trips_exhaustively() {
        for n in 1..=8 {
            for s in SubsetIndex::all(n) {
                let m = subset_to_composition(&s);
                assert_eq!(m.total(), n + 1);
                assert_eq!(s.len(), (n + 1) - m.parts().len());
                assert_eq!(composition_to_subset(&m), s);
                assert!(oc_identity_check(&s));
            }
        }
    }

    /// Brute-force count of ordered set partitions of `[k]` (ordered Bell
    /// numbers): assign each element a block label and keep surjective
    /// labellings onto an initial range.
    fn ordered_set_partitions(k: usize) -> u64 {
        let mut total = 0;
        for blocks in 1..=k {
            let mut labels = vec![0usize; k];
            loop {
                let mut seen = vec![false; blocks];
                for &l in &labels {
                    seen[l] = true;
                }
                if seen.iter().all(|&b| b) {
                    total += 1;
                }
                let mut i = 0;
                while i < k {
                    labels[i] += 1;
                    if labels[i] < blocks {
                        break;
                    }
                    labels[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        total
    }

    #[test]
    fn orbit_sizes_sum_to_face_count() {
        for n in 1..=6 {
            let total: Natural = SubsetIndex::all(n).iter().map(orbit_size).sum();
            assert_eq!(total, Natural::from(ordered_set_partitions(n + 1)), "n = {n}");
        }
        let n2: Natural = SubsetIndex::all(2).iter().map(orbit_size).sum();
        assert_eq!(n2, Natural::from(13u32));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn random_bijection_round_trip(n in 1usize..40, bits in any::<u64>()) {
            let members: Vec<usize> = (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
            let s = sub(n, &members);
            let m = subset_to_composition(&s);
            prop_assert_eq!(m.total(), n + 1);
            prop_assert_eq!(m.parts().len(), n + 1 - s.len());
            prop_assert_eq!(composition_to_subset(&m), s.clone());
            prop_assert!(oc_identity_check(&s));
        }
    }
}
