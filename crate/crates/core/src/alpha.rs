//! Berline-Vergne alpha values of the face orbits of `Π_n`.
//!
//! `α_n(S) = (m_1 ... m_l) / (n+1)! · k! MLat^k(Δ_{s_1,n+1}, ..., Δ_{s_k,n+1})`
//! where `m` is the composition matching `S = {s_1 < ... < s_k}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::counter::count_dilation;
use crate::ehrhart::EhrhartCache;
use crate::error::{Error, Result};
use crate::mixedval::{scaled_mixed_lat, MixedLatQuery};
use crate::permdata::{factorial, orbit_size, subset_to_composition, SubsetIndex, WeightVector};
use crate::{int, Integer, Natural, Rational};

/// `α_n(S)` for every `S ⊆ [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    n: usize,
    entries: BTreeMap<SubsetIndex, Rational>,
}

impl AlphaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: &SubsetIndex) -> Option<&Rational> {
        self.entries.get(s)
    }

    /// Entries ordered by size, then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = (&SubsetIndex, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `(m_1 ... m_l) / (n+1)!`.
fn orbit_scale(s: &SubsetIndex) -> Rational {
    let m = subset_to_composition(s);
    let prod = m.parts().iter().fold(Natural::one(), |acc, &p| acc * Natural::from(p));
    Rational::new(prod.into(), factorial(s.n() + 1).into())
}

/// `α_n(S)` through the mixed-valuation formula.
pub fn alpha_value(s: &SubsetIndex, cache: &EhrhartCache) -> Rational {
    orbit_scale(s) * scaled_mixed_lat(&MixedLatQuery::from_subset(s), cache)
}

pub fn alpha_table(n: usize) -> AlphaTable {
    alpha_table_with(n, 1, &EhrhartCache::new())
}

/// [`alpha_table`] with the `2^n` subset-sum Ehrhart polynomials computed on
/// `threads` workers. The result does not depend on `threads`.
pub fn alpha_table_with(n: usize, threads: usize, cache: &EhrhartCache) -> AlphaTable {
    let subsets = SubsetIndex::all(n);
    let warm = || {
        subsets.par_iter().for_each(|j| {
            cache.subset_sum(j);
        })
    };
    if threads <= 1 {
        subsets.iter().for_each(|j| {
            cache.subset_sum(j);
        });
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(warm),
            Err(_) => warm(),
        }
    }
    let entries = subsets.into_iter().map(|s| {
        let a = alpha_value(&s, cache);
        (s, a)
    });
    AlphaTable { n, entries: entries.collect() }
}

fn frac(p: usize, q: usize) -> Rational {
    Rational::new(Integer::from(p), Integer::from(q))
}

/// Closed form for `S = [n] \ {i, j}`:
/// `1/4 - 1/12 (i/j + (n+1-j)/(n+1-i))`.
pub fn alpha_closed_codim2(n: usize, i: usize, j: usize) -> Result<Rational> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOrder(format!("need 1 <= i < j <= n, got ({i}, {j}) with n = {n}")));
    }
    let inner = frac(i, j) + frac(n + 1 - j, n + 1 - i);
    Ok(Rational::new(1.into(), 4.into()) - inner / int(12))
}

/// Closed form for `S = [n] \ {i, j, k}`:
/// `1/8 - 1/24 (i/j + 1 + (n+1-k)/(n+1-j))`.
pub fn alpha_closed_codim3(n: usize, i: usize, j: usize, k: usize) -> Result<Rational> {
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(Error::IndexOrder(format!(
            "need 1 <= i < j < k <= n, got ({i}, {j}, {k}) with n = {n}"
        )));
    }
    let inner = frac(i, j) + int(1) + frac(n + 1 - k, n + 1 - j);
    Ok(Rational::new(1.into(), 8.into()) - inner / int(24))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Vertex sum `(n+1)! α_n(∅) = 1`, facets `α_n(S) = 1/2` for `|S| = n-1`,
/// and `α_n([n]) = 1`.
pub fn verify_identities(t: &AlphaTable) -> IdentityReport {
    let n = t.n;
    let mut checks = Vec::new();

    let vertex = t.get(&SubsetIndex::empty(n)).cloned().unwrap_or_else(Rational::zero);
    let vertex_sum = Rational::from_integer(factorial(n + 1).into()) * vertex.clone();
    checks.push(IdentityCheck {
        name: "vertex-sum".into(),
        passed: vertex_sum.is_one(),
        detail: format!("{}! * {vertex} = {vertex_sum}", n + 1),
    });

    let half = Rational::new(1.into(), 2.into());
    let bad: Vec<String> = t
        .iter()
        .filter(|(s, _)| s.len() + 1 == n)
        .filter(|(_, a)| **a != half)
        .map(|(s, a)| format!("{{{s}}}: {a}"))
        .collect();
    checks.push(IdentityCheck {
        name: "facets-one-half".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() { "all facets 1/2".into() } else { bad.join("; ") },
    });

    let full = t.get(&SubsetIndex::full(n)).cloned().unwrap_or_else(Rational::zero);
    checks.push(IdentityCheck {
        name: "full-polytope-one".into(),
        passed: full.is_one(),
        detail: format!("alpha([{n}]) = {full}"),
    });

    IdentityReport { n, checks }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub n: usize,
    pub checked: usize,
    pub nonpositive: Vec<(SubsetIndex, Rational)>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.nonpositive.is_empty()
    }
}

pub fn verify_positivity(t: &AlphaTable) -> PositivityReport {
    let nonpositive = t
        .iter()
        .filter(|(_, a)| **a <= Rational::zero())
        .map(|(s, a)| (s.clone(), a.clone()))
        .collect();
    PositivityReport { n: t.n, checked: t.len(), nonpositive }
}

/// Direct lattice-point count of `Perm(w)` against
/// `Σ_S |O_n(S)| α_n(S) nvol(F_S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McMullenCheck {
    pub lhs: Natural,
    pub rhs: Rational,
    pub equal: bool,
}

pub fn mcmullen_reconstruct(w: &WeightVector) -> Result<McMullenCheck> {
    let cache = EhrhartCache::new();
    let table = alpha_table_with(w.n(), 1, &cache);
    mcmullen_reconstruct_with(w, &table, &cache)
}

pub fn mcmullen_reconstruct_with(
    w: &WeightVector,
    table: &AlphaTable,
    cache: &EhrhartCache,
) -> Result<McMullenCheck> {
    if w.weights().contains(&0) {
        return Err(Error::NonGenericWeights(w.weights().to_vec()));
    }
    if table.n != w.n() {
        return Err(Error::DimensionMismatch { left: table.n, right: w.n() });
    }
    let lhs = count_dilation(w, 1);
    let mut rhs = Rational::zero();
    for (s, a) in table.iter() {
        let mult = Rational::from_integer(orbit_size(s).into());
        rhs += mult * a * cache.nvol_face(s, w)?;
    }
    let equal = Rational::from_integer(lhs.clone().into()) == rhs;
    Ok(McMullenCheck { lhs, rhs, equal })
}
