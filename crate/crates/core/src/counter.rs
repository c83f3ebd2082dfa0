//! Lattice-point counting for `t · Σ w_k Δ_{k,n+1}`.
//!
//! The Minkowski sum of dilated hypersimplices is the base polytope of the
//! symmetric polymatroid with rank `g(|A|) = Σ_k w_k min(|A|, k)`, so its
//! integer points are the `x ∈ Z^{n+1}_{≥0}` with `Σ x = g(n+1)` whose `m`
//! largest coordinates sum to at most `g(m)` for every `m`. Only the sorted
//! profile of `x` matters, so [`count_lattice_points`] walks weakly
//! decreasing profiles and weights each by the number of its distinct
//! rearrangements.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::permdata::WeightVector;
use crate::Natural;

/// Default cell cap for [`count_brute_force`].
pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 20_000_000;

/// Rank function `g(1), ..., g(n+1)` of a symmetric polymatroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricRank {
    level_caps: Vec<u64>,
}

impl SymmetricRank {
    /// Validates that `g` is non-decreasing and concave (with `g(0) = 0`).
    pub fn new(level_caps: Vec<u64>) -> Result<Self> {
        if level_caps.is_empty() {
            return Err(Error::Parse("rank needs at least one level".into()));
        }
        let mut prev = 0u64;
        let mut prev_step = u64::MAX;
        for &g in &level_caps {
            if g < prev {
                return Err(Error::Parse(format!("rank {level_caps:?} is decreasing")));
            }
            let step = g - prev;
            if step > prev_step {
                return Err(Error::Parse(format!("rank {level_caps:?} is not concave")));
            }
            prev = g;
            prev_step = step;
        }
        Ok(SymmetricRank { level_caps })
    }

    /// Ambient `n` (the ground set has `n + 1` elements).
    pub fn n(&self) -> usize {
        self.level_caps.len() - 1
    }

    pub fn level_caps(&self) -> &[u64] {
        &self.level_caps
    }

    /// `g(m)` for `1 <= m <= n + 1`.
    pub fn cap(&self, m: usize) -> u64 {
        self.level_caps[m - 1]
    }

    pub fn total(&self) -> u64 {
        *self.level_caps.last().expect("non-empty")
    }
}

/// `g(m) = t · Σ_k w_k min(m, k)`.
pub fn rank_from_weights(w: &WeightVector, dilation: u64) -> SymmetricRank {
    let caps = (1..=w.n() + 1)
        .map(|m| {
            let base: u64 =
                w.weights().iter().enumerate().map(|(i, &wk)| wk * (m.min(i + 1) as u64)).sum();
            dilation * base
        })
        .collect();
    SymmetricRank { level_caps: caps }
}

/// Number of integer points of the base polytope of `r`.
///
/// # Panics
///
/// If the ground set has more than 33 elements (rearrangement counts are
/// kept in `u128`).
pub fn count_lattice_points(r: &SymmetricRank) -> Natural {
    let slots = r.level_caps.len();
    assert!(slots <= 33, "ground set of size {slots} too large for the profile counter");
    let factorials: Vec<u128> = std::iter::once(1u128)
        .chain((1..=slots as u128).scan(1u128, |acc, i| {
            *acc *= i;
            Some(*acc)
        }))
        .collect();
    let mut walker = ProfileWalker {
        caps: &r.level_caps,
        total: r.total(),
        full_perm: factorials[slots],
        acc: 0,
        overflow: Natural::zero(),
    };
    walker.descend(0, 0, u64::MAX, 1, 0);
    walker.overflow + Natural::from(walker.acc)
}

struct ProfileWalker<'a> {
    caps: &'a [u64],
    total: u64,
    full_perm: u128,
    acc: u128,
    overflow: Natural,
}

impl ProfileWalker<'_> {
    /// `placed` coordinates fixed with running sum `sum`; the last one was
    /// `prev`, ending a run of `run` equal values; `denom` is the product of
    /// the factorials of all run lengths so far.
    fn descend(&mut self, placed: usize, sum: u64, prev: u64, denom: u128, run: u128) {
        let slots = self.caps.len();
        if placed == slots {
            if sum == self.total {
                self.add(self.full_perm / denom);
            }
            return;
        }
        let remaining = self.total - sum;
        let left = (slots - placed) as u64;
        let hi = prev.min(self.caps[placed] - sum).min(remaining);
        // the rest cannot exceed the current value, so it must carry at
        // least its even share of what is left
        let lo = remaining.div_ceil(left);
        if lo > hi {
            return;
        }
        for value in (lo..=hi).rev() {
            let (next_denom, next_run) =
                if value == prev { (denom * (run + 1), run + 1) } else { (denom, 1) };
            self.descend(placed + 1, sum + value, value, next_denom, next_run);
        }
    }

    fn add(&mut self, weight: u128) {
        match self.acc.checked_add(weight) {
            Some(v) => self.acc = v,
            None => {
                self.overflow += Natural::from(self.acc);
                self.acc = weight;
            }
        }
    }
}

/// Lattice points of `t · Perm(w)`.
pub fn count_dilation(w: &WeightVector, t: u64) -> Natural {
    count_lattice_points(&rank_from_weights(w, t))
}

/// Naive oracle: scans the box `[0, g(1)]^{n+1}` and tests every constraint.
pub fn count_brute_force(r: &SymmetricRank, cap: u128) -> Result<Natural> {
    let slots = r.level_caps.len();
    let side = r.cap(1) as u128 + 1;
    let cells = (0..slots).try_fold(1u128, |acc, _| acc.checked_mul(side)).unwrap_or(u128::MAX);
    if cells > cap {
        return Err(Error::BudgetExceeded { cells, cap });
    }
    let side = side as u64;
    let mut x = vec![0u64; slots];
    let mut count = 0u64;
    let mut sorted = vec![0u64; slots];
    'outer: loop {
        if x.iter().sum::<u64>() == r.total() {
            sorted.copy_from_slice(&x);
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let mut partial = 0;
            let feasible = sorted.iter().enumerate().all(|(i, &xi)| {
                partial += xi;
                partial <= r.cap(i + 1)
            });
            if feasible {
                count += 1;
            }
        }
        for xi in x.iter_mut() {
            *xi += 1;
            if *xi < side {
                continue 'outer;
            }
            *xi = 0;
        }
        break;
    }
    Ok(Natural::from(count))
}
