//! Classical bounds by enumerating deterministic strategies.
//!
//! A deterministic strategy fixes a 0/1 outcome for every observable; these
//! are the vertices of the correlation polytope, so the extreme values of a
//! linear expression over the polytope are attained on them.

use std::ops::Range;

use crate::operators::InequalityCoeffs;
use crate::{Error, Result};

/// Largest settings count accepted by [`classical_range`] (2^16 vertices).
pub const MAX_SETTINGS: usize = 8;

/// Outcome assignment for every left and right observable.
///
/// Encoded as an integer in `0..2^(2m)`: bit `i` is left observable `i`,
/// bit `m + j` is right observable `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    pub bits_left: Vec<bool>,
    pub bits_right: Vec<bool>,
}

impl DeterministicStrategy {
    pub fn from_index(m: usize, index: u64) -> Self {
        let bit = |k: usize| (index >> k) & 1 == 1;
        Self {
            bits_left: (0..m).map(bit).collect(),
            bits_right: (0..m).map(|j| bit(m + j)).collect(),
        }
    }

    pub fn index(&self) -> u64 {
        let m = self.bits_left.len();
        let mut idx = 0u64;
        for (i, &b) in self.bits_left.iter().enumerate() {
            idx |= (b as u64) << i;
        }
        for (j, &b) in self.bits_right.iter().enumerate() {
            idx |= (b as u64) << (m + j);
        }
        idx
    }

    /// Number of distinct strategies for `m` settings per side.
    pub fn count(m: usize) -> u64 {
        1u64 << (2 * m)
    }
}

/// Value of the expression under a deterministic strategy. Exact.
pub fn evaluate_strategy(coeffs: &InequalityCoeffs, s: &DeterministicStrategy) -> Result<i64> {
    coeffs.validate()?;
    for side in [&s.bits_left, &s.bits_right] {
        if side.len() != coeffs.m {
            return Err(Error::DimMismatch {
                expected: coeffs.m,
                found: side.len(),
            });
        }
    }
    Ok(evaluate_unchecked(coeffs, &s.bits_left, &s.bits_right))
}

fn evaluate_unchecked(coeffs: &InequalityCoeffs, left: &[bool], right: &[bool]) -> i64 {
    let mut total = 0;
    for (i, &a) in left.iter().enumerate() {
        if !a {
            continue;
        }
        total += coeffs.marg_left[i];
        for (j, &b) in right.iter().enumerate() {
            if b {
                total += coeffs.joint[i][j];
            }
        }
    }
    for (j, &b) in right.iter().enumerate() {
        if b {
            total += coeffs.marg_right[j];
        }
    }
    total
}

/// Extreme values over all vertices. Ties resolve to the smallest encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalRange {
    pub min: i64,
    pub max: i64,
    pub argmin: DeterministicStrategy,
    pub argmax: DeterministicStrategy,
    pub vertices: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Partial {
    min: (i64, u64),
    max: (i64, u64),
}

impl Partial {
    fn merge(self, other: Self) -> Self {
        // Smaller index wins ties.
        let min = if other.min.0 < self.min.0 || (other.min.0 == self.min.0 && other.min.1 < self.min.1) {
            other.min
        } else {
            self.min
        };
        let max = if other.max.0 > self.max.0 || (other.max.0 == self.max.0 && other.max.1 < self.max.1) {
            other.max
        } else {
            self.max
        };
        Self { min, max }
    }
}

fn scan(coeffs: &InequalityCoeffs, indices: Range<u64>) -> Option<Partial> {
    let m = coeffs.m;
    let mut left = vec![false; m];
    let mut right = vec![false; m];
    let mut acc: Option<Partial> = None;
    for idx in indices {
        for (k, slot) in left.iter_mut().enumerate() {
            *slot = (idx >> k) & 1 == 1;
        }
        for (k, slot) in right.iter_mut().enumerate() {
            *slot = (idx >> (m + k)) & 1 == 1;
        }
        let v = evaluate_unchecked(coeffs, &left, &right);
        let here = Partial {
            min: (v, idx),
            max: (v, idx),
        };
        acc = Some(match acc {
            Some(a) => a.merge(here),
            None => here,
        });
    }
    acc
}

/// Exact minimum and maximum over all `2^(2m)` deterministic strategies.
pub fn classical_range(coeffs: &InequalityCoeffs) -> Result<ClassicalRange> {
    classical_range_partitioned(coeffs, 1)
}

/// Same as [`classical_range`], with the index space split into `parts`
/// contiguous chunks scanned independently and merged.
pub fn classical_range_partitioned(
    coeffs: &InequalityCoeffs,
    parts: usize,
) -> Result<ClassicalRange> {
    coeffs.validate()?;
    let m = coeffs.m;
    if m > MAX_SETTINGS {
        return Err(Error::TooManySettings(m));
    }
    let total = DeterministicStrategy::count(m);
    let parts = parts.clamp(1, total as usize) as u64;
    let chunk = total.div_ceil(parts);
    let merged = (0..parts)
        .filter_map(|p| scan(coeffs, p * chunk..((p + 1) * chunk).min(total)))
        .reduce(Partial::merge)
        .expect("at least one strategy");
    Ok(ClassicalRange {
        min: merged.min.0,
        max: merged.max.0,
        argmin: DeterministicStrategy::from_index(m, merged.min.1),
        argmax: DeterministicStrategy::from_index(m, merged.max.1),
        vertices: total,
    })
}
