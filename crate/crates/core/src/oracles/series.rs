//! The Iwahori–Hecke series `2 Σ_{w ∈ W₀} q^{−l(w)}` summed numerically.
//!
//! `W₀` is generated by two involutions `s, t` with no further relation, so
//! its elements are the reduced alternating words in `s` and `t`. This is
//! the only floating-point computation in the crate.

use std::collections::{HashSet, VecDeque};

use crate::error::{Result, VnDimError};

/// Word lengths of all elements of `W₀` of length at most `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSequence {
    pub cutoff: u32,
    pub lengths: Vec<u32>,
}

impl LengthSequence {
    /// Breadth-first search over freely reduced words in `s² = t² = 1`.
    pub fn enumerate(cutoff: u32) -> Self {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut queue = VecDeque::from([Vec::new()]);
        seen.insert(Vec::new());
        let mut lengths = Vec::new();
        while let Some(word) = queue.pop_front() {
            lengths.push(word.len() as u32);
            for generator in [0u8, 1] {
                let mut next = word.clone();
                if next.last() == Some(&generator) {
                    next.pop();
                } else {
                    next.push(generator);
                }
                if next.len() as u32 <= cutoff && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        LengthSequence { cutoff, lengths }
    }

    pub fn multiplicity(&self, length: u32) -> usize {
        self.lengths.iter().filter(|&&l| l == length).count()
    }
}

/// Smallest cutoff `L` with tail bound `4q^{−L}/(1 − 1/q) < tol`.
pub fn series_cutoff(q: u64, tol: f64) -> Result<u32> {
    if q < 2 {
        return Err(VnDimError::InvalidArgument(format!("series needs q >= 2, got {q}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(VnDimError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let q = q as f64;
    let mut cutoff = 0u32;
    while 4.0 * q.powi(-(cutoff as i32)) / (1.0 - 1.0 / q) >= tol {
        cutoff += 1;
    }
    Ok(cutoff)
}

/// `2 Σ_{l(w) ≤ L} q^{−l(w)}` with `L` from [`series_cutoff`], within `tol`
/// of the full series.
pub fn steinberg_series_sum(q: u64, tol: f64) -> Result<f64> {
    let cutoff = series_cutoff(q, tol)?;
    let qf = q as f64;
    let mut lengths = LengthSequence::enumerate(cutoff).lengths;
    // smallest terms first
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(2.0 * lengths.iter().map(|&l| qf.powi(-(l as i32))).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_are_zero_one_one_two_two() {
        let seq = LengthSequence::enumerate(6);
        assert_eq!(seq.lengths, vec![0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6]);
        assert_eq!(seq.multiplicity(0), 1);
        for l in 1..=6 {
            assert_eq!(seq.multiplicity(l), 2);
        }
        assert_eq!(LengthSequence::enumerate(0).lengths, vec![0]);
    }

    #[test]
    fn series_values() {
        assert!((steinberg_series_sum(3, 1e-9).unwrap() - 4.0).abs() < 1e-9);
        assert!((steinberg_series_sum(5, 1e-9).unwrap() - 3.0).abs() < 1e-9);
        assert!((steinberg_series_sum(2, 1e-12).unwrap() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn partial_sums_stay_below_the_limit() {
        let coarse = steinberg_series_sum(3, 1e-2).unwrap();
        assert!(coarse < 4.0 && 4.0 - coarse < 1e-2);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(steinberg_series_sum(1, 1e-9).is_err());
        assert!(steinberg_series_sum(3, 0.0).is_err());
        assert!(steinberg_series_sum(3, f64::NAN).is_err());
    }
}
