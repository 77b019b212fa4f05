use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseReport {
    pub holds: bool,
    /// The first maximal run of `S` with consecutive differences at most
    /// `gap` whose span is at least the requested length.
    pub witness: Option<[u64; 2]>,
    /// The longest such run, whether or not it is long enough.
    pub longest_run: Option<[u64; 2]>,
}

/// Looks for a stretch `[u, v]` with `v - u >= run_length` on which
/// consecutive elements of `S` differ by at most `gap`.
pub fn piecewise_syndetic_check(s: &[u64], window: (u64, u64), gap: u64, run_length: u64) -> Result<PiecewiseReport> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::invalid("empty window"));
    }
    let pts = crate::util::canonical(s.iter().copied().filter(|x| (lo..=hi).contains(x)).collect());
    let mut runs: Vec<[u64; 2]> = Vec::new();
    for &x in &pts {
        match runs.last_mut() {
            Some(r) if x - r[1] <= gap => r[1] = x,
            _ => runs.push([x, x]),
        }
    }
    let witness = runs.iter().copied().find(|r| r[1] - r[0] >= run_length);
    // earliest among the longest
    let longest_run = runs.iter().copied().rev().max_by_key(|r| r[1] - r[0]);
    Ok(PiecewiseReport { holds: witness.is_some(), witness, longest_run })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let evens: Vec<u64> = (0..=100).step_by(2).collect();
        assert!(piecewise_syndetic_check(&evens, (0, 100), 2, 50).unwrap().holds);

        let powers: Vec<u64> = (0..=10).map(|i| 1 << i).collect();
        let r = piecewise_syndetic_check(&powers, (0, 1024), 2, 10).unwrap();
        assert!(!r.holds);
        assert_eq!(r.longest_run, Some([1, 4]));

        let mut planted: Vec<u64> = (40..=60).collect();
        planted.extend([3, 17, 29, 75, 88, 97]);
        let r = piecewise_syndetic_check(&planted, (0, 100), 1, 20).unwrap();
        assert_eq!(r.witness, Some([40, 60]));
    }
}
