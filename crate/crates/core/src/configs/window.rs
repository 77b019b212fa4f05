use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An axis-aligned box `lo..=hi` in `Z+^dim`. Cells are numbered row-major,
/// which is also the lexicographic order of their coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<u64>,
    pub hi: Vec<u64>,
}

impl Window {
    pub fn new(lo: Vec<u64>, hi: Vec<u64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::invalid("window corners must have the same positive dimension"));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::invalid("window is empty (lo > hi in some coordinate)"));
        }
        Ok(Window { lo, hi })
    }

    /// The interval `lo..=hi` of `Z+`.
    pub fn interval(lo: u64, hi: u64) -> Self {
        assert!(lo <= hi, "empty interval {lo}..={hi}");
        Window { lo: vec![lo], hi: vec![hi] }
    }

    /// The cube `{0..n-1}^dim`; `n` must be positive.
    pub fn cube(dim: usize, n: u64) -> Self {
        assert!(n > 0 && dim > 0);
        Window { lo: vec![0; dim], hi: vec![n - 1; dim] }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn extent(&self, c: usize) -> u64 {
        self.hi[c] - self.lo[c] + 1
    }

    pub fn len(&self) -> usize {
        (0..self.dim()).map(|c| self.extent(c) as usize).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &[u64]) -> bool {
        p.len() == self.dim() && p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (l, h))| l <= x && x <= h)
    }

    pub fn index_of(&self, p: &[u64]) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let mut idx = 0usize;
        for (c, (&x, &lo)) in p.iter().zip(&self.lo).enumerate() {
            idx = idx * self.extent(c) as usize + (x - lo) as usize;
        }
        Some(idx)
    }

    pub fn point_at(&self, mut idx: usize) -> Vec<u64> {
        let mut p = vec![0; self.dim()];
        for c in (0..self.dim()).rev() {
            let e = self.extent(c) as usize;
            p[c] = self.lo[c] + (idx % e) as u64;
            idx /= e;
        }
        p
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.len()).map(move |i| self.point_at(i))
    }

    /// `[lo, hi]` for one-dimensional windows.
    pub fn bounds_1d(&self) -> Result<(u64, u64)> {
        if self.dim() == 1 {
            Ok((self.lo[0], self.hi[0]))
        } else {
            Err(Error::invalid("operation needs a one-dimensional window"))
        }
    }
}

/// An inclusive range of scalars `lo..=hi` in `Z+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarRange {
    pub lo: u64,
    pub hi: u64,
}

impl ScalarRange {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid(format!("empty scalar range {lo}..={hi}")));
        }
        Ok(ScalarRange { lo, hi })
    }

    /// Scalars in order, dropping `0` unless `allow_zero`.
    pub fn iter(&self, allow_zero: bool) -> impl Iterator<Item = u64> {
        (self.lo..=self.hi).filter(move |&d| allow_zero || d != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_indexing_round_trips() {
        let w = Window::new(vec![2, 5], vec![4, 8]).unwrap();
        assert_eq!(w.len(), 12);
        for (i, p) in w.points().enumerate() {
            assert_eq!(w.index_of(&p), Some(i));
        }
        assert_eq!(w.point_at(0), vec![2, 5]);
        assert_eq!(w.point_at(1), vec![2, 6]);
        assert_eq!(w.index_of(&[1, 5]), None);
    }
}
