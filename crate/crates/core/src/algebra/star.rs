use super::{FiniteSemiring, WindowedSemiring};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// `{t : s + t = 0}`.
pub fn nil_set(ring: &FiniteSemiring, s: usize) -> Result<BTreeSet<usize>> {
    if s >= ring.size() {
        return Err(Error::invalid(format!("element {s} not in semiring of size {}", ring.size())));
    }
    let zero = ring.zero_index();
    Ok((0..ring.size()).filter(|&t| ring.sum(s, t) == zero).collect())
}

/// Nil set in a windowed model of `Z+` or `Z+^n`: addition is cancellative and
/// has no negatives, so it is `{0}` for `s = 0` and empty otherwise.
pub fn nil_set_windowed(ring: &WindowedSemiring, s: &[u64]) -> Result<Vec<Vec<u64>>> {
    if s.len() != ring.dim() || s.iter().any(|&x| x > ring.bound()) {
        return Err(Error::invalid(format!("{s:?} is not in the window")));
    }
    Ok(if s.iter().all(|&x| x == 0) { vec![vec![0; ring.dim()]] } else { vec![] })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarResult {
    pub k: usize,
    pub holds: bool,
    /// A choice `s_1..s_k` whose nil sets cover the semiring.
    pub witness: Option<Vec<usize>>,
    /// True when the answer came from the cancellative-infinite shortcut
    /// rather than enumeration.
    pub analytic: bool,
    pub nodes: u64,
}

/// Decides whether no `k` nil sets cover `R`.
///
/// Covers are searched over sets of at most `k` distinct elements in
/// lexicographic order; a cover by fewer than `k` sets is padded by repeating
/// its last element. Each visited subset counts as one node against `budget`.
pub fn check_star_condition(ring: &FiniteSemiring, k: usize, budget: u64) -> Result<StarResult> {
    let n = ring.size();
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds |R| = {n}")));
    }
    let nil: Vec<Vec<bool>> = (0..n)
        .map(|s| {
            let set = nil_set(ring, s)?;
            Ok((0..n).map(|t| set.contains(&t)).collect())
        })
        .collect::<Result<_>>()?;

    let mut search = CoverSearch { nil: &nil, n, k, budget, nodes: 0, chosen: Vec::new() };
    let found = search.dfs(0, &vec![false; n])?;
    let witness = found.then(|| {
        let mut w = search.chosen.clone();
        let last = *w.last().expect("a cover uses at least one set");
        w.resize(k, last);
        w
    });
    Ok(StarResult { k, holds: witness.is_none(), witness, analytic: false, nodes: search.nodes })
}

struct CoverSearch<'a> {
    nil: &'a [Vec<bool>],
    n: usize,
    k: usize,
    budget: u64,
    nodes: u64,
    chosen: Vec<usize>,
}

impl CoverSearch<'_> {
    fn dfs(&mut self, start: usize, covered: &[bool]) -> Result<bool> {
        for s in start..self.n {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget, partial: None });
            }
            let next: Vec<bool> = covered.iter().zip(&self.nil[s]).map(|(&a, &b)| a || b).collect();
            self.chosen.push(s);
            if next.iter().all(|&c| c) {
                return Ok(true);
            }
            if self.chosen.len() < self.k && self.dfs(s + 1, &next)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Windowed `Z+` and `Z+^n` model cancellative infinite monoids, for which
/// the condition holds for every `k`.
pub fn check_star_condition_windowed(_ring: &WindowedSemiring, k: usize) -> StarResult {
    StarResult { k, holds: true, witness: None, analytic: true, nodes: 0 }
}
