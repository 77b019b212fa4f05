//! Exact Grünwald numbers `N(q, F)` over the chains `G_n = {0..n-1}` of `Z+`
//! and `G_n = {0..n-1}^m` of `Z+^m`.
//!
//! Cells are colored one at a time along a fixed order in which every `G_n`
//! is a prefix (the natural order in one dimension, cubes shell by shell in
//! higher dimensions). A copy `a + dF` is tested exactly once, when its last
//! cell is colored, so a branch dies as soon as it creates a monochromatic
//! copy. The longest copy-free prefix `L` then gives `N`: the first `n` whose
//! `G_n` has more than `L` cells.

use super::{find_mono_copy, Coloring};
use crate::configs::{ConfigSet, ScalarRange, Window};
use crate::error::PartialSearch;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

pub const DEFAULT_BUDGET: u64 = 200_000_000_000;

#[derive(Clone, Debug)]
pub struct GrunwaldOptions {
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// With `d = 0` allowed every single cell is a copy, so `N = 1`.
    pub allow_zero_d: bool,
}

impl Default for GrunwaldOptions {
    fn default() -> Self {
        GrunwaldOptions { budget: DEFAULT_BUDGET, threads: None, allow_zero_d: false }
    }
}

/// Search statistics. They depend only on `(q, F)`, not on the thread count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrunwaldStats {
    /// Color placements tried.
    pub nodes: u64,
    /// Placements rejected because they completed a monochromatic copy.
    pub prunes: u64,
    pub split_depth: usize,
    pub subtrees: u64,
    /// Length of the longest copy-free prefix of the cell order.
    pub longest_prefix: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrunwaldResult {
    #[serde(rename = "N")]
    pub n: u64,
    pub q: u8,
    #[serde(rename = "F")]
    pub f: ConfigSet<Vec<u64>>,
    /// A copy-free coloring of `G_{N-1}`; `None` when `N = 1`.
    pub extremal: Option<Coloring>,
    pub stats: GrunwaldStats,
}

impl GrunwaldResult {
    /// Checks the extremal coloring from scratch: right size, colors in
    /// range, and no monochromatic copy with `d ≠ 0`.
    pub fn verify(&self) -> bool {
        let Some(c) = &self.extremal else { return self.n == 1 };
        let w = c.window();
        let expected = Window::cube(self.f.dim(), self.n - 1);
        *w == expected
            && c.q() == self.q
            && find_mono_copy(c, &self.f, ScalarRange { lo: 1, hi: self.n }, false).is_none()
    }
}

/// Cells in search order with, for each cell, the copies it completes.
struct Layout {
    cells: Vec<Vec<u64>>,
    /// Every copy through this cell is the cell alone (`|F| = 1`).
    dead: Vec<bool>,
    /// Other cells of each completed copy, `group` indices per copy.
    group: usize,
    start: Vec<usize>,
    data: Vec<u32>,
}

impl Layout {
    fn new(f: &ConfigSet<Vec<u64>>, side: u64) -> Layout {
        let dim = f.dim();
        let mut cells: Vec<Vec<u64>> = Window::cube(dim, side).points().collect();
        cells.sort_by(|a, b| (a.iter().max(), a).cmp(&(b.iter().max(), b)));
        let index: HashMap<&[u64], u32> = cells.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();
        let group = f.len() - 1;
        let mut dead = vec![false; cells.len()];
        let mut start = vec![0];
        let mut data = Vec::new();
        for (p, cell) in cells.iter().enumerate() {
            let reach = cell.iter().copied().max().unwrap().max(1);
            let mut copies: Vec<Vec<u32>> = Vec::new();
            for (k, fk) in f.elements().iter().enumerate() {
                for d in 1..=reach {
                    let Some(a) = cell.iter().zip(fk).map(|(x, y)| x.checked_sub(d * y)).collect::<Option<Vec<u64>>>() else {
                        break;
                    };
                    if group == 0 {
                        dead[p] = true;
                        break;
                    }
                    let others: Option<Vec<u32>> = f
                        .elements()
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != k)
                        .map(|(_, g)| {
                            let q: Vec<u64> = a.iter().zip(g).map(|(x, y)| x + d * y).collect();
                            index.get(q.as_slice()).copied().filter(|&i| (i as usize) < p)
                        })
                        .collect();
                    if let Some(mut o) = others {
                        o.sort_unstable();
                        copies.push(o);
                    }
                }
            }
            copies.sort_unstable();
            copies.dedup();
            data.extend(copies.into_iter().flatten());
            start.push(data.len());
        }
        Layout { cells, dead, group, start, data }
    }

    fn len(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    fn completes_copy(&self, colors: &[u8], p: usize, c: u8) -> bool {
        if self.dead[p] {
            return true;
        }
        if self.group == 0 {
            return false;
        }
        self.data[self.start[p]..self.start[p + 1]].chunks_exact(self.group).any(|g| g.iter().all(|&i| colors[i as usize] == c))
    }
}

struct Shared<'a> {
    layout: &'a Layout,
    q: u8,
    budget: u64,
    nodes: AtomicU64,
    abort: AtomicBool,
    /// Some branch stopped early because of `abort`.
    cut: AtomicBool,
    hit_cap: AtomicBool,
}

#[derive(Default)]
struct Branch {
    best: Vec<u8>,
    nodes: u64,
    prunes: u64,
    unflushed: u64,
}

impl Shared<'_> {
    fn flush(&self, b: &mut Branch) {
        let total = self.nodes.fetch_add(b.unflushed, Ordering::Relaxed) + b.unflushed;
        b.unflushed = 0;
        if total > self.budget {
            self.abort.store(true, Ordering::Relaxed);
        }
    }

    /// Extends a copy-free prefix `colors[..p]` in every canonical way,
    /// stopping at `stop` if given (prefix collection) or exploring fully.
    fn dfs(&self, colors: &mut Vec<u8>, used: u8, b: &mut Branch, stop: Option<usize>, out: &mut Vec<(Vec<u8>, u8)>) {
        let p = colors.len();
        if p > b.best.len() {
            b.best = colors.clone();
        }
        if stop == Some(p) {
            out.push((colors.clone(), used));
            return;
        }
        if p == self.layout.len() {
            self.hit_cap.store(true, Ordering::Relaxed);
            self.abort.store(true, Ordering::Relaxed);
            return;
        }
        let top = if p == 0 { 1 } else { self.q.min(used + 1) };
        for c in 1..=top {
            b.nodes += 1;
            b.unflushed += 1;
            if b.unflushed >= 4096 {
                self.flush(b);
            }
            if self.abort.load(Ordering::Relaxed) {
                self.cut.store(true, Ordering::Relaxed);
                return;
            }
            if self.layout.completes_copy(colors, p, c) {
                b.prunes += 1;
                continue;
            }
            colors.push(c);
            self.dfs(colors, used.max(c), b, stop, out);
            colors.pop();
        }
    }
}

fn split_depth(q: u8) -> usize {
    if q == 1 {
        return 0;
    }
    let mut depth = 0;
    let mut count = 1u64;
    while count < 4096 && depth < 16 {
        count *= q as u64;
        depth += 1;
    }
    depth
}

enum Outcome {
    Done { best: Vec<u8>, stats: GrunwaldStats },
    Cap,
    Budget { best: Vec<u8> },
}

fn search(layout: &Layout, q: u8, opts: &GrunwaldOptions) -> Outcome {
    let shared = Shared {
        layout,
        q,
        budget: opts.budget,
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        cut: AtomicBool::new(false),
        hit_cap: AtomicBool::new(false),
    };
    let depth = split_depth(q);
    let mut root = Branch::default();
    let mut prefixes = Vec::new();
    shared.dfs(&mut Vec::new(), 0, &mut root, Some(depth), &mut prefixes);
    shared.flush(&mut root);

    let run = || {
        prefixes
            .par_iter()
            .map(|(prefix, used)| {
                let mut b = Branch::default();
                let mut colors = prefix.clone();
                shared.dfs(&mut colors, *used, &mut b, None, &mut Vec::new());
                shared.flush(&mut b);
                b
            })
            .collect::<Vec<_>>()
    };
    let branches = match opts.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    };

    // earliest branch wins ties, so the extremal coloring is the
    // lexicographically first one of maximal length
    let mut best = root.best;
    let mut stats = GrunwaldStats { nodes: root.nodes, prunes: root.prunes, split_depth: depth, subtrees: prefixes.len() as u64, longest_prefix: 0 };
    for b in branches {
        stats.nodes += b.nodes;
        stats.prunes += b.prunes;
        if b.best.len() > best.len() {
            best = b.best;
        }
    }
    stats.longest_prefix = best.len() as u64;
    if shared.hit_cap.load(Ordering::Relaxed) {
        Outcome::Cap
    } else if shared.cut.load(Ordering::Relaxed) {
        Outcome::Budget { best }
    } else {
        Outcome::Done { best, stats }
    }
}

/// Smallest `n` with `n^dim > len`.
fn side_exceeding(len: u64, dim: usize) -> u64 {
    let mut n = 1u64;
    while n.saturating_pow(dim as u32) <= len {
        n += 1;
    }
    n
}

/// Colors the cube `{0..side-1}^dim` from a coloring of the shell order.
fn cube_coloring(layout: &Layout, shell: &[u8], side: u64, q: u8) -> Option<Coloring> {
    if side == 0 {
        return None;
    }
    let dim = layout.cells[0].len();
    let w = Window::cube(dim, side);
    let mut colors = vec![0u8; w.len()];
    for (cell, &c) in layout.cells.iter().zip(shell) {
        if let Some(i) = w.index_of(cell) {
            colors[i] = c;
        }
    }
    Coloring::new(w, q, colors).ok()
}

pub fn grunwald_number(q: u8, f: &ConfigSet<Vec<u64>>, opts: &GrunwaldOptions) -> Result<GrunwaldResult> {
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    let dim = f.dim();
    if opts.allow_zero_d {
        let stats = GrunwaldStats { nodes: 1, prunes: 1, ..Default::default() };
        return Ok(GrunwaldResult { n: 1, q, f: f.clone(), extremal: None, stats });
    }
    let mut side = side_exceeding(63, dim);
    loop {
        let layout = Layout::new(f, side);
        match search(&layout, q, opts) {
            Outcome::Cap => side *= 2,
            Outcome::Budget { best } => {
                let lower = side_exceeding(best.len() as u64, dim);
                let witness = cube_coloring(&layout, &best, lower - 1, q);
                let partial = Some(Box::new(PartialSearch { lower_bound: lower, witness }));
                return Err(Error::BudgetExceeded { budget: opts.budget, partial });
            }
            Outcome::Done { best, stats } => {
                let n = side_exceeding(best.len() as u64, dim);
                let extremal = cube_coloring(&layout, &best, n - 1, q);
                return Ok(GrunwaldResult { n, q, f: f.clone(), extremal, stats });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(q: u8, f: &[u64]) -> GrunwaldResult {
        grunwald_number(q, &ConfigSet::ints(f).unwrap(), &GrunwaldOptions::default()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(n(1, &[0, 1]).n, 2);
        assert_eq!(n(2, &[0, 1]).n, 3);
        assert_eq!(n(1, &[0]).n, 1);
        // {5} needs a cell at 5 before any copy exists
        assert_eq!(n(3, &[5]).n, 6);
        // classical van der Waerden numbers W(2,3) = 9, W(2,4) = 35
        assert_eq!(n(2, &[0, 1, 2]).n, 9);
        assert_eq!(n(2, &[0, 1, 2, 3]).n, 35);
    }

    #[test]
    fn extremal_coloring_is_certified() {
        let r = n(2, &[0, 1, 2]);
        assert!(r.verify());
        assert_eq!(r.extremal.as_ref().unwrap().digits().unwrap(), "11221122");
        let mut bad = r.clone();
        bad.n = 10;
        assert!(!bad.verify());
    }

    #[test]
    fn thread_count_does_not_change_the_answer() {
        let f = ConfigSet::ints(&[0, 1, 3]).unwrap();
        let one = grunwald_number(2, &f, &GrunwaldOptions { threads: Some(1), ..Default::default() }).unwrap();
        let four = grunwald_number(2, &f, &GrunwaldOptions { threads: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn budget_reports_partial_progress() {
        let f = ConfigSet::ints(&[0, 1, 2, 3]).unwrap();
        match grunwald_number(2, &f, &GrunwaldOptions { budget: 2000, ..Default::default() }) {
            Err(Error::BudgetExceeded { partial: Some(p), .. }) => {
                assert!(p.lower_bound >= 2);
                let w = p.witness.unwrap();
                assert!(find_mono_copy(&w, &f, ScalarRange { lo: 1, hi: 100 }, false).is_none());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn planar_corner() {
        // every 1-coloring of {0,1}^2 contains the corner {(0,0),(1,0),(0,1)}
        let f = ConfigSet::points(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let r = grunwald_number(1, &f, &GrunwaldOptions::default()).unwrap();
        assert_eq!(r.n, 2);
        assert!(r.verify());
        let r2 = grunwald_number(2, &f, &GrunwaldOptions::default()).unwrap();
        assert!(r2.verify());
        assert!(r2.n >= 3);
    }

    #[test]
    fn zero_d_collapses() {
        let f = ConfigSet::ints(&[0, 1, 2]).unwrap();
        let r = grunwald_number(3, &f, &GrunwaldOptions { allow_zero_d: true, ..Default::default() }).unwrap();
        assert_eq!(r.n, 1);
    }
}
