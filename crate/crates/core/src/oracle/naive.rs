//! Reference implementations: direct loops over every candidate, no pruning,
//! no symmetry reduction, no period detection. They use the domain types
//! and nothing else from the optimized modules.

use crate::configs::{ConfigSet, ScalarRange, Window};
use crate::dynamics::{FiniteTds, Time};
use crate::ramsey::Coloring;
use crate::{Error, Result};

/// Colorings enumerated by [`naive_grunwald`] before giving up.
pub const ORACLE_BUDGET: u64 = 1_000_000;

/// All `a + d·x` for `x ∈ F`, or `None` if some point leaves `w`.
fn cells(w: &Window, f: &ConfigSet<Vec<u64>>, a: &[u64], d: u64) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for x in f.elements() {
        let mut p = Vec::new();
        for c in 0..a.len() {
            p.push(a[c].checked_add(d.checked_mul(x[c])?)?);
        }
        if (0..p.len()).any(|c| p[c] < w.lo[c] || p[c] > w.hi[c]) {
            return None;
        }
        let mut idx = 0usize;
        for ((&x, &lo), &hi) in p.iter().zip(&w.lo).zip(&w.hi) {
            idx = idx * (hi - lo + 1) as usize + (x - lo) as usize;
        }
        out.push(idx);
    }
    Some(out)
}

/// Every point of `[0, hi_0] × … × [0, hi_m]` in lexicographic order.
fn boxes(hi: &[u64]) -> Vec<Vec<u64>> {
    let mut all = vec![Vec::new()];
    for &h in hi {
        let mut next = Vec::new();
        for p in &all {
            for v in 0..=h {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        all = next;
    }
    all
}

fn scalars(d_range: ScalarRange, allow_zero_d: bool) -> Vec<u64> {
    (d_range.lo..=d_range.hi).filter(|&d| d != 0 || allow_zero_d).collect()
}

/// Number of copies `a + dF` inside `w`, by trying every anchor in
/// `[0, hi]`.
pub fn naive_copy_count(f: &ConfigSet<Vec<u64>>, w: &Window, d_range: ScalarRange, allow_zero_d: bool) -> usize {
    let anchors = boxes(&w.hi);
    let mut n = 0;
    for d in scalars(d_range, allow_zero_d) {
        for a in &anchors {
            if cells(w, f, a, d).is_some() {
                n += 1;
            }
        }
    }
    n
}

/// First monochromatic copy in `(d, a)` order as `(color, a, d)`.
pub fn naive_mono(c: &Coloring, f: &ConfigSet<Vec<u64>>, d_range: ScalarRange, allow_zero_d: bool) -> Option<(u8, Vec<u64>, u64)> {
    let anchors = boxes(&c.window().hi);
    for d in scalars(d_range, allow_zero_d) {
        for a in &anchors {
            if let Some(ix) = cells(c.window(), f, a, d) {
                let j = c.colors()[ix[0]];
                if ix.iter().all(|&i| c.colors()[i] == j) {
                    return Some((j, a.clone(), d));
                }
            }
        }
    }
    None
}

/// `(d, first a)` for every `d` admitting a copy of `F` in color `j`.
pub fn naive_diffset(
    c: &Coloring,
    f: &ConfigSet<Vec<u64>>,
    j: u8,
    d_range: ScalarRange,
    allow_zero_d: bool,
) -> Vec<(u64, Vec<u64>)> {
    let anchors = boxes(&c.window().hi);
    let mut out = Vec::new();
    for d in scalars(d_range, allow_zero_d) {
        for a in &anchors {
            if let Some(ix) = cells(c.window(), f, a, d) {
                if ix.iter().all(|&i| c.colors()[i] == j) {
                    out.push((d, a.clone()));
                    break;
                }
            }
        }
    }
    out
}

/// Smallest `n <= n_max` such that every `q`-coloring of `{0..n-1}^m` has a
/// monochromatic `a + dF` with `d >= 1`, by listing every coloring.
pub fn naive_grunwald(q: u8, f: &ConfigSet<Vec<u64>>, n_max: u64) -> Result<Option<u64>> {
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    let m = f.dim();
    let mut spent = 0u64;
    for n in 1..=n_max {
        let w = Window::cube(m, n);
        let cells_n = w.len() as u32;
        let count = (q as u64).checked_pow(cells_n).filter(|&c| spent + c <= ORACLE_BUDGET);
        let Some(count) = count else {
            return Err(Error::BudgetExceeded { budget: ORACLE_BUDGET, partial: None });
        };
        spent += count;
        let mut copies = Vec::new();
        for d in 1..=n {
            for a in boxes(&w.hi) {
                if let Some(ix) = cells(&w, f, &a, d) {
                    copies.push(ix);
                }
            }
        }
        let mut colors = vec![0u8; cells_n as usize];
        let mut all_hit = true;
        for code in 0..count {
            let mut rest = code;
            for slot in colors.iter_mut() {
                *slot = (rest % q as u64) as u8;
                rest /= q as u64;
            }
            let hit = copies.iter().any(|ix| ix.iter().all(|&i| colors[i] == colors[ix[0]]));
            if !hit {
                all_hit = false;
                break;
            }
        }
        if all_hit {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Applies `φ(t·g)` to `x` step by step.
fn act_naive(tds: &FiniteTds, t: u64, g: &[u64], x: usize) -> usize {
    match tds.time() {
        Time::Nat { .. } => {
            let mut y = x;
            for (i, &e) in g.iter().enumerate() {
                for _ in 0..e * t {
                    y = tds.generators()[i][y];
                }
            }
            y
        }
        Time::Finite { module, maps, .. } => maps[module.scale(t as usize, g[0] as usize)][x],
    }
}

/// `{t in window : ∃ x ∈ U with φ(t·T_i, x) ∈ U for every i}`. Under
/// tabulated time the window is replaced by the whole semiring.
pub fn naive_hitting(tds: &FiniteTds, u: &[usize], t_list: &[Vec<u64>], window: (u64, u64)) -> Vec<u64> {
    let (lo, hi) = match tds.time() {
        Time::Nat { .. } => window,
        Time::Finite { module, .. } => (0, module.ring().size() as u64 - 1),
    };
    let mut out = Vec::new();
    for t in lo..=hi {
        let mut hit = false;
        for &x in u {
            let mut all = true;
            for g in t_list {
                if !u.contains(&act_naive(tds, t, g, x)) {
                    all = false;
                }
            }
            if all {
                hit = true;
            }
        }
        if hit {
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::rotation;

    #[test]
    fn grunwald_examples() {
        let f01 = ConfigSet::ints(&[0, 1]).unwrap();
        assert_eq!(naive_grunwald(2, &f01, 10).unwrap(), Some(3));
        assert_eq!(naive_grunwald(1, &f01, 10).unwrap(), Some(2));
        let f012 = ConfigSet::ints(&[0, 1, 2]).unwrap();
        assert_eq!(naive_grunwald(2, &f012, 9).unwrap(), Some(9));
        assert_eq!(naive_grunwald(2, &f012, 8).unwrap(), None);
        assert!(matches!(naive_grunwald(3, &f012, 30), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn hitting_examples() {
        let tds = FiniteTds::new(6, vec![rotation(6, 1)]).unwrap();
        assert_eq!(naive_hitting(&tds, &[0, 1], &[vec![1]], (0, 12)), vec![0, 1, 5, 6, 7, 11, 12]);
        assert_eq!(naive_hitting(&tds, &[0, 1, 2, 3, 4, 5], &[vec![1]], (0, 4)), vec![0, 1, 2, 3, 4]);
        assert!(naive_hitting(&tds, &[], &[vec![1]], (0, 4)).is_empty());
    }

    #[test]
    fn copy_count_example() {
        let f = ConfigSet::ints(&[0, 1, 2]).unwrap();
        assert_eq!(naive_copy_count(&f, &Window::interval(0, 8), ScalarRange { lo: 1, hi: 4 }, false), 16);
    }
}
