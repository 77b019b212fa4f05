use super::Coloring;
use crate::configs::{anchor_box, min_gap_certificate, ConfigSet, LatticeCopy, ScalarRange, SyndeticCertificate, Window};
use crate::util::canonical;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A copy `a + dF` all of whose cells carry `color`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoWitness {
    pub color: u8,
    pub copy: LatticeCopy,
}

impl MonoWitness {
    /// Rebuilds `a + dF` from scratch and checks it against `c`.
    pub fn verify(&self, c: &Coloring) -> bool {
        match realize_in(c.window(), &self.copy.a, self.copy.d, &self.copy.f) {
            Some(cells) => {
                let pts: Vec<Vec<u64>> = cells.iter().map(|&i| c.window().point_at(i)).collect();
                canonical(pts) == self.copy.realized && cells.iter().all(|&i| c.colors()[i] == self.color)
            }
            None => false,
        }
    }
}

/// Cell indices of `a + dF`, or `None` if some point leaves the window.
fn realize_in(w: &Window, a: &[u64], d: u64, f: &ConfigSet<Vec<u64>>) -> Option<Vec<usize>> {
    f.elements()
        .iter()
        .map(|x| {
            let p = a.iter().zip(x).map(|(ac, xc)| xc.checked_mul(d).and_then(|v| v.checked_add(*ac))).collect::<Option<Vec<u64>>>()?;
            w.index_of(&p)
        })
        .collect()
}

/// Walks the copies of `F` inside `w` in `(d, a)` order, handing each one's
/// cell indices to `visit` until it returns `true`.
pub(crate) fn scan_copies(
    w: &Window,
    f: &ConfigSet<Vec<u64>>,
    d_range: ScalarRange,
    allow_zero_d: bool,
    mut visit: impl FnMut(u64, &[u64], &[usize]) -> bool,
) {
    assert_eq!(f.dim(), w.dim(), "F and window dimensions differ");
    let dim = w.dim();
    let mut stride = vec![1i64; dim];
    for c in (0..dim.saturating_sub(1)).rev() {
        stride[c] = stride[c + 1] * w.extent(c + 1) as i64;
    }
    let lin: Vec<i64> = f.elements().iter().map(|x| x.iter().zip(&stride).map(|(&v, s)| v as i64 * s).sum()).collect();
    let mut cells = vec![0usize; f.len()];
    for d in d_range.iter(allow_zero_d) {
        let Some(anchors) = anchor_box(f, w, d) else { continue };
        for i in 0..anchors.len() {
            let a = anchors.point_at(i);
            let base: i64 = (0..dim).map(|c| (a[c] as i64 - w.lo[c] as i64) * stride[c]).sum();
            for (cell, l) in cells.iter_mut().zip(&lin) {
                *cell = (base + d as i64 * l) as usize;
            }
            if visit(d, &a, &cells) {
                return;
            }
        }
    }
}

fn make_copy(c: &Coloring, f: &ConfigSet<Vec<u64>>, d: u64, a: &[u64], cells: &[usize]) -> LatticeCopy {
    LatticeCopy {
        a: a.to_vec(),
        d,
        f: f.clone(),
        realized: canonical(cells.iter().map(|&i| c.window().point_at(i)).collect()),
    }
}

/// The first monochromatic `a + dF` in `(d, a)` order.
pub fn find_mono_copy(c: &Coloring, f: &ConfigSet<Vec<u64>>, d_range: ScalarRange, allow_zero_d: bool) -> Option<MonoWitness> {
    let colors = c.colors();
    let mut found = None;
    scan_copies(c.window(), f, d_range, allow_zero_d, |d, a, cells| {
        let j = colors[cells[0]];
        if cells.iter().all(|&i| colors[i] == j) {
            found = Some(MonoWitness { color: j, copy: make_copy(c, f, d, a, cells) });
            true
        } else {
            false
        }
    });
    found
}

/// The `d` admitting a copy `a + dF` inside `B_j`, with the first such `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffSet {
    #[serde(rename = "F")]
    pub f: ConfigSet<Vec<u64>>,
    pub color: u8,
    #[serde(rename = "D")]
    pub d: Vec<u64>,
    /// `anchors[i]` is the first `a` that works for `d[i]`.
    pub anchors: Vec<Vec<u64>>,
}

impl DiffSet {
    pub fn verify(&self, c: &Coloring) -> bool {
        self.d.len() == self.anchors.len()
            && self.d.iter().zip(&self.anchors).all(|(&d, a)| {
                realize_in(c.window(), a, d, &self.f).is_some_and(|cells| cells.iter().all(|&i| c.colors()[i] == self.color))
            })
    }
}

pub fn diff_set(c: &Coloring, f: &ConfigSet<Vec<u64>>, j: u8, d_range: ScalarRange, allow_zero_d: bool) -> DiffSet {
    let colors = c.colors();
    let mut out = DiffSet { f: f.clone(), color: j, d: Vec::new(), anchors: Vec::new() };
    scan_copies(c.window(), f, d_range, allow_zero_d, |d, a, cells| {
        if out.d.last() != Some(&d) && cells.iter().all(|&i| colors[i] == j) {
            out.d.push(d);
            out.anchors.push(a.to_vec());
        }
        false
    });
    out
}

/// Largest `d` in the range for which some copy of `F` fits in `w`.
pub(crate) fn largest_feasible_d(f: &ConfigSet<Vec<u64>>, w: &Window, d_range: ScalarRange) -> Option<u64> {
    // feasibility is monotone decreasing in d
    let (mut lo, mut hi) = (d_range.lo, d_range.hi);
    anchor_box(f, w, lo)?;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if anchor_box(f, w, mid).is_some() {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(lo)
}

/// Difference set of `S` for one configuration, with a gap certificate over
/// the feasible part of the `d` range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdwEntry {
    pub diff: DiffSet,
    pub certificate: Option<SyndeticCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdwReport {
    /// Gap certificate of `S` itself; `None` when `S` misses the window.
    pub input: Option<SyndeticCertificate>,
    /// Set when `S` does not look syndetic in the window, so the conclusion
    /// is not guaranteed. The computation still runs.
    pub not_syndetic_input: bool,
    pub entries: Vec<VdwEntry>,
}

/// `S` counts as syndetic in a window when its gap interval `K` is at most
/// this fraction of the window length.
pub const DEFAULT_SYNDETIC_RATIO: f64 = 0.5;

pub fn verify_vdw_set(
    s: &[u64],
    window: (u64, u64),
    f_list: &[ConfigSet<Vec<u64>>],
    d_range: ScalarRange,
    allow_zero_d: bool,
    syndetic_ratio: f64,
) -> Result<VdwReport> {
    let (lo, hi) = window;
    let w = Window::new(vec![lo], vec![hi])?;
    let input = match min_gap_certificate(s, window) {
        Ok(c) => Some(c),
        Err(Error::EmptyD) => None,
        Err(e) => return Err(e),
    };
    let not_syndetic_input = input.as_ref().is_none_or(|c| c.k.len() as f64 > syndetic_ratio * w.len() as f64);
    let c = Coloring::from_fn(lo, hi, 2, |n| if s.contains(&n) { 1 } else { 2 })?;
    let entries = f_list
        .iter()
        .map(|f| {
            let diff = diff_set(&c, f, 1, d_range, allow_zero_d);
            let d_lo = if allow_zero_d { d_range.lo } else { d_range.lo.max(1) };
            let certificate = largest_feasible_d(f, &w, d_range)
                .filter(|&d_hi| d_lo <= d_hi)
                .and_then(|d_hi| min_gap_certificate(&diff.d, (d_lo, d_hi)).ok());
            VdwEntry { diff, certificate }
        })
        .collect();
    Ok(VdwReport { input, not_syndetic_input, entries })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterHit {
    pub a: Vec<u64>,
    pub d: u64,
    pub diameter: f64,
}

/// The first `(d, a)` whose image `f(a + dF)` has diameter below `eps` in the
/// max-coordinate metric.
pub fn diameter_search(
    values: impl Fn(&[u64]) -> Vec<f64>,
    window: &Window,
    eps: f64,
    f: &ConfigSet<Vec<u64>>,
    d_range: ScalarRange,
    allow_zero_d: bool,
) -> Option<DiameterHit> {
    let table: Vec<Vec<f64>> = window.points().map(|p| values(&p)).collect();
    let mut hit = None;
    scan_copies(window, f, d_range, allow_zero_d, |d, a, cells| {
        let dims = table[cells[0]].len();
        let diameter = (0..dims)
            .map(|k| {
                let vals = cells.iter().map(|&i| table[i][k]);
                vals.clone().fold(f64::NEG_INFINITY, f64::max) - vals.fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        if diameter < eps {
            hit = Some(DiameterHit { a: a.to_vec(), d, diameter });
            true
        } else {
            false
        }
    });
    hit
}
