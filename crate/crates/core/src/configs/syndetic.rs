use crate::algebra::FiniteSemiring;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A finite `K` with `(K + t) ∩ D ≠ ∅` for every translate `t` of the window
/// such that `K + t` stays inside the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyndeticCertificate {
    #[serde(rename = "D")]
    pub d: Vec<u64>,
    #[serde(rename = "K")]
    pub k: Vec<u64>,
    pub window: [u64; 2],
    pub verified: bool,
    pub failing_t: Option<u64>,
    /// The translates that were actually tested; `None` if no `K + t` fits.
    #[serde(default)]
    pub checked: Option<[u64; 2]>,
}

impl SyndeticCertificate {
    /// Re-runs the check from the certificate's own data.
    pub fn reverify(&self) -> Result<bool> {
        let again = check_syndetic(&self.d, (self.window[0], self.window[1]), &self.k)?;
        Ok(again.verified == self.verified && again.failing_t == self.failing_t)
    }

    /// `max K`, the gap bound the certificate asserts.
    pub fn gap(&self) -> u64 {
        self.k.iter().copied().max().unwrap_or(0)
    }
}

pub fn check_syndetic(d: &[u64], window: (u64, u64), k: &[u64]) -> Result<SyndeticCertificate> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::invalid("empty window"));
    }
    if k.is_empty() {
        return Err(Error::EmptyK);
    }
    let k: Vec<u64> = crate::util::canonical(k.to_vec());
    let d: Vec<u64> = crate::util::canonical(d.iter().copied().filter(|x| (lo..=hi).contains(x)).collect());
    let kmax = *k.last().unwrap();
    let width = (hi - lo + 1) as usize;
    let mut member = vec![false; width];
    for &x in &d {
        member[(x - lo) as usize] = true;
    }
    let mut cert = SyndeticCertificate { d, k, window: [lo, hi], verified: true, failing_t: None, checked: None };
    let Some(t_hi) = hi.checked_sub(kmax).filter(|&t| t >= lo) else {
        return Ok(cert);
    };
    cert.checked = Some([lo, t_hi]);
    for t in lo..=t_hi {
        if !cert.k.iter().any(|&x| member[(x + t - lo) as usize]) {
            cert.verified = false;
            cert.failing_t = Some(t);
            break;
        }
    }
    Ok(cert)
}

/// The interval `K = {0..g}` with `g` the largest distance any point of the
/// window has to wait for the next element of `D`.
pub fn min_gap_certificate(d: &[u64], window: (u64, u64)) -> Result<SyndeticCertificate> {
    let (lo, hi) = window;
    let inside: Vec<u64> = crate::util::canonical(d.iter().copied().filter(|x| (lo..=hi).contains(x)).collect());
    let (Some(&first), Some(&last)) = (inside.first(), inside.last()) else {
        return Err(Error::EmptyD);
    };
    let inner = inside.windows(2).map(|p| p[1] - p[0] - 1).max().unwrap_or(0);
    let g = (first - lo).max(inner).max(hi - last);
    check_syndetic(&inside, window, &(0..=g).collect::<Vec<_>>())
}

/// Gap certificate for an eventually periodic subset of `Z+`: `member(t)`
/// must describe the set on `0..preperiod + period`, after which it repeats
/// with `period`. The certificate's window covers one full period beyond the
/// largest gap, which is enough to conclude syndeticity on all of `Z+`.
/// Returns `None` when the periodic part is empty, i.e. the set is finite.
pub fn periodic_gap_certificate(member: impl Fn(u64) -> bool, preperiod: u64, period: u64) -> Option<SyndeticCertificate> {
    assert!(period > 0);
    let end = preperiod + period;
    let table: Vec<bool> = (0..end).map(&member).collect();
    let at = |t: u64| if t < end { table[t as usize] } else { table[(preperiod + (t - preperiod) % period) as usize] };
    if !(preperiod..end).any(at) {
        return None;
    }
    let mut g = 0;
    let mut next = None;
    // scanning backwards gives next-member distances in one pass
    for t in (0..end + period).rev() {
        if at(t) {
            next = Some(t);
        }
        if t < end {
            g = g.max(next.unwrap() - t);
        }
    }
    let hi = end - 1 + g;
    let d: Vec<u64> = (0..=hi).filter(|&t| at(t)).collect();
    check_syndetic(&d, (0, hi), &(0..=g).collect::<Vec<_>>()).ok()
}

/// Syndeticity in a finite `(R, +)`, where every `t ∈ R` is a translate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSyndeticCertificate {
    #[serde(rename = "D")]
    pub d: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub verified: bool,
    pub failing_t: Option<usize>,
}

pub fn check_syndetic_finite(ring: &FiniteSemiring, d: &BTreeSet<usize>, k: &[usize]) -> Result<FiniteSyndeticCertificate> {
    if k.is_empty() {
        return Err(Error::EmptyK);
    }
    if let Some(&x) = k.iter().chain(d.iter()).find(|&&x| x >= ring.size()) {
        return Err(Error::invalid(format!("element {x} is outside the semiring")));
    }
    let failing_t = (0..ring.size()).find(|&t| !k.iter().any(|&x| d.contains(&ring.sum(x, t))));
    Ok(FiniteSyndeticCertificate {
        d: d.iter().copied().collect(),
        k: crate::util::canonical(k.to_vec()),
        verified: failing_t.is_none(),
        failing_t,
    })
}

/// A smallest `K` making `D` syndetic in the finite `(R, +)`, found by trying
/// subsets in order of size. `None` if even `K = R` fails.
pub fn smallest_syndetic_set_finite(ring: &FiniteSemiring, d: &BTreeSet<usize>) -> Option<FiniteSyndeticCertificate> {
    let n = ring.size();
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let cert = check_syndetic_finite(ring, d, &idx).ok()?;
            if cert.verified {
                return Some(cert);
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else { break };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}
