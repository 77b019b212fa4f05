use super::maps::{lcm, reduce, Map, PowerCycle};
use super::{minimal_sets, FiniteTds, Time};
use crate::configs::{periodic_gap_certificate, smallest_syndetic_set_finite, FiniteSyndeticCertificate, SyndeticCertificate};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Gap certificate for a subset of the time semiring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GapCertificate {
    /// `Z+` time: covers one full period, hence all of `Z+`.
    Periodic(SyndeticCertificate),
    /// Tabulated time: every element of `R` is a translate.
    Finite(FiniteSyndeticCertificate),
}

impl GapCertificate {
    pub fn verified(&self) -> bool {
        match self {
            GapCertificate::Periodic(c) => c.verified,
            GapCertificate::Finite(c) => c.verified,
        }
    }

    pub fn k_len(&self) -> usize {
        match self {
            GapCertificate::Periodic(c) => c.k.len(),
            GapCertificate::Finite(c) => c.k.len(),
        }
    }
}

/// Whether `U` meets a minimal set, which guarantees a syndetic hitting set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `U` meets a minimal set, so the hitting set is guaranteed syndetic.
    Minimal,
    /// `U` misses every minimal set; nothing is guaranteed.
    NotMinimal,
}

/// `N = {t : ∃x ∈ U, φ(tT_i, x) ∈ U for every i}` on a window of times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSet {
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    #[serde(rename = "T")]
    pub t_list: Vec<Vec<u64>>,
    pub window: [u64; 2],
    #[serde(rename = "N")]
    pub n: Vec<u64>,
    /// `witnesses[i]` is a state of `U` that works for `n[i]`.
    pub witnesses: Vec<usize>,
    /// Eventual period of `t ↦ (φ(tT_1), …, φ(tT_l))`; absent for tabulated time.
    pub preperiod: Option<u64>,
    pub period: Option<u64>,
    pub regime: Regime,
    /// Minimal set the search was restricted to, if requested.
    pub restricted_to: Option<usize>,
    pub certificate: Option<GapCertificate>,
}

impl HittingSet {
    /// Replays every witness with direct map evaluation.
    pub fn verify_witnesses(&self, tds: &FiniteTds) -> Result<bool> {
        let u: BTreeSet<usize> = self.u.iter().copied().collect();
        for (&t, &x) in self.n.iter().zip(&self.witnesses) {
            if !u.contains(&x) {
                return Ok(false);
            }
            for g in &self.t_list {
                if !u.contains(&tds.sample(t, g)?[x]) {
                    return Ok(false);
                }
            }
        }
        Ok(self.n.len() == self.witnesses.len())
    }

    pub fn is_syndetic(&self) -> bool {
        self.certificate.as_ref().is_some_and(GapCertificate::verified)
    }
}

fn check_u(tds: &FiniteTds, u: &[usize]) -> Result<Vec<usize>> {
    if u.is_empty() {
        return Err(Error::EmptyU);
    }
    if let Some(&x) = u.iter().find(|&&x| x >= tds.states()) {
        return Err(Error::invalid(format!("state {x} is outside the system")));
    }
    Ok(crate::util::canonical(u.to_vec()))
}

/// First state of `starts` whose images under all `maps` land in `u`.
fn witness(starts: &[usize], maps: &[&Map], u: &[bool]) -> Option<usize> {
    starts.iter().copied().find(|&x| maps.iter().all(|m| u[m[x]]))
}

/// Multiple hitting-time set of `U` along `T_list`.
///
/// For `Z+` time, `window` bounds the reported `N`; the certificate is built
/// from one detected period and so holds for every `t`. For tabulated time
/// all of `R` is scanned and `window` is ignored. With `restrict_to_minimal`
/// only starting points in the first minimal set meeting `U` are used.
pub fn hitting_time_set(
    tds: &FiniteTds,
    u: &[usize],
    t_list: &[Vec<u64>],
    window: (u64, u64),
    restrict_to_minimal: bool,
) -> Result<HittingSet> {
    let u = check_u(tds, u)?;
    if t_list.is_empty() {
        return Err(Error::invalid("T list must be nonempty"));
    }
    for g in t_list {
        tds.check_element(g)?;
    }
    let report = minimal_sets(tds);
    let first = report.first_meeting(&u);
    let regime = if first.is_some() { Regime::Minimal } else { Regime::NotMinimal };
    let restricted_to = if restrict_to_minimal { first } else { None };
    let starts: Vec<usize> = match restricted_to {
        Some(i) => u.iter().copied().filter(|&x| report.membership[x] == Some(i)).collect(),
        None => u.clone(),
    };
    let mut in_u = vec![false; tds.states()];
    for &x in &u {
        in_u[x] = true;
    }

    let mut out = HittingSet {
        u: u.clone(),
        t_list: t_list.to_vec(),
        window: [window.0, window.1],
        n: Vec::new(),
        witnesses: Vec::new(),
        preperiod: None,
        period: None,
        regime,
        restricted_to,
        certificate: None,
    };

    match tds.time() {
        Time::Nat { .. } => {
            let (lo, hi) = window;
            if lo > hi {
                return Err(Error::invalid("empty time window"));
            }
            let cycles = t_list.iter().map(|g| tds.phi(g).map(|m| PowerCycle::of(&m))).collect::<Result<Vec<_>>>()?;
            let preperiod = cycles.iter().map(|c| c.preperiod).max().unwrap();
            let period = cycles.iter().map(|c| c.period).fold(1, lcm);
            let table: Vec<Option<usize>> = (0..preperiod + period)
                .map(|t| {
                    let maps: Vec<&Map> = cycles.iter().map(|c| c.at(t)).collect();
                    witness(&starts, &maps, &in_u)
                })
                .collect();
            for t in lo..=hi {
                if let Some(x) = table[reduce(t, preperiod, period) as usize] {
                    out.n.push(t);
                    out.witnesses.push(x);
                }
            }
            out.preperiod = Some(preperiod);
            out.period = Some(period);
            out.certificate =
                periodic_gap_certificate(|t| table[t as usize].is_some(), preperiod, period).map(GapCertificate::Periodic);
        }
        Time::Finite { module, .. } => {
            let r = module.ring().size() as u64;
            out.window = [0, r - 1];
            for t in 0..r {
                let maps = t_list.iter().map(|g| tds.sample(t, g)).collect::<Result<Vec<_>>>()?;
                if let Some(x) = witness(&starts, &maps.iter().collect::<Vec<_>>(), &in_u) {
                    out.n.push(t);
                    out.witnesses.push(x);
                }
            }
            let d: BTreeSet<usize> = out.n.iter().map(|&t| t as usize).collect();
            out.certificate = smallest_syndetic_set_finite(module.ring(), &d).map(GapCertificate::Finite);
        }
    }
    Ok(out)
}

/// Return times of a point to itself along one element of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub state: usize,
    /// The point lies in a minimal set, i.e. is uniformly recurrent.
    pub recurrent: bool,
    pub minimal_set: Option<usize>,
    pub along: Vec<u64>,
    /// `{t : φ(t·along, x) = x}` for `t` up to the preperiod plus two
    /// periods (`Z+` time) or over all of `R` (tabulated time).
    pub return_times: Vec<u64>,
    pub preperiod: Option<u64>,
    pub period: Option<u64>,
    pub certificate: Option<GapCertificate>,
}

/// Uniform recurrence of `x`, with return times along `along` (the first
/// generator by default).
pub fn uniform_recurrence(tds: &FiniteTds, x: usize, along: Option<&[u64]>) -> Result<RecurrenceReport> {
    if x >= tds.states() {
        return Err(Error::invalid(format!("state {x} is outside the system")));
    }
    let along = along.map(<[u64]>::to_vec).unwrap_or_else(|| tds.generator_element(0));
    tds.check_element(&along)?;
    let minimal_set = minimal_sets(tds).membership[x];
    let mut r = RecurrenceReport {
        state: x,
        recurrent: minimal_set.is_some(),
        minimal_set,
        along: along.clone(),
        return_times: Vec::new(),
        preperiod: None,
        period: None,
        certificate: None,
    };
    match tds.time() {
        Time::Nat { .. } => {
            let c = PowerCycle::of(&tds.phi(&along)?);
            r.return_times = (0..=c.preperiod + 2 * c.period).filter(|&t| c.at(t)[x] == x).collect();
            r.certificate = periodic_gap_certificate(|t| c.at(t)[x] == x, c.preperiod, c.period).map(GapCertificate::Periodic);
            r.preperiod = Some(c.preperiod);
            r.period = Some(c.period);
        }
        Time::Finite { module, .. } => {
            for t in 0..module.ring().size() as u64 {
                if tds.sample(t, &along)?[x] == x {
                    r.return_times.push(t);
                }
            }
            let d: BTreeSet<usize> = r.return_times.iter().map(|&t| t as usize).collect();
            r.certificate = smallest_syndetic_set_finite(module.ring(), &d).map(GapCertificate::Finite);
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Index of the chosen cover member.
    pub chosen: usize,
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    pub hitting: HittingSet,
}

/// Picks the first cover member meeting a minimal set and returns its
/// hitting-time set.
pub fn cover_recurrence(
    tds: &FiniteTds,
    cover: &[Vec<usize>],
    t_list: &[Vec<u64>],
    window: (u64, u64),
) -> Result<CoverReport> {
    let mut covered = vec![false; tds.states()];
    for member in cover {
        for &x in member {
            if x >= tds.states() {
                return Err(Error::invalid(format!("state {x} is outside the system")));
            }
            covered[x] = true;
        }
    }
    if let Some(missing) = covered.iter().position(|&c| !c) {
        return Err(Error::NotACover { missing });
    }
    let report = minimal_sets(tds);
    let chosen = cover
        .iter()
        .position(|m| report.first_meeting(m).is_some())
        .expect("a cover meets every minimal set");
    let hitting = hitting_time_set(tds, &cover[chosen], t_list, window, false)?;
    Ok(CoverReport { chosen, u: hitting.u.clone(), hitting })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteSemimodule, FiniteSemiring};
    use crate::dynamics::rotation;

    fn rot6() -> FiniteTds {
        FiniteTds::new(6, vec![rotation(6, 1), rotation(6, 2)]).unwrap()
    }

    fn k_of(h: &HittingSet) -> Vec<u64> {
        match h.certificate.as_ref().unwrap() {
            GapCertificate::Periodic(c) => c.k.clone(),
            GapCertificate::Finite(_) => panic!("expected a periodic certificate"),
        }
    }

    #[test]
    fn rotation_examples() {
        let tds = rot6();
        let h = hitting_time_set(&tds, &[0, 1], &[vec![1, 0]], (0, 12), false).unwrap();
        assert_eq!(h.n, vec![0, 1, 5, 6, 7, 11, 12]);
        assert_eq!(k_of(&h), vec![0, 1, 2, 3]);
        assert_eq!(h.regime, Regime::Minimal);
        assert!(h.verify_witnesses(&tds).unwrap());

        let h = hitting_time_set(&tds, &[0, 1], &[vec![1, 0], vec![0, 1]], (0, 30), false).unwrap();
        assert_eq!(h.n, vec![0, 6, 12, 18, 24, 30]);
        assert_eq!(k_of(&h), (0..=5).collect::<Vec<_>>());

        let all: Vec<usize> = (0..6).collect();
        let h = hitting_time_set(&tds, &all, &[vec![1, 0]], (0, 12), false).unwrap();
        assert_eq!(h.n, (0..=12).collect::<Vec<_>>());
        assert_eq!(k_of(&h), vec![0]);
    }

    #[test]
    fn empty_u_is_rejected() {
        assert!(matches!(hitting_time_set(&rot6(), &[], &[vec![1, 0]], (0, 5), false), Err(Error::EmptyU)));
    }

    #[test]
    fn transient_u_is_stamped() {
        // 2 -> 1 -> 0 -> 0
        let tds = FiniteTds::new(3, vec![vec![0, 0, 1]]).unwrap();
        let h = hitting_time_set(&tds, &[1, 2], &[vec![1]], (0, 10), false).unwrap();
        assert_eq!(h.regime, Regime::NotMinimal);
        assert_eq!(h.n, vec![0, 1]);
        assert!(!h.is_syndetic());
    }

    #[test]
    fn recurrence_examples() {
        let tds = FiniteTds::new(6, vec![rotation(6, 1)]).unwrap();
        let r = uniform_recurrence(&tds, 0, None).unwrap();
        assert!(r.recurrent);
        assert_eq!(r.return_times, vec![0, 6, 12]);
        assert_eq!(r.period, Some(6));
        match r.certificate.unwrap() {
            GapCertificate::Periodic(c) => assert_eq!(c.k, (0..=5).collect::<Vec<_>>()),
            _ => unreachable!(),
        }

        let down = FiniteTds::new(3, vec![vec![0, 0, 1]]).unwrap();
        let r = uniform_recurrence(&down, 2, None).unwrap();
        assert!(!r.recurrent);
        assert!(r.certificate.is_none());

        let r = uniform_recurrence(&down, 0, None).unwrap();
        assert!(r.recurrent);
        match r.certificate.unwrap() {
            GapCertificate::Periodic(c) => assert_eq!(c.k, vec![0]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn cover_examples() {
        let tds = FiniteTds::new(6, vec![rotation(6, 1)]).unwrap();
        let c = cover_recurrence(&tds, &[vec![0, 1, 2], vec![3, 4, 5]], &[vec![1]], (0, 20)).unwrap();
        assert_eq!((c.chosen, c.u.clone()), (0, vec![0, 1, 2]));
        assert!(c.hitting.is_syndetic());

        let c = cover_recurrence(&tds, &[(0..6).collect()], &[vec![1]], (0, 20)).unwrap();
        assert_eq!(c.hitting.n, (0..=20).collect::<Vec<_>>());

        let down = FiniteTds::new(3, vec![vec![0, 0, 1]]).unwrap();
        let c = cover_recurrence(&down, &[vec![1, 2], vec![0]], &[vec![1]], (0, 5)).unwrap();
        assert_eq!(c.u, vec![0]);

        assert!(matches!(cover_recurrence(&tds, &[vec![0, 1]], &[vec![1]], (0, 5)), Err(Error::NotACover { missing: 2 })));
    }

    #[test]
    fn tabulated_time_hitting() {
        let module = FiniteSemimodule::regular(FiniteSemiring::zmod(4));
        let maps: Vec<Map> = (0..4).map(|g| rotation(4, g)).collect();
        let tds = FiniteTds::with_finite_time(4, module, maps, vec![1]).unwrap();
        let h = hitting_time_set(&tds, &[0, 1], &[vec![1]], (0, 0), false).unwrap();
        assert_eq!(h.n, vec![0, 1, 3]);
        assert!(h.is_syndetic());
        assert!(h.verify_witnesses(&tds).unwrap());
    }
}
