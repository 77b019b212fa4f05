use crate::dynamics::maps::{compose, pow, Map};
use crate::dynamics::{minimal_sets, FiniteTds, Time};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest `|X|^n` handled.
pub const MAX_PRODUCT_STATES: usize = 1 << 20;

/// `X^n` with the diagonal action `θ` of the base system and the map family
/// `ξ^t = T_1^t × … × T_n^t`. Points are tuples encoded in base `|X|`, first
/// coordinate most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSystem {
    pub base_states: usize,
    pub n: usize,
    pub t_list: Vec<Vec<u64>>,
    /// Generators of the `ξ` part: `ξ^1` for `Z+` time, every `ξ^t` for
    /// tabulated time.
    pub xi: Vec<Map>,
    /// `θ^g` for each action map `g` of the base.
    pub theta: Vec<Map>,
}

impl ProductSystem {
    pub fn new(tds: &FiniteTds, t_list: &[Vec<u64>]) -> Result<Self> {
        let n = t_list.len();
        if n == 0 {
            return Err(Error::invalid("T list must be nonempty"));
        }
        let states = tds.states();
        let total = (states as u128).pow(n as u32);
        if total > MAX_PRODUCT_STATES as u128 {
            return Err(Error::invalid(format!("product space of {total} points is too large")));
        }
        let xi_parts: Vec<Vec<Map>> = match tds.time() {
            Time::Nat { .. } => vec![t_list.iter().map(|g| tds.phi(g)).collect::<Result<_>>()?],
            Time::Finite { module, .. } => (0..module.ring().size() as u64)
                .map(|t| t_list.iter().map(|g| tds.sample(t, g)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?,
        };
        let sys = ProductSystem { base_states: states, n, t_list: t_list.to_vec(), xi: Vec::new(), theta: Vec::new() };
        let xi = xi_parts.iter().map(|parts| sys.product_map(parts)).collect();
        let theta = tds.action_maps().iter().map(|g| sys.product_map(&vec![g.clone(); n])).collect();
        Ok(ProductSystem { xi, theta, ..sys })
    }

    pub fn size(&self) -> usize {
        self.base_states.pow(self.n as u32)
    }

    pub fn encode(&self, p: &[usize]) -> usize {
        p.iter().fold(0, |acc, &x| acc * self.base_states + x)
    }

    pub fn decode(&self, mut i: usize) -> Vec<usize> {
        let mut p = vec![0; self.n];
        for slot in p.iter_mut().rev() {
            *slot = i % self.base_states;
            i /= self.base_states;
        }
        p
    }

    fn product_map(&self, parts: &[Map]) -> Map {
        (0..self.size())
            .map(|i| {
                let p: Vec<usize> = self.decode(i).iter().zip(parts).map(|(&x, m)| m[x]).collect();
                self.encode(&p)
            })
            .collect()
    }

    /// `{(x, …, x)}`.
    pub fn diagonal(&self) -> Vec<Vec<usize>> {
        (0..self.base_states).map(|x| vec![x; self.n]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub n: usize,
    #[serde(rename = "T")]
    pub t_list: Vec<Vec<u64>>,
    pub lambda: Vec<Vec<usize>>,
    /// `⋃_t ξ^t[Λ]`, sorted.
    pub sigma: Vec<Vec<usize>>,
    pub contains_lambda: bool,
    pub xi_invariant: bool,
    pub theta_invariant: bool,
    /// `ξ^t θ^g = θ^g ξ^t` for the sampled `t` and every action map `g`.
    pub commutes: bool,
    pub commute_failure: Option<CommuteFailure>,
    /// Every point of `Σ` reaches every other under the combined family.
    pub mutually_reachable: bool,
    /// A pair `(from, to)` with `to` unreachable from `from`.
    pub unreachable: Option<(Vec<usize>, Vec<usize>)>,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommuteFailure {
    pub t: u64,
    pub theta: usize,
    pub point: Vec<usize>,
}

/// Invariance plus mutual reachability, the finite form of minimality.
/// Returns the failing pair when the set is invariant but not a single class.
fn minimality(maps: &[Map], size: usize, set: &[usize]) -> (bool, Option<(usize, usize)>) {
    let mut member = vec![false; size];
    for &p in set {
        member[p] = true;
    }
    if !set.iter().all(|&p| maps.iter().all(|m| member[m[p]])) {
        return (false, None);
    }
    let root = set[0];
    let forward = reach(maps, size, root, false);
    if let Some(&p) = set.iter().find(|&&p| !forward[p]) {
        return (true, Some((root, p)));
    }
    let backward = reach(maps, size, root, true);
    if let Some(&p) = set.iter().find(|&&p| !backward[p]) {
        return (true, Some((p, root)));
    }
    (true, None)
}

fn reach(maps: &[Map], size: usize, from: usize, reverse: bool) -> Vec<bool> {
    let preimages: Vec<Vec<usize>> = if reverse {
        let mut pre = vec![Vec::new(); size];
        for m in maps {
            for (p, &q) in m.iter().enumerate() {
                pre[q].push(p);
            }
        }
        pre
    } else {
        Vec::new()
    };
    let mut seen = vec![false; size];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(p) = stack.pop() {
        let next: Vec<usize> = if reverse { preimages[p].clone() } else { maps.iter().map(|m| m[p]).collect() };
        for q in next {
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// Checks that `Σ = ⋃_t ξ^t[Λ]` is minimal for the family generated by `ξ`
/// and `θ`, given a minimal base and a `θ`-minimal `Λ ⊆ X^n`. Both
/// hypotheses are re-checked and reported as `HypothesisFailed`.
/// `t_window` is the range of `t` used for the commutation check under
/// `Z+` time.
pub fn verify_lemma21(
    tds: &FiniteTds,
    t_list: &[Vec<u64>],
    lambda: &[Vec<usize>],
    t_window: (u64, u64),
) -> Result<ProductReport> {
    if !minimal_sets(tds).is_minimal_system() {
        return Err(Error::HypothesisFailed("the base system is not minimal".into()));
    }
    let sys = ProductSystem::new(tds, t_list)?;
    if lambda.is_empty() {
        return Err(Error::HypothesisFailed("Λ is empty".into()));
    }
    let mut lam: Vec<usize> = Vec::with_capacity(lambda.len());
    for p in lambda {
        if p.len() != sys.n || p.iter().any(|&x| x >= sys.base_states) {
            return Err(Error::invalid(format!("{p:?} is not a point of X^{}", sys.n)));
        }
        lam.push(sys.encode(p));
    }
    lam.sort_unstable();
    lam.dedup();
    match minimality(&sys.theta, sys.size(), &lam) {
        (true, None) => {}
        (false, _) => return Err(Error::HypothesisFailed("Λ is not θ-invariant".into())),
        (true, Some((a, b))) => {
            return Err(Error::HypothesisFailed(format!(
                "Λ is not θ-minimal: {:?} does not reach {:?}",
                sys.decode(a),
                sys.decode(b)
            )))
        }
    }

    let mut in_sigma = vec![false; sys.size()];
    let mut stack = lam.clone();
    for &p in &lam {
        in_sigma[p] = true;
    }
    while let Some(p) = stack.pop() {
        for m in &sys.xi {
            if !in_sigma[m[p]] {
                in_sigma[m[p]] = true;
                stack.push(m[p]);
            }
        }
    }
    let sigma: Vec<usize> = (0..sys.size()).filter(|&p| in_sigma[p]).collect();
    let invariant = |maps: &[Map]| sigma.iter().all(|&p| maps.iter().all(|m| in_sigma[m[p]]));

    let mut commute_failure = None;
    let xi_samples: Vec<(u64, Map)> = match tds.time() {
        Time::Nat { .. } => (t_window.0..=t_window.1).map(|t| (t, pow(&sys.xi[0], t))).collect(),
        Time::Finite { .. } => sys.xi.iter().cloned().enumerate().map(|(t, m)| (t as u64, m)).collect(),
    };
    'outer: for (t, x) in &xi_samples {
        for (g, th) in sys.theta.iter().enumerate() {
            let (a, b) = (compose(x, th), compose(th, x));
            if let Some(p) = (0..sys.size()).find(|&p| a[p] != b[p]) {
                commute_failure = Some(CommuteFailure { t: *t, theta: g, point: sys.decode(p) });
                break 'outer;
            }
        }
    }

    let family: Vec<Map> = sys.xi.iter().chain(&sys.theta).cloned().collect();
    let (closed, gap) = minimality(&family, sys.size(), &sigma);
    let mutually_reachable = closed && gap.is_none();
    let report = ProductReport {
        n: sys.n,
        t_list: t_list.to_vec(),
        lambda: lam.iter().map(|&p| sys.decode(p)).collect(),
        sigma: sigma.iter().map(|&p| sys.decode(p)).collect(),
        contains_lambda: lam.iter().all(|&p| in_sigma[p]),
        xi_invariant: invariant(&sys.xi),
        theta_invariant: invariant(&sys.theta),
        commutes: commute_failure.is_none(),
        commute_failure,
        mutually_reachable,
        unreachable: gap.map(|(a, b)| (sys.decode(a), sys.decode(b))),
        minimal: false,
    };
    let minimal = report.contains_lambda && report.xi_invariant && report.theta_invariant && mutually_reachable;
    Ok(ProductReport { minimal, ..report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::rotation;

    #[test]
    fn z4_with_one_and_three() {
        let tds = FiniteTds::new(4, vec![rotation(4, 1)]).unwrap();
        let sys = ProductSystem::new(&tds, &[vec![1], vec![3]]).unwrap();
        let r = verify_lemma21(&tds, &[vec![1], vec![3]], &sys.diagonal(), (0, 8)).unwrap();
        assert!(r.minimal);
        let expected: Vec<Vec<usize>> =
            (0..4).flat_map(|a| (0..4).map(move |b| vec![a, b])).filter(|p| (p[1] + 4 - p[0]) % 2 == 0).collect();
        assert_eq!(r.sigma, expected);
    }

    #[test]
    fn n_one_whole_space() {
        let tds = FiniteTds::new(5, vec![rotation(5, 2)]).unwrap();
        let lam: Vec<Vec<usize>> = (0..5).map(|x| vec![x]).collect();
        let r = verify_lemma21(&tds, &[vec![1]], &lam, (0, 4)).unwrap();
        assert!(r.minimal);
        assert_eq!(r.sigma, lam);
    }

    #[test]
    fn hypotheses_are_checked() {
        let tds = FiniteTds::new(4, vec![vec![0, 0, 1, 2]]).unwrap();
        assert!(matches!(verify_lemma21(&tds, &[vec![1]], &[vec![0]], (0, 4)), Err(Error::HypothesisFailed(_))));
        let tds = FiniteTds::new(4, vec![rotation(4, 1)]).unwrap();
        // a single point is not θ-invariant
        assert!(matches!(
            verify_lemma21(&tds, &[vec![1], vec![1]], &[vec![0, 0]], (0, 4)),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn encoding_round_trips() {
        let tds = FiniteTds::new(3, vec![rotation(3, 1)]).unwrap();
        let sys = ProductSystem::new(&tds, &[vec![1], vec![2], vec![0]]).unwrap();
        for i in 0..sys.size() {
            assert_eq!(sys.encode(&sys.decode(i)), i);
        }
        assert_eq!(sys.decode(5), vec![0, 1, 2]);
    }
}
