use crate::ramsey::Coloring;
use crate::{Error, Result};
use petgraph::algo::{has_path_connecting, tarjan_scc};
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The patterns a one-dimensional coloring shows through a fixed shape, and
/// the shift transitions between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubshiftApprox {
    /// Offsets read at each position; always contains `0`.
    pub shape: Vec<u64>,
    pub window: [u64; 2],
    /// Distinct patterns in order of first occurrence.
    pub nodes: Vec<Vec<u8>>,
    /// First position at which each pattern occurs.
    pub first_seen: Vec<u64>,
    /// `(a, b)` when pattern `b` follows pattern `a` one step later.
    pub transitions: Vec<(usize, usize)>,
    /// Node indices of the minimal class reached at the end of the window.
    pub minimal_class: Vec<usize>,
    /// Results are exact only for eventually periodic colorings.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakCentralCertificate {
    /// The certified color `j = η(0)`.
    pub j: u8,
    /// The uniformly recurrent pattern and where it first occurs.
    pub eta: Vec<u8>,
    pub eta_position: u64,
    /// `η` is reached from the pattern at the start of the window, so the two
    /// orbit closures meet.
    pub eta_in_orbit_closure: bool,
    /// `S = B_j` on the window.
    #[serde(rename = "S")]
    pub s: Vec<u64>,
    pub exact: bool,
    pub label: String,
}

pub fn furstenberg_subshift(
    c: &Coloring,
    shape: &[u64],
    assume_eventually_periodic: bool,
) -> Result<(SubshiftApprox, WeakCentralCertificate)> {
    let (lo, hi) = c.window().bounds_1d()?;
    let shape = crate::util::canonical(shape.to_vec());
    if shape.first() != Some(&0) {
        return Err(Error::invalid("pattern shape must contain 0"));
    }
    let reach = *shape.last().unwrap();
    if hi - lo < reach + 1 {
        return Err(Error::WindowTooSmall(format!(
            "window [{lo}, {hi}] holds fewer than two translates of a shape of reach {reach}"
        )));
    }
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut nodes = Vec::new();
    let mut first_seen = Vec::new();
    let mut walk = Vec::new();
    for t in lo..=hi - reach {
        let pattern: Vec<u8> = shape.iter().map(|&o| c.color_at_int(t + o).unwrap()).collect();
        let id = *index.entry(pattern.clone()).or_insert_with(|| {
            nodes.push(pattern);
            first_seen.push(t);
            nodes.len() - 1
        });
        walk.push(id);
    }
    let mut transitions: Vec<(usize, usize)> = walk.windows(2).map(|w| (w[0], w[1])).collect();
    transitions.sort_unstable();
    transitions.dedup();

    // every pattern reaches the last one along the walk, so the class of the
    // last pattern is the unique class no transition leaves
    let mut graph = DiGraph::<(), ()>::new();
    let ids: Vec<_> = (0..nodes.len()).map(|_| graph.add_node(())).collect();
    for &(a, b) in &transitions {
        graph.add_edge(ids[a], ids[b], ());
    }
    let last = *walk.last().unwrap();
    let mut minimal_class: Vec<usize> = tarjan_scc(&graph)
        .into_iter()
        .find(|scc| scc.contains(&ids[last]))
        .unwrap()
        .into_iter()
        .map(|n| n.index())
        .collect();
    minimal_class.sort_unstable();
    let eta_id = *minimal_class.iter().min_by_key(|&&n| first_seen[n]).unwrap();
    let eta = nodes[eta_id].clone();
    let j = eta[0];
    let eta_in_orbit_closure = has_path_connecting(&graph, ids[walk[0]], ids[eta_id], None);
    let label = if assume_eventually_periodic { "exact (eventually periodic coloring)" } else { "approximation, window-limited" };
    let approx = SubshiftApprox {
        shape,
        window: [lo, hi],
        nodes,
        first_seen: first_seen.clone(),
        transitions,
        minimal_class,
        exact: assume_eventually_periodic,
    };
    let cert = WeakCentralCertificate {
        j,
        eta,
        eta_position: first_seen[eta_id],
        eta_in_orbit_closure,
        s: c.class_ints(j),
        exact: assume_eventually_periodic,
        label: label.into(),
    };
    Ok((approx, cert))
}

/// Re-checks a certificate against the coloring without reusing the
/// construction: `S = B_j`, `η` really occurs where claimed, `j = η(0)`, and
/// the class is closed under transitions and strongly connected.
pub fn verify_weak_central(c: &Coloring, approx: &SubshiftApprox, cert: &WeakCentralCertificate) -> bool {
    let Ok((lo, hi)) = c.window().bounds_1d() else { return false };
    let direct: Vec<u64> = (lo..=hi).filter(|&n| c.color_at_int(n) == Some(cert.j)).collect();
    let occurs = approx.shape.iter().zip(&cert.eta).all(|(&o, &col)| c.color_at_int(cert.eta_position + o) == Some(col));
    let class = &approx.minimal_class;
    let in_class = |n: usize| class.contains(&n);
    let closed = approx.transitions.iter().all(|&(a, b)| !in_class(a) || in_class(b));
    let connected = class.iter().all(|&start| {
        let mut seen = vec![start];
        let mut i = 0;
        while i < seen.len() {
            for &(a, b) in &approx.transitions {
                if a == seen[i] && !seen.contains(&b) {
                    seen.push(b);
                }
            }
            i += 1;
        }
        class.iter().all(|n| seen.contains(n))
    });
    let eta_listed = class.iter().any(|&n| approx.nodes[n] == cert.eta);
    direct == cert.s && occurs && cert.eta.first() == Some(&cert.j) && closed && connected && eta_listed
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_word() {
        let c = Coloring::from_fn(0, 19, 2, |n| if n % 2 == 0 { 1 } else { 2 }).unwrap();
        let (a, w) = furstenberg_subshift(&c, &[0, 1, 2, 3], true).unwrap();
        assert_eq!(a.minimal_class.len(), 2);
        assert_eq!(w.j, 1);
        assert_eq!(w.s, (0..=19).step_by(2).collect::<Vec<_>>());
        assert!(w.eta_in_orbit_closure);
        assert!(verify_weak_central(&c, &a, &w));
        let mut forged = w.clone();
        forged.s.pop();
        assert!(!verify_weak_central(&c, &a, &forged));
    }

    #[test]
    fn single_defect_then_constant() {
        let c = Coloring::from_fn(0, 15, 2, |n| if n == 0 { 2 } else { 1 }).unwrap();
        let (a, w) = furstenberg_subshift(&c, &[0, 1, 2], true).unwrap();
        assert_eq!(a.nodes[a.minimal_class[0]], vec![1, 1, 1]);
        assert_eq!(w.j, 1);
        assert_eq!(w.s, (1..=15).collect::<Vec<_>>());
    }

    #[test]
    fn constant_and_too_small() {
        let c = Coloring::from_fn(0, 9, 3, |_| 3).unwrap();
        let (_, w) = furstenberg_subshift(&c, &[0, 1], false).unwrap();
        assert_eq!((w.j, w.s.len()), (3, 10));
        assert_eq!(w.label, "approximation, window-limited");
        assert!(matches!(furstenberg_subshift(&c, &[0, 9], true), Err(Error::WindowTooSmall(_))));
    }
}
