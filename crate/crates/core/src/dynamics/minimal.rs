use super::FiniteTds;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

/// The minimal subsets of a finite system. On a finite space these are the
/// strongly connected classes of the orbit graph that no orbit leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalSetReport {
    /// Sorted sets, ordered by their smallest state.
    pub minimal_sets: Vec<Vec<usize>>,
    /// `membership[x]` is the index of the minimal set containing `x`.
    pub membership: Vec<Option<usize>>,
}

impl MinimalSetReport {
    /// The whole space is minimal.
    pub fn is_minimal_system(&self) -> bool {
        self.minimal_sets.len() == 1 && self.membership.iter().all(Option::is_some)
    }

    /// Index of the first minimal set meeting `u`.
    pub fn first_meeting(&self, u: &[usize]) -> Option<usize> {
        let mut hits: Vec<usize> = u.iter().filter_map(|&x| self.membership.get(x).copied().flatten()).collect();
        hits.sort_unstable();
        hits.first().copied()
    }
}

pub fn minimal_sets(tds: &FiniteTds) -> MinimalSetReport {
    minimal_sets_of(tds.states(), tds.action_maps())
}

/// Minimal sets of the semigroup generated by `maps` on `{0..states-1}`.
pub fn minimal_sets_of(states: usize, maps: &[Vec<usize>]) -> MinimalSetReport {
    let mut graph = DiGraph::<(), ()>::with_capacity(states, states * maps.len());
    let nodes: Vec<_> = (0..states).map(|_| graph.add_node(())).collect();
    for m in maps {
        for x in 0..states {
            graph.add_edge(nodes[x], nodes[m[x]], ());
        }
    }
    let mut class = vec![usize::MAX; states];
    let sccs = tarjan_scc(&graph);
    for (c, scc) in sccs.iter().enumerate() {
        for n in scc {
            class[n.index()] = c;
        }
    }
    let mut minimal_sets: Vec<Vec<usize>> = sccs
        .iter()
        .enumerate()
        .filter(|(c, scc)| scc.iter().all(|n| maps.iter().all(|m| class[m[n.index()]] == *c)))
        .map(|(_, scc)| {
            let mut v: Vec<usize> = scc.iter().map(|n| n.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    minimal_sets.sort();
    let mut membership = vec![None; states];
    for (i, set) in minimal_sets.iter().enumerate() {
        for &x in set {
            membership[x] = Some(i);
        }
    }
    MinimalSetReport { minimal_sets, membership }
}

/// Forward orbit of `x` (including `x`) under the semigroup generated by `maps`.
pub fn orbit_of(states: usize, maps: &[Vec<usize>], x: usize) -> Vec<bool> {
    let mut seen = vec![false; states];
    let mut stack = vec![x];
    seen[x] = true;
    while let Some(y) = stack.pop() {
        for m in maps {
            let z = m[y];
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::rotation;

    #[test]
    fn examples() {
        let r = minimal_sets(&FiniteTds::new(5, vec![rotation(5, 1)]).unwrap());
        assert_eq!(r.minimal_sets, vec![vec![0, 1, 2, 3, 4]]);
        assert!(r.is_minimal_system());

        let r = minimal_sets(&FiniteTds::new(3, vec![vec![0, 0, 1]]).unwrap());
        assert_eq!(r.minimal_sets, vec![vec![0]]);
        assert_eq!(r.membership, vec![Some(0), None, None]);

        let r = minimal_sets(&FiniteTds::new(6, vec![rotation(6, 2)]).unwrap());
        assert_eq!(r.minimal_sets, vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }

    #[test]
    fn minimal_sets_are_exactly_the_closed_mutually_reachable_classes() {
        // 0 -> 1 -> 2 -> 1, 3 -> 3, 4 -> 0
        let maps = vec![vec![1, 2, 1, 3, 0]];
        let r = minimal_sets_of(5, &maps);
        assert_eq!(r.minimal_sets, vec![vec![1, 2], vec![3]]);
        for set in &r.minimal_sets {
            for &x in set {
                let o = orbit_of(5, &maps, x);
                assert!(set.iter().all(|&y| o[y]));
                assert_eq!(o.iter().filter(|&&b| b).count(), set.len());
            }
        }
    }
}
