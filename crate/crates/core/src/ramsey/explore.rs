use super::Coloring;
use crate::algebra::FiniteSemimodule;
use crate::configs::ConfigSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// `b ∈ B_j`, `b ≠ 0` and `a + Fb ⊆ B_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurBrauerWitness {
    pub j: u8,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

/// Searches `(j, b, a)` in lexicographic order for a witness with scalars
/// `F`. With `require_a_in_class` the anchor must also be colored `j`;
/// without it any `a` of the window is allowed.
pub fn schur_brauer_search(c: &Coloring, f: &[u64], require_a_in_class: bool) -> Option<SchurBrauerWitness> {
    let w = c.window();
    let n = w.len();
    for j in 1..=c.q() {
        let class: Vec<usize> = (0..n).filter(|&i| c.colors()[i] == j).collect();
        for &bi in &class {
            let b = w.point_at(bi);
            if b.iter().all(|&x| x == 0) {
                continue;
            }
            let anchors: Box<dyn Iterator<Item = usize>> =
                if require_a_in_class { Box::new(class.iter().copied()) } else { Box::new(0..n) };
            for ai in anchors {
                let a = w.point_at(ai);
                let ok = f.iter().all(|&s| {
                    let p: Option<Vec<u64>> = a.iter().zip(&b).map(|(x, y)| y.checked_mul(s)?.checked_add(*x)).collect();
                    p.and_then(|p| c.color_at(&p)) == Some(j)
                });
                if ok {
                    return Some(SchurBrauerWitness { j, a, b });
                }
            }
        }
    }
    None
}

/// Outcome for one coloring of a finite semimodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionEntry {
    /// `colors[g]` is the color of element `g`.
    pub colors: Vec<u8>,
    /// First `(j, a, d)` in `(d, a)` order with `a ∈ B_j` and `a + dF ⊆ B_j`.
    pub witness: Option<(u8, usize, usize)>,
    /// The only witnesses use `d = 0`.
    pub zero_d_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub q: u8,
    pub colorings: usize,
    pub require_nonzero_d: bool,
    pub entries: Vec<PartitionEntry>,
    /// Every coloring has a witness, with `d ≠ 0` if that was required.
    pub passed: bool,
}

/// Colors all of `G` in every possible way and looks for a monochromatic
/// `a + dF` with `a` in the same class.
pub fn exhaustive_partition_check(
    g: &FiniteSemimodule,
    q: u8,
    f: &ConfigSet<usize>,
    require_nonzero_d: bool,
    budget: u64,
) -> Result<PartitionReport> {
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    if let Some(&x) = f.elements().iter().find(|&&x| x >= g.size()) {
        return Err(Error::invalid(format!("F element {x} is outside G")));
    }
    let size = g.size() as u32;
    let total = (q as u64).checked_pow(size).filter(|&t| t <= budget).ok_or(Error::BudgetExceeded { budget, partial: None })?;
    let zero_d = g.ring().zero_index();
    let scalars = g.ring().size();
    let mut entries = Vec::with_capacity(total as usize);
    let mut colors = vec![1u8; g.size()];
    for _ in 0..total {
        let find = |nonzero: bool| {
            (0..scalars).filter(|&d| !nonzero || d != zero_d).find_map(|d| {
                (0..g.size()).find_map(|a| {
                    let j = colors[a];
                    f.elements().iter().all(|&x| colors[g.sum(a, g.scale(d, x))] == j).then_some((j, a, d))
                })
            })
        };
        let nonzero = find(true);
        let (witness, zero_d_only) = match nonzero {
            Some(w) => (Some(w), false),
            None => {
                let w = find(false);
                (w, w.is_some())
            }
        };
        entries.push(PartitionEntry { colors: colors.clone(), witness, zero_d_only });
        // odometer over colorings, last element fastest
        for c in colors.iter_mut().rev() {
            if *c < q {
                *c += 1;
                break;
            }
            *c = 1;
        }
    }
    let passed = entries.iter().all(|e| e.witness.is_some() && !(require_nonzero_d && e.zero_d_only));
    Ok(PartitionReport { q, colorings: entries.len(), require_nonzero_d, entries, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteSemiring;

    #[test]
    fn schur_brauer_examples() {
        let parity = Coloring::from_fn(0, 20, 2, |n| if n % 2 == 0 { 1 } else { 2 }).unwrap();
        let w = schur_brauer_search(&parity, &[1], true).unwrap();
        assert_eq!((w.j, w.a, w.b), (1, vec![0], vec![2]));

        let constant = Coloring::from_fn(0, 10, 1, |_| 1).unwrap();
        let w = schur_brauer_search(&constant, &[1, 2], true).unwrap();
        assert_eq!((w.j, w.a, w.b), (1, vec![0], vec![1]));

        let singletons = Coloring::from_fn(0, 4, 5, |n| n as u8 + 1).unwrap();
        assert!(schur_brauer_search(&singletons, &[1], true).is_none());
        // with a free anchor, a = 0 and b = 1 already work
        let w = schur_brauer_search(&singletons, &[1], false).unwrap();
        assert_eq!((w.j, w.a, w.b), (2, vec![0], vec![1]));
    }

    #[test]
    fn boolean_semilattice_passes() {
        let g = FiniteSemimodule::regular(FiniteSemiring::boolean());
        let f = ConfigSet::new(vec![0, 1]).unwrap();
        let r = exhaustive_partition_check(&g, 2, &f, true, 1000).unwrap();
        assert_eq!(r.colorings, 4);
        assert!(r.passed);
        let split = r.entries.iter().find(|e| e.colors == vec![1, 2]).unwrap();
        assert_eq!(split.witness, Some((2, 1, 1)));
    }

    #[test]
    fn single_color_passes() {
        let g = FiniteSemimodule::regular(FiniteSemiring::zmod(5));
        let f = ConfigSet::new(vec![0, 1, 2, 3]).unwrap();
        assert!(exhaustive_partition_check(&g, 1, &f, true, 10).unwrap().passed);
    }

    #[test]
    fn z3_needs_zero_d_for_nonconstant_colorings() {
        let g = FiniteSemimodule::regular(FiniteSemiring::zmod(3));
        let f = ConfigSet::new(vec![0, 1, 2]).unwrap();
        let r = exhaustive_partition_check(&g, 2, &f, true, 100).unwrap();
        assert_eq!(r.colorings, 8);
        assert_eq!(r.entries.iter().filter(|e| e.zero_d_only).count(), 6);
        assert!(r.entries.iter().all(|e| e.witness.is_some()));
        assert!(!r.passed);
        assert!(exhaustive_partition_check(&g, 2, &f, false, 100).unwrap().passed);
    }

    #[test]
    fn budget_is_enforced() {
        let g = FiniteSemimodule::regular(FiniteSemiring::zmod(5));
        let f = ConfigSet::new(vec![0]).unwrap();
        assert!(matches!(exhaustive_partition_check(&g, 3, &f, true, 100), Err(Error::BudgetExceeded { .. })));
    }
}
