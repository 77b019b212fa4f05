use super::TransformationSemigroup;
use crate::dynamics::maps::{compose, Map};
use serde::{Deserialize, Serialize};

/// Minimal left ideals and idempotents of a finite transformation semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    /// Each ideal as a list of maps, in carrier order; ideals ordered by
    /// their first element.
    pub minimal_left_ideals: Vec<Vec<Map>>,
    pub idempotents: Vec<Map>,
    /// Idempotents lying in some minimal left ideal.
    pub minimal_idempotents: Vec<Map>,
}

/// Principal left ideals `S ∘ f` are compared directly: `S ∘ f` is minimal
/// exactly when `S ∘ h = S ∘ f` for every `h ∈ S ∘ f`, since any smaller left
/// ideal inside it would contain some `S ∘ h`. Every minimal left ideal is
/// principal, so this finds all of them.
pub fn ideal_analysis(s: &TransformationSemigroup) -> IdealReport {
    let n = s.len();
    let left: Vec<Vec<usize>> = s
        .elements
        .iter()
        .map(|f| {
            let mut ideal: Vec<usize> = s
                .elements
                .iter()
                .map(|g| s.index_of(&compose(g, f)).expect("carrier is closed under composition"))
                .collect();
            ideal.sort_unstable();
            ideal.dedup();
            ideal
        })
        .collect();
    let mut in_minimal = vec![false; n];
    let mut ideals: Vec<Vec<usize>> = Vec::new();
    for f in 0..n {
        if in_minimal[f] {
            continue;
        }
        let l = &left[f];
        if l.iter().all(|&h| left[h].len() == l.len()) {
            for &h in l {
                in_minimal[h] = true;
            }
            ideals.push(l.clone());
        }
    }
    ideals.sort_by_key(|i| i[0]);
    let idempotents: Vec<usize> = (0..n).filter(|&i| compose(&s.elements[i], &s.elements[i]) == s.elements[i]).collect();
    let maps = |ix: &[usize]| ix.iter().map(|&i| s.elements[i].clone()).collect::<Vec<_>>();
    IdealReport {
        minimal_left_ideals: ideals.iter().map(|i| maps(i)).collect(),
        minimal_idempotents: maps(&idempotents.iter().copied().filter(|&i| in_minimal[i]).collect::<Vec<_>>()),
        idempotents: maps(&idempotents),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::rotation;
    use crate::ellis::generate_semigroup;

    #[test]
    fn group_has_one_ideal() {
        let s = generate_semigroup(4, &[rotation(4, 1)], 100).unwrap();
        let r = ideal_analysis(&s);
        assert_eq!(r.minimal_left_ideals.len(), 1);
        assert_eq!(r.minimal_left_ideals[0].len(), 4);
        assert_eq!(r.idempotents, vec![vec![0, 1, 2, 3]]);
        assert_eq!(r.minimal_idempotents, r.idempotents);
    }

    #[test]
    fn identity_and_constant() {
        let s = generate_semigroup(2, &[vec![0, 0]], 100).unwrap();
        let r = ideal_analysis(&s);
        assert_eq!(r.minimal_left_ideals, vec![vec![vec![0, 0]]]);
        assert_eq!(r.idempotents, vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(r.minimal_idempotents, vec![vec![0, 0]]);
    }

    #[test]
    fn constants_form_the_unique_minimal_ideal() {
        let consts: Vec<Map> = (0..3).map(|x| vec![x; 3]).collect();
        let s = generate_semigroup(3, &consts, 100).unwrap();
        let r = ideal_analysis(&s);
        assert_eq!(r.minimal_left_ideals.len(), 1);
        let mut ideal = r.minimal_left_ideals[0].clone();
        ideal.sort();
        assert_eq!(ideal, consts);
        assert_eq!(r.minimal_idempotents.len(), 3);
    }

    #[test]
    fn every_minimal_ideal_has_an_idempotent() {
        let gens = vec![vec![1, 0, 2, 3], vec![0, 0, 2, 2]];
        let s = generate_semigroup(4, &gens, 100).unwrap();
        let r = ideal_analysis(&s);
        for ideal in &r.minimal_left_ideals {
            assert!(ideal.iter().any(|u| compose(u, u) == *u));
        }
    }
}
