use crate::algebra::Semiring;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The finite sums `FS(d_1..d_k)`: every sum over a nonempty set of distinct
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsPrefix<E> {
    pub generators: Vec<E>,
    /// Sorted, without repeats.
    pub sums: Vec<E>,
}

pub fn fs_prefix<S>(ring: &S, generators: &[S::Elem]) -> Result<FsPrefix<S::Elem>>
where
    S: Semiring,
    S::Elem: Ord,
{
    if generators.is_empty() {
        return Err(Error::invalid("fs_prefix needs at least one generator"));
    }
    // FS(d_1..d_{k+1}) = FS(d_1..d_k) ∪ {d_{k+1}} ∪ (FS(d_1..d_k) + d_{k+1})
    let mut sums: BTreeSet<S::Elem> = BTreeSet::new();
    for d in generators {
        let shifted = sums.iter().map(|s| ring.add(s, d)).collect::<Result<Vec<_>>>()?;
        sums.insert(d.clone());
        sums.extend(shifted);
    }
    Ok(FsPrefix { generators: generators.to_vec(), sums: sums.into_iter().collect() })
}

impl<E: Ord> FsPrefix<E> {
    /// Elements of the prefix that lie in `set`.
    pub fn intersection<'a>(&'a self, set: &'a BTreeSet<E>) -> impl Iterator<Item = &'a E> + 'a {
        self.sums.iter().filter(move |s| set.contains(*s))
    }

    pub fn is_subset_of(&self, set: &BTreeSet<E>) -> bool {
        self.sums.iter().all(|s| set.contains(s))
    }
}
