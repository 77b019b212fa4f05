use crate::dynamics::maps::{compose, identity, Map};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

pub const DEFAULT_SEMIGROUP_BUDGET: usize = 1 << 20;

/// Composition closure of a family of self-maps of `{0..states-1}`, with the
/// identity included. `identity_adjoined` records whether the identity had to
/// be added or was already a product of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformationSemigroup {
    pub states: usize,
    pub generators: Vec<Map>,
    pub identity_adjoined: bool,
    /// Identity first, then products in breadth-first order.
    pub elements: Vec<Map>,
    #[serde(skip)]
    index: HashMap<Map, usize>,
}

impl TransformationSemigroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        if self.index.is_empty() && !self.elements.is_empty() {
            return self.elements.iter().position(|e| e == f);
        }
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &[usize]) -> bool {
        self.index_of(f).is_some()
    }

    /// First pair `(f, g)` with `f ∘ g` outside the carrier.
    pub fn closure_violation(&self) -> Option<(usize, usize)> {
        for (i, f) in self.elements.iter().enumerate() {
            for (j, g) in self.elements.iter().enumerate() {
                if !self.contains(&compose(f, g)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Rebuilds the lookup table after deserialization.
    pub fn reindexed(mut self) -> Self {
        self.index = self.elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        self
    }
}

/// Breadth-first closure of `generators` under composition. Fails with
/// `BudgetExceeded` once more than `budget` distinct maps have been found.
pub fn generate_semigroup(states: usize, generators: &[Map], budget: usize) -> Result<TransformationSemigroup> {
    if states == 0 {
        return Err(Error::invalid("state space must be nonempty"));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.len() != states || g.iter().any(|&y| y >= states) {
            return Err(Error::InvalidAction(format!("generator {i} is not a self-map of {states} states")));
        }
    }
    let id = identity(states);
    let mut seen: HashMap<Map, usize> = HashMap::new();
    let mut generated = Vec::new();
    let mut queue = VecDeque::new();
    let over = |n: usize| {
        if n > budget {
            Err(Error::BudgetExceeded { budget: budget as u64, partial: None })
        } else {
            Ok(())
        }
    };
    for g in generators {
        if !seen.contains_key(g) {
            seen.insert(g.clone(), generated.len());
            generated.push(g.clone());
            queue.push_back(g.clone());
            over(generated.len())?;
        }
    }
    while let Some(f) = queue.pop_front() {
        for g in generators {
            let h = compose(g, &f);
            if !seen.contains_key(&h) {
                seen.insert(h.clone(), generated.len());
                generated.push(h.clone());
                queue.push_back(h);
                over(generated.len())?;
            }
        }
    }
    let identity_adjoined = !seen.contains_key(&id);
    let mut elements = Vec::with_capacity(generated.len() + 1);
    elements.push(id.clone());
    elements.extend(generated.into_iter().filter(|e| *e != id));
    Ok(TransformationSemigroup {
        states,
        generators: generators.to_vec(),
        identity_adjoined,
        elements,
        index: HashMap::new(),
    }
    .reindexed())
}
