//! Self-maps of `{0..n-1}` stored as arrays.

use std::collections::HashMap;

pub type Map = Vec<usize>;

pub fn identity(n: usize) -> Map {
    (0..n).collect()
}

/// `f ∘ g`, i.e. `x ↦ f(g(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Map {
    g.iter().map(|&x| f[x]).collect()
}

/// `f^e` by repeated squaring.
pub fn pow(f: &[usize], mut e: u64) -> Map {
    let mut base = f.to_vec();
    let mut acc = identity(f.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&base, &acc);
        }
        e >>= 1;
        if e > 0 {
            base = compose(&base, &base);
        }
    }
    acc
}

/// The powers of a map on a finite set are eventually periodic:
/// `f^(t + period) = f^t` for all `t >= preperiod`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCycle {
    pub preperiod: u64,
    pub period: u64,
    /// `f^0 .. f^(preperiod + period - 1)`.
    pub powers: Vec<Map>,
}

impl PowerCycle {
    pub fn of(f: &[usize]) -> PowerCycle {
        let mut seen: HashMap<Map, u64> = HashMap::new();
        let mut powers = Vec::new();
        let mut cur = identity(f.len());
        loop {
            if let Some(&first) = seen.get(&cur) {
                let t = powers.len() as u64;
                return PowerCycle { preperiod: first, period: t - first, powers };
            }
            seen.insert(cur.clone(), powers.len() as u64);
            let next = compose(f, &cur);
            powers.push(cur);
            cur = next;
        }
    }

    /// Reduces `t` to the index of an equal power.
    pub fn reduce(&self, t: u64) -> usize {
        reduce(t, self.preperiod, self.period) as usize
    }

    pub fn at(&self, t: u64) -> &Map {
        &self.powers[self.reduce(t)]
    }
}

pub(crate) fn reduce(t: u64, preperiod: u64, period: u64) -> u64 {
    if t < preperiod {
        t
    } else {
        preperiod + (t - preperiod) % period
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
