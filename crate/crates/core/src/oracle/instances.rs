//! Seeded random instances for differential tests and acceptance runs.

use crate::configs::{ConfigSet, ScalarRange, Window};
use crate::dynamics::maps::{compose, gcd, identity, pow, Map};
use crate::dynamics::FiniteTds;
use crate::ramsey::Coloring;
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly random self-map of `{0..n-1}`.
pub fn random_map<R: Rng>(rng: &mut R, n: usize) -> Map {
    (0..n).map(|_| rng.gen_range(0..n)).collect()
}

/// A uniformly random permutation of `{0..n-1}`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Map {
    let mut p: Map = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Conjugates every map by a permutation `σ`: `σ ∘ f ∘ σ⁻¹`.
pub fn relabel(maps: &[Map], sigma: &[usize]) -> Vec<Map> {
    let mut inv = vec![0; sigma.len()];
    for (x, &y) in sigma.iter().enumerate() {
        inv[y] = x;
    }
    maps.iter().map(|f| compose(sigma, &compose(f, &inv))).collect()
}

/// `f × g` on `A × B`, with `(a, b)` stored as `a·|B| + b`.
pub fn product_map(f: &[usize], g: &[usize]) -> Map {
    let nb = g.len();
    (0..f.len() * nb).map(|s| f[s / nb] * nb + g[s % nb]).collect()
}

/// A system on `A × B` (`|A|·|B| <= max_states`) whose generators are
/// products of powers `f^i × g^j` of two random maps, relabeled by a random
/// permutation. Such generators always commute.
pub fn random_commuting_tds<R: Rng>(rng: &mut R, max_states: usize, max_generators: usize) -> FiniteTds {
    let na = rng.gen_range(1..=max_states.clamp(1, 6));
    let nb = rng.gen_range(1..=(max_states / na).max(1));
    let f = random_map(rng, na);
    let g = random_map(rng, nb);
    let k = rng.gen_range(1..=max_generators.max(1));
    let gens: Vec<Map> = (0..k)
        .map(|_| {
            let left = if rng.gen_bool(0.3) { identity(na) } else { pow(&f, rng.gen_range(1..=3)) };
            let right = if rng.gen_bool(0.3) { identity(nb) } else { pow(&g, rng.gen_range(1..=3)) };
            product_map(&left, &right)
        })
        .collect();
    let sigma = random_permutation(rng, na * nb);
    FiniteTds::new(na * nb, relabel(&gens, &sigma)).expect("products of powers commute")
}

/// A minimal system: translations of `Z_a × Z_b` containing a generating
/// set of the group plus random extra steps, relabeled by a random
/// permutation.
pub fn random_minimal_tds<R: Rng>(rng: &mut R, max_states: usize, max_generators: usize) -> FiniteTds {
    let a = rng.gen_range(1..=max_states.clamp(1, 6));
    let b = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=(max_states / a).max(1)) };
    let shift = |sa: usize, sb: usize| -> Map { (0..a * b).map(|s| ((s / b + sa) % a) * b + (s % b + sb) % b).collect() };
    let mut gens = if gcd(a as u64, b as u64) == 1 { vec![shift(1, 1)] } else { vec![shift(1, 0), shift(0, 1)] };
    while gens.len() < rng.gen_range(1..=max_generators.max(1)) {
        gens.push(shift(rng.gen_range(0..a), rng.gen_range(0..b)));
    }
    gens.shuffle(rng);
    let sigma = random_permutation(rng, a * b);
    FiniteTds::new(a * b, relabel(&gens, &sigma)).expect("translations commute")
}

/// Nonzero exponent vectors with entries in `0..=max_entry`.
pub fn random_time_elements<R: Rng>(rng: &mut R, k: usize, count: usize, max_entry: u64) -> Vec<Vec<u64>> {
    (0..count)
        .map(|_| loop {
            let g: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=max_entry)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect()
}

/// A uniformly random nonempty subset of `{0..n-1}`, sorted.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// A random coloring of a one- or two-dimensional window.
pub fn random_coloring<R: Rng>(rng: &mut R, dim: usize, max_side: u64, q: u8) -> Coloring {
    let lo: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..4)).collect();
    let hi: Vec<u64> = lo.iter().map(|&l| l + rng.gen_range(1..max_side)).collect();
    let w = Window::new(lo, hi).expect("lo <= hi");
    let colors = (0..w.len()).map(|_| rng.gen_range(1..=q)).collect();
    Coloring::new(w, q, colors).expect("colors in range")
}

/// A random configuration of `size` distinct points in `[0, max]^dim`.
pub fn random_config<R: Rng>(rng: &mut R, dim: usize, size: usize, max: u64) -> ConfigSet<Vec<u64>> {
    let mut pts: Vec<Vec<u64>> = Vec::new();
    while pts.len() < size {
        let p: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=max)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    ConfigSet::points(pts).expect("distinct points")
}

pub fn random_d_range<R: Rng>(rng: &mut R, max: u64) -> (ScalarRange, bool) {
    let lo = rng.gen_range(0..=2);
    let hi = lo + rng.gen_range(0..max);
    (ScalarRange { lo, hi }, rng.gen_bool(0.2))
}
