use super::windowed::{LatticeModule, WindowedSemiring};
use super::{FiniteSemimodule, FiniteSemiring, Semimodule, Semiring};
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Semiring axioms, each with a fixed witness arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    ZeroAnnihilates,
    LeftDistributive,
    RightDistributive,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::AddIdentity,
        Axiom::MulAssociative,
        Axiom::MulIdentity,
        Axiom::ZeroAnnihilates,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
    ];

    pub fn arity(self) -> usize {
        match self {
            Axiom::AddIdentity | Axiom::MulIdentity | Axiom::ZeroAnnihilates => 1,
            Axiom::AddCommutative => 2,
            _ => 3,
        }
    }

    /// Evaluates both sides at `w`. Errors (overflow in windowed models) are
    /// propagated so callers can skip the instance.
    pub fn holds<S: Semiring>(self, s: &S, w: &[S::Elem]) -> Result<bool> {
        let (zero, one) = (s.zero(), s.one());
        Ok(match self {
            Axiom::AddCommutative => s.add(&w[0], &w[1])? == s.add(&w[1], &w[0])?,
            Axiom::AddAssociative => {
                s.add(&s.add(&w[0], &w[1])?, &w[2])? == s.add(&w[0], &s.add(&w[1], &w[2])?)?
            }
            Axiom::AddIdentity => s.add(&zero, &w[0])? == w[0] && s.add(&w[0], &zero)? == w[0],
            Axiom::MulAssociative => {
                s.mul(&s.mul(&w[0], &w[1])?, &w[2])? == s.mul(&w[0], &s.mul(&w[1], &w[2])?)?
            }
            Axiom::MulIdentity => s.mul(&one, &w[0])? == w[0] && s.mul(&w[0], &one)? == w[0],
            Axiom::ZeroAnnihilates => s.mul(&zero, &w[0])? == zero && s.mul(&w[0], &zero)? == zero,
            // z·(x + y) = z·x + z·y with witness (x, y, z)
            Axiom::LeftDistributive => {
                s.mul(&w[2], &s.add(&w[0], &w[1])?)? == s.add(&s.mul(&w[2], &w[0])?, &s.mul(&w[2], &w[1])?)?
            }
            // (x + y)·z = x·z + y·z
            Axiom::RightDistributive => {
                s.mul(&s.add(&w[0], &w[1])?, &w[2])? == s.add(&s.mul(&w[0], &w[2])?, &s.mul(&w[1], &w[2])?)?
            }
        })
    }
}

/// Semimodule axioms. Witnesses carry scalars and elements separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleAxiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    /// `(r + t)g = rg ∔ tg`
    ScalarSumDistributes,
    /// `r(g ∔ h) = rg ∔ rh`
    ElementSumDistributes,
    /// `1g = g`
    UnitActsTrivially,
    /// `0g = 𝔢`
    ZeroActsAsZero,
}

impl ModuleAxiom {
    pub const ALL: [ModuleAxiom; 7] = [
        ModuleAxiom::AddCommutative,
        ModuleAxiom::AddAssociative,
        ModuleAxiom::AddIdentity,
        ModuleAxiom::ScalarSumDistributes,
        ModuleAxiom::ElementSumDistributes,
        ModuleAxiom::UnitActsTrivially,
        ModuleAxiom::ZeroActsAsZero,
    ];

    /// `(number of scalars, number of elements)` in a witness.
    pub fn arity(self) -> (usize, usize) {
        match self {
            ModuleAxiom::AddCommutative => (0, 2),
            ModuleAxiom::AddAssociative => (0, 3),
            ModuleAxiom::AddIdentity => (0, 1),
            ModuleAxiom::ScalarSumDistributes => (2, 1),
            ModuleAxiom::ElementSumDistributes => (1, 2),
            ModuleAxiom::UnitActsTrivially | ModuleAxiom::ZeroActsAsZero => (0, 1),
        }
    }

    pub fn holds<M, R>(self, m: &M, ring: &R, w: &ModuleWitness<M::Scalar, M::Elem>) -> Result<bool>
    where
        M: Semimodule,
        R: Semiring<Elem = M::Scalar>,
    {
        let (r, g) = (&w.scalars, &w.elements);
        let e = m.zero();
        Ok(match self {
            ModuleAxiom::AddCommutative => m.add(&g[0], &g[1])? == m.add(&g[1], &g[0])?,
            ModuleAxiom::AddAssociative => {
                m.add(&m.add(&g[0], &g[1])?, &g[2])? == m.add(&g[0], &m.add(&g[1], &g[2])?)?
            }
            ModuleAxiom::AddIdentity => m.add(&e, &g[0])? == g[0] && m.add(&g[0], &e)? == g[0],
            ModuleAxiom::ScalarSumDistributes => {
                m.act(&ring.add(&r[0], &r[1])?, &g[0])? == m.add(&m.act(&r[0], &g[0])?, &m.act(&r[1], &g[0])?)?
            }
            ModuleAxiom::ElementSumDistributes => {
                m.act(&r[0], &m.add(&g[0], &g[1])?)? == m.add(&m.act(&r[0], &g[0])?, &m.act(&r[0], &g[1])?)?
            }
            ModuleAxiom::UnitActsTrivially => m.act(&ring.one(), &g[0])? == g[0],
            ModuleAxiom::ZeroActsAsZero => m.act(&ring.zero(), &g[0])? == e,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleWitness<S, E> {
    pub scalars: Vec<S>,
    pub elements: Vec<E>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation<W> {
    pub axiom: String,
    pub witness: W,
}

/// Result of checking a structure against its axioms.
///
/// `valid` holds exactly when `violations` is empty. Every witness reproduces
/// its inequality when evaluated against the same structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport<W> {
    pub valid: bool,
    pub violations: Vec<Violation<W>>,
    #[serde(default)]
    pub zero_adjoined: bool,
    pub instances_checked: u64,
    /// Instances skipped because evaluation left a windowed model.
    #[serde(default)]
    pub instances_skipped: u64,
}

impl<W> ValidationReport<W> {
    fn from_parts(violations: Vec<Violation<W>>, zero_adjoined: bool, checked: u64, skipped: u64) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
            zero_adjoined,
            instances_checked: checked,
            instances_skipped: skipped,
        }
    }
}

/// Calls `f` on every tuple in `0..n` of length `k`, lexicographically, until it
/// returns `false`.
fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut t = vec![0usize; k];
    loop {
        if !f(&t) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Exhaustively checks every semiring axiom on the tables. Each violated axiom
/// is reported once, with its lexicographically first witness.
pub fn validate_semiring(ring: &FiniteSemiring) -> ValidationReport<Vec<usize>> {
    let n = ring.size();
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for axiom in Axiom::ALL {
        let mut found = None;
        for_each_tuple(n, axiom.arity(), |w| {
            checked += 1;
            if !axiom.holds(ring, w).expect("finite tables are total") {
                found = Some(w.to_vec());
                return false;
            }
            true
        });
        if let Some(w) = found {
            violations.push(Violation { axiom: axiom_name(axiom), witness: w });
        }
    }
    ValidationReport::from_parts(violations, ring.zero_adjoined(), checked, 0)
}

/// Checks the bound semiring and every semimodule axiom exhaustively.
/// Semiring violations are reported with a `semiring.` prefix and a
/// scalar-only witness.
pub fn validate_semimodule(module: &FiniteSemimodule) -> ValidationReport<ModuleWitness<usize, usize>> {
    let ring = module.ring();
    let ring_report = validate_semiring(ring);
    let mut violations: Vec<_> = ring_report
        .violations
        .into_iter()
        .map(|v| Violation {
            axiom: format!("semiring.{}", v.axiom),
            witness: ModuleWitness { scalars: v.witness, elements: vec![] },
        })
        .collect();
    let mut checked = ring_report.instances_checked;
    let (m, g) = (ring.size(), module.size());
    for axiom in ModuleAxiom::ALL {
        let (ns, ne) = axiom.arity();
        let mut found = None;
        for_each_tuple(m, ns, |scalars| {
            let mut stop = false;
            for_each_tuple(g, ne, |elements| {
                checked += 1;
                let w = ModuleWitness { scalars: scalars.to_vec(), elements: elements.to_vec() };
                if !axiom.holds(module, ring, &w).expect("finite tables are total") {
                    found = Some(w);
                    stop = true;
                    return false;
                }
                true
            });
            !stop
        });
        if let Some(w) = found {
            violations.push(Violation { axiom: module_axiom_name(axiom), witness: w });
        }
    }
    ValidationReport::from_parts(violations, ring.zero_adjoined(), checked, 0)
}

fn axiom_name(a: Axiom) -> String {
    serde_json::to_value(a).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn module_axiom_name(a: ModuleAxiom) -> String {
    serde_json::to_value(a).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

/// Draws a coordinate that is small enough for products to usually stay in
/// the window, with occasional draws from the full range.
fn draw(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    if rng.gen_bool(0.25) {
        rng.gen_range(0..=bound)
    } else {
        let small = (bound as f64).cbrt().floor() as u64;
        rng.gen_range(0..=small.max(1).min(bound))
    }
}

/// Checks the semiring axioms of a windowed model. Windows with at most 8
/// elements are checked exhaustively; otherwise `samples` random instances are
/// drawn per axiom. Instances whose evaluation leaves the window are skipped
/// and counted.
pub fn validate_windowed_semiring(ring: &WindowedSemiring, samples: usize, seed: u64) -> ValidationReport<Vec<Vec<u64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (dim, bound) = (ring.dim(), ring.bound());
    let total = (bound.saturating_add(1)).checked_pow(dim as u32);
    let exhaustive = matches!(total, Some(t) if t <= 8);
    let all: Vec<Vec<u64>> = if exhaustive { lattice_points(dim, bound) } else { vec![] };

    let mut violations = Vec::new();
    let (mut checked, mut skipped) = (0u64, 0u64);
    for axiom in Axiom::ALL {
        let k = axiom.arity();
        let mut eval = |w: Vec<Vec<u64>>| -> Option<Vec<Vec<u64>>> {
            let res = match ring {
                WindowedSemiring::Nat(r) => {
                    let ws: Vec<u64> = w.iter().map(|v| v[0]).collect();
                    axiom.holds(r, &ws)
                }
                WindowedSemiring::NatVec(r) => axiom.holds(r, &w),
            };
            match res {
                Ok(true) => {
                    checked += 1;
                    None
                }
                Ok(false) => {
                    checked += 1;
                    Some(w)
                }
                Err(_) => {
                    skipped += 1;
                    None
                }
            }
        };
        let mut found = None;
        if exhaustive {
            for_each_tuple(all.len(), k, |idx| {
                found = eval(idx.iter().map(|&i| all[i].clone()).collect());
                found.is_none()
            });
        } else {
            for _ in 0..samples {
                let w = (0..k).map(|_| (0..dim).map(|_| draw(&mut rng, bound)).collect()).collect();
                found = eval(w);
                if found.is_some() {
                    break;
                }
            }
        }
        if let Some(w) = found {
            violations.push(Violation { axiom: axiom_name(axiom), witness: w });
        }
    }
    ValidationReport::from_parts(violations, false, checked, skipped)
}

/// Checks the semimodule axioms of `(Z+^dim, ∔)` over the windowed scalars,
/// by the same exhaustive-or-sampled policy as [`validate_windowed_semiring`].
pub fn validate_windowed_module(
    module: &LatticeModule,
    samples: usize,
    seed: u64,
) -> ValidationReport<ModuleWitness<u64, Vec<u64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = module.scalars();
    let (dim, bound) = (module.dim, module.bound);
    let total = (bound.saturating_add(1)).checked_pow(dim as u32);
    let exhaustive = matches!(total, Some(t) if t <= 8);
    let points = if exhaustive { lattice_points(dim, bound) } else { vec![] };

    let mut violations = Vec::new();
    let (mut checked, mut skipped) = (0u64, 0u64);
    for axiom in ModuleAxiom::ALL {
        let (ns, ne) = axiom.arity();
        let mut eval = |w: ModuleWitness<u64, Vec<u64>>| match axiom.holds(module, &ring, &w) {
            Ok(true) => {
                checked += 1;
                None
            }
            Ok(false) => {
                checked += 1;
                Some(w)
            }
            Err(_) => {
                skipped += 1;
                None
            }
        };
        let mut found = None;
        if exhaustive {
            for_each_tuple((bound + 1) as usize, ns, |sc| {
                let mut stop = false;
                for_each_tuple(points.len(), ne, |el| {
                    found = eval(ModuleWitness {
                        scalars: sc.iter().map(|&s| s as u64).collect(),
                        elements: el.iter().map(|&i| points[i].clone()).collect(),
                    });
                    stop = found.is_some();
                    !stop
                });
                !stop
            });
        } else {
            for _ in 0..samples {
                let w = ModuleWitness {
                    scalars: (0..ns).map(|_| draw(&mut rng, bound)).collect(),
                    elements: (0..ne).map(|_| (0..dim).map(|_| draw(&mut rng, bound)).collect()).collect(),
                };
                found = eval(w);
                if found.is_some() {
                    break;
                }
            }
        }
        if let Some(w) = found {
            violations.push(Violation { axiom: module_axiom_name(axiom), witness: w });
        }
    }
    ValidationReport::from_parts(violations, false, checked, skipped)
}

fn lattice_points(dim: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{NatVecWindow, NatWindow, Side};

    #[test]
    fn boolean_semiring_is_valid() {
        let r = validate_semiring(&FiniteSemiring::boolean());
        assert!(r.valid, "{:?}", r.violations);
        assert_eq!(r.instances_checked, 4 + 8 + 2 + 8 + 2 + 2 + 8 + 8);
    }

    #[test]
    fn z4_is_valid() {
        assert!(validate_semiring(&FiniteSemiring::zmod(4)).valid);
    }

    #[test]
    fn corrupted_z4_entry_is_caught_with_reproducible_witness() {
        let z4 = FiniteSemiring::zmod(4);
        let mut add = z4.add_table().to_vec();
        add[1][2] = 0;
        let bad = FiniteSemiring::from_tables(add, z4.mul_table().to_vec(), Some(0), Some(1)).unwrap();
        let report = validate_semiring(&bad);
        assert!(!report.valid);
        let names: Vec<_> = report.violations.iter().map(|v| v.axiom.as_str()).collect();
        assert!(names.contains(&"add_commutative"), "{names:?}");
        for v in &report.violations {
            let axiom: Axiom = serde_json::from_value(serde_json::Value::String(v.axiom.clone())).unwrap();
            assert!(!axiom.holds(&bad, &v.witness).unwrap());
        }
    }

    #[test]
    fn boolean_join_semilattice_module_is_valid() {
        let m = FiniteSemimodule::regular(FiniteSemiring::boolean());
        let r = validate_semimodule(&m);
        assert!(r.valid, "{:?}", r.violations);
    }

    #[test]
    fn broken_action_is_reported() {
        let ring = FiniteSemiring::zmod(3);
        let add = ring.add_table().to_vec();
        // 1·g = 0 for all g: unit must act trivially
        let action = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 2, 1]];
        let m = FiniteSemimodule::from_tables(ring, add, 0, action, Side::Left).unwrap();
        let r = validate_semimodule(&m);
        assert!(r.violations.iter().any(|v| v.axiom == "unit_acts_trivially"));
    }

    #[test]
    fn windowed_models_validate() {
        for ring in [
            WindowedSemiring::Nat(NatWindow { bound: 1_000_000 }),
            WindowedSemiring::NatVec(NatVecWindow { dim: 3, bound: 5000 }),
            WindowedSemiring::Nat(NatWindow { bound: 3 }),
        ] {
            let r = validate_windowed_semiring(&ring, 10_000, 7);
            assert!(r.valid, "{ring:?}: {:?}", r.violations);
            assert!(r.instances_checked > 0);
        }
        let r = validate_windowed_module(&LatticeModule::new(2, 10_000), 10_000, 3);
        assert!(r.valid);
        let r = validate_windowed_module(&LatticeModule::new(1, 2), 10, 3);
        assert!(r.valid);
    }
}
