use super::maps::{compose, identity, pow, Map};
use crate::algebra::{FiniteSemimodule, SemimoduleFile, WindowedSemiring};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How time acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Time {
    /// `G = Z+^k`, one coordinate per generator: `φ(e) = T_1^e_1 ∘ … ∘ T_k^e_k`.
    /// `bound` limits the exponents used when sampling the action laws.
    Nat { bound: u64 },
    /// A tabulated semimodule `G` with `maps[g] = φ(g, ·)`. Generator `i` is
    /// the element `elements[i]`.
    Finite { module: FiniteSemimodule, maps: Vec<Map>, elements: Vec<usize> },
}

/// A finite dynamical system `G ↷ X` with `X = {0..states-1}`.
///
/// Elements of `G` are written as `Vec<u64>`: an exponent vector for
/// [`Time::Nat`], a one-entry vector holding the element index for
/// [`Time::Finite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTds {
    states: usize,
    generators: Vec<Map>,
    time: Time,
}

pub const DEFAULT_TIME_BOUND: u64 = 64;

fn check_map(states: usize, m: &[usize], what: &str) -> Result<()> {
    if m.len() != states {
        return Err(Error::InvalidAction(format!("{what} has {} entries, expected {states}", m.len())));
    }
    if let Some(&bad) = m.iter().find(|&&y| y >= states) {
        return Err(Error::InvalidAction(format!("{what} maps to {bad}, outside the state space")));
    }
    Ok(())
}

fn check_commuting(generators: &[Map]) -> Result<()> {
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let (a, b) = (&generators[i], &generators[j]);
            if let Some(x) = (0..a.len()).find(|&x| a[b[x]] != b[a[x]]) {
                return Err(Error::NonCommuting { i, j, x });
            }
        }
    }
    Ok(())
}

impl FiniteTds {
    /// Commuting generators with `Z+^k` time.
    pub fn new(states: usize, generators: Vec<Map>) -> Result<Self> {
        Self::with_bound(states, generators, DEFAULT_TIME_BOUND)
    }

    pub fn with_bound(states: usize, generators: Vec<Map>, bound: u64) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidAction("state space must be nonempty".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidAction("at least one generator is required".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            check_map(states, g, &format!("generator {i}"))?;
        }
        check_commuting(&generators)?;
        let tds = FiniteTds { states, generators, time: Time::Nat { bound } };
        tds.check_sampled_laws(0x5eed)?;
        Ok(tds)
    }

    /// Time given by a tabulated semimodule.
    pub fn with_finite_time(states: usize, module: FiniteSemimodule, maps: Vec<Map>, elements: Vec<usize>) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidAction("state space must be nonempty".into()));
        }
        if maps.len() != module.size() {
            return Err(Error::InvalidAction(format!("{} maps for a semimodule of size {}", maps.len(), module.size())));
        }
        for (g, m) in maps.iter().enumerate() {
            check_map(states, m, &format!("map of element {g}"))?;
        }
        if elements.is_empty() || elements.iter().any(|&e| e >= module.size()) {
            return Err(Error::InvalidAction("generators must be a nonempty list of semimodule elements".into()));
        }
        if maps[module.zero_index()] != identity(states) {
            return Err(Error::InvalidAction("the zero of G must act as the identity".into()));
        }
        for g in 0..module.size() {
            for h in 0..module.size() {
                if maps[module.sum(g, h)] != compose(&maps[g], &maps[h]) {
                    return Err(Error::InvalidAction(format!("φ({g} ∔ {h}) differs from φ({g}) ∘ φ({h})")));
                }
            }
        }
        let generators: Vec<Map> = elements.iter().map(|&e| maps[e].clone()).collect();
        check_commuting(&generators)?;
        Ok(FiniteTds { states, generators, time: Time::Finite { module, maps, elements } })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn generators(&self) -> &[Map] {
        &self.generators
    }

    pub fn time(&self) -> &Time {
        &self.time
    }

    pub fn is_nat_time(&self) -> bool {
        matches!(self.time, Time::Nat { .. })
    }

    /// Maps whose forward closure is the orbit relation.
    pub fn action_maps(&self) -> &[Map] {
        match &self.time {
            Time::Nat { .. } => &self.generators,
            Time::Finite { maps, .. } => maps,
        }
    }

    /// The `i`-th generator as an element of `G`.
    pub fn generator_element(&self, i: usize) -> Vec<u64> {
        match &self.time {
            Time::Nat { .. } => (0..self.generators.len()).map(|j| (i == j) as u64).collect(),
            Time::Finite { elements, .. } => vec![elements[i] as u64],
        }
    }

    pub fn check_element(&self, g: &[u64]) -> Result<()> {
        let ok = match &self.time {
            Time::Nat { .. } => g.len() == self.generators.len(),
            Time::Finite { module, .. } => g.len() == 1 && (g[0] as usize) < module.size(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("{g:?} is not an element of the time semimodule")))
        }
    }

    /// `φ(g, ·)`.
    pub fn phi(&self, g: &[u64]) -> Result<Map> {
        self.check_element(g)?;
        Ok(match &self.time {
            Time::Nat { .. } => {
                g.iter().zip(&self.generators).fold(identity(self.states), |acc, (&e, t)| compose(&pow(t, e), &acc))
            }
            Time::Finite { maps, .. } => maps[g[0] as usize].clone(),
        })
    }

    /// The element `t·g` of `G`.
    pub fn scale(&self, t: u64, g: &[u64]) -> Result<Vec<u64>> {
        self.check_element(g)?;
        match &self.time {
            Time::Nat { .. } => g
                .iter()
                .map(|&e| e.checked_mul(t).ok_or_else(|| Error::Overflow(format!("{t}·{e}"))))
                .collect(),
            Time::Finite { module, .. } => {
                if t as usize >= module.ring().size() {
                    return Err(Error::invalid(format!("scalar {t} is outside the semiring")));
                }
                Ok(vec![module.scale(t as usize, g[0] as usize) as u64])
            }
        }
    }

    /// `g ∔ h` in `G`.
    pub fn add_elements(&self, g: &[u64], h: &[u64]) -> Result<Vec<u64>> {
        self.check_element(g)?;
        self.check_element(h)?;
        match &self.time {
            Time::Nat { .. } => Ok(g.iter().zip(h).map(|(a, b)| a + b).collect()),
            Time::Finite { module, .. } => Ok(vec![module.sum(g[0] as usize, h[0] as usize) as u64]),
        }
    }

    /// `φ(t·g, ·)`.
    pub fn sample(&self, t: u64, g: &[u64]) -> Result<Map> {
        self.phi(&self.scale(t, g)?)
    }

    /// `φ(0) = id` and `φ(g + h) = φ(g) ∘ φ(h)` on random exponent pairs.
    fn check_sampled_laws(&self, seed: u64) -> Result<()> {
        let Time::Nat { bound } = self.time else { return Ok(()) };
        let k = self.generators.len();
        if self.phi(&vec![0; k])? != identity(self.states) {
            return Err(Error::InvalidAction("φ(0) is not the identity".into()));
        }
        let top = bound.min(8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let g: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=top)).collect();
            let h: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=top)).collect();
            if self.phi(&self.add_elements(&g, &h)?)? != compose(&self.phi(&g)?, &self.phi(&h)?) {
                return Err(Error::InvalidAction(format!("φ({g:?} + {h:?}) differs from φ(g) ∘ φ(h)")));
            }
        }
        Ok(())
    }
}

/// JSON form: `{"states":n,"generators":[[..],..],"time":"nat:W"}` or, for
/// tabulated time, `"time":{"semimodule":{..},"maps":[[..],..],"generators":[i,..]}`
/// with the top-level `generators` omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TdsFile {
    pub states: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Map>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time: Option<TimeFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimeFile {
    Preset(String),
    Finite { semimodule: SemimoduleFile, maps: Vec<Map>, generators: Vec<usize> },
}

impl TdsFile {
    pub fn load(self) -> Result<FiniteTds> {
        match self.time {
            None | Some(TimeFile::Preset(_)) => {
                let bound = match &self.time {
                    Some(TimeFile::Preset(p)) => match WindowedSemiring::parse(p)? {
                        WindowedSemiring::Nat(n) => n.bound,
                        _ => return Err(Error::invalid("TDS time must be nat:W or a tabulated semimodule")),
                    },
                    _ => DEFAULT_TIME_BOUND,
                };
                let generators = self.generators.ok_or_else(|| Error::invalid("missing generators"))?;
                FiniteTds::with_bound(self.states, generators, bound)
            }
            Some(TimeFile::Finite { semimodule, maps, generators }) => {
                FiniteTds::with_finite_time(self.states, semimodule.load()?, maps, generators)
            }
        }
    }

    pub fn parse(json: &str) -> Result<FiniteTds> {
        serde_json::from_str::<TdsFile>(json)?.load()
    }
}

impl From<&FiniteTds> for TdsFile {
    fn from(t: &FiniteTds) -> Self {
        match &t.time {
            Time::Nat { bound } => TdsFile {
                states: t.states,
                generators: Some(t.generators.clone()),
                time: Some(TimeFile::Preset(format!("nat:{bound}"))),
            },
            Time::Finite { module, maps, elements } => TdsFile {
                states: t.states,
                generators: None,
                time: Some(TimeFile::Finite {
                    semimodule: SemimoduleFile {
                        size: Some(module.size()),
                        add: module.add_table().to_vec(),
                        action: (0..module.ring().size()).map(|r| (0..module.size()).map(|g| module.scale(r, g)).collect()).collect(),
                        zero: module.zero_index(),
                        side: Default::default(),
                        ring: module.ring().into(),
                    },
                    maps: maps.clone(),
                    generators: elements.clone(),
                }),
            },
        }
    }
}

/// Rotation `x ↦ x + step (mod n)`.
pub fn rotation(n: usize, step: usize) -> Map {
    (0..n).map(|x| (x + step) % n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteSemiring;

    #[test]
    fn validation_examples() {
        assert!(FiniteTds::new(6, vec![rotation(6, 1), rotation(6, 2)]).is_ok());
        // swap and constant-0 disagree at both states; the first one is reported
        let err = FiniteTds::new(2, vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::NonCommuting { i: 0, j: 1, x: 0 }));
        assert!(FiniteTds::new(3, vec![vec![2, 2, 0]]).is_ok());
        assert!(matches!(FiniteTds::new(3, vec![vec![0, 5, 1]]), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn phi_and_sampling() {
        let tds = FiniteTds::new(6, vec![rotation(6, 1), rotation(6, 2)]).unwrap();
        assert_eq!(tds.phi(&[1, 1]).unwrap(), rotation(6, 3));
        assert_eq!(tds.sample(4, &[0, 1]).unwrap(), rotation(6, 2));
        assert!(tds.phi(&[1]).is_err());
    }

    #[test]
    fn finite_time_from_z4() {
        // Z4 acting on itself by translation
        let ring = FiniteSemiring::zmod(4);
        let module = FiniteSemimodule::regular(ring);
        let maps: Vec<Map> = (0..4).map(|g| rotation(4, g)).collect();
        let tds = FiniteTds::with_finite_time(4, module.clone(), maps.clone(), vec![1]).unwrap();
        assert_eq!(tds.sample(3, &[1]).unwrap(), rotation(4, 3));
        let mut broken = maps;
        broken[2] = identity(4);
        assert!(FiniteTds::with_finite_time(4, module, broken, vec![1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let tds = TdsFile::parse(r#"{"states":6,"generators":[[1,2,3,4,5,0]],"time":"nat:100"}"#).unwrap();
        assert_eq!(tds.time(), &Time::Nat { bound: 100 });
        let again = serde_json::to_string(&TdsFile::from(&tds)).unwrap();
        assert_eq!(TdsFile::parse(&again).unwrap(), tds);

        let ring = FiniteSemiring::zmod(3);
        let module = FiniteSemimodule::regular(ring);
        let maps: Vec<Map> = (0..3).map(|g| rotation(3, g)).collect();
        let tds = FiniteTds::with_finite_time(3, module, maps, vec![1]).unwrap();
        let json = serde_json::to_string(&TdsFile::from(&tds)).unwrap();
        assert_eq!(TdsFile::parse(&json).unwrap(), tds);
    }
}
