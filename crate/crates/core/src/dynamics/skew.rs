use super::hitting::{uniform_recurrence, GapCertificate};
use super::maps::Map;
use super::{minimal_sets, FiniteTds, TdsFile, Time};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite group given by its multiplication table `table[a][b] = a ⋄ b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    size: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>, identity: Option<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::MalformedTable("group table must be square with entries in range".into()));
        }
        let is_identity = |e: usize| (0..n).all(|a| table[e][a] == a && table[a][e] == a);
        let identity = match identity {
            Some(e) if e < n && is_identity(e) => e,
            Some(e) => return Err(Error::MalformedTable(format!("{e} is not a two-sided identity"))),
            None => (0..n).find(|&e| is_identity(e)).ok_or_else(|| Error::MalformedTable("group has no identity".into()))?,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::MalformedTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::MalformedTable(format!("{a} has no inverse")));
            }
        }
        Ok(FiniteGroup { size: n, table, identity })
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        Self::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), Some(0)).unwrap()
    }

    /// `Z/2 × Z/2`.
    pub fn klein() -> Self {
        Self::new((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(), Some(0)).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

/// JSON form `{"table":[[..]],"identity":e}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
}

impl GroupFile {
    pub fn load(self) -> Result<FiniteGroup> {
        FiniteGroup::new(self.table, self.identity)
    }
}

/// How the cocycle `ψ` is supplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cocycle {
    /// `values[i][x] = ψ(T_i, x)`; the law extends it to all of `G`.
    OnGenerators(Vec<Vec<usize>>),
    /// `values[t][x] = ψ(t, x)` for `t = 0..=W`, single generator only.
    /// Every instance of the law inside the table is checked.
    Tabulated(Vec<Vec<usize>>),
}

/// JSON form: a TDS file plus `"group":{"table":..}` and `"cocycle"`, the
/// latter either a plain `[[..]]` of generator values or
/// `{"tabulated":[[..]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkewFile {
    #[serde(flatten)]
    pub tds: TdsFile,
    pub group: GroupFile,
    pub cocycle: CocycleFile,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleFile {
    Plain(Vec<Vec<usize>>),
    Tagged(Cocycle),
}

impl SkewFile {
    pub fn load(self) -> Result<SkewProduct> {
        let tds = self.tds.load()?;
        let group = self.group.load()?;
        let cocycle = match self.cocycle {
            CocycleFile::Plain(v) => Cocycle::OnGenerators(v),
            CocycleFile::Tagged(c) => c,
        };
        build_skew_product(&tds, &group, &cocycle)
    }
}

/// The group extension `(x, k) ↦ (φ(t, x), ψ(t, x) ⋄ k)` on `X × K`.
/// State `(x, k)` is numbered `x·|K| + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewProduct {
    pub base: FiniteTds,
    pub group: FiniteGroup,
    /// `psi[i][x] = ψ(T_i, x)`.
    pub psi: Vec<Vec<usize>>,
    pub product: FiniteTds,
}

impl SkewProduct {
    pub fn state(&self, x: usize, k: usize) -> usize {
        x * self.group.size() + k
    }

    pub fn split(&self, s: usize) -> (usize, usize) {
        (s / self.group.size(), s % self.group.size())
    }

    /// `ψ(g, x)`, read off the product action.
    pub fn cocycle_at(&self, g: &[u64], x: usize) -> Result<usize> {
        let m = self.product.phi(g)?;
        Ok(self.split(m[self.state(x, self.group.identity())]).1)
    }
}

fn violation(s: Vec<u64>, t: Vec<u64>, x: usize) -> Error {
    Error::CocycleViolation { s, t, x }
}

/// Exponent vectors with every coordinate at most `top`, capped in number.
fn small_elements(k: usize, top: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0; k]];
    for c in 0..k {
        let mut next = Vec::new();
        for v in &out {
            for e in 0..=top {
                let mut w = v.clone();
                w[c] = e;
                next.push(w);
            }
        }
        out = next;
        if out.len() > 64 {
            out.truncate(64);
        }
    }
    out
}

pub fn build_skew_product(tds: &FiniteTds, group: &FiniteGroup, cocycle: &Cocycle) -> Result<SkewProduct> {
    let Time::Nat { bound } = *tds.time() else {
        return Err(Error::invalid("group extensions are built over Z+^k time"));
    };
    let n = tds.states();
    let gens = tds.generators();
    let check_row = |row: &[usize]| row.len() == n && row.iter().all(|&v| v < group.size());
    let psi = match cocycle {
        Cocycle::OnGenerators(values) => {
            if values.len() != gens.len() || !values.iter().all(|r| check_row(r)) {
                return Err(Error::invalid("cocycle needs one value in K per generator and state"));
            }
            // T_i and T_j commute, so both orders of ψ(T_i + T_j, x) must agree
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    for x in 0..n {
                        let via_i = group.op(values[j][gens[i][x]], values[i][x]);
                        let via_j = group.op(values[i][gens[j][x]], values[j][x]);
                        if via_i != via_j {
                            let unit = |c: usize| (0..gens.len()).map(|d| (d == c) as u64).collect();
                            return Err(violation(unit(i), unit(j), x));
                        }
                    }
                }
            }
            values.clone()
        }
        Cocycle::Tabulated(values) => {
            if gens.len() != 1 {
                return Err(Error::invalid("a tabulated cocycle needs a single generator"));
            }
            if values.len() < 2 || !values.iter().all(|r| check_row(r)) {
                return Err(Error::invalid("tabulated cocycle needs rows for t = 0 and t = 1 at least"));
            }
            let w = values.len() - 1;
            for s in 0..=w {
                let phi_s = tds.phi(&[s as u64])?;
                for t in 0..=w - s {
                    for x in 0..n {
                        if values[s + t][x] != group.op(values[t][phi_s[x]], values[s][x]) {
                            return Err(violation(vec![s as u64], vec![t as u64], x));
                        }
                    }
                }
            }
            vec![values[1].clone()]
        }
    };
    let kn = group.size();
    let maps: Vec<Map> = gens
        .iter()
        .zip(&psi)
        .map(|(t, p)| (0..n * kn).map(|s| t[s / kn] * kn + group.op(p[s / kn], s % kn)).collect())
        .collect();
    let product = FiniteTds::with_bound(n * kn, maps, bound)?;
    let skew = SkewProduct { base: tds.clone(), group: group.clone(), psi, product };

    // sampled check of ψ(s + t, x) = ψ(t, φ(s, x)) ⋄ ψ(s, x)
    let elems = small_elements(gens.len(), bound.min(3));
    for s in &elems {
        let phi_s = tds.phi(s)?;
        for t in &elems {
            let st = tds.add_elements(s, t)?;
            for (x, &sx) in phi_s.iter().enumerate() {
                let lhs = skew.cocycle_at(&st, x)?;
                let rhs = group.op(skew.cocycle_at(t, sx)?, skew.cocycle_at(s, x)?);
                if lhs != rhs {
                    return Err(violation(s.clone(), t.clone(), x));
                }
            }
        }
    }
    Ok(skew)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPoint {
    pub k: usize,
    pub state: usize,
    pub recurrent: bool,
    pub certificate: Option<GapCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub base_point: usize,
    pub fibers: Vec<FiberPoint>,
    pub all_recurrent: bool,
    /// Every right translation `R_k'(x, k) = (x, k ⋄ k')` commutes with the
    /// product action.
    pub automorphisms_commute: bool,
    /// Every minimal set of the product projects onto a minimal set of the base.
    pub projections_minimal: bool,
}

/// Checks that every point `(x0, k)` over a uniformly recurrent `x0` is
/// uniformly recurrent in the extension.
pub fn verify_uniform_recurrence_lift(skew: &SkewProduct, x0: usize) -> Result<LiftReport> {
    let base = minimal_sets(&skew.base);
    if base.membership.get(x0).copied().flatten().is_none() {
        return Err(Error::BaseNotRecurrent(x0));
    }
    let fibers = (0..skew.group.size())
        .map(|k| {
            let state = skew.state(x0, k);
            let r = uniform_recurrence(&skew.product, state, None)?;
            Ok(FiberPoint { k, state, recurrent: r.recurrent, certificate: r.certificate })
        })
        .collect::<Result<Vec<_>>>()?;
    let kn = skew.group.size();
    let automorphisms_commute = (0..kn).all(|kp| {
        skew.product.generators().iter().all(|m| {
            (0..m.len()).all(|s| {
                let (x, k) = skew.split(s);
                let r = |st: usize| {
                    let (y, l) = skew.split(st);
                    skew.state(y, skew.group.op(l, kp))
                };
                m[r(skew.state(x, k))] == r(m[s])
            })
        })
    });
    let product = minimal_sets(&skew.product);
    let projections_minimal = product.minimal_sets.iter().all(|set| {
        let mut proj: Vec<usize> = set.iter().map(|&s| skew.split(s).0).collect();
        proj.sort_unstable();
        proj.dedup();
        base.minimal_sets.contains(&proj)
    });
    Ok(LiftReport {
        base_point: x0,
        all_recurrent: fibers.iter().all(|f| f.recurrent),
        fibers,
        automorphisms_commute,
        projections_minimal,
    })
}
