use super::{Semimodule, Semiring};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// `(Z+, +, ·)` restricted to `0..=bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatWindow {
    pub bound: u64,
}

/// `(Z+^n, +, ·)` with componentwise operations, each coordinate in `0..=bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatVecWindow {
    pub dim: usize,
    pub bound: u64,
}

/// The named windowed presets, `nat:W` and `natvec:n:W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum WindowedSemiring {
    Nat(NatWindow),
    NatVec(NatVecWindow),
}

/// The semimodule `(Z+^dim, ∔)` over `(Z+, +, ·)`, every coordinate and every
/// scalar bounded by `bound`. `dim = 1` is `Z+` acting on itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeModule {
    pub dim: usize,
    pub bound: u64,
}

fn checked(op: &str, a: u64, b: u64, r: Option<u64>, bound: u64) -> Result<u64> {
    match r {
        Some(v) if v <= bound => Ok(v),
        _ => Err(Error::Overflow(format!("{a} {op} {b} exceeds window bound {bound}"))),
    }
}

impl NatWindow {
    pub fn new(bound: u64) -> Self {
        NatWindow { bound }
    }
}

impl Semiring for NatWindow {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> Result<u64> {
        checked("+", *a, *b, a.checked_add(*b), self.bound)
    }

    fn mul(&self, a: &u64, b: &u64) -> Result<u64> {
        checked("*", *a, *b, a.checked_mul(*b), self.bound)
    }

    fn contains(&self, a: &u64) -> bool {
        *a <= self.bound
    }
}

impl NatVecWindow {
    fn zip(&self, a: &[u64], b: &[u64], f: impl Fn(u64, u64) -> Result<u64>) -> Result<Vec<u64>> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(Error::invalid(format!("expected vectors of dimension {}", self.dim)));
        }
        a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
    }
}

impl Semiring for NatVecWindow {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    fn one(&self) -> Vec<u64> {
        vec![1; self.dim]
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Result<Vec<u64>> {
        self.zip(a, b, |x, y| checked("+", x, y, x.checked_add(y), self.bound))
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Result<Vec<u64>> {
        self.zip(a, b, |x, y| checked("*", x, y, x.checked_mul(y), self.bound))
    }

    fn contains(&self, a: &Vec<u64>) -> bool {
        a.len() == self.dim && a.iter().all(|&x| x <= self.bound)
    }
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim().parse().map_err(|_| Error::invalid(format!("bad {what} '{s}'")))
}

/// Parses `nat:W` or `natvec:n:W`, returning `(dim, bound)`.
fn parse_preset(preset: &str) -> Result<(usize, u64)> {
    let parts: Vec<&str> = preset.split(':').collect();
    match parts.as_slice() {
        ["nat", w] => Ok((1, parse_u64(w, "bound")?)),
        ["natvec", n, w] => {
            let n = parse_u64(n, "dimension")? as usize;
            if n == 0 {
                return Err(Error::invalid("dimension must be positive"));
            }
            Ok((n, parse_u64(w, "bound")?))
        }
        _ => Err(Error::invalid(format!("unknown preset '{preset}', expected nat:W or natvec:n:W"))),
    }
}

impl WindowedSemiring {
    pub fn parse(preset: &str) -> Result<Self> {
        let (dim, bound) = parse_preset(preset)?;
        Ok(if preset.starts_with("natvec") {
            WindowedSemiring::NatVec(NatVecWindow { dim, bound })
        } else {
            WindowedSemiring::Nat(NatWindow { bound })
        })
    }

    pub fn bound(&self) -> u64 {
        match self {
            WindowedSemiring::Nat(w) => w.bound,
            WindowedSemiring::NatVec(w) => w.bound,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            WindowedSemiring::Nat(_) => 1,
            WindowedSemiring::NatVec(w) => w.dim,
        }
    }
}

impl LatticeModule {
    pub fn new(dim: usize, bound: u64) -> Self {
        assert!(dim >= 1);
        LatticeModule { dim, bound }
    }

    pub fn parse(preset: &str) -> Result<Self> {
        let (dim, bound) = parse_preset(preset)?;
        Ok(LatticeModule { dim, bound })
    }

    pub fn scalars(&self) -> NatWindow {
        NatWindow { bound: self.bound }
    }

    fn expect_dim(&self, g: &[u64]) -> Result<()> {
        if g.len() == self.dim {
            Ok(())
        } else {
            Err(Error::invalid(format!("expected a point of dimension {}, got {}", self.dim, g.len())))
        }
    }
}

impl Semimodule for LatticeModule {
    type Scalar = u64;
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    fn add(&self, g: &Vec<u64>, h: &Vec<u64>) -> Result<Vec<u64>> {
        self.expect_dim(g)?;
        self.expect_dim(h)?;
        g.iter().zip(h).map(|(&x, &y)| checked("+", x, y, x.checked_add(y), self.bound)).collect()
    }

    fn act(&self, r: &u64, g: &Vec<u64>) -> Result<Vec<u64>> {
        self.expect_dim(g)?;
        if *r > self.bound {
            return Err(Error::Overflow(format!("scalar {r} exceeds window bound {}", self.bound)));
        }
        g.iter().map(|&x| checked("*", *r, x, r.checked_mul(x), self.bound)).collect()
    }

    fn contains(&self, g: &Vec<u64>) -> bool {
        g.len() == self.dim && g.iter().all(|&x| x <= self.bound)
    }
}
