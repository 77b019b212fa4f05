use super::Semiring;
use crate::{Error, Result};
use serde::Serialize;

/// A fully tabulated finite semiring. Elements are the indices `0..size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSemiring {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    unit: usize,
    zero_adjoined: bool,
}

impl FiniteSemiring {
    /// Builds a semiring from raw tables.
    ///
    /// When `zero` is `None` the tables are searched for an element that is an
    /// additive identity and multiplicatively absorbing; if there is none, a
    /// fresh zero is adjoined with `0 + t = t` and `0·t = t·0 = 0`. When `unit`
    /// is `None` a two-sided multiplicative identity is searched for.
    ///
    /// Only well-formedness is checked here; the axioms are checked by
    /// [`validate_semiring`](super::validate_semiring).
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: Option<usize>,
        unit: Option<usize>,
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("semiring must be nonempty".into()));
        }
        check_square("add", &add, size)?;
        check_square("mul", &mul, size)?;

        let mut ring = FiniteSemiring { size, add, mul, zero: 0, unit: 0, zero_adjoined: false };
        ring.zero = match zero {
            Some(z) if z < size => z,
            Some(z) => return Err(Error::MalformedTable(format!("zero index {z} out of range"))),
            None => match ring.find_zero() {
                Some(z) => z,
                None => ring.adjoin_zero(),
            },
        };
        ring.unit = match unit {
            Some(u) if u < ring.size => u,
            Some(u) => return Err(Error::MalformedTable(format!("unit index {u} out of range"))),
            None => ring
                .find_unit()
                .ok_or_else(|| Error::MalformedTable("no multiplicative unit in the tables".into()))?,
        };
        Ok(ring)
    }

    /// The Boolean semiring `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        Self::from_tables(vec![vec![0, 1], vec![1, 1]], vec![vec![0, 0], vec![0, 1]], Some(0), Some(1))
            .expect("static tables")
    }

    /// The ring `Z/nZ`.
    pub fn zmod(n: usize) -> Self {
        assert!(n >= 1);
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        Self::from_tables(add, mul, Some(0), Some(1 % n)).expect("static tables")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn zero_adjoined(&self) -> bool {
        self.zero_adjoined
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    fn find_zero(&self) -> Option<usize> {
        (0..self.size).find(|&z| {
            (0..self.size).all(|x| {
                self.add[z][x] == x && self.add[x][z] == x && self.mul[z][x] == z && self.mul[x][z] == z
            })
        })
    }

    fn find_unit(&self) -> Option<usize> {
        (0..self.size).find(|&u| (0..self.size).all(|x| self.mul[u][x] == x && self.mul[x][u] == x))
    }

    fn adjoin_zero(&mut self) -> usize {
        let z = self.size;
        for (x, row) in self.add.iter_mut().enumerate() {
            row.push(x);
        }
        self.add.push((0..=z).collect());
        for row in self.mul.iter_mut() {
            row.push(z);
        }
        self.mul.push(vec![z; z + 1]);
        self.size += 1;
        self.zero_adjoined = true;
        z
    }

    fn check(&self, a: usize) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::invalid(format!("element {a} not in semiring of size {}", self.size)))
        }
    }
}

pub(super) fn check_square(name: &str, table: &[Vec<usize>], size: usize) -> Result<()> {
    if table.len() != size {
        return Err(Error::MalformedTable(format!("{name} table has {} rows, expected {size}", table.len())));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != size {
            return Err(Error::MalformedTable(format!("{name} row {i} has {} entries, expected {size}", row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= size) {
            return Err(Error::MalformedTable(format!("{name} row {i} contains out-of-range index {bad}")));
        }
    }
    Ok(())
}

impl Semiring for FiniteSemiring {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn one(&self) -> usize {
        self.unit
    }

    fn add(&self, a: &usize, b: &usize) -> Result<usize> {
        self.check(*a)?;
        self.check(*b)?;
        Ok(self.add[*a][*b])
    }

    fn mul(&self, a: &usize, b: &usize) -> Result<usize> {
        self.check(*a)?;
        self.check(*b)?;
        Ok(self.mul[*a][*b])
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.size
    }
}
