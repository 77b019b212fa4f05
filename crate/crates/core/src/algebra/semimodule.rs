use super::semiring::check_square;
use super::{FiniteSemiring, Semimodule};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Which side the scalars act from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[default]
    Left,
    Right,
}

/// A fully tabulated semimodule over a [`FiniteSemiring`].
///
/// The action is stored as `action[r][g]` regardless of side. A right
/// semimodule is loaded from a `g × m` table (`g·r` at `[g][r]`) and
/// transposed on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSemimodule {
    ring: FiniteSemiring,
    size: usize,
    add: Vec<Vec<usize>>,
    zero: usize,
    action: Vec<Vec<usize>>,
    side: Side,
}

impl FiniteSemimodule {
    /// `action` is `m × g` for [`Side::Left`] and `g × m` for [`Side::Right`].
    pub fn from_tables(
        ring: FiniteSemiring,
        add: Vec<Vec<usize>>,
        zero: usize,
        action: Vec<Vec<usize>>,
        side: Side,
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTable("semimodule must be nonempty".into()));
        }
        check_square("add", &add, size)?;
        if zero >= size {
            return Err(Error::MalformedTable(format!("zero index {zero} out of range")));
        }
        let m = ring.size();
        let action = match side {
            Side::Left => action,
            Side::Right => transpose(&action, size, m)?,
        };
        if action.len() != m {
            return Err(Error::MalformedTable(format!("action table has {} rows, expected {m}", action.len())));
        }
        for (r, row) in action.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!("action row {r} has {} entries, expected {size}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= size) {
                return Err(Error::MalformedTable(format!("action row {r} contains out-of-range index {bad}")));
            }
        }
        Ok(FiniteSemimodule { ring, size, add, zero, action, side })
    }

    /// A semiring regarded as a module over itself (left multiplication).
    pub fn regular(ring: FiniteSemiring) -> Self {
        let add = ring.add_table().to_vec();
        let action = ring.mul_table().to_vec();
        let zero = ring.zero_index();
        Self::from_tables(ring, add, zero, action, Side::Left).expect("tables of a valid ring")
    }

    pub fn ring(&self) -> &FiniteSemiring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    #[inline]
    pub fn sum(&self, g: usize, h: usize) -> usize {
        self.add[g][h]
    }

    #[inline]
    pub fn scale(&self, r: usize, g: usize) -> usize {
        self.action[r][g]
    }
}

fn transpose(table: &[Vec<usize>], rows: usize, cols: usize) -> Result<Vec<Vec<usize>>> {
    if table.len() != rows || table.iter().any(|row| row.len() != cols) {
        return Err(Error::MalformedTable(format!("right action table must be {rows} × {cols}")));
    }
    Ok((0..cols).map(|c| (0..rows).map(|r| table[r][c]).collect()).collect())
}

impl Semimodule for FiniteSemimodule {
    type Scalar = usize;
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn add(&self, g: &usize, h: &usize) -> Result<usize> {
        if *g >= self.size || *h >= self.size {
            return Err(Error::invalid(format!("element out of range for semimodule of size {}", self.size)));
        }
        Ok(self.add[*g][*h])
    }

    fn act(&self, r: &usize, g: &usize) -> Result<usize> {
        if *r >= self.ring.size() || *g >= self.size {
            return Err(Error::invalid("scalar or element out of range"));
        }
        Ok(self.action[*r][*g])
    }

    fn contains(&self, g: &usize) -> bool {
        *g < self.size
    }
}
