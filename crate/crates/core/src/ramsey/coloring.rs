use crate::configs::Window;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A map from the cells of a window to colors `1..=q`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    window: Window,
    q: u8,
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(window: Window, q: u8, colors: Vec<u8>) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("a coloring needs at least one color"));
        }
        if colors.len() != window.len() {
            return Err(Error::invalid(format!("{} colors for a window of {} cells", colors.len(), window.len())));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > q) {
            return Err(Error::invalid(format!("color {c} is outside 1..={q}")));
        }
        Ok(Coloring { window, q, colors })
    }

    /// Colors `lo..=hi` by `f`.
    pub fn from_fn(lo: u64, hi: u64, q: u8, f: impl Fn(u64) -> u8) -> Result<Self> {
        Coloring::new(Window::interval(lo, hi), q, (lo..=hi).map(f).collect())
    }

    /// Parses a digit string such as `"11221122"` as a coloring of `lo..`.
    pub fn from_digits(lo: u64, q: u8, digits: &str) -> Result<Self> {
        let colors = digits
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::invalid(format!("bad color digit {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if colors.is_empty() {
            return Err(Error::invalid("empty color string"));
        }
        Coloring::new(Window::interval(lo, lo + colors.len() as u64 - 1), q, colors)
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// Colors in row-major cell order.
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_at(&self, p: &[u64]) -> Option<u8> {
        self.window.index_of(p).map(|i| self.colors[i])
    }

    pub fn color_at_int(&self, n: u64) -> Option<u8> {
        self.color_at(&[n])
    }

    /// The color class `B_j` as points, in cell order.
    pub fn class(&self, j: u8) -> Vec<Vec<u64>> {
        (0..self.colors.len()).filter(|&i| self.colors[i] == j).map(|i| self.window.point_at(i)).collect()
    }

    /// `B_j` for a one-dimensional coloring.
    pub fn class_ints(&self, j: u8) -> Vec<u64> {
        let lo = self.window.lo[0];
        (0..self.colors.len()).filter(|&i| self.colors[i] == j).map(|i| lo + i as u64).collect()
    }

    /// Digit string, available when `q <= 9`.
    pub fn digits(&self) -> Option<String> {
        (self.q <= 9).then(|| self.colors.iter().map(|c| char::from(b'0' + c)).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    window: Value,
    q: u8,
    colors: Value,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        let window = match serde_json::from_value::<[u64; 2]>(raw.window.clone()) {
            Ok([lo, hi]) => Window::new(vec![lo], vec![hi])?,
            Err(_) => {
                let [lo, hi]: [Vec<u64>; 2] = serde_json::from_value(raw.window)
                    .map_err(|_| Error::invalid("window must be [lo, hi] or [[lo..], [hi..]]"))?;
                Window::new(lo, hi)?
            }
        };
        let colors = match raw.colors {
            Value::String(s) => return Coloring::from_digits(0, raw.q, &s).and_then(|c| Coloring::new(window, raw.q, c.colors)),
            other => serde_json::from_value::<Vec<u8>>(other)?,
        };
        Coloring::new(window, raw.q, colors)
    }
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        let window = if c.window.dim() == 1 {
            serde_json::json!([c.window.lo[0], c.window.hi[0]])
        } else {
            serde_json::json!([c.window.lo, c.window.hi])
        };
        let colors = match c.digits() {
            Some(s) => Value::String(s),
            None => serde_json::json!(c.colors),
        };
        RawColoring { window, q: c.q, colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let c = Coloring::from_digits(0, 2, "11221122").unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"window":[0,7],"q":2,"colors":"11221122"}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        let arr: Coloring = serde_json::from_str(r#"{"window":[3,5],"q":3,"colors":[1,3,2]}"#).unwrap();
        assert_eq!(arr.color_at_int(4), Some(3));
        let planar = Coloring::new(Window::cube(2, 2), 12, vec![1, 2, 11, 12]).unwrap();
        let s = serde_json::to_string(&planar).unwrap();
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), planar);
    }

    #[test]
    fn rejects_bad_colorings() {
        assert!(Coloring::from_digits(0, 2, "1231").is_err());
        assert!(Coloring::from_digits(0, 2, "10").is_err());
        assert!(serde_json::from_str::<Coloring>(r#"{"window":[0,3],"q":2,"colors":"12"}"#).is_err());
    }
}
