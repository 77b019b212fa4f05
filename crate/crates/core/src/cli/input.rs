//! Parsing of inline command-line values.

use crate::configs::{ConfigSet, ScalarRange, Window};
use crate::util::{parse_list, parse_range};
use crate::{Error, Result};
use serde::de::DeserializeOwned;
use std::path::Path;

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// `0,1,2` for integers, or JSON `[[0,0],[0,1]]` for points.
pub fn config(s: &str) -> Result<ConfigSet<Vec<u64>>> {
    let s = s.trim();
    if s.starts_with('[') {
        let v: serde_json::Value = serde_json::from_str(s)?;
        match v.as_array().and_then(|a| a.first()) {
            Some(serde_json::Value::Array(_)) => ConfigSet::points(serde_json::from_value(v)?),
            _ => ConfigSet::ints(&serde_json::from_value::<Vec<u64>>(v)?),
        }
    } else {
        ConfigSet::ints(&parse_list(s)?)
    }
}

/// `lo:hi`, or `lo1,lo2:hi1,hi2` for boxes.
pub fn window(s: &str) -> Result<Window> {
    let (a, b) = s.split_once(':').ok_or_else(|| Error::invalid(format!("window {s:?} must look like lo:hi")))?;
    Window::new(parse_list(a)?, parse_list(b)?)
}

pub fn interval(s: &str) -> Result<(u64, u64)> {
    parse_range(s)
}

pub fn scalar_range(s: &str) -> Result<ScalarRange> {
    let (lo, hi) = parse_range(s)?;
    ScalarRange::new(lo, hi)
}

pub fn ints(s: &str) -> Result<Vec<u64>> {
    parse_list(s)
}

pub fn states(s: &str) -> Result<Vec<usize>> {
    Ok(parse_list(s)?.into_iter().map(|x| x as usize).collect())
}

/// A time element: `e1:e2:…` for exponent vectors, or a bare index.
pub fn element(s: &str) -> Result<Vec<u64>> {
    s.split(':')
        .map(|x| x.trim().parse::<u64>().map_err(|e| Error::invalid(format!("bad time element {s:?}: {e}"))))
        .collect()
}

pub fn floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<f64>().map_err(|e| Error::invalid(format!("bad number {x:?}: {e}"))))
        .collect()
}

/// Subsets separated by `;`, e.g. `0,1;2,3`.
pub fn cover(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(states).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_values() {
        assert_eq!(config("0,1,2").unwrap().as_ints().unwrap(), vec![0, 1, 2]);
        assert_eq!(config("[[0,0],[1,0]]").unwrap().dim(), 2);
        assert_eq!(config("[3,5]").unwrap().as_ints().unwrap(), vec![3, 5]);
        assert_eq!(window("0,0:4,5").unwrap().len(), 30);
        assert_eq!(element("1:0").unwrap(), vec![1, 0]);
        assert_eq!(cover("0,1;2").unwrap(), vec![vec![0, 1], vec![2]]);
        assert!(window("3").is_err());
    }
}
