use crate::{Error, Result};

/// Parses `"0,1,2"` into integers. Whitespace around items is ignored.
pub(crate) fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<u64>().map_err(|e| Error::invalid(format!("bad integer {x:?}: {e}"))))
        .collect()
}

/// Parses `"lo:hi"` (inclusive) or a single `"n"` meaning `n:n`.
pub(crate) fn parse_range(s: &str) -> Result<(u64, u64)> {
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| Error::invalid(format!("bad bound {x:?}: {e}")));
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(Error::invalid(format!("empty range {s}")));
    }
    Ok((lo, hi))
}

/// Sorts and removes duplicates.
pub(crate) fn canonical<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_ranges() {
        assert_eq!(parse_list("0, 1,2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_range("3:9").unwrap(), (3, 9));
        assert_eq!(parse_range("4").unwrap(), (4, 4));
        assert!(parse_range("9:3").is_err());
        assert!(parse_list("1,x").is_err());
    }
}
