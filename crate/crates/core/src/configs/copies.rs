use super::{ScalarRange, Window};
use crate::algebra::Semimodule;
use crate::util::canonical;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite, nonempty, duplicate-free configuration `F`, kept in the order it
/// was given.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConfigSet<E> {
    elements: Vec<E>,
}

impl<E: PartialEq> ConfigSet<E> {
    pub fn new(elements: Vec<E>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::invalid("configuration F must be nonempty"));
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::invalid("configuration F has a repeated element"));
            }
        }
        Ok(ConfigSet { elements })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl ConfigSet<Vec<u64>> {
    /// A configuration of points of `Z+`, each stored as a 1-vector.
    pub fn ints(xs: &[u64]) -> Result<Self> {
        ConfigSet::new(xs.iter().map(|&x| vec![x]).collect())
    }

    /// Points of `Z+^dim`; all must share one dimension.
    pub fn points(pts: Vec<Vec<u64>>) -> Result<Self> {
        let dim = pts.first().map_or(0, Vec::len);
        if dim == 0 || pts.iter().any(|p| p.len() != dim) {
            return Err(Error::invalid("configuration points must share a positive dimension"));
        }
        ConfigSet::new(pts)
    }

    pub fn dim(&self) -> usize {
        self.elements[0].len()
    }

    pub fn coord_min(&self, c: usize) -> u64 {
        self.elements.iter().map(|p| p[c]).min().unwrap()
    }

    pub fn coord_max(&self, c: usize) -> u64 {
        self.elements.iter().map(|p| p[c]).max().unwrap()
    }

    /// `max F - min F` for one-dimensional configurations.
    pub fn span(&self) -> u64 {
        self.coord_max(0) - self.coord_min(0)
    }

    /// The coordinates of a one-dimensional configuration.
    pub fn as_ints(&self) -> Result<Vec<u64>> {
        if self.dim() != 1 {
            return Err(Error::invalid("configuration is not one-dimensional"));
        }
        Ok(self.elements.iter().map(|p| p[0]).collect())
    }
}

/// The set `a ∔ dF` together with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotheticCopy<S, E> {
    pub a: E,
    pub d: S,
    #[serde(rename = "F")]
    pub f: ConfigSet<E>,
    /// Sorted, without repeats.
    pub realized: Vec<E>,
}

/// Copies in `Z+^m` with scalars in `Z+`.
pub type LatticeCopy = HomotheticCopy<u64, Vec<u64>>;

impl<S: Clone, E: Clone + Ord> HomotheticCopy<S, E> {
    /// Recomputes `a ∔ dF` in `m` and compares it with the stored set.
    pub fn verify<M>(&self, m: &M) -> Result<bool>
    where
        M: Semimodule<Scalar = S, Elem = E>,
    {
        Ok(realize_copy(m, &self.a, &self.d, &self.f)?.realized == self.realized)
    }
}

/// `{a ∔ d·f : f ∈ F}` computed in `m`.
pub fn realize_copy<M>(m: &M, a: &M::Elem, d: &M::Scalar, f: &ConfigSet<M::Elem>) -> Result<HomotheticCopy<M::Scalar, M::Elem>>
where
    M: Semimodule,
    M::Elem: Ord,
{
    for x in std::iter::once(a).chain(f.elements()) {
        if !m.contains(x) {
            return Err(Error::invalid(format!("{x:?} is not an element of the semimodule")));
        }
    }
    let realized = f
        .elements()
        .iter()
        .map(|x| m.act(d, x).and_then(|dx| m.add(a, &dx)))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomotheticCopy { a: a.clone(), d: d.clone(), f: f.clone(), realized: canonical(realized) })
}

/// Per-coordinate bounds on `a` so that `a + dF` lies in `window`, or `None`
/// when no such `a` exists.
pub(crate) fn anchor_box(f: &ConfigSet<Vec<u64>>, window: &Window, d: u64) -> Option<Window> {
    let mut lo = Vec::with_capacity(window.dim());
    let mut hi = Vec::with_capacity(window.dim());
    for c in 0..window.dim() {
        let low = d.checked_mul(f.coord_min(c))?;
        let high = d.checked_mul(f.coord_max(c))?;
        let a_hi = window.hi[c].checked_sub(high)?;
        let a_lo = window.lo[c].saturating_sub(low);
        if a_lo > a_hi {
            return None;
        }
        lo.push(a_lo);
        hi.push(a_hi);
    }
    Some(Window { lo, hi })
}

/// Every copy `a + dF` inside `window` with `d` in `d_range`, in `(d, a)`
/// lexicographic order. `d = 0` is skipped unless `allow_zero_d`.
pub fn enumerate_copies<'a>(
    f: &'a ConfigSet<Vec<u64>>,
    window: &'a Window,
    d_range: ScalarRange,
    allow_zero_d: bool,
) -> impl Iterator<Item = LatticeCopy> + 'a {
    assert_eq!(f.dim(), window.dim(), "F and window dimensions differ");
    d_range.iter(allow_zero_d).flat_map(move |d| {
        let anchors = anchor_box(f, window, d);
        let count = anchors.as_ref().map_or(0, Window::len);
        (0..count).map(move |i| {
            let a = anchors.as_ref().unwrap().point_at(i);
            let realized = f.elements().iter().map(|x| a.iter().zip(x).map(|(ac, xc)| ac + d * xc).collect()).collect();
            LatticeCopy { a, d, f: f.clone(), realized: canonical(realized) }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LatticeModule;

    fn z1() -> LatticeModule {
        LatticeModule::new(1, 1000)
    }

    #[test]
    fn realize_examples() {
        let f = ConfigSet::ints(&[7]).unwrap();
        assert_eq!(realize_copy(&z1(), &vec![0], &1, &f).unwrap().realized, vec![vec![7]]);
        let f = ConfigSet::ints(&[0, 1, 2]).unwrap();
        assert_eq!(realize_copy(&z1(), &vec![1], &2, &f).unwrap().realized, vec![vec![1], vec![3], vec![5]]);
        assert_eq!(realize_copy(&z1(), &vec![3], &0, &f).unwrap().realized, vec![vec![3]]);
    }

    #[test]
    fn realize_propagates_overflow() {
        let f = ConfigSet::ints(&[0, 600]).unwrap();
        assert!(matches!(realize_copy(&z1(), &vec![500], &1, &f), Err(Error::Overflow(_))));
    }

    #[test]
    fn enumerate_examples() {
        let count = |f: &[u64], lo, hi, dlo, dhi| {
            let f = ConfigSet::ints(f).unwrap();
            let w = Window::interval(lo, hi);
            enumerate_copies(&f, &w, ScalarRange::new(dlo, dhi).unwrap(), false).count()
        };
        assert_eq!(count(&[0, 1, 2], 0, 8, 1, 4), 16);
        assert_eq!(count(&[0], 0, 9, 1, 1), 10);
        assert_eq!(count(&[0, 5], 0, 3, 1, 2), 0);
    }

    #[test]
    fn enumeration_is_d_then_a_ordered_and_fits() {
        let f = ConfigSet::ints(&[1, 3]).unwrap();
        let w = Window::interval(2, 12);
        let copies: Vec<_> = enumerate_copies(&f, &w, ScalarRange::new(0, 4).unwrap(), true).collect();
        assert!(copies.windows(2).all(|p| (p[0].d, &p[0].a) < (p[1].d, &p[1].a)));
        assert!(copies.iter().all(|c| c.realized.iter().all(|x| w.contains(x))));
        // a = 0, d = 2 gives {2, 6}: the anchor itself may sit outside the window
        assert!(copies.iter().any(|c| c.d == 2 && c.a == vec![0]));
        assert!(copies.iter().all(|c| c.verify(&LatticeModule::new(1, 100)).unwrap()));
    }

    #[test]
    fn planar_copies() {
        let f = ConfigSet::points(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let w = Window::cube(2, 3);
        // d = 1: a in {0,1}^2; d = 2: a = (0,0)
        assert_eq!(enumerate_copies(&f, &w, ScalarRange::new(1, 5).unwrap(), false).count(), 5);
    }
}
