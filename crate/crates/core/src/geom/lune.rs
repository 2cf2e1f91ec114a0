use crate::error::{Error, Result};
use crate::geom::point_set::{ExactPointSet, PointSet, Separation};

/// Open symmetric difference of the unit disks about `q` and `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lune {
    q: usize,
    r: usize,
}

impl Lune {
    /// Requires `0 < |q - r| < 2`.
    pub fn new<S: PointSet + ?Sized>(set: &S, q: usize, r: usize) -> Result<Self> {
        let len = set.len();
        for k in [q, r] {
            if k >= len {
                return Err(Error::IndexOutOfRange { index: k, len });
            }
        }
        if q == r || set.separation(q, r) != Separation::Crossing {
            return Err(Error::DegenerateLune { q, r });
        }
        Ok(Self { q, r })
    }

    pub fn centers(&self) -> (usize, usize) {
        (self.q, self.r)
    }

    /// Strict membership: inside exactly one of the two open disks.
    #[inline]
    pub fn contains<S: PointSet + ?Sized>(&self, set: &S, i: usize) -> bool {
        set.strictly_inside(i, self.q) != set.strictly_inside(i, self.r)
    }
}

/// Exact lune membership on an integer point set.
pub fn in_lune_exact(set: &ExactPointSet, lune: &Lune, i: usize) -> Result<bool> {
    if i >= set.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: set.len(),
        });
    }
    Ok(lune.contains(set, i))
}
