//! Sector frames: the cyclic arrangement of dominant and subdominant
//! directions that a standard graph lives in.
//!
//! A frame consists of an even cycle length `n` and a set of subdominant
//! sectors that is centrally symmetric (closed under adding `n/2`) and
//! pairwise non-adjacent on the cycle. All label arithmetic in the crate
//! goes through the frame so that wraparound is handled in one place.

use thiserror::Error;

/// Errors produced when assembling a [`SectorFrame`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("n must be even and at least 4, got {0}")]
    BadN(usize),
    #[error("subdominant set must be nonempty")]
    EmptySubdominant,
    #[error("sector {sector} out of range for n = {n}")]
    SectorOutOfRange { sector: usize, n: usize },
    #[error("sector {0} listed more than once")]
    DuplicateSector(usize),
    #[error("subdominant set not centrally symmetric: contains {0} but not {1}")]
    NotCentrallySymmetric(usize, usize),
    #[error("subdominant sectors {0} and {1} are cyclically adjacent")]
    AdjacentSubdominant(usize, usize),
}

/// An even cycle of `n` sectors together with the subdominant subset.
///
/// Sectors are numbered counterclockwise `0..n`. The subdominant set is
/// stored sorted; membership queries are answered from a bitmask so they
/// stay cheap in the inner face-walk loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectorFrame {
    n: usize,
    subdominant: Vec<usize>,
    mask: u64,
}

impl SectorFrame {
    /// Builds a frame, checking evenness, range, central symmetry and
    /// non-adjacency of the subdominant set.
    pub fn new(n: usize, subdominant: &[usize]) -> Result<Self, FrameError> {
        if n < 4 || n % 2 != 0 || n > 64 {
            return Err(FrameError::BadN(n));
        }
        if subdominant.is_empty() {
            return Err(FrameError::EmptySubdominant);
        }
        let mut sorted = subdominant.to_vec();
        sorted.sort_unstable();
        let mut mask = 0u64;
        for &s in &sorted {
            if s >= n {
                return Err(FrameError::SectorOutOfRange { sector: s, n });
            }
            if mask & (1 << s) != 0 {
                return Err(FrameError::DuplicateSector(s));
            }
            mask |= 1 << s;
        }
        let nu = n / 2;
        for &s in &sorted {
            let partner = (s + nu) % n;
            if mask & (1 << partner) == 0 {
                return Err(FrameError::NotCentrallySymmetric(s, partner));
            }
        }
        for &s in &sorted {
            let next = (s + 1) % n;
            if mask & (1 << next) != 0 {
                return Err(FrameError::AdjacentSubdominant(s, next));
            }
        }
        Ok(SectorFrame {
            n,
            subdominant: sorted,
            mask,
        })
    }

    /// Cycle length.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Half the cycle length; the central symmetry shifts labels by this.
    #[must_use]
    pub fn nu(&self) -> usize {
        self.n / 2
    }

    /// The sorted subdominant sectors.
    #[must_use]
    pub fn subdominant(&self) -> &[usize] {
        &self.subdominant
    }

    #[must_use]
    pub fn is_subdominant(&self, sector: usize) -> bool {
        debug_assert!(sector < self.n);
        self.mask & (1 << sector) != 0
    }

    #[must_use]
    pub fn is_dominant(&self, sector: usize) -> bool {
        !self.is_subdominant(sector)
    }

    /// All dominant labels in increasing order.
    #[must_use]
    pub fn dominant_labels(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.is_dominant(j)).collect()
    }

    /// Smallest dominant label.
    #[must_use]
    pub fn min_dominant(&self) -> usize {
        (0..self.n)
            .find(|&j| self.is_dominant(j))
            .expect("non-adjacency leaves at least one dominant label")
    }

    /// `sector + by` on the cycle.
    #[must_use]
    pub fn add(&self, sector: usize, by: usize) -> usize {
        (sector + by) % self.n
    }

    /// `sector - by` on the cycle.
    #[must_use]
    pub fn sub(&self, sector: usize, by: usize) -> usize {
        (sector + self.n - by % self.n) % self.n
    }

    /// The next dominant label counterclockwise after `j`: `j + 1` if that is
    /// dominant, otherwise `j + 2` (non-adjacency guarantees it).
    #[must_use]
    pub fn next_dominant(&self, j: usize) -> usize {
        let cand = self.add(j, 1);
        if self.is_dominant(cand) {
            cand
        } else {
            self.add(j, 2)
        }
    }

    /// The previous dominant label clockwise before `j`.
    #[must_use]
    pub fn prev_dominant(&self, j: usize) -> usize {
        let cand = self.sub(j, 1);
        if self.is_dominant(cand) {
            cand
        } else {
            self.sub(j, 2)
        }
    }

    /// True when every other sector is subdominant, so no two dominant
    /// sectors are cyclically adjacent. Only possible for `n` divisible by 4.
    #[must_use]
    pub fn is_alternating(&self) -> bool {
        self.subdominant.len() * 2 == self.n
    }
}
