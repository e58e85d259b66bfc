use std::fmt;

use crate::error::InsError;

/// A closed subinterval `[lo, hi]` of `[0, 1]`.
///
/// Construction never clamps: out-of-range or misordered bounds (and NaN)
/// are rejected with [`InsError::InvalidInterval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    pub const ZERO: UnitInterval = UnitInterval { lo: 0.0, hi: 0.0 };
    pub const ONE: UnitInterval = UnitInterval { lo: 1.0, hi: 1.0 };
    pub const FULL: UnitInterval = UnitInterval { lo: 0.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self, InsError> {
        // written so that NaN fails every comparison
        if 0.0 <= lo && lo <= hi && hi <= 1.0 {
            // `+ 0.0` folds -0.0 into 0.0
            Ok(UnitInterval {
                lo: lo + 0.0,
                hi: hi + 0.0,
            })
        } else {
            Err(InsError::InvalidInterval { lo, hi })
        }
    }

    /// Degenerate interval `[v, v]`.
    pub fn point(v: f64) -> Result<Self, InsError> {
        Self::new(v, v)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Applies a monotone non-decreasing map to both endpoints.
    ///
    /// Every operator on membership intervals is monotone in each endpoint and
    /// maps `[0,1]` into `[0,1]`, so the result stays a valid interval.
    #[inline]
    pub(crate) fn map(self, f: impl Fn(f64) -> f64) -> Self {
        Self::from_monotone(f(self.lo), f(self.hi))
    }

    #[inline]
    pub(crate) fn zip(self, other: Self, f: impl Fn(f64, f64) -> f64) -> Self {
        Self::from_monotone(f(self.lo, other.lo), f(self.hi, other.hi))
    }

    #[inline]
    pub(crate) fn from_monotone(lo: f64, hi: f64) -> Self {
        debug_assert!(
            0.0 <= lo && lo <= hi && hi <= 1.0,
            "operator left the unit interval: [{lo}, {hi}]"
        );
        UnitInterval { lo, hi }
    }

    /// `[1 - hi, 1 - lo]`
    #[inline]
    pub fn reflect(self) -> Self {
        Self::from_monotone(1.0 - self.hi, 1.0 - self.lo)
    }

    /// Largest endpoint difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}
