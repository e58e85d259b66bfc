//! Membership functions over Euclidean space and sampled convexity checks.
//!
//! A set over `R^n` is convex when its truth endpoints are quasi-concave and
//! its indeterminacy and falsity endpoints quasi-convex along every segment.
//! That is a universally quantified property of black-box functions, so the
//! checkers here only falsify: they sample segments and report the first
//! violated inequality as a witness. "No violation found" is not a proof.

mod checker;
mod family;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::value::NeutrosophicValue;

pub use checker::{
    check_convex, check_strongly_convex, CheckParams, ConvexityReport, Verdict, Witness,
};
pub use family::Family;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConvexityError {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

type Membership = dyn Fn(&[f64]) -> NeutrosophicValue + Send + Sync;

/// An interval neutrosophic set over `R^n`, given by its membership function.
///
/// The function must be pure: the checkers evaluate it from several threads
/// and rely on repeated calls agreeing.
#[derive(Clone)]
pub struct FunctionalIns {
    dimension: usize,
    membership: Arc<Membership>,
}

impl fmt::Debug for FunctionalIns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionalIns")
            .field("dimension", &self.dimension)
            .finish_non_exhaustive()
    }
}

impl FunctionalIns {
    pub fn new<F>(dimension: usize, membership: F) -> Result<Self, ConvexityError>
    where
        F: Fn(&[f64]) -> NeutrosophicValue + Send + Sync + 'static,
    {
        if dimension == 0 {
            return Err(ConvexityError::InvalidParameter(
                "dimension must be at least 1".into(),
            ));
        }
        Ok(FunctionalIns {
            dimension,
            membership: Arc::new(membership),
        })
    }

    pub fn constant(dimension: usize, value: NeutrosophicValue) -> Result<Self, ConvexityError> {
        Self::new(dimension, move |_| value)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Evaluates the membership at `point`, which must have `dimension` coordinates.
    pub fn membership(&self, point: &[f64]) -> NeutrosophicValue {
        debug_assert_eq!(point.len(), self.dimension);
        (self.membership)(point)
    }

    pub fn intersect(&self, other: &FunctionalIns) -> Result<FunctionalIns, ConvexityError> {
        intersect_functional(self, other)
    }
}

/// Pointwise intersection: min on truth endpoints, max on the others.
pub fn intersect_functional(
    a: &FunctionalIns,
    b: &FunctionalIns,
) -> Result<FunctionalIns, ConvexityError> {
    if a.dimension != b.dimension {
        return Err(ConvexityError::DimensionMismatch {
            left: a.dimension,
            right: b.dimension,
        });
    }
    let (fa, fb) = (a.membership.clone(), b.membership.clone());
    FunctionalIns::new(a.dimension, move |p| fa(p).intersect(&fb(p)))
}

/// Axis-aligned sampling box, one closed range per dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBox {
    bounds: Vec<(f64, f64)>,
}

impl SampleBox {
    pub fn new(bounds: Vec<(f64, f64)>) -> Result<Self, ConvexityError> {
        if bounds.is_empty() {
            return Err(ConvexityError::InvalidDomain(
                "box has no dimensions".into(),
            ));
        }
        for (d, &(lo, hi)) in bounds.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(ConvexityError::InvalidDomain(format!(
                    "dimension {}: bounds {lo}:{hi} are not an ordered finite range",
                    d + 1
                )));
            }
        }
        Ok(SampleBox { bounds })
    }

    /// `[lo, hi]` in every one of `dimension` coordinates.
    pub fn cube(dimension: usize, lo: f64, hi: f64) -> Result<Self, ConvexityError> {
        Self::new(vec![(lo, hi); dimension])
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    /// True when the box contains at least two distinct points.
    pub fn has_extent(&self) -> bool {
        self.bounds.iter().any(|&(lo, hi)| lo < hi)
    }
}

/// Parses `LO:HI[,LO:HI...]`.
impl FromStr for SampleBox {
    type Err = ConvexityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad =
            |part: &str| ConvexityError::InvalidDomain(format!("cannot parse range `{part}`"));
        let bounds = s
            .split(',')
            .map(|part| {
                let (lo, hi) = part.trim().split_once(':').ok_or_else(|| bad(part))?;
                let lo: f64 = lo.trim().parse().map_err(|_| bad(part))?;
                let hi: f64 = hi.trim().parse().map_err(|_| bad(part))?;
                Ok((lo, hi))
            })
            .collect::<Result<Vec<_>, ConvexityError>>()?;
        SampleBox::new(bounds)
    }
}

impl fmt::Display for SampleBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (lo, hi)) in self.bounds.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{lo}:{hi}")?;
        }
        Ok(())
    }
}
