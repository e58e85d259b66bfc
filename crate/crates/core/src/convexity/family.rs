//! Built-in parametric membership families.
//!
//! The convex families all derive their endpoints from one quasi-concave
//! shape `m: R^n -> [0, 1]`:
//!
//! * truth `[a * m, m]` is quasi-concave because scaling by `a > 0` keeps
//!   the superlevel sets of `m`;
//! * indeterminacy and falsity `[(1 - m) / 2, 1 - m]` are quasi-convex
//!   because `1 - m` has the complementary sublevel sets.
//!
//! The shapes are radial in the Euclidean distance to a center, so their
//! superlevel sets are balls and therefore convex. The Gaussian shape is
//! strictly decreasing in the distance, and the distance is strictly convex
//! along any segment between distinct points, which makes that family
//! strongly convex on bounded boxes. The triangular and trapezoidal shapes
//! have flat regions and are only convex.

use std::fmt;
use std::str::FromStr;

use super::{ConvexityError, FunctionalIns};
use crate::interval::UnitInterval;
use crate::value::NeutrosophicValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// `m = max(0, 1 - d / width)` with `d` the distance to the center.
    Triangular { center: f64, width: f64 },
    /// 1 within `core` of the center, then linear down to 0 over `width`.
    Trapezoidal { center: f64, core: f64, width: f64 },
    /// `m = exp(-d^2 / (2 sigma^2))`.
    Gaussian { center: f64, sigma: f64 },
    /// Two unit-width triangular peaks `separation` apart along the first
    /// axis; truth is the clamped sum, indeterminacy and falsity are zero.
    /// Used as a known non-convex instance.
    Bimodal { separation: f64 },
    /// The same value everywhere: truth `[level, level]`, the others
    /// `[1 - level, 1 - level]`.
    Constant { level: f64 },
}

fn distance(p: &[f64], center: f64) -> f64 {
    p.iter()
        .map(|x| (x - center) * (x - center))
        .sum::<f64>()
        .sqrt()
}

fn interval(lo: f64, hi: f64) -> UnitInterval {
    UnitInterval::new(lo, hi).expect("family endpoints lie in [0, 1]")
}

/// Truth `[a * m, m]`, indeterminacy = falsity = `[(1 - m) / 2, 1 - m]`.
fn shaped(m: f64, truth_floor: f64) -> NeutrosophicValue {
    let m = m.clamp(0.0, 1.0);
    let rest = 1.0 - m;
    let other = interval(0.5 * rest, rest);
    NeutrosophicValue::new(interval(truth_floor * m, m), other, other)
}

fn triangle(d: f64, width: f64) -> f64 {
    (1.0 - d / width).max(0.0)
}

impl Family {
    /// True when this instance is known to be convex.
    pub fn is_convex(&self) -> bool {
        match *self {
            Family::Bimodal { separation } => separation == 0.0,
            _ => true,
        }
    }

    pub fn is_strongly_convex(&self) -> bool {
        matches!(self, Family::Gaussian { .. })
    }

    fn validate(&self) -> Result<(), ConvexityError> {
        let bad = |msg: &str| Err(ConvexityError::InvalidParameter(format!("{self}: {msg}")));
        let finite = |v: f64| v.is_finite();
        match *self {
            Family::Triangular { center, width } => {
                if !(finite(center) && finite(width) && width > 0.0) {
                    return bad("needs a finite center and a positive width");
                }
            }
            Family::Trapezoidal {
                center,
                core,
                width,
            } => {
                if !(finite(center) && finite(core) && finite(width) && core >= 0.0 && width > 0.0)
                {
                    return bad("needs a finite center, core >= 0 and width > 0");
                }
            }
            Family::Gaussian { center, sigma } => {
                if !(finite(center) && finite(sigma) && sigma > 0.0) {
                    return bad("needs a finite center and a positive sigma");
                }
            }
            Family::Bimodal { separation } => {
                if !(finite(separation) && separation >= 0.0) {
                    return bad("needs a non-negative separation");
                }
            }
            Family::Constant { level } => {
                if !(0.0..=1.0).contains(&level) {
                    return bad("level must lie in [0, 1]");
                }
            }
        }
        Ok(())
    }

    /// Instantiates the family over `R^dimension`.
    pub fn build(&self, dimension: usize) -> Result<FunctionalIns, ConvexityError> {
        self.validate()?;
        match *self {
            Family::Triangular { center, width } => FunctionalIns::new(dimension, move |p| {
                shaped(triangle(distance(p, center), width), 0.8)
            }),
            Family::Trapezoidal {
                center,
                core,
                width,
            } => FunctionalIns::new(dimension, move |p| {
                let d = (distance(p, center) - core).max(0.0);
                shaped(triangle(d, width), 0.8)
            }),
            Family::Gaussian { center, sigma } => FunctionalIns::new(dimension, move |p| {
                let d = distance(p, center);
                shaped((-(d * d) / (2.0 * sigma * sigma)).exp(), 0.9)
            }),
            Family::Bimodal { separation } => FunctionalIns::new(dimension, move |p| {
                let half = separation / 2.0;
                let tail: f64 = p[1..].iter().map(|x| x * x).sum();
                let peak = |c: f64| triangle(((p[0] - c).powi(2) + tail).sqrt(), 1.0);
                let m = (peak(half) + peak(-half)).min(1.0);
                NeutrosophicValue::new(interval(m, m), UnitInterval::ZERO, UnitInterval::ZERO)
            }),
            Family::Constant { level } => {
                let rest = interval(1.0 - level, 1.0 - level);
                FunctionalIns::constant(
                    dimension,
                    NeutrosophicValue::new(interval(level, level), rest, rest),
                )
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Triangular { .. } => "triangular",
            Family::Trapezoidal { .. } => "trapezoidal",
            Family::Gaussian { .. } => "gaussian",
            Family::Bimodal { .. } => "bimodal",
            Family::Constant { .. } => "constant",
        }
    }

    fn params(&self) -> Vec<f64> {
        match *self {
            Family::Triangular { center, width } => vec![center, width],
            Family::Trapezoidal {
                center,
                core,
                width,
            } => vec![center, core, width],
            Family::Gaussian { center, sigma } => vec![center, sigma],
            Family::Bimodal { separation } => vec![separation],
            Family::Constant { level } => vec![level],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name())?;
        for (n, p) in self.params().iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses `name(p1,p2,...)`, e.g. `triangular(0,1)` or `gaussian(0.5, 2)`.
impl FromStr for Family {
    type Err = ConvexityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || ConvexityError::UnknownFamily(s.to_string());
        let (name, rest) = s.split_once('(').ok_or_else(unknown)?;
        let args = rest.trim_end().strip_suffix(')').ok_or_else(unknown)?;
        let params = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim().parse::<f64>().map_err(|_| {
                        ConvexityError::InvalidParameter(format!("`{}` in `{s}`", a.trim()))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(ConvexityError::InvalidParameter(format!(
                    "`{}` takes {n} parameter(s), got {}",
                    name.trim(),
                    params.len()
                )))
            }
        };
        let family = match name.trim() {
            "triangular" => {
                arity(2)?;
                Family::Triangular {
                    center: params[0],
                    width: params[1],
                }
            }
            "trapezoidal" => {
                arity(3)?;
                Family::Trapezoidal {
                    center: params[0],
                    core: params[1],
                    width: params[2],
                }
            }
            "gaussian" => {
                arity(2)?;
                Family::Gaussian {
                    center: params[0],
                    sigma: params[1],
                }
            }
            "bimodal" => {
                arity(1)?;
                Family::Bimodal {
                    separation: params[0],
                }
            }
            "constant" => {
                arity(1)?;
                Family::Constant { level: params[0] }
            }
            _ => return Err(unknown()),
        };
        family.validate()?;
        Ok(family)
    }
}
