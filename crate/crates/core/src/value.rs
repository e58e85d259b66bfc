use std::fmt;

use crate::error::InsError;
use crate::interval::UnitInterval;

/// Truth, indeterminacy and falsity membership of a single element.
///
/// The three components are independent; nothing ties their sums together.
#[derive(Debug, Clone, Copy)]
pub struct NeutrosophicValue {
    truth: UnitInterval,
    indeterminacy: Indeterminacy,
    falsity: UnitInterval,
}

/// Indeterminacy with a pending reflection, so that a double complement gives
/// back the original endpoints bit for bit.
#[derive(Debug, Clone, Copy)]
struct Indeterminacy {
    base: UnitInterval,
    reflected: bool,
}

impl Indeterminacy {
    const fn plain(base: UnitInterval) -> Self {
        Indeterminacy {
            base,
            reflected: false,
        }
    }

    fn get(self) -> UnitInterval {
        if self.reflected {
            self.base.reflect()
        } else {
            self.base
        }
    }

    fn toggled(self) -> Self {
        Indeterminacy {
            base: self.base,
            reflected: !self.reflected,
        }
    }
}

impl PartialEq for NeutrosophicValue {
    fn eq(&self, other: &Self) -> bool {
        self.endpoints() == other.endpoints()
    }
}

/// One of the six interval endpoints of a [`NeutrosophicValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    InfT,
    SupT,
    InfI,
    SupI,
    InfF,
    SupF,
}

impl Endpoint {
    pub const ALL: [Endpoint; 6] = [
        Endpoint::InfT,
        Endpoint::SupT,
        Endpoint::InfI,
        Endpoint::SupI,
        Endpoint::InfF,
        Endpoint::SupF,
    ];

    /// Truth endpoints grow towards "more contained-in", the others shrink.
    pub fn is_truth(self) -> bool {
        matches!(self, Endpoint::InfT | Endpoint::SupT)
    }

    pub fn name(self) -> &'static str {
        match self {
            Endpoint::InfT => "infT",
            Endpoint::SupT => "supT",
            Endpoint::InfI => "infI",
            Endpoint::SupI => "supI",
            Endpoint::InfF => "infF",
            Endpoint::SupF => "supF",
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[inline]
fn probabilistic_sum(a: f64, b: f64) -> f64 {
    // 1 - (1-a)(1-b) rather than a + b - ab: every step is monotone and stays
    // inside [0, 1] under rounding, so interval order is preserved.
    1.0 - (1.0 - a) * (1.0 - b)
}

#[inline]
fn saturating_add(a: f64, b: f64) -> f64 {
    (a + b).min(1.0)
}

impl NeutrosophicValue {
    /// The absorbing "empty" value `<[0,0],[1,1],[1,1]>`.
    pub const EMPTY: NeutrosophicValue = NeutrosophicValue {
        truth: UnitInterval::ZERO,
        indeterminacy: Indeterminacy::plain(UnitInterval::ONE),
        falsity: UnitInterval::ONE,
    };

    /// The universal value `<[1,1],[0,0],[0,0]>`.
    pub const UNIVERSAL: NeutrosophicValue = NeutrosophicValue {
        truth: UnitInterval::ONE,
        indeterminacy: Indeterminacy::plain(UnitInterval::ZERO),
        falsity: UnitInterval::ZERO,
    };

    /// `<[0,0],[0,0],[0,0]>`, the identity of addition.
    pub const ZERO: NeutrosophicValue = NeutrosophicValue {
        truth: UnitInterval::ZERO,
        indeterminacy: Indeterminacy::plain(UnitInterval::ZERO),
        falsity: UnitInterval::ZERO,
    };

    pub fn new(truth: UnitInterval, indeterminacy: UnitInterval, falsity: UnitInterval) -> Self {
        NeutrosophicValue {
            truth,
            indeterminacy: Indeterminacy::plain(indeterminacy),
            falsity,
        }
    }

    pub fn truth(&self) -> UnitInterval {
        self.truth
    }

    pub fn indeterminacy(&self) -> UnitInterval {
        self.indeterminacy.get()
    }

    pub fn falsity(&self) -> UnitInterval {
        self.falsity
    }

    /// Builds a value from six raw endpoints, validating each interval.
    pub fn from_bounds(t: (f64, f64), i: (f64, f64), f: (f64, f64)) -> Result<Self, InsError> {
        Ok(NeutrosophicValue::new(
            UnitInterval::new(t.0, t.1)?,
            UnitInterval::new(i.0, i.1)?,
            UnitInterval::new(f.0, f.1)?,
        ))
    }

    pub fn endpoint(&self, e: Endpoint) -> f64 {
        match e {
            Endpoint::InfT => self.truth.lo(),
            Endpoint::SupT => self.truth.hi(),
            Endpoint::InfI => self.indeterminacy().lo(),
            Endpoint::SupI => self.indeterminacy().hi(),
            Endpoint::InfF => self.falsity.lo(),
            Endpoint::SupF => self.falsity.hi(),
        }
    }

    pub fn endpoints(&self) -> [f64; 6] {
        Endpoint::ALL.map(|e| self.endpoint(e))
    }

    /// Largest absolute difference over the six endpoints.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.truth
            .max_abs_diff(&other.truth)
            .max(self.indeterminacy().max_abs_diff(&other.indeterminacy()))
            .max(self.falsity.max_abs_diff(&other.falsity))
    }

    /// Componentwise order: truth no larger, indeterminacy and falsity no smaller.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        Endpoint::ALL.iter().all(|&e| {
            let (a, b) = (self.endpoint(e), other.endpoint(e));
            if e.is_truth() {
                a <= b
            } else {
                a >= b
            }
        })
    }

    pub fn complement(&self) -> Self {
        NeutrosophicValue {
            truth: self.falsity,
            indeterminacy: self.indeterminacy.toggled(),
            falsity: self.truth,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        NeutrosophicValue {
            truth: self.truth.zip(other.truth, f64::max),
            indeterminacy: Indeterminacy::plain(
                self.indeterminacy().zip(other.indeterminacy(), f64::min),
            ),
            falsity: self.falsity.zip(other.falsity, f64::min),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        NeutrosophicValue {
            truth: self.truth.zip(other.truth, f64::min),
            indeterminacy: Indeterminacy::plain(
                self.indeterminacy().zip(other.indeterminacy(), f64::max),
            ),
            falsity: self.falsity.zip(other.falsity, f64::max),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let reflected = other.indeterminacy().reflect();
        NeutrosophicValue {
            truth: self.truth.zip(other.falsity, f64::min),
            indeterminacy: Indeterminacy::plain(self.indeterminacy().zip(reflected, f64::max)),
            falsity: self.falsity.zip(other.truth, f64::max),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        NeutrosophicValue {
            truth: self.truth.zip(other.truth, saturating_add),
            indeterminacy: Indeterminacy::plain(
                self.indeterminacy()
                    .zip(other.indeterminacy(), saturating_add),
            ),
            falsity: self.falsity.zip(other.falsity, saturating_add),
        }
    }

    /// Truth combines by probabilistic sum, indeterminacy and falsity by
    /// product (inf with inf, sup with sup).
    pub fn product(&self, other: &Self) -> Self {
        NeutrosophicValue {
            truth: self.truth.zip(other.truth, probabilistic_sum),
            indeterminacy: Indeterminacy::plain(
                self.indeterminacy()
                    .zip(other.indeterminacy(), |a, b| a * b),
            ),
            falsity: self.falsity.zip(other.falsity, |a, b| a * b),
        }
    }

    /// Every endpoint becomes `min(endpoint * k, 1)`. `k` must already be validated.
    pub(crate) fn scale(&self, k: f64) -> Self {
        let f = |v: f64| (v * k).min(1.0);
        NeutrosophicValue {
            truth: self.truth.map(f),
            indeterminacy: Indeterminacy::plain(self.indeterminacy().map(f)),
            falsity: self.falsity.map(f),
        }
    }

    /// Every endpoint becomes `min(endpoint / k, 1)`. `k` must already be validated.
    pub(crate) fn divide(&self, k: f64) -> Self {
        let f = |v: f64| (v / k).min(1.0);
        NeutrosophicValue {
            truth: self.truth.map(f),
            indeterminacy: Indeterminacy::plain(self.indeterminacy().map(f)),
            falsity: self.falsity.map(f),
        }
    }

    pub fn truth_favorite(&self) -> Self {
        NeutrosophicValue {
            truth: self.truth.zip(self.indeterminacy(), saturating_add),
            indeterminacy: Indeterminacy::plain(UnitInterval::ZERO),
            falsity: self.falsity,
        }
    }

    pub fn false_favorite(&self) -> Self {
        NeutrosophicValue {
            truth: self.truth,
            indeterminacy: Indeterminacy::plain(UnitInterval::ZERO),
            falsity: self.falsity.zip(self.indeterminacy(), saturating_add),
        }
    }
}

impl fmt::Display for NeutrosophicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{},{},{}>",
            self.truth,
            self.indeterminacy(),
            self.falsity
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(t: (f64, f64), i: (f64, f64), f: (f64, f64)) -> NeutrosophicValue {
        NeutrosophicValue::from_bounds(t, i, f).unwrap()
    }

    #[test]
    fn complement_maps_universal_to_empty() {
        assert_eq!(
            NeutrosophicValue::UNIVERSAL.complement(),
            NeutrosophicValue::EMPTY
        );
        assert_eq!(
            NeutrosophicValue::EMPTY.complement(),
            NeutrosophicValue::UNIVERSAL
        );
    }

    #[test]
    fn containment_directions() {
        let a = v((0.2, 0.4), (0.3, 0.5), (0.3, 0.5));
        let b = v((0.3, 0.4), (0.3, 0.4), (0.1, 0.5));
        assert!(a.is_contained_in(&b));
        assert!(!b.is_contained_in(&a));
        assert!(NeutrosophicValue::EMPTY.is_contained_in(&a));
        assert!(a.is_contained_in(&NeutrosophicValue::UNIVERSAL));
    }

    #[test]
    fn favorites_clear_indeterminacy() {
        let a = v((0.6, 0.8), (0.2, 0.3), (0.2, 0.3));
        let tf = a.truth_favorite();
        assert_eq!(tf.indeterminacy(), UnitInterval::ZERO);
        assert_eq!(tf.truth().lo(), 0.8);
        assert_eq!(tf.truth().hi(), 1.0);
        assert_eq!(tf.truth_favorite(), tf);
        let ff = a.false_favorite();
        assert_eq!(ff.false_favorite(), ff);
        assert_eq!(ff.truth(), a.truth());
    }

    #[test]
    fn double_complement_is_exact() {
        let a = v((0.1, 0.3), (0.3, 0.7), (0.2, 0.9));
        assert_eq!(a.complement().complement().endpoints(), a.endpoints());
    }

    #[test]
    fn product_with_empty_is_identity() {
        let a = v((0.5, 0.7), (0.0, 0.2), (0.2, 0.3));
        let p = NeutrosophicValue::EMPTY.product(&a);
        assert!(p.max_abs_diff(&a) <= 1e-12);
    }
}
