use std::fmt;
use std::hash::Hash;

use indexmap::IndexMap;

use crate::error::InsError;
use crate::value::NeutrosophicValue;

/// Element label of a set over a product universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairLabel(pub String, pub String);

impl PairLabel {
    pub fn transposed(&self) -> PairLabel {
        PairLabel(self.1.clone(), self.0.clone())
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Anything that can name an element of a finite universe.
pub trait Label: Clone + Eq + Hash + fmt::Display + fmt::Debug {}

impl<T: Clone + Eq + Hash + fmt::Display + fmt::Debug> Label for T {}

/// An interval neutrosophic set over a finite universe.
///
/// Elements keep their declaration order; that order drives iteration and
/// serialization.
#[derive(Debug, Clone)]
pub struct InsSet<L: Label> {
    elements: IndexMap<L, NeutrosophicValue>,
}

/// A set over a universe of string labels.
pub type DiscreteIns = InsSet<String>;

/// A set over the cross product of two universes.
pub type PairedIns = InsSet<PairLabel>;

impl<L: Label> Default for InsSet<L> {
    fn default() -> Self {
        InsSet {
            elements: IndexMap::new(),
        }
    }
}

impl<L: Label> InsSet<L> {
    /// Builds a set, rejecting duplicate labels.
    pub fn from_elements<I>(elements: I) -> Result<Self, InsError>
    where
        I: IntoIterator<Item = (L, NeutrosophicValue)>,
    {
        let mut map = IndexMap::new();
        for (label, value) in elements {
            if map.contains_key(&label) {
                return Err(InsError::DuplicateLabel(label.to_string()));
            }
            map.insert(label, value);
        }
        Ok(InsSet { elements: map })
    }

    /// Assigns the same value to every label of `universe`.
    pub fn constant<I>(universe: I, value: NeutrosophicValue) -> Result<Self, InsError>
    where
        I: IntoIterator<Item = L>,
    {
        Self::from_elements(universe.into_iter().map(|l| (l, value)))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty_universe(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, label: &L) -> Option<&NeutrosophicValue> {
        self.elements.get(label)
    }

    pub fn universe(&self) -> impl Iterator<Item = &L> {
        self.elements.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &NeutrosophicValue)> {
        self.elements.iter()
    }

    /// Same element set, ignoring order.
    pub fn same_universe(&self, other: &Self) -> bool {
        self.len() == other.len() && self.elements.keys().all(|k| other.elements.contains_key(k))
    }

    pub(crate) fn check_universe(&self, other: &Self) -> Result<(), InsError> {
        if self.same_universe(other) {
            return Ok(());
        }
        let missing = self
            .elements
            .keys()
            .find(|k| !other.elements.contains_key(*k))
            .map(|k| format!("`{k}` is missing from the right operand"))
            .or_else(|| {
                other
                    .elements
                    .keys()
                    .find(|k| !self.elements.contains_key(*k))
                    .map(|k| format!("`{k}` is missing from the left operand"))
            })
            .unwrap_or_default();
        Err(InsError::UniverseMismatch(missing))
    }

    pub(crate) fn map_values(&self, f: impl Fn(&NeutrosophicValue) -> NeutrosophicValue) -> Self {
        InsSet {
            elements: self
                .elements
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .collect(),
        }
    }

    /// Combines two sets over the same universe element by element, keeping
    /// the left operand's order.
    pub(crate) fn zip_values(
        &self,
        other: &Self,
        f: impl Fn(&NeutrosophicValue, &NeutrosophicValue) -> NeutrosophicValue,
    ) -> Result<Self, InsError> {
        self.check_universe(other)?;
        Ok(InsSet {
            elements: self
                .elements
                .iter()
                .map(|(k, v)| (k.clone(), f(v, &other.elements[k])))
                .collect(),
        })
    }

    pub(crate) fn all_pairs(
        &self,
        other: &Self,
        pred: impl Fn(&NeutrosophicValue, &NeutrosophicValue) -> bool,
    ) -> Result<bool, InsError> {
        self.check_universe(other)?;
        Ok(self
            .elements
            .iter()
            .all(|(k, v)| pred(v, &other.elements[k])))
    }

    /// Largest endpoint difference between two sets on the same universe.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64, InsError> {
        self.check_universe(other)?;
        Ok(self
            .elements
            .iter()
            .map(|(k, v)| v.max_abs_diff(&other.elements[k]))
            .fold(0.0, f64::max))
    }

    /// Every endpoint within `tol` of the other set's.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool, InsError> {
        Ok(self.max_abs_diff(other)? <= tol)
    }
}

/// Two sets are equal when they hold identical values on the same element set;
/// element order does not matter.
impl<L: Label> PartialEq for InsSet<L> {
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other)
            && self
                .elements
                .iter()
                .all(|(k, v)| other.elements.get(k) == Some(v))
    }
}

impl<L: Label> fmt::Display for InsSet<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elements.is_empty() {
            return f.write_str("{}");
        }
        for (n, (k, v)) in self.elements.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{v}/{k}")?;
        }
        Ok(())
    }
}

impl PairedIns {
    /// Swaps the two coordinates of every label.
    pub fn transposed(&self) -> PairedIns {
        InsSet {
            elements: self
                .elements
                .iter()
                .map(|(k, v)| (k.transposed(), *v))
                .collect(),
        }
    }
}

impl<L: Label> FromIterator<(L, NeutrosophicValue)> for InsSet<L> {
    /// Later duplicates overwrite earlier ones; use [`InsSet::from_elements`]
    /// to reject them instead.
    fn from_iter<T: IntoIterator<Item = (L, NeutrosophicValue)>>(iter: T) -> Self {
        InsSet {
            elements: iter.into_iter().collect(),
        }
    }
}
