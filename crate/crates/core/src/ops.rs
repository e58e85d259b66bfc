//! Set-theoretic operators on interval neutrosophic sets.
//!
//! Binary operators (apart from [`cartesian_product`]) require both operands
//! to share the same element set and keep the left operand's element order.

use crate::error::InsError;
use crate::set::{DiscreteIns, InsSet, Label, PairLabel, PairedIns};
use crate::value::NeutrosophicValue;

fn check_scalar(k: f64) -> Result<(), InsError> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(InsError::NonPositiveScalar(k))
    }
}

impl<L: Label> InsSet<L> {
    pub fn complement(&self) -> Self {
        self.map_values(NeutrosophicValue::complement)
    }

    pub fn is_contained_in(&self, other: &Self) -> Result<bool, InsError> {
        self.all_pairs(other, NeutrosophicValue::is_contained_in)
    }

    /// Mutual containment, i.e. identical endpoints everywhere.
    pub fn set_equals(&self, other: &Self) -> Result<bool, InsError> {
        Ok(self.is_contained_in(other)? && other.is_contained_in(self)?)
    }

    /// True when every element carries `<[0,0],[1,1],[1,1]>`.
    pub fn is_empty(&self) -> bool {
        self.iter().all(|(_, v)| *v == NeutrosophicValue::EMPTY)
    }

    pub fn union(&self, other: &Self) -> Result<Self, InsError> {
        self.zip_values(other, NeutrosophicValue::union)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, InsError> {
        self.zip_values(other, NeutrosophicValue::intersect)
    }

    pub fn difference(&self, other: &Self) -> Result<Self, InsError> {
        self.zip_values(other, NeutrosophicValue::difference)
    }

    pub fn add(&self, other: &Self) -> Result<Self, InsError> {
        self.zip_values(other, NeutrosophicValue::add)
    }

    /// The product formulas evaluated element by element on a shared universe.
    pub fn pointwise_product(&self, other: &Self) -> Result<Self, InsError> {
        self.zip_values(other, NeutrosophicValue::product)
    }

    pub fn scalar_mul(&self, k: f64) -> Result<Self, InsError> {
        check_scalar(k)?;
        Ok(self.map_values(|v| v.scale(k)))
    }

    pub fn scalar_div(&self, k: f64) -> Result<Self, InsError> {
        check_scalar(k)?;
        Ok(self.map_values(|v| v.divide(k)))
    }

    pub fn truth_favorite(&self) -> Self {
        self.map_values(NeutrosophicValue::truth_favorite)
    }

    pub fn false_favorite(&self) -> Self {
        self.map_values(NeutrosophicValue::false_favorite)
    }
}

/// Product set over `X1 x X2`, in row-major order of the two universes.
pub fn cartesian_product(a: &DiscreteIns, b: &DiscreteIns) -> PairedIns {
    a.iter()
        .flat_map(|(x, va)| {
            b.iter()
                .map(move |(y, vb)| (PairLabel(x.clone(), y.clone()), va.product(vb)))
        })
        .collect()
}

/// `a * A` with saturation at 1.
pub fn scalar_mul<L: Label>(k: f64, a: &InsSet<L>) -> Result<InsSet<L>, InsError> {
    a.scalar_mul(k)
}

/// `A / a` with saturation at 1.
pub fn scalar_div<L: Label>(a: &InsSet<L>, k: f64) -> Result<InsSet<L>, InsError> {
    a.scalar_div(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{example_a, example_b};

    fn v(t: (f64, f64), i: (f64, f64), f: (f64, f64)) -> NeutrosophicValue {
        NeutrosophicValue::from_bounds(t, i, f).unwrap()
    }

    fn at(s: &DiscreteIns, label: &str) -> NeutrosophicValue {
        *s.get(&label.to_string()).unwrap()
    }

    fn assert_close(got: NeutrosophicValue, want: NeutrosophicValue) {
        assert!(got.max_abs_diff(&want) <= 1e-12, "got {got}, want {want}");
    }

    fn filled(value: NeutrosophicValue) -> DiscreteIns {
        DiscreteIns::constant(["x1", "x2", "x3"].map(String::from), value).unwrap()
    }

    #[test]
    fn complement_values() {
        let c = example_a().complement();
        assert_eq!(at(&c, "x1"), v((0.3, 0.5), (0.5, 0.7), (0.2, 0.4)));
        assert_close(at(&c, "x2"), v((0.2, 0.3), (0.8, 1.0), (0.5, 0.7)));
        let universal = filled(NeutrosophicValue::UNIVERSAL);
        assert!(universal.complement().is_empty());
    }

    #[test]
    fn containment() {
        let (a, b) = (example_a(), example_b());
        assert!(!a.is_contained_in(&b).unwrap());
        assert!(!b.is_contained_in(&a).unwrap());
        assert!(a.is_contained_in(&a).unwrap());
        assert!(a.intersect(&b).unwrap().is_contained_in(&a).unwrap());
    }

    #[test]
    fn equality() {
        let (a, b) = (example_a(), example_b());
        assert!(a.set_equals(&a).unwrap());
        assert!(!a.set_equals(&b).unwrap());
        let ab = a.union(&b).unwrap();
        let ba = b.union(&a).unwrap();
        assert!(ab.set_equals(&ba).unwrap());
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let a = example_a();
        let other =
            DiscreteIns::constant(["x1", "x2", "y"].map(String::from), NeutrosophicValue::ZERO)
                .unwrap();
        assert!(matches!(
            a.union(&other),
            Err(InsError::UniverseMismatch(_))
        ));
        assert!(matches!(
            a.is_contained_in(&other),
            Err(InsError::UniverseMismatch(_))
        ));
        let shorter =
            DiscreteIns::constant(["x1"].map(String::from), NeutrosophicValue::ZERO).unwrap();
        assert!(a.set_equals(&shorter).is_err());
    }

    #[test]
    fn universe_order_is_irrelevant_and_left_order_wins() {
        let a = example_a();
        let reversed: DiscreteIns = a
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        let u = reversed.union(&a).unwrap();
        let order: Vec<_> = u.universe().cloned().collect();
        assert_eq!(order, ["x3", "x2", "x1"]);
        assert!(u.set_equals(&a).unwrap());
    }

    #[test]
    fn emptiness() {
        assert!(filled(NeutrosophicValue::EMPTY).is_empty());
        assert!(!example_a().is_empty());
        assert!(DiscreteIns::default().is_empty());
    }

    #[test]
    fn union_values() {
        let u = example_a().union(&example_b()).unwrap();
        assert_eq!(at(&u, "x1"), v((0.5, 0.7), (0.1, 0.3), (0.1, 0.3)));
        assert_eq!(at(&u, "x3"), v((0.6, 0.8), (0.0, 0.1), (0.2, 0.3)));
        assert_eq!(example_a().union(&example_a()).unwrap(), example_a());
    }

    #[test]
    fn intersect_values() {
        let i = example_a().intersect(&example_b()).unwrap();
        assert_eq!(at(&i, "x1"), v((0.2, 0.4), (0.3, 0.5), (0.3, 0.5)));
        assert_eq!(at(&i, "x3"), v((0.4, 0.6), (0.2, 0.3), (0.3, 0.4)));
        assert_eq!(example_a().intersect(&example_a()).unwrap(), example_a());
    }

    #[test]
    fn difference_values() {
        let d = example_a().difference(&example_b()).unwrap();
        assert_close(at(&d, "x1"), v((0.1, 0.3), (0.7, 0.9), (0.5, 0.7)));
        assert_close(at(&d, "x2"), v((0.5, 0.7), (0.6, 0.8), (0.2, 0.3)));
        let self_diff = example_a().difference(&example_a()).unwrap();
        assert_close(at(&self_diff, "x1"), v((0.2, 0.4), (0.5, 0.7), (0.3, 0.5)));
    }

    #[test]
    fn add_values() {
        let s = example_a().add(&example_b()).unwrap();
        assert_close(at(&s, "x1"), v((0.7, 1.0), (0.4, 0.8), (0.4, 0.8)));
        assert_close(at(&s, "x3"), v((1.0, 1.0), (0.2, 0.4), (0.5, 0.7)));
        let zero = filled(NeutrosophicValue::ZERO);
        assert_eq!(example_a().add(&zero).unwrap(), example_a());
    }

    #[test]
    fn cartesian_product_values() {
        let c = cartesian_product(&example_a(), &example_b());
        assert_eq!(c.len(), 9);
        let get = |x: &str, y: &str| *c.get(&PairLabel(x.into(), y.into())).unwrap();
        assert_close(get("x1", "x1"), v((0.6, 0.82), (0.03, 0.15), (0.03, 0.15)));
        assert_close(get("x2", "x3"), v((0.7, 0.88), (0.0, 0.02), (0.06, 0.12)));
        let order: Vec<String> = c.universe().map(|l| l.to_string()).collect();
        assert_eq!(order[0], "(x1,x1)");
        assert_eq!(order[1], "(x1,x2)");
        assert_eq!(order[3], "(x2,x1)");

        let e = DiscreteIns::constant(["e".to_string()], NeutrosophicValue::EMPTY).unwrap();
        let ce = cartesian_product(&e, &example_b());
        for (l, val) in ce.iter() {
            assert_close(*val, at(&example_b(), &l.1));
        }
    }

    #[test]
    fn pointwise_product_values() {
        let p = example_a().pointwise_product(&example_b()).unwrap();
        assert_close(at(&p, "x1"), v((0.6, 0.82), (0.03, 0.15), (0.03, 0.15)));
        assert_close(at(&p, "x2"), v((0.6, 0.79), (0.0, 0.08), (0.1, 0.24)));
        // inf F at x3 is 0.2 * 0.3 = 0.06 (the printed worked example shows 0.03)
        assert_close(at(&p, "x3"), v((0.76, 0.92), (0.0, 0.03), (0.06, 0.12)));
        let e = filled(NeutrosophicValue::EMPTY);
        assert!(example_a()
            .pointwise_product(&e)
            .unwrap()
            .approx_eq(&example_a(), 1e-12)
            .unwrap());
    }

    #[test]
    fn scalar_ops() {
        let a = example_a();
        assert_eq!(scalar_mul(1.0, &a).unwrap(), a);
        assert_close(
            at(&scalar_mul(2.0, &a).unwrap(), "x1"),
            v((0.4, 0.8), (0.6, 1.0), (0.6, 1.0)),
        );
        assert_close(
            at(&scalar_mul(3.0, &a).unwrap(), "x3"),
            v((1.0, 1.0), (0.6, 0.9), (0.6, 0.9)),
        );
        assert_eq!(scalar_div(&a, 1.0).unwrap(), a);
        assert_close(
            at(&scalar_div(&a, 2.0).unwrap(), "x1"),
            v((0.1, 0.2), (0.15, 0.25), (0.15, 0.25)),
        );
        assert_close(
            at(&scalar_div(&a, 0.5).unwrap(), "x3"),
            v((1.0, 1.0), (0.4, 0.6), (0.4, 0.6)),
        );
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                a.scalar_mul(bad),
                Err(InsError::NonPositiveScalar(_))
            ));
            assert!(matches!(
                a.scalar_div(bad),
                Err(InsError::NonPositiveScalar(_))
            ));
        }
    }

    #[test]
    fn favorite_values() {
        let tf = example_a().truth_favorite();
        assert_close(at(&tf, "x1"), v((0.5, 0.9), (0.0, 0.0), (0.3, 0.5)));
        assert_close(at(&tf, "x3"), v((0.8, 1.0), (0.0, 0.0), (0.2, 0.3)));
        assert_eq!(tf.truth_favorite(), tf);
        let ff = example_a().false_favorite();
        assert_close(at(&ff, "x1"), v((0.2, 0.4), (0.0, 0.0), (0.6, 1.0)));
        assert_close(at(&ff, "x2"), v((0.5, 0.7), (0.0, 0.0), (0.2, 0.5)));
        assert_eq!(ff.false_favorite(), ff);
    }

    #[test]
    fn empty_universe_is_vacuous() {
        let e = DiscreteIns::default();
        assert!(e.set_equals(&e).unwrap());
        assert!(e.is_contained_in(&e).unwrap());
        assert!(e.is_empty());
        assert_eq!(e.union(&e).unwrap().len(), 0);
        assert_eq!(cartesian_product(&e, &example_a()).len(), 0);
    }
}
