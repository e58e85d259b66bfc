//! Seeded generation of random sets.
//!
//! All randomness flows through [`SeededRng`] (ChaCha8 seeded via
//! `seed_from_u64`), whose output stream is stable across platforms and
//! releases, so a seed always reproduces the same sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interval::UnitInterval;
use crate::set::DiscreteIns;
use crate::value::NeutrosophicValue;

pub type SeededRng = ChaCha8Rng;

pub const MAX_SYNTHETIC_UNIVERSE: usize = 8;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform sample in `[lo, hi]`.
pub fn uniform_in<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let u: f64 = rng.random();
    (lo + u * (hi - lo)).clamp(lo, hi)
}

/// Sorted pair of uniform samples on the unit interval.
pub fn random_interval<R: Rng + ?Sized>(rng: &mut R) -> UnitInterval {
    let a: f64 = rng.random();
    let b: f64 = rng.random();
    UnitInterval::new(a.min(b), a.max(b)).expect("sorted samples of [0,1) form an interval")
}

pub fn random_value<R: Rng + ?Sized>(rng: &mut R) -> NeutrosophicValue {
    NeutrosophicValue::new(
        random_interval(rng),
        random_interval(rng),
        random_interval(rng),
    )
}

pub fn random_set<R: Rng + ?Sized>(rng: &mut R, universe: &[String]) -> DiscreteIns {
    universe
        .iter()
        .map(|l| (l.clone(), random_value(rng)))
        .collect()
}

/// Labels `x1..xn` with `n` drawn from `1..=8`.
pub fn synthetic_universe<R: Rng + ?Sized>(rng: &mut R) -> Vec<String> {
    let n = rng.random_range(1..=MAX_SYNTHETIC_UNIVERSE);
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn grow<R: Rng + ?Sized>(rng: &mut R, x: UnitInterval, y: UnitInterval) -> UnitInterval {
    let (min_lo, min_hi) = (x.lo().max(y.lo()), x.hi().max(y.hi()));
    let lo = uniform_in(rng, min_lo, min_hi);
    let hi = uniform_in(rng, min_hi, 1.0);
    UnitInterval::new(lo, hi).expect("grown interval is ordered")
}

fn shrink<R: Rng + ?Sized>(rng: &mut R, x: UnitInterval, y: UnitInterval) -> UnitInterval {
    let (max_lo, max_hi) = (x.lo().min(y.lo()), x.hi().min(y.hi()));
    let hi = uniform_in(rng, max_lo, max_hi);
    let lo = uniform_in(rng, 0.0, max_lo);
    UnitInterval::new(lo, hi).expect("shrunk interval is ordered")
}

/// A random value containing both `a` and `b`.
pub fn random_upper_bound<R: Rng + ?Sized>(
    rng: &mut R,
    a: &NeutrosophicValue,
    b: &NeutrosophicValue,
) -> NeutrosophicValue {
    let truth = grow(rng, a.truth(), b.truth());
    let indeterminacy = shrink(rng, a.indeterminacy(), b.indeterminacy());
    let falsity = shrink(rng, a.falsity(), b.falsity());
    NeutrosophicValue::new(truth, indeterminacy, falsity)
}

/// A random value contained in both `a` and `b`.
pub fn random_lower_bound<R: Rng + ?Sized>(
    rng: &mut R,
    a: &NeutrosophicValue,
    b: &NeutrosophicValue,
) -> NeutrosophicValue {
    let truth = shrink(rng, a.truth(), b.truth());
    let indeterminacy = grow(rng, a.indeterminacy(), b.indeterminacy());
    let falsity = grow(rng, a.falsity(), b.falsity());
    NeutrosophicValue::new(truth, indeterminacy, falsity)
}

pub fn random_superset<R: Rng + ?Sized>(
    rng: &mut R,
    a: &DiscreteIns,
    b: &DiscreteIns,
) -> DiscreteIns {
    a.iter()
        .map(|(l, va)| {
            let vb = b.get(l).expect("operands share a universe");
            (l.clone(), random_upper_bound(rng, va, vb))
        })
        .collect()
}

pub fn random_subset<R: Rng + ?Sized>(
    rng: &mut R,
    a: &DiscreteIns,
    b: &DiscreteIns,
) -> DiscreteIns {
    a.iter()
        .map(|(l, va)| {
            let vb = b.get(l).expect("operands share a universe");
            (l.clone(), random_lower_bound(rng, va, vb))
        })
        .collect()
}
