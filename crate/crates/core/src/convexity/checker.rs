use std::fmt;

use rayon::prelude::*;

use super::{ConvexityError, FunctionalIns, SampleBox};
use crate::random::{self, SeededRng};
use crate::value::{Endpoint, NeutrosophicValue};

/// Sampling parameters shared by both checkers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckParams {
    /// Number of sampled point pairs.
    pub trials: usize,
    /// Number of mixing weights per pair.
    pub lambda_grid: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            trials: 1000,
            lambda_grid: 11,
            seed: 0,
            tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NoViolationFound,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoViolationFound => "no-violation-found",
            Verdict::Violated => "violated",
        })
    }
}

/// A violated inequality: the endpoint at `lambda * x1 + (1 - lambda) * x2`
/// (`lhs`) against the min (truth) or max (indeterminacy, falsity) of the
/// same endpoint at `x1` and `x2` (`rhs`).
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub x1: Vec<f64>,
    pub x2: Vec<f64>,
    pub lambda: f64,
    pub endpoint: Endpoint,
    pub lhs: f64,
    pub rhs: f64,
}

impl Witness {
    pub fn mix_point(&self) -> Vec<f64> {
        mix(&self.x1, &self.x2, self.lambda)
    }

    /// Recomputes `(lhs, rhs)` from the membership function.
    pub fn reevaluate(&self, a: &FunctionalIns) -> (f64, f64) {
        let (v1, v2) = (a.membership(&self.x1), a.membership(&self.x2));
        let vm = a.membership(&self.mix_point());
        (vm.endpoint(self.endpoint), bound(self.endpoint, &v1, &v2))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityReport {
    pub verdict: Verdict,
    /// `(x1, x2, lambda)` triples examined, up to and including a violation.
    pub samples_checked: usize,
    pub witness: Option<Witness>,
}

fn mix(x1: &[f64], x2: &[f64], lambda: f64) -> Vec<f64> {
    x1.iter()
        .zip(x2)
        .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
        .collect()
}

fn bound(e: Endpoint, v1: &NeutrosophicValue, v2: &NeutrosophicValue) -> f64 {
    let (a, b) = (v1.endpoint(e), v2.endpoint(e));
    if e.is_truth() {
        a.min(b)
    } else {
        a.max(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    Convex,
    Strong,
}

impl Mode {
    /// Whether `lhs` against `rhs` breaks the inequality for `endpoint`.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn violates(self, endpoint: Endpoint, lhs: f64, rhs: f64, tol: f64) -> bool {
        match (self, endpoint.is_truth()) {
            (Mode::Convex, true) => lhs < rhs - tol,
            (Mode::Convex, false) => lhs > rhs + tol,
            // strict inequalities must hold by more than tol; NaN counts as a violation
            (Mode::Strong, true) => !(lhs > rhs + tol),
            (Mode::Strong, false) => !(lhs < rhs - tol),
        }
    }

    fn lambdas(self, grid: usize) -> Vec<f64> {
        match self {
            Mode::Convex => (0..grid).map(|k| k as f64 / (grid - 1) as f64).collect(),
            Mode::Strong => (1..=grid).map(|k| k as f64 / (grid + 1) as f64).collect(),
        }
    }
}

fn sample_point(rng: &mut SeededRng, domain: &SampleBox) -> Vec<f64> {
    domain
        .bounds()
        .iter()
        .map(|&(lo, hi)| random::uniform_in(rng, lo, hi))
        .collect()
}

fn validate(
    a: &FunctionalIns,
    domain: &SampleBox,
    params: &CheckParams,
) -> Result<(), ConvexityError> {
    if domain.dimension() != a.dimension() {
        return Err(ConvexityError::InvalidDomain(format!(
            "box has {} dimension(s) but the set lives in R^{}",
            domain.dimension(),
            a.dimension()
        )));
    }
    if params.trials == 0 {
        return Err(ConvexityError::InvalidParameter(
            "trials must be >= 1".into(),
        ));
    }
    if params.lambda_grid < 2 {
        return Err(ConvexityError::InvalidParameter(
            "lambda grid must have >= 2 points".into(),
        ));
    }
    if params.tol.is_nan() || params.tol < 0.0 {
        return Err(ConvexityError::InvalidParameter("tol must be >= 0".into()));
    }
    Ok(())
}

fn run(
    a: &FunctionalIns,
    domain: &SampleBox,
    params: &CheckParams,
    mode: Mode,
) -> Result<ConvexityReport, ConvexityError> {
    validate(a, domain, params)?;
    if mode == Mode::Strong && !domain.has_extent() {
        return Err(ConvexityError::InvalidDomain(
            "box is a single point; strong convexity needs distinct points".into(),
        ));
    }

    // Points are drawn up front in trial order so parallel evaluation sees
    // exactly the pairs a sequential run would.
    let mut rng = random::seeded(params.seed);
    let pairs: Vec<(Vec<f64>, Vec<f64>)> = (0..params.trials)
        .map(|_| {
            let x1 = sample_point(&mut rng, domain);
            let mut x2 = sample_point(&mut rng, domain);
            while mode == Mode::Strong && x2 == x1 {
                x2 = sample_point(&mut rng, domain);
            }
            (x1, x2)
        })
        .collect();
    let lambdas = mode.lambdas(params.lambda_grid);
    let tol = params.tol;

    let first = pairs
        .par_iter()
        .enumerate()
        .find_map_first(|(trial, (x1, x2))| {
            let (v1, v2) = (a.membership(x1), a.membership(x2));
            lambdas.iter().enumerate().find_map(|(k, &lambda)| {
                let vm = a.membership(&mix(x1, x2, lambda));
                Endpoint::ALL.iter().find_map(|&e| {
                    let (lhs, rhs) = (vm.endpoint(e), bound(e, &v1, &v2));
                    mode.violates(e, lhs, rhs, tol).then(|| {
                        let witness = Witness {
                            x1: x1.clone(),
                            x2: x2.clone(),
                            lambda,
                            endpoint: e,
                            lhs,
                            rhs,
                        };
                        (trial * lambdas.len() + k + 1, witness)
                    })
                })
            })
        });

    Ok(match first {
        Some((samples_checked, witness)) => ConvexityReport {
            verdict: Verdict::Violated,
            samples_checked,
            witness: Some(witness),
        },
        None => ConvexityReport {
            verdict: Verdict::NoViolationFound,
            samples_checked: pairs.len() * lambdas.len(),
            witness: None,
        },
    })
}

/// Samples `trials` pairs uniformly from `domain` and tests the six convexity
/// inequalities at `lambda_grid` evenly spaced weights in `[0, 1]`.
///
/// Reports the first violation (in trial order, then weight, then endpoint)
/// whose shortfall exceeds `tol`. Deterministic for a fixed seed.
pub fn check_convex(
    a: &FunctionalIns,
    domain: &SampleBox,
    params: &CheckParams,
) -> Result<ConvexityReport, ConvexityError> {
    run(a, domain, params, Mode::Convex)
}

/// Like [`check_convex`] but with strict inequalities, distinct sample points
/// and `lambda_grid` weights strictly inside `(0, 1)`. A comparison must hold
/// with a margin larger than `tol`.
pub fn check_strongly_convex(
    a: &FunctionalIns,
    domain: &SampleBox,
    params: &CheckParams,
) -> Result<ConvexityReport, ConvexityError> {
    run(a, domain, params, Mode::Strong)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::Family;

    fn family(spec: &str) -> FunctionalIns {
        spec.parse::<Family>().unwrap().build(1).unwrap()
    }

    fn params(seed: u64) -> CheckParams {
        CheckParams {
            seed,
            ..CheckParams::default()
        }
    }

    #[test]
    fn lambda_grids() {
        assert_eq!(Mode::Convex.lambdas(3), vec![0.0, 0.5, 1.0]);
        assert_eq!(Mode::Strong.lambdas(3), vec![0.25, 0.5, 0.75]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = family("triangular(0,1)");
        let b1 = SampleBox::cube(1, -1.0, 1.0).unwrap();
        let b2 = SampleBox::cube(2, -1.0, 1.0).unwrap();
        assert!(matches!(
            check_convex(&a, &b2, &params(0)),
            Err(ConvexityError::InvalidDomain(_))
        ));
        for bad in [
            CheckParams {
                trials: 0,
                ..params(0)
            },
            CheckParams {
                lambda_grid: 1,
                ..params(0)
            },
            CheckParams {
                tol: -1.0,
                ..params(0)
            },
            CheckParams {
                tol: f64::NAN,
                ..params(0)
            },
        ] {
            assert!(matches!(
                check_convex(&a, &b1, &bad),
                Err(ConvexityError::InvalidParameter(_))
            ));
        }
        let point = SampleBox::cube(1, 0.5, 0.5).unwrap();
        assert!(check_convex(&a, &point, &params(0)).is_ok());
        assert!(matches!(
            check_strongly_convex(&a, &point, &params(0)),
            Err(ConvexityError::InvalidDomain(_))
        ));
    }

    #[test]
    fn constant_is_convex_but_not_strongly() {
        let a = family("constant(0.4)");
        let b = SampleBox::cube(1, -1.0, 1.0).unwrap();
        let r = check_convex(&a, &b, &params(1)).unwrap();
        assert_eq!(r.verdict, Verdict::NoViolationFound);
        assert_eq!(r.samples_checked, 1000 * 11);
        let s = check_strongly_convex(&a, &b, &params(1)).unwrap();
        assert_eq!(s.verdict, Verdict::Violated);
        assert_eq!(s.samples_checked, 1);
    }

    #[test]
    fn sample_count_on_violation() {
        let a = family("bimodal(4)");
        let b = SampleBox::cube(1, -3.0, 3.0).unwrap();
        let r = check_convex(&a, &b, &params(42)).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        assert!(r.samples_checked >= 1 && r.samples_checked <= 11_000);
        assert!(r.witness.is_some());
    }
}
