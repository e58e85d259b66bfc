//! Randomised checks of the algebraic laws of the set operators.
//!
//! Each law runs over `trials` seeded random sets. Laws built only from
//! min/max/copy are compared exactly; laws that involve `+`, `*` or `1 - x`
//! are compared within the configured tolerance.

use std::fmt;
use std::str::FromStr;

use crate::error::InsError;
use crate::interval::UnitInterval;
use crate::ops::cartesian_product;
use crate::random::{self, SeededRng};
use crate::sample;
use crate::set::{DiscreteIns, InsSet, Label};
use crate::value::NeutrosophicValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Closure,
    Lub,
    Glb,
    ContainmentComplement,
    FavoriteInclusions,
    Commutativity,
    Associativity,
    Distributivity,
    Idempotency,
    IdentityAbsorber,
    FavoriteAdditivity,
    Absorption,
    DeMorgan,
    Involution,
    PartialOrder,
    ExcludedMiddle,
    FavoriteAnnihilation,
}

impl Law {
    pub const ALL: [Law; 17] = [
        Law::Closure,
        Law::Lub,
        Law::Glb,
        Law::ContainmentComplement,
        Law::FavoriteInclusions,
        Law::Commutativity,
        Law::Associativity,
        Law::Distributivity,
        Law::Idempotency,
        Law::IdentityAbsorber,
        Law::FavoriteAdditivity,
        Law::Absorption,
        Law::DeMorgan,
        Law::Involution,
        Law::PartialOrder,
        Law::ExcludedMiddle,
        Law::FavoriteAnnihilation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Closure => "closure",
            Law::Lub => "lub",
            Law::Glb => "glb",
            Law::ContainmentComplement => "containment-complement",
            Law::FavoriteInclusions => "favorite-inclusions",
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::Distributivity => "distributivity",
            Law::Idempotency => "idempotency",
            Law::IdentityAbsorber => "identity-absorber",
            Law::FavoriteAdditivity => "favorite-additivity",
            Law::Absorption => "absorption",
            Law::DeMorgan => "demorgan",
            Law::Involution => "involution",
            Law::PartialOrder => "partial-order",
            Law::ExcludedMiddle => "excluded-middle",
            Law::FavoriteAnnihilation => "favorite-annihilation",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown law `{0}`")]
pub struct UnknownLaw(pub String);

impl FromStr for Law {
    type Err = UnknownLaw;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| UnknownLaw(s.to_string()))
    }
}

/// Where trial universes come from.
#[derive(Debug, Clone)]
pub enum Universes {
    /// Fresh `x1..xn` universes with `n` in `1..=8`.
    Synthetic,
    /// Cycle through the given universes, one per trial.
    Fixed(Vec<Vec<String>>),
}

#[derive(Debug, Clone)]
pub struct LawConfig {
    pub trials: usize,
    pub seed: u64,
    /// Tolerance for laws involving arithmetic.
    pub tol: f64,
    pub universes: Universes,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            trials: 1000,
            seed: 0,
            tol: 1e-12,
            universes: Universes::Synthetic,
        }
    }
}

/// A failing instance of a law.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: usize,
    /// The identity or inclusion that failed, e.g. `A | (B & C) = (A | B) & (A | C)`.
    pub statement: String,
    /// Rendered input sets.
    pub inputs: Vec<(String, String)>,
    /// First element where the two sides disagree, with both sides' values.
    pub element: Option<(String, String, String)>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trial {}: {} does not hold", self.trial, self.statement)?;
        if let Some((label, lhs, rhs)) = &self.element {
            writeln!(f, "  at {label}: lhs {lhs}")?;
            writeln!(f, "  at {label}: rhs {rhs}")?;
        }
        for (name, set) in &self.inputs {
            writeln!(f, "  {name} = {set}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: Law,
    pub trials: usize,
    /// Individual assertions evaluated.
    pub checks: usize,
    /// Distinct statements evaluated, in first-seen order.
    pub statements: Vec<String>,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// How two sides of an identity are compared.
#[derive(Debug, Clone, Copy)]
enum Cmp {
    Exact,
    Approx(f64),
}

struct Trial<'a> {
    index: usize,
    rng: &'a mut SeededRng,
    universe: Vec<String>,
    inputs: Vec<(String, String)>,
    checks: usize,
    statements: &'a mut Vec<String>,
}

type Outcome = Result<(), Box<Counterexample>>;

impl Trial<'_> {
    fn count(&mut self, statement: &str) {
        self.checks += 1;
        if !self.statements.iter().any(|s| s == statement) {
            self.statements.push(statement.to_string());
        }
    }

    fn set(&mut self, name: &str) -> DiscreteIns {
        let s = random::random_set(self.rng, &self.universe);
        self.inputs.push((name.to_string(), s.to_string()));
        s
    }

    fn note(&mut self, name: &str, s: &DiscreteIns) {
        self.inputs.push((name.to_string(), s.to_string()));
    }

    fn fail<L: Label>(
        &self,
        statement: &str,
        lhs: Option<&InsSet<L>>,
        rhs: Option<&InsSet<L>>,
        bad: impl Fn(&NeutrosophicValue, &NeutrosophicValue) -> bool,
    ) -> Counterexample {
        let element = match (lhs, rhs) {
            (Some(l), Some(r)) => l.iter().find_map(|(k, lv)| {
                let rv = r.get(k)?;
                bad(lv, rv).then(|| (k.to_string(), lv.to_string(), rv.to_string()))
            }),
            _ => None,
        };
        Counterexample {
            trial: self.index,
            statement: statement.to_string(),
            inputs: self.inputs.clone(),
            element,
        }
    }

    fn eq<L: Label>(
        &mut self,
        statement: &str,
        lhs: Result<InsSet<L>, InsError>,
        rhs: Result<InsSet<L>, InsError>,
        cmp: Cmp,
    ) -> Outcome {
        self.count(statement);
        let (lhs, rhs) = match (lhs, rhs) {
            (Ok(l), Ok(r)) => (l, r),
            (l, r) => {
                let mut c = self.fail::<L>(statement, None, None, |_, _| false);
                c.statement = format!(
                    "{statement} (operator error: {:?} / {:?})",
                    l.err(),
                    r.err()
                );
                return Err(Box::new(c));
            }
        };
        let holds = match cmp {
            Cmp::Exact => lhs == rhs,
            Cmp::Approx(tol) => lhs.approx_eq(&rhs, tol).unwrap_or(false),
        };
        if holds {
            return Ok(());
        }
        Err(Box::new(self.fail(
            statement,
            Some(&lhs),
            Some(&rhs),
            |a, b| match cmp {
                Cmp::Exact => a != b,
                Cmp::Approx(tol) => a.max_abs_diff(b) > tol,
            },
        )))
    }

    fn subset(
        &mut self,
        statement: &str,
        lhs: Result<DiscreteIns, InsError>,
        rhs: Result<DiscreteIns, InsError>,
    ) -> Outcome {
        self.count(statement);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l.is_contained_in(&r) == Ok(true) => Ok(()),
            (Ok(l), Ok(r)) => Err(Box::new(self.fail(
                statement,
                Some(&l),
                Some(&r),
                |a, b| !a.is_contained_in(b),
            ))),
            _ => Err(Box::new(self.fail::<String>(
                statement,
                None,
                None,
                |_, _| false,
            ))),
        }
    }

    fn holds(&mut self, statement: &str, ok: bool) -> Outcome {
        self.count(statement);
        if ok {
            Ok(())
        } else {
            Err(Box::new(self.fail::<String>(
                statement,
                None,
                None,
                |_, _| false,
            )))
        }
    }

    fn constant(&self, value: NeutrosophicValue) -> DiscreteIns {
        self.universe.iter().map(|l| (l.clone(), value)).collect()
    }
}

fn valid(v: &NeutrosophicValue) -> bool {
    [v.truth(), v.indeterminacy(), v.falsity()]
        .iter()
        .all(|i| UnitInterval::new(i.lo(), i.hi()).is_ok())
}

fn all_valid<L: Label>(s: &InsSet<L>) -> bool {
    s.iter().all(|(_, v)| valid(v))
}

fn check_trial(law: Law, t: &mut Trial<'_>, tol: f64) -> Outcome {
    let approx = Cmp::Approx(tol);
    match law {
        Law::Closure => {
            let a = t.set("A");
            let b = t.set("B");
            let k = random::uniform_in(t.rng, 1e-3, 4.0);
            t.inputs.push(("k".into(), k.to_string()));
            let results = [
                ("~A", Ok(a.complement())),
                ("A | B", a.union(&b)),
                ("A & B", a.intersect(&b)),
                ("A \\ B", a.difference(&b)),
                ("A + B", a.add(&b)),
                ("prod(A, B)", a.pointwise_product(&b)),
                ("scale(k, A)", a.scalar_mul(k)),
                ("div(A, k)", a.scalar_div(k)),
                ("tf(A)", Ok(a.truth_favorite())),
                ("ff(A)", Ok(a.false_favorite())),
            ];
            for (name, r) in results {
                let ok = r.map(|s| all_valid(&s)).unwrap_or(false);
                t.holds(&format!("{name} is a valid set"), ok)?;
            }
            let ok = all_valid(&cartesian_product(&a, &b));
            t.holds("cart(A, B) is a valid set", ok)
        }
        Law::Lub => {
            let a = t.set("A");
            let b = t.set("B");
            let u = a.union(&b).expect("shared universe");
            t.subset("A <= A | B", Ok(a.clone()), Ok(u.clone()))?;
            t.subset("B <= A | B", Ok(b.clone()), Ok(u.clone()))?;
            let d = random::random_superset(t.rng, &a, &b);
            t.note("D (upper bound of A, B)", &d);
            t.subset("D >= A, B implies A | B <= D", Ok(u.clone()), Ok(d))?;
            let free = t.set("E");
            if a.is_contained_in(&free) == Ok(true) && b.is_contained_in(&free) == Ok(true) {
                t.subset("E >= A, B implies A | B <= E", Ok(u), Ok(free))?;
            }
            Ok(())
        }
        Law::Glb => {
            let a = t.set("A");
            let b = t.set("B");
            let i = a.intersect(&b).expect("shared universe");
            t.subset("A & B <= A", Ok(i.clone()), Ok(a.clone()))?;
            t.subset("A & B <= B", Ok(i.clone()), Ok(b.clone()))?;
            let d = random::random_subset(t.rng, &a, &b);
            t.note("D (lower bound of A, B)", &d);
            t.subset("D <= A, B implies D <= A & B", Ok(d), Ok(i.clone()))?;
            let free = t.set("E");
            if free.is_contained_in(&a) == Ok(true) && free.is_contained_in(&b) == Ok(true) {
                t.subset("E <= A, B implies E <= A & B", Ok(free), Ok(i))?;
            }
            Ok(())
        }
        Law::ContainmentComplement => {
            let a = t.set("A");
            let b = t.set("B");
            let up = random::random_superset(t.rng, &a, &a);
            t.note("U (superset of A)", &up);
            for (x, y, name) in [(&a, &b, "A, B"), (&a, &up, "A, U"), (&up, &a, "U, A")] {
                let lhs = x.is_contained_in(y).expect("shared universe");
                let rhs = y
                    .complement()
                    .is_contained_in(&x.complement())
                    .expect("shared universe");
                t.holds(&format!("X <= Y iff ~Y <= ~X for ({name})"), lhs == rhs)?;
            }
            Ok(())
        }
        Law::FavoriteInclusions => {
            let a = t.set("A");
            let b = t.set("B");
            let (ta, tb) = (a.truth_favorite(), b.truth_favorite());
            let (fa, fb) = (a.false_favorite(), b.false_favorite());
            let u = a.union(&b).expect("shared universe");
            let i = a.intersect(&b).expect("shared universe");
            t.subset(
                "tf(A | B) <= tf(A) | tf(B)",
                Ok(u.truth_favorite()),
                ta.union(&tb),
            )?;
            t.subset(
                "tf(A) & tf(B) <= tf(A & B)",
                ta.intersect(&tb),
                Ok(i.truth_favorite()),
            )?;
            t.subset(
                "ff(A) | ff(B) <= ff(A | B)",
                fa.union(&fb),
                Ok(u.false_favorite()),
            )?;
            t.subset(
                "ff(A & B) <= ff(A) & ff(B)",
                Ok(i.false_favorite()),
                fa.intersect(&fb),
            )
        }
        Law::Commutativity => {
            let a = t.set("A");
            let b = t.set("B");
            t.eq("A | B = B | A", a.union(&b), b.union(&a), Cmp::Exact)?;
            t.eq(
                "A & B = B & A",
                a.intersect(&b),
                b.intersect(&a),
                Cmp::Exact,
            )?;
            t.eq("A + B = B + A", a.add(&b), b.add(&a), approx)?;
            t.eq(
                "prod(A, B) = prod(B, A)",
                a.pointwise_product(&b),
                b.pointwise_product(&a),
                approx,
            )?;
            t.eq(
                "cart(A, B) = cart(B, A) transposed",
                Ok(cartesian_product(&a, &b)),
                Ok(cartesian_product(&b, &a).transposed()),
                approx,
            )
        }
        Law::Associativity => {
            let a = t.set("A");
            let b = t.set("B");
            let c = t.set("C");
            t.eq(
                "A | (B | C) = (A | B) | C",
                b.union(&c).and_then(|bc| a.union(&bc)),
                a.union(&b).and_then(|ab| ab.union(&c)),
                Cmp::Exact,
            )?;
            t.eq(
                "A & (B & C) = (A & B) & C",
                b.intersect(&c).and_then(|bc| a.intersect(&bc)),
                a.intersect(&b).and_then(|ab| ab.intersect(&c)),
                Cmp::Exact,
            )?;
            t.eq(
                "A + (B + C) = (A + B) + C",
                b.add(&c).and_then(|bc| a.add(&bc)),
                a.add(&b).and_then(|ab| ab.add(&c)),
                approx,
            )?;
            t.eq(
                "prod(A, prod(B, C)) = prod(prod(A, B), C)",
                b.pointwise_product(&c)
                    .and_then(|bc| a.pointwise_product(&bc)),
                a.pointwise_product(&b)
                    .and_then(|ab| ab.pointwise_product(&c)),
                approx,
            )
        }
        Law::Distributivity => {
            let a = t.set("A");
            let b = t.set("B");
            let c = t.set("C");
            t.eq(
                "A | (B & C) = (A | B) & (A | C)",
                b.intersect(&c).and_then(|bc| a.union(&bc)),
                a.union(&b).and_then(|ab| ab.intersect(&a.union(&c)?)),
                Cmp::Exact,
            )?;
            t.eq(
                "A & (B | C) = (A & B) | (A & C)",
                b.union(&c).and_then(|bc| a.intersect(&bc)),
                a.intersect(&b).and_then(|ab| ab.union(&a.intersect(&c)?)),
                Cmp::Exact,
            )
        }
        Law::Idempotency => {
            let a = t.set("A");
            t.eq("A | A = A", a.union(&a), Ok(a.clone()), Cmp::Exact)?;
            t.eq("A & A = A", a.intersect(&a), Ok(a.clone()), Cmp::Exact)?;
            let ta = a.truth_favorite();
            let fa = a.false_favorite();
            t.eq(
                "tf(tf(A)) = tf(A)",
                Ok(ta.truth_favorite()),
                Ok(ta),
                Cmp::Exact,
            )?;
            t.eq(
                "ff(ff(A)) = ff(A)",
                Ok(fa.false_favorite()),
                Ok(fa),
                Cmp::Exact,
            )
        }
        Law::IdentityAbsorber => {
            let a = t.set("A");
            let empty = t.constant(NeutrosophicValue::EMPTY);
            let universal = t.constant(NeutrosophicValue::UNIVERSAL);
            t.eq(
                "A & Phi = Phi",
                a.intersect(&empty),
                Ok(empty.clone()),
                Cmp::Exact,
            )?;
            t.eq(
                "A | X = X",
                a.union(&universal),
                Ok(universal.clone()),
                Cmp::Exact,
            )?;
            t.eq("A | Phi = A", a.union(&empty), Ok(a.clone()), Cmp::Exact)?;
            t.eq(
                "A & X = A",
                a.intersect(&universal),
                Ok(a.clone()),
                Cmp::Exact,
            )
        }
        Law::FavoriteAdditivity => {
            let a = t.set("A");
            let b = t.set("B");
            t.eq(
                "tf(A + B) = tf(A) + tf(B)",
                a.add(&b).map(|s| s.truth_favorite()),
                a.truth_favorite().add(&b.truth_favorite()),
                approx,
            )?;
            t.eq(
                "ff(A + B) = ff(A) + ff(B)",
                a.add(&b).map(|s| s.false_favorite()),
                a.false_favorite().add(&b.false_favorite()),
                approx,
            )
        }
        Law::Absorption => {
            let a = t.set("A");
            let b = t.set("B");
            t.eq(
                "A | (A & B) = A",
                a.intersect(&b).and_then(|ab| a.union(&ab)),
                Ok(a.clone()),
                Cmp::Exact,
            )?;
            t.eq(
                "A & (A | B) = A",
                a.union(&b).and_then(|ab| a.intersect(&ab)),
                Ok(a.clone()),
                Cmp::Exact,
            )
        }
        Law::DeMorgan => {
            let a = t.set("A");
            let b = t.set("B");
            let (ca, cb) = (a.complement(), b.complement());
            t.eq(
                "~(A | B) = ~A & ~B",
                a.union(&b).map(|s| s.complement()),
                ca.intersect(&cb),
                Cmp::Exact,
            )?;
            t.eq(
                "~(A & B) = ~A | ~B",
                a.intersect(&b).map(|s| s.complement()),
                ca.union(&cb),
                Cmp::Exact,
            )
        }
        Law::Involution => {
            let a = t.set("A");
            t.eq(
                "~~A = A",
                Ok(a.complement().complement()),
                Ok(a),
                Cmp::Exact,
            )
        }
        Law::PartialOrder => {
            let a = t.set("A");
            let b = t.set("B");
            let c = t.set("C");
            t.holds("A <= A", a.is_contained_in(&a) == Ok(true))?;
            let up = random::random_superset(t.rng, &a, &a);
            let upup = random::random_superset(t.rng, &up, &up);
            t.note("U (superset of A)", &up);
            t.note("V (superset of U)", &upup);
            t.holds(
                "A <= U and U <= V implies A <= V",
                a.is_contained_in(&upup) == Ok(true),
            )?;
            let both = |x: &DiscreteIns, y: &DiscreteIns| {
                x.is_contained_in(y) == Ok(true) && y.is_contained_in(x) == Ok(true)
            };
            for (x, y, name) in [
                (&a, &b, "A, B"),
                (&a, &up, "A, U"),
                (&a, &a.clone(), "A, A"),
            ] {
                let anti = !both(x, y) || (x.set_equals(y) == Ok(true) && x == y);
                t.holds(
                    &format!("X <= Y and Y <= X implies X = Y for ({name})"),
                    anti,
                )?;
            }
            let chain = a.is_contained_in(&b) == Ok(true) && b.is_contained_in(&c) == Ok(true);
            t.holds(
                "A <= B and B <= C implies A <= C",
                !chain || a.is_contained_in(&c) == Ok(true),
            )
        }
        Law::ExcludedMiddle => {
            // an existential law: see `check_law`
            let a = t.set("A");
            let universal = t.constant(NeutrosophicValue::UNIVERSAL);
            let u = a.union(&a.complement()).expect("shared universe");
            t.holds("A | ~A != X", u != universal)
        }
        Law::FavoriteAnnihilation => {
            let a = t.set("A");
            let clear = |s: &DiscreteIns| {
                s.iter()
                    .all(|(_, v)| v.indeterminacy() == UnitInterval::ZERO)
            };
            t.holds("I of tf(A) is [0,0]", clear(&a.truth_favorite()))?;
            t.holds("I of ff(A) is [0,0]", clear(&a.false_favorite()))
        }
    }
}

/// Runs one law over `config.trials` random trials.
///
/// The generator is seeded from `config.seed` alone, so a law reports the
/// same result whether it runs by itself or as part of a batch.
pub fn check_law(law: Law, config: &LawConfig) -> LawReport {
    let mut rng = random::seeded(config.seed);
    let mut checks = 0;
    let mut statements = Vec::new();

    if law == Law::ExcludedMiddle {
        // Fails for the sample set already; random trials only add witnesses.
        let a = sample::example_a();
        let universal: DiscreteIns = a
            .universe()
            .map(|l| (l.clone(), NeutrosophicValue::UNIVERSAL))
            .collect();
        let u = a.union(&a.complement()).expect("shared universe");
        checks += 1;
        statements.push("A | ~A != X for the sample set A".to_string());
        if u == universal {
            return LawReport {
                law,
                trials: 0,
                checks,
                statements,
                counterexample: Some(Counterexample {
                    trial: 0,
                    statement: "A | ~A != X for the sample set A".into(),
                    inputs: vec![("A".into(), a.to_string())],
                    element: None,
                }),
            };
        }
    }

    for index in 0..config.trials {
        let universe = match &config.universes {
            Universes::Synthetic => random::synthetic_universe(&mut rng),
            Universes::Fixed(list) if !list.is_empty() => list[index % list.len()].clone(),
            Universes::Fixed(_) => random::synthetic_universe(&mut rng),
        };
        let mut trial = Trial {
            index,
            rng: &mut rng,
            universe,
            inputs: Vec::new(),
            checks: 0,
            statements: &mut statements,
        };
        let outcome = check_trial(law, &mut trial, config.tol);
        checks += trial.checks;
        match outcome {
            Ok(()) => {}
            Err(_) if law == Law::ExcludedMiddle => {}
            Err(c) => {
                return LawReport {
                    law,
                    trials: index + 1,
                    checks,
                    statements,
                    counterexample: Some(*c),
                }
            }
        }
    }
    LawReport {
        law,
        trials: config.trials,
        checks,
        statements,
        counterexample: None,
    }
}
