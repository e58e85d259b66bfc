use std::fmt;

use indexmap::IndexMap;

use super::ast::{BinOp, Expr, ExprKind};
use super::error::{ErrorKind, Pos, SourceError};
use crate::error::InsError;
use crate::ops::cartesian_product;
use crate::set::{DiscreteIns, PairedIns};

/// Named sets available to an expression. Names are case-sensitive and
/// match `[A-Za-z][A-Za-z0-9_]*`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Environment {
    sets: IndexMap<String, DiscreteIns>,
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds `name`; returns the previous binding, if any.
    ///
    /// # Panics
    /// When `name` is not a valid set name.
    pub fn insert(&mut self, name: impl Into<String>, set: DiscreteIns) -> Option<DiscreteIns> {
        let name = name.into();
        assert!(is_valid_name(&name), "invalid set name `{name}`");
        self.sets.insert(name, set)
    }

    pub fn get(&self, name: &str) -> Option<&DiscreteIns> {
        self.sets.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.sets.contains_key(name)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Sets in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &DiscreteIns)> {
        self.sets.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Set(DiscreteIns),
    Paired(PairedIns),
    Bool(bool),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Set(_) => "a set",
            Value::Paired(_) => "a product set",
            Value::Bool(_) => "a truth value",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Set(s) => write!(f, "{s}"),
            Value::Paired(s) => write!(f, "{s}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

fn lift(pos: Pos, err: InsError) -> SourceError {
    let kind = match err {
        InsError::UniverseMismatch(_) => ErrorKind::UniverseMismatch,
        InsError::NonPositiveScalar(_) => ErrorKind::NonPositiveScalar,
        // operators never build invalid intervals or duplicate labels from valid operands
        InsError::InvalidInterval { .. } | InsError::DuplicateLabel(_) => ErrorKind::TypeMismatch,
    };
    SourceError::new(kind, pos, err.to_string())
}

fn operand_set(e: &Expr, v: Value, what: &str) -> Result<DiscreteIns, SourceError> {
    match v {
        Value::Set(s) => Ok(s),
        other => Err(SourceError::new(
            ErrorKind::TypeMismatch,
            e.pos,
            format!("{what} expects a set, found {}", other.kind()),
        )),
    }
}

fn set_of(e: &Expr, env: &Environment, what: &str) -> Result<DiscreteIns, SourceError> {
    let v = evaluate(e, env)?;
    operand_set(e, v, what)
}

fn binary_name(op: BinOp) -> &'static str {
    match op {
        BinOp::Add => "`+`",
        BinOp::Difference => "`\\`",
        BinOp::Union => "`|`",
        BinOp::Intersect => "`&`",
    }
}

/// Evaluates `e` bottom-up against `env`.
///
/// Product sets (from `cart`) can only feed predicates; any set operator
/// applied to one is a type mismatch.
pub fn evaluate(e: &Expr, env: &Environment) -> Result<Value, SourceError> {
    let pos = e.pos;
    let value = match &e.kind {
        ExprKind::Ident(name) => Value::Set(env.get(name).cloned().ok_or_else(|| {
            SourceError::new(
                ErrorKind::UnknownIdentifier,
                pos,
                format!("no set named `{name}`"),
            )
        })?),
        ExprKind::Complement(x) => Value::Set(set_of(x, env, "`~`")?.complement()),
        ExprKind::TruthFav(x) => Value::Set(set_of(x, env, "`tf`")?.truth_favorite()),
        ExprKind::FalseFav(x) => Value::Set(set_of(x, env, "`ff`")?.false_favorite()),
        ExprKind::Binary(op, l, r) => {
            let what = binary_name(*op);
            let (a, b) = (set_of(l, env, what)?, set_of(r, env, what)?);
            let out = match op {
                BinOp::Add => a.add(&b),
                BinOp::Difference => a.difference(&b),
                BinOp::Union => a.union(&b),
                BinOp::Intersect => a.intersect(&b),
            };
            Value::Set(out.map_err(|err| lift(pos, err))?)
        }
        ExprKind::Prod(l, r) => {
            let (a, b) = (set_of(l, env, "`prod`")?, set_of(r, env, "`prod`")?);
            Value::Set(a.pointwise_product(&b).map_err(|err| lift(pos, err))?)
        }
        ExprKind::Cart(l, r) => {
            let (a, b) = (set_of(l, env, "`cart`")?, set_of(r, env, "`cart`")?);
            Value::Paired(cartesian_product(&a, &b))
        }
        ExprKind::Scale(k, x) => Value::Set(
            set_of(x, env, "`scale`")?
                .scalar_mul(*k)
                .map_err(|err| lift(pos, err))?,
        ),
        ExprKind::Div(x, k) => Value::Set(
            set_of(x, env, "`div`")?
                .scalar_div(*k)
                .map_err(|err| lift(pos, err))?,
        ),
        ExprKind::Empty(x) => match evaluate(x, env)? {
            Value::Set(s) => Value::Bool(s.is_empty()),
            Value::Paired(s) => Value::Bool(s.is_empty()),
            Value::Bool(_) => unreachable!("predicates only occur at the root"),
        },
        ExprKind::Subset(l, r) | ExprKind::Equal(l, r) => {
            let subset = matches!(e.kind, ExprKind::Subset(..));
            let test = |a, b| -> Result<bool, InsError> {
                match (a, b) {
                    (Value::Set(a), Value::Set(b)) => {
                        if subset {
                            a.is_contained_in(&b)
                        } else {
                            a.set_equals(&b)
                        }
                    }
                    (Value::Paired(a), Value::Paired(b)) => {
                        if subset {
                            a.is_contained_in(&b)
                        } else {
                            a.set_equals(&b)
                        }
                    }
                    _ => unreachable!("kinds checked below"),
                }
            };
            let (a, b) = (evaluate(l, env)?, evaluate(r, env)?);
            if std::mem::discriminant(&a) != std::mem::discriminant(&b) {
                return Err(SourceError::new(
                    ErrorKind::TypeMismatch,
                    pos,
                    format!("cannot compare {} with {}", a.kind(), b.kind()),
                ));
            }
            Value::Bool(test(a, b).map_err(|err| lift(pos, err))?)
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_expr;
    use crate::sample::{example_a, example_b};

    fn env() -> Environment {
        let mut env = Environment::new();
        env.insert("A", example_a());
        env.insert("B", example_b());
        env
    }

    fn run(src: &str) -> Result<Value, SourceError> {
        evaluate(&parse_expr(src).unwrap(), &env())
    }

    #[test]
    fn union_matches_core() {
        assert_eq!(
            run("A | B").unwrap(),
            Value::Set(example_a().union(&example_b()).unwrap())
        );
    }

    #[test]
    fn predicates() {
        assert_eq!(run("eq(~~A, A)").unwrap(), Value::Bool(true));
        assert_eq!(
            run("subset(tf(A) & tf(B), tf(A & B))").unwrap(),
            Value::Bool(true)
        );
        // at x3 tf(A & B) has truth [0.6,0.9] while tf(A) & tf(B) has [0.4,0.7]
        assert_eq!(
            run("subset(tf(A & B), tf(A) & tf(B))").unwrap(),
            Value::Bool(false)
        );
        assert_eq!(run("subset(A, B)").unwrap(), Value::Bool(false));
        assert_eq!(run("empty(A)").unwrap(), Value::Bool(false));
        assert_eq!(
            run("empty(~(A | ~A | scale(10, A)))").unwrap(),
            Value::Bool(false)
        );
        assert_eq!(
            run("eq(cart(A, B), cart(A, B))").unwrap(),
            Value::Bool(true)
        );
    }

    #[test]
    fn cart_yields_product_set() {
        match run("cart(A, B)").unwrap() {
            Value::Paired(p) => assert_eq!(p.len(), 9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier_has_position() {
        let e = run("A | C").unwrap_err();
        assert_eq!(e.kind, ErrorKind::UnknownIdentifier);
        assert_eq!(e.pos, Pos::new(1, 5));
    }

    #[test]
    fn product_sets_do_not_compose() {
        let e = run("~cart(A, B)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::TypeMismatch);
        assert_eq!(e.pos, Pos::new(1, 2));
        let e = run("cart(cart(A, B), A)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::TypeMismatch);
        let e = run("eq(cart(A, B), A)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::TypeMismatch);
        assert_eq!(e.pos, Pos::new(1, 1));
    }

    #[test]
    fn universe_mismatch_points_at_operator() {
        let mut env = env();
        env.insert(
            "C",
            DiscreteIns::constant(["y".to_string()], crate::NeutrosophicValue::ZERO).unwrap(),
        );
        let e = evaluate(&parse_expr("A & (B + C)").unwrap(), &env).unwrap_err();
        assert_eq!(e.kind, ErrorKind::UniverseMismatch);
        assert_eq!(e.pos, Pos::new(1, 8));
    }

    #[test]
    fn names() {
        assert!(is_valid_name("A"));
        assert!(is_valid_name("set_2"));
        assert!(!is_valid_name("2a"));
        assert!(!is_valid_name("_a"));
        assert!(!is_valid_name(""));
        assert!(!is_valid_name("a-b"));
    }
}
